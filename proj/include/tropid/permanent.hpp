#pragma once

#include <algorithm>
#include <vector>

#include "tropid/matrix.hpp"
#include "tropid/permutation.hpp"

namespace tropid {

// Result of the exhaustive assignment scan: the optimal value, every
// permutation attaining it (sorted lexicographically by image array), and
// whether the minimizers mix parities.
struct PermanentReport {
  Rational value;
  std::vector<Permutation> witnesses;
  bool sign_singular = false;
};

// Minimum over all n! permutations of the sum of entries (i, sigma(i)),
// with the complete set of minimizers. Ties are structurally meaningful, so
// no pruning: enumeration is refused above order 8.
inline PermanentReport permanent_with_witnesses(const TropMatrix& a) {
  if (!a.is_square()) throw ShapeError("permanent: matrix must be square");
  const int n = a.rows();
  if (n > Permutation::kMaxOrder)
    throw SizeError("permanent: exhaustive enumeration supports order <= 8");

  std::vector<int> img(std::size_t(n), 0);
  for (int i = 0; i < n; ++i) img[std::size_t(i)] = i;

  PermanentReport report;
  bool first = true;
  do {
    Rational sum = a(0, img[0]);
    for (int i = 1; i < n; ++i) sum += a(i, img[std::size_t(i)]);
    if (first || sum < report.value) {
      report.value = sum;
      report.witnesses.clear();
      report.witnesses.emplace_back(img);
      first = false;
    } else if (sum == report.value) {
      report.witnesses.emplace_back(img);
    }
  } while (std::next_permutation(img.begin(), img.end()));
  // next_permutation enumerates in lexicographic order, so witnesses are
  // already sorted.

  bool any_even = false, any_odd = false;
  for (const Permutation& p : report.witnesses) (p.odd() ? any_odd : any_even) = true;
  report.sign_singular = any_even && any_odd;
  return report;
}

// True iff the witness set contains permutations of both parities.
inline bool sign_singular(const TropMatrix& a) {
  return permanent_with_witnesses(a).sign_singular;
}

}  // namespace tropid
