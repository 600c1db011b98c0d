#pragma once

#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "tropid/matrix.hpp"
#include "tropid/permanent.hpp"
#include "tropid/words.hpp"

namespace tropid {

// Membership of a column in the min-plus span of two generator columns via
// the principal solution: lambda* = max_k (c_k - p_k), mu* = max_k (c_k - q_k)
// are the smallest feasible coefficients, and c lies in the span iff they
// already reconstruct it, min(lambda* + p_k, mu* + q_k) = c_k for all k.
inline std::optional<std::pair<Rational, Rational>> span_membership(
    std::span<const Rational> c, std::span<const Rational> p, std::span<const Rational> q) {
  if (c.empty() || c.size() != p.size() || c.size() != q.size())
    throw ShapeError("span_membership: column lengths disagree");
  Rational lambda = c[0] - p[0];
  Rational mu = c[0] - q[0];
  for (std::size_t k = 1; k < c.size(); ++k) {
    lambda = max(lambda, c[k] - p[k]);
    mu = max(mu, c[k] - q[k]);
  }
  for (std::size_t k = 0; k < c.size(); ++k)
    if (min(lambda + p[k], mu + q[k]) != c[k]) return std::nullopt;
  return std::make_pair(std::move(lambda), std::move(mu));
}

// An exact factorization through inner dimension 2.
struct Factorization3 {
  TropMatrix p;  // 3x2
  TropMatrix q;  // 2x3
};

enum class FactorFailure {
  not_singular,   // input is sign-nonsingular; no such factorization is sought
  no_pair_found,  // sign-singular but no column or row pair generated it
};

using FactorResult = std::variant<Factorization3, FactorFailure>;

namespace detail {

inline std::optional<Factorization3> factor_by_column_pairs(const TropMatrix& a) {
  constexpr int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  for (const auto& pair : pairs) {
    std::vector<Rational> gen_a{a(0, pair[0]), a(1, pair[0]), a(2, pair[0])};
    std::vector<Rational> gen_b{a(0, pair[1]), a(1, pair[1]), a(2, pair[1])};
    TropMatrix q(2, 3);
    bool ok = true;
    for (int j = 0; j < 3 && ok; ++j) {
      std::vector<Rational> col{a(0, j), a(1, j), a(2, j)};
      auto coeffs = span_membership(col, gen_a, gen_b);
      if (!coeffs) {
        ok = false;
        break;
      }
      q(0, j) = std::move(coeffs->first);
      q(1, j) = std::move(coeffs->second);
    }
    if (!ok) continue;
    TropMatrix p(3, 2);
    for (int i = 0; i < 3; ++i) {
      p(i, 0) = gen_a[std::size_t(i)];
      p(i, 1) = gen_b[std::size_t(i)];
    }
    return Factorization3{std::move(p), std::move(q)};
  }
  return std::nullopt;
}

// Shifts each column of p to have minimum entry 0, absorbing the shift into
// the matching row of q; makes the output independent of which generators won.
inline Factorization3 canonicalize(Factorization3 f) {
  for (int k = 0; k < 2; ++k) {
    Rational shift = min(min(f.p(0, k), f.p(1, k)), f.p(2, k));
    for (int i = 0; i < 3; ++i) f.p(i, k) = f.p(i, k) - shift;
    for (int j = 0; j < 3; ++j) f.q(k, j) = f.q(k, j) + shift;
  }
  return f;
}

}  // namespace detail

// Factors a sign-singular 3x3 matrix as a 3x2 by 2x3 product. Candidate
// generators are the three unordered column pairs of a, tried in index order,
// with the remaining coefficients recovered by residuation; if no column pair
// works, the same search runs on the transpose (row pairs) and the result is
// transposed back. Sign-nonsingular inputs report not_singular. A
// sign-singular input defeating every pair reports no_pair_found; that branch
// is a monitored falsification signal, not an expected outcome, and callers
// must never swallow it silently.
inline FactorResult factor_rank2(const TropMatrix& a) {
  if (a.rows() != 3 || a.cols() != 3) throw ShapeError("factor_rank2: matrix must be 3x3");
  if (!sign_singular(a)) return FactorFailure::not_singular;

  if (auto f = detail::factor_by_column_pairs(a)) {
    if (!(f->p * f->q == a)) throw std::logic_error("factor_rank2: reconstruction mismatch");
    return detail::canonicalize(std::move(*f));
  }
  if (auto f = detail::factor_by_column_pairs(a.transpose())) {
    Factorization3 t{f->q.transpose(), f->p.transpose()};
    if (!(t.p * t.q == a)) throw std::logic_error("factor_rank2: reconstruction mismatch");
    return detail::canonicalize(std::move(t));
  }
  return FactorFailure::no_pair_found;
}

// Checks the lifted 2x2 identity on a 3x3 pair: with (U, V) the 2x2 identity
// words, evaluates U(aa, ab) a and V(aa, ab) a and compares exactly. Both
// inputs must admit rank-2 factorizations; a failed factorization propagates
// as an error rather than a verdict.
inline bool lifted_identity_check(const TropMatrix& a, const TropMatrix& b) {
  const FactorResult fa = factor_rank2(a);
  if (std::holds_alternative<FactorFailure>(fa))
    throw ValueError("lifted_identity_check: first matrix admits no rank-2 factorization");
  const FactorResult fb = factor_rank2(b);
  if (std::holds_alternative<FactorFailure>(fb))
    throw ValueError("lifted_identity_check: second matrix admits no rank-2 factorization");

  static const Identity words = [] {
    const Word x = Word::x(), y = Word::y();
    const Word xx = Word::concat({x, x});
    const Word xy = Word::concat({x, y});
    Word lhs = Word::concat({subst(identity2().lhs, xx, xy), x});
    Word rhs = Word::concat({subst(identity2().rhs, xx, xy), x});
    return Identity{std::move(lhs), std::move(rhs)};
  }();
  Evaluator ev(a, b);
  return ev.eval(words.lhs) == ev.eval(words.rhs);
}

}  // namespace tropid
