#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "tropid/error.hpp"
#include "tropid/rational.hpp"

namespace tropid {

// Dense matrix over the min-plus semiring: "addition" is min, "multiplication"
// is ordinary +. Entries are exact rationals and always finite. Values are
// plain immutable-after-construction data; every operation below is a pure
// function, so matrices can be shared freely across threads.
class TropMatrix {
 public:
  TropMatrix(int rows, int cols, const Rational& fill = Rational(0))
      : rows_(rows), cols_(cols) {
    if (rows <= 0 || cols <= 0) throw ShapeError("matrix: dimensions must be positive");
    a_.assign(std::size_t(rows) * std::size_t(cols), fill);
  }

  static TropMatrix from_rows(std::initializer_list<std::initializer_list<Rational>> rows) {
    if (rows.size() == 0) throw ShapeError("matrix: no rows");
    const int r = int(rows.size());
    const int c = int(rows.begin()->size());
    TropMatrix m(r, c);
    int i = 0;
    for (const auto& row : rows) {
      if (int(row.size()) != c) throw ShapeError("matrix: ragged rows");
      int j = 0;
      for (const auto& v : row) m(i, j++) = v;
      ++i;
    }
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  const Rational& operator()(int i, int j) const { return a_[idx(i, j)]; }
  Rational& operator()(int i, int j) { return a_[idx(i, j)]; }

  TropMatrix transpose() const {
    TropMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend bool operator==(const TropMatrix& a, const TropMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

 private:
  std::size_t idx(int i, int j) const { return std::size_t(i) * cols_ + j; }

  int rows_;
  int cols_;
  std::vector<Rational> a_;
};

// Min-plus product: entry (i,j) is min over t of a(i,t) + b(t,j).
inline TropMatrix operator*(const TropMatrix& a, const TropMatrix& b) {
  if (a.cols() != b.rows())
    throw ShapeError("product: inner dimensions disagree (" + std::to_string(a.cols()) +
                     " vs " + std::to_string(b.rows()) + ")");
  TropMatrix out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < b.cols(); ++j) {
      Rational best = a(i, 0) + b(0, j);
      for (int t = 1; t < a.cols(); ++t) {
        Rational cand = a(i, t) + b(t, j);
        if (cand < best) best = std::move(cand);
      }
      out(i, j) = std::move(best);
    }
  }
  return out;
}

// k-fold min-plus product, k >= 1, by repeated squaring. Associativity makes
// this exactly equal to the naive left-to-right product. There is no k = 0:
// the min-plus identity matrix would need infinite off-diagonal entries, and
// everything here is finite.
inline TropMatrix pow(const TropMatrix& a, std::uint64_t k) {
  if (!a.is_square()) throw ShapeError("power: matrix must be square");
  if (k == 0) throw ValueError("power: exponent must be positive");
  TropMatrix acc = a;
  TropMatrix base = a;
  std::uint64_t e = k - 1;
  while (e != 0) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e != 0) base = base * base;
  }
  return acc;
}

// Entrywise minimum.
inline TropMatrix hadamard_min(const TropMatrix& a, const TropMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ShapeError("hadamard_min: shapes disagree");
  TropMatrix out(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out(i, j) = min(a(i, j), b(i, j));
  return out;
}

// A vector of shift parameters defining a similarity transformation.
struct Potentials {
  std::vector<Rational> values;

  Potentials() = default;
  explicit Potentials(std::vector<Rational> v) : values(std::move(v)) {}

  int size() const { return int(values.size()); }
  const Rational& operator[](int i) const { return values[std::size_t(i)]; }
  Rational& operator[](int i) { return values[std::size_t(i)]; }

  friend bool operator==(const Potentials&, const Potentials&) = default;
};

// Conjugation by potentials: entry (i,j) becomes c(i,j) + s_i - s_j. Leaves
// the diagonal unchanged and is an automorphism of the product semigroup.
inline TropMatrix similarity(const TropMatrix& c, const Potentials& s) {
  if (!c.is_square()) throw ShapeError("similarity: matrix must be square");
  if (s.size() != c.rows()) throw ShapeError("similarity: potential length disagrees with order");
  TropMatrix out(c.rows(), c.cols());
  for (int i = 0; i < c.rows(); ++i)
    for (int j = 0; j < c.cols(); ++j) out(i, j) = c(i, j) + s[i] - s[j];
  return out;
}

}  // namespace tropid
