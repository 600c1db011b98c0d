#pragma once

#include <compare>
#include <string>
#include <vector>

#include "tropid/error.hpp"

namespace tropid {

// A bijection on {0..n-1} with cached parity, n <= 8. Ordering is
// lexicographic on the image array, which fixes a deterministic order for
// witness sets.
class Permutation {
 public:
  static constexpr int kMaxOrder = 8;

  explicit Permutation(std::vector<int> images) : img_(std::move(images)) {
    const int n = int(img_.size());
    if (n < 1 || n > kMaxOrder)
      throw SizeError("permutation: order must be between 1 and 8");
    std::vector<bool> seen(std::size_t(n), false);
    for (int v : img_) {
      if (v < 0 || v >= n || seen[std::size_t(v)])
        throw ValueError("permutation: images are not a bijection");
      seen[std::size_t(v)] = true;
    }
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (img_[std::size_t(i)] > img_[std::size_t(j)]) ++inversions;
    odd_ = (inversions % 2) != 0;
  }

  static Permutation identity(int n) {
    std::vector<int> img(std::size_t(n), 0);
    for (int i = 0; i < n; ++i) img[std::size_t(i)] = i;
    return Permutation(std::move(img));
  }

  int size() const { return int(img_.size()); }
  int operator()(int i) const { return img_[std::size_t(i)]; }
  const std::vector<int>& images() const { return img_; }

  bool odd() const { return odd_; }
  bool is_identity() const {
    for (int i = 0; i < size(); ++i)
      if ((*this)(i) != i) return false;
    return true;
  }

  // Cycle notation on 1-based points, fixed points omitted; "id" when trivial.
  std::string cycles() const {
    const int n = size();
    std::vector<bool> seen(std::size_t(n), false);
    std::string out;
    for (int start = 0; start < n; ++start) {
      if (seen[std::size_t(start)] || (*this)(start) == start) continue;
      out += '(';
      int cur = start;
      bool first = true;
      while (!seen[std::size_t(cur)]) {
        seen[std::size_t(cur)] = true;
        if (!first) out += ' ';
        out += std::to_string(cur + 1);
        first = false;
        cur = (*this)(cur);
      }
      out += ')';
    }
    return out.empty() ? "id" : out;
  }

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.img_ == b.img_;
  }
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    return a.img_ <=> b.img_;
  }

 private:
  std::vector<int> img_;
  bool odd_ = false;
};

// Composition (tau sigma)(i) = tau(sigma(i)). Parity is multiplicative.
inline Permutation compose(const Permutation& tau, const Permutation& sigma) {
  if (tau.size() != sigma.size()) throw ShapeError("compose: orders disagree");
  std::vector<int> img(std::size_t(tau.size()), 0);
  for (int i = 0; i < tau.size(); ++i) img[std::size_t(i)] = tau(sigma(i));
  return Permutation(std::move(img));
}

}  // namespace tropid
