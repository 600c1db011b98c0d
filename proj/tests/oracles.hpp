#pragma once

// Test-only reference implementations, kept independent of the library's
// fast paths: definitional triple-loop products, strict left-to-right powers,
// and word evaluation through a fully materialized letter vector.

#include <vector>

#include "tropid/tropid.hpp"

namespace oracle {

inline tropid::TropMatrix naive_mul(const tropid::TropMatrix& a, const tropid::TropMatrix& b) {
  tropid::TropMatrix out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < b.cols(); ++j) {
      tropid::Rational best = a(i, 0) + b(0, j);
      for (int t = 1; t < a.cols(); ++t) best = tropid::min(best, a(i, t) + b(t, j));
      out(i, j) = best;
    }
  }
  return out;
}

inline tropid::TropMatrix naive_pow(const tropid::TropMatrix& a, int k) {
  tropid::TropMatrix acc = a;
  for (int i = 1; i < k; ++i) acc = naive_mul(acc, a);
  return acc;
}

// Recursive materialization of the expansion; no streaming machinery.
inline void collect_letters(const tropid::Word& w, std::vector<tropid::Letter>& out) {
  using Node = tropid::Word::Node;
  const Node* n = w.node();
  switch (n->kind) {
    case Node::Kind::letter:
      out.push_back(n->letter);
      break;
    case Node::Kind::concat:
      for (const tropid::Word& c : n->children) collect_letters(c, out);
      break;
    case Node::Kind::power:
      for (std::uint64_t i = 0; i < n->exponent; ++i) collect_letters(n->children[0], out);
      break;
  }
}

inline std::vector<tropid::Letter> letters_of(const tropid::Word& w) {
  std::vector<tropid::Letter> out;
  out.reserve(w.length());
  collect_letters(w, out);
  return out;
}

inline tropid::TropMatrix naive_eval(const tropid::Word& w, const tropid::TropMatrix& x,
                                     const tropid::TropMatrix& y) {
  const std::vector<tropid::Letter> letters = letters_of(w);
  tropid::TropMatrix acc = letters[0] == tropid::Letter::x ? x : y;
  for (std::size_t i = 1; i < letters.size(); ++i)
    acc = naive_mul(acc, letters[i] == tropid::Letter::x ? x : y);
  return acc;
}

// Small random word expressions for route-agreement properties.
inline tropid::Word random_word(tropid::Rng& rng, int depth) {
  using tropid::Word;
  if (depth == 0 || rng.below(4) == 0)
    return rng.below(2) == 0 ? Word::x() : Word::y();
  if (rng.below(2) == 0) {
    const int parts = int(rng.below(3)) + 2;  // 2..4 children
    std::vector<Word> children;
    for (int i = 0; i < parts; ++i) children.push_back(random_word(rng, depth - 1));
    return Word::concat(std::move(children));
  }
  return Word::power(random_word(rng, depth - 1), rng.below(3) + 2);  // exponent 2..4
}

}  // namespace oracle
