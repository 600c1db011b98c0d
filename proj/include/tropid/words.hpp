#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tropid/error.hpp"
#include "tropid/matrix.hpp"

namespace tropid {

enum class Letter : std::uint8_t { x, y };

// Immutable word expression over the two-letter alphabet {x, y}: a DAG of
// letter, concatenation and power nodes. Sub-expressions may be shared;
// sharing never changes the expansion, it only lets evaluation and
// substitution reuse work. Copying a Word copies a pointer.
class Word {
 public:
  struct Node {
    enum class Kind : std::uint8_t { letter, concat, power } kind;
    Letter letter{};
    std::vector<Word> children;   // concat: parts in order; power: single base
    std::uint64_t exponent = 0;   // power only, >= 1
    std::uint64_t length = 0;     // number of base letters in the expansion
  };

  static Word letter(Letter l) {
    auto node = std::make_shared<Node>();
    node->kind = Node::Kind::letter;
    node->letter = l;
    node->length = 1;
    return Word(std::move(node));
  }

  static Word x() {
    static const Word w = letter(Letter::x);
    return w;
  }
  static Word y() {
    static const Word w = letter(Letter::y);
    return w;
  }

  static Word concat(std::vector<Word> parts) {
    if (parts.empty()) throw ValueError("word: empty concatenation");
    if (parts.size() == 1) return parts[0];
    auto node = std::make_shared<Node>();
    node->kind = Node::Kind::concat;
    std::uint64_t len = 0;
    for (const Word& p : parts) {
      if (__builtin_add_overflow(len, p.length(), &len))
        throw ValueError("word: length overflow");
    }
    node->children = std::move(parts);
    node->length = len;
    return Word(std::move(node));
  }

  static Word power(const Word& base, std::uint64_t exponent) {
    if (exponent == 0) throw ValueError("word: zero exponent");
    if (exponent == 1) return base;
    auto node = std::make_shared<Node>();
    node->kind = Node::Kind::power;
    node->children = {base};
    node->exponent = exponent;
    if (__builtin_mul_overflow(base.length(), exponent, &node->length))
      throw ValueError("word: length overflow");
    return Word(std::move(node));
  }

  std::uint64_t length() const { return node_->length; }
  const Node* node() const { return node_.get(); }

  friend Word operator*(const Word& a, const Word& b) { return concat({a, b}); }

 private:
  explicit Word(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

// Replaces every x-letter of w by for_x and every y-letter by for_y,
// preserving the node structure (powers stay powers). Shared sub-expressions
// are rewritten once.
inline Word subst(const Word& w, const Word& for_x, const Word& for_y) {
  std::unordered_map<const Word::Node*, Word> memo;
  auto rec = [&](auto&& self, const Word& cur) -> Word {
    if (auto it = memo.find(cur.node()); it != memo.end()) return it->second;
    const Word::Node* n = cur.node();
    Word out = [&] {
      switch (n->kind) {
        case Word::Node::Kind::letter:
          return n->letter == Letter::x ? for_x : for_y;
        case Word::Node::Kind::power:
          return Word::power(self(self, n->children[0]), n->exponent);
        case Word::Node::Kind::concat:
        default: {
          std::vector<Word> parts;
          parts.reserve(n->children.size());
          for (const Word& c : n->children) parts.push_back(self(self, c));
          return Word::concat(std::move(parts));
        }
      }
    }();
    memo.emplace(cur.node(), out);
    return out;
  };
  return rec(rec, w);
}

// Concatenation of all 2^n words of length n over {x, y}, enumerated in
// lexicographic order with x < y. The enumeration order is part of the
// library's contract: any fixed order makes every length-n word appear as a
// contiguous subword, which is all downstream constructions need, but outputs
// must be stable.
inline Word gamma(int n) {
  if (n < 1 || n > 8) throw SizeError("gamma: n must be between 1 and 8");
  std::vector<Word> blocks;
  blocks.reserve(std::size_t(1) << n);
  for (std::uint32_t code = 0; code < (1u << n); ++code) {
    std::vector<Word> letters;
    letters.reserve(std::size_t(n));
    for (int bit = n - 1; bit >= 0; --bit)
      letters.push_back((code >> bit) & 1u ? Word::y() : Word::x());
    blocks.push_back(Word::concat(std::move(letters)));
  }
  return Word::concat(std::move(blocks));
}

// A pair of distinct words asserted to evaluate equally.
struct Identity {
  Word lhs;
  Word rhs;
};

// The two 20-letter words whose equality is an identity of 2-by-2 tropical
// matrices: x^2 y^4 x^2 x^2 y^2 x^2 y^4 x^2 and x^2 y^4 x^2 y^2 x^2 x^2 y^4 x^2.
// They first differ at letter position 9.
inline const Identity& identity2() {
  static const Identity id = [] {
    const Word x = Word::x(), y = Word::y();
    const Word x2 = Word::power(x, 2);
    const Word y2 = Word::power(y, 2);
    const Word y4 = Word::power(y, 4);
    Word lhs = Word::concat({x2, y4, x2, x2, y2, x2, y4, x2});
    Word rhs = Word::concat({x2, y4, x2, y2, x2, x2, y4, x2});
    return Identity{std::move(lhs), std::move(rhs)};
  }();
  return id;
}

// The 3-by-3 identity. Both sides are words of 1,795,308 letters built from
// the composite multipliers a and b:
//   xbar = x^6 y^6,  ybar = y^6 x^6,  g = gamma(3)
//   a = g(xbar^146, ybar^146) g(xbar, ybar)^3 xbar g(xbar, ybar)^3
//   b = the same with ybar in place of the lone xbar
//   lhs = U(aa, ab) a,  rhs = V(aa, ab) a
// where (U, V) is the 2-by-2 identity pair and substitution replaces each
// letter of a word by the corresponding composite.
struct Identity3 {
  Word lhs;
  Word rhs;
  Word a;  // composite multiplier substituted for the first 2x2 letter
  Word b;  // composite multiplier substituted for the second
};

inline const Identity3& identity3() {
  static const Identity3 id = [] {
    const Word x = Word::x(), y = Word::y();
    const Word xbar = Word::concat({Word::power(x, 6), Word::power(y, 6)});
    const Word ybar = Word::concat({Word::power(y, 6), Word::power(x, 6)});
    const Word g = gamma(3);
    const Word head = subst(g, Word::power(xbar, 146), Word::power(ybar, 146));
    const Word tail = Word::power(subst(g, xbar, ybar), 3);
    const Word a = Word::concat({head, tail, xbar, tail});
    const Word b = Word::concat({head, tail, ybar, tail});
    const Word aa = Word::concat({a, a});
    const Word ab = Word::concat({a, b});
    Word lhs = Word::concat({subst(identity2().lhs, aa, ab), a});
    Word rhs = Word::concat({subst(identity2().rhs, aa, ab), a});
    return Identity3{std::move(lhs), std::move(rhs), a, b};
  }();
  return id;
}

// Evaluates words at a fixed square matrix pair, memoizing by node identity,
// so shared sub-DAGs are computed once per evaluator. Powers go through
// repeated squaring; both shortcuts are exact by associativity. The memo is
// per-evaluator state: concurrent evaluations each own their instance.
class Evaluator {
 public:
  Evaluator(TropMatrix x_value, TropMatrix y_value)
      : x_(std::move(x_value)), y_(std::move(y_value)) {
    if (!x_.is_square() || !y_.is_square() || x_.rows() != y_.rows())
      throw ShapeError("eval: values must be square matrices of equal order");
  }

  TropMatrix eval(const Word& w) {
    const Word::Node* n = w.node();
    if (n->kind == Word::Node::Kind::letter)
      return n->letter == Letter::x ? x_ : y_;
    if (auto it = memo_.find(n); it != memo_.end()) return it->second;
    TropMatrix out = [&] {
      if (n->kind == Word::Node::Kind::power)
        return pow(eval(n->children[0]), n->exponent);
      TropMatrix acc = eval(n->children[0]);
      for (std::size_t k = 1; k < n->children.size(); ++k)
        acc = acc * eval(n->children[k]);
      return acc;
    }();
    memo_.emplace(n, out);
    return out;
  }

 private:
  TropMatrix x_;
  TropMatrix y_;
  std::unordered_map<const Word::Node*, TropMatrix> memo_;
};

inline TropMatrix eval(const Word& w, const TropMatrix& x_value, const TropMatrix& y_value) {
  Evaluator ev(x_value, y_value);
  return ev.eval(w);
}

// Streams the letters of a word's expansion in order without materializing
// it: an explicit stack of (node, position, repetitions) frames, so memory is
// bounded by the expression depth regardless of expansion length.
class LetterStream {
 public:
  explicit LetterStream(const Word& w) : root_(w) { push(w.node()); }

  std::optional<Letter> next() {
    while (!stack_.empty()) {
      Frame& f = stack_.back();
      switch (f.node->kind) {
        case Word::Node::Kind::letter: {
          Letter l = f.node->letter;
          stack_.pop_back();
          return l;
        }
        case Word::Node::Kind::concat: {
          if (f.pos < f.node->children.size()) {
            const Word::Node* child = f.node->children[f.pos].node();
            ++f.pos;
            push(child);
          } else {
            stack_.pop_back();
          }
          break;
        }
        case Word::Node::Kind::power: {
          if (f.reps > 0) {
            --f.reps;
            push(f.node->children[0].node());
          } else {
            stack_.pop_back();
          }
          break;
        }
      }
    }
    return std::nullopt;
  }

 private:
  struct Frame {
    const Word::Node* node;
    std::size_t pos = 0;        // concat: next child
    std::uint64_t reps = 0;     // power: repetitions left
  };

  void push(const Word::Node* n) {
    Frame f{n};
    if (n->kind == Word::Node::Kind::power) f.reps = n->exponent;
    stack_.push_back(f);
  }

  Word root_;  // keeps the DAG alive while streaming
  std::vector<Frame> stack_;
};

inline std::uint64_t stream_count(const Word& w) {
  LetterStream s(w);
  std::uint64_t count = 0;
  while (s.next()) ++count;
  return count;
}

// First 1-based position where the expansions differ (a position past the
// shorter word counts as a difference); nullopt when the words are identical.
inline std::optional<std::uint64_t> first_difference(const Word& a, const Word& b) {
  LetterStream sa(a), sb(b);
  std::uint64_t pos = 0;
  for (;;) {
    ++pos;
    auto la = sa.next();
    auto lb = sb.next();
    if (!la && !lb) return std::nullopt;
    if (la != lb) return pos;
  }
}

// Letter-by-letter fold of the expansion: the naive evaluation route, with no
// memoization and no squaring. Used as the independent cross-check for the
// DAG evaluator.
inline TropMatrix eval_streamed(const Word& w, const TropMatrix& x_value,
                                const TropMatrix& y_value) {
  if (!x_value.is_square() || !y_value.is_square() || x_value.rows() != y_value.rows())
    throw ShapeError("eval: values must be square matrices of equal order");
  LetterStream s(w);
  std::optional<TropMatrix> acc;
  while (auto l = s.next()) {
    const TropMatrix& m = (*l == Letter::x) ? x_value : y_value;
    acc = acc ? (*acc * m) : m;
  }
  if (!acc) throw ValueError("eval: empty word");
  return *acc;
}

// Minimum of the path expression through a factor list that is forced to
// cross the pivot factor on its diagonal:
//   min over k of (product of prefix)(i,k) + pivot(k,k) + (product of suffix)(k,j).
inline Rational pinched_min(std::span<const TropMatrix> prefix, const TropMatrix& pivot,
                            std::span<const TropMatrix> suffix, int i, int j) {
  if (prefix.empty() || suffix.empty())
    throw ShapeError("pinched_min: prefix and suffix must be nonempty");
  const int n = pivot.rows();
  if (!pivot.is_square()) throw ShapeError("pinched_min: pivot must be square");
  auto product = [n](std::span<const TropMatrix> factors) {
    TropMatrix acc = factors[0];
    if (!acc.is_square() || acc.rows() != n)
      throw ShapeError("pinched_min: factor orders disagree");
    for (std::size_t k = 1; k < factors.size(); ++k) acc = acc * factors[k];
    return acc;
  };
  const TropMatrix left = product(prefix);
  const TropMatrix right = product(suffix);
  if (right.rows() != n) throw ShapeError("pinched_min: factor orders disagree");
  Rational best = left(i, 0) + pivot(0, 0) + right(0, j);
  for (int k = 1; k < n; ++k)
    best = min(best, left(i, k) + pivot(k, k) + right(k, j));
  return best;
}

}  // namespace tropid
