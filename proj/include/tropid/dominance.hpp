#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

#include "tropid/matrix.hpp"

namespace tropid {

// Strength parameter for diagonal dominance; strictly positive.
struct DominanceParams {
  Rational H;

  explicit DominanceParams(Rational h) : H(std::move(h)) {
    if (!(H > Rational(0))) throw ValueError("dominance: H must be positive");
  }
};

// A matrix is diagonally H-dominant when every entry satisfies
// a(i,j) >= max(a(i,i), a(j,j)) + H * |a(i,i) - a(j,j)|. The diagonal case
// i = j holds with equality, so only off-diagonal entries can fail.
inline bool is_dominant(const TropMatrix& a, const DominanceParams& p) {
  if (!a.is_square()) throw ShapeError("is_dominant: matrix must be square");
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      if (i == j) continue;
      const Rational bound = max(a(i, i), a(j, j)) + p.H * abs(a(i, i) - a(j, j));
      if (a(i, j) < bound) return false;
    }
  }
  return true;
}

// Two matrices form a diagonally H-dominant pair when their diagonals agree
// entrywise and their entrywise minimum is H-dominant.
inline bool is_dominant_pair(const TropMatrix& a, const TropMatrix& b,
                             const DominanceParams& p) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ShapeError("is_dominant_pair: shapes disagree");
  if (!a.is_square()) throw ShapeError("is_dominant_pair: matrices must be square");
  for (int i = 0; i < a.rows(); ++i)
    if (a(i, i) != b(i, i)) return false;
  return is_dominant(hadamard_min(a, b), p);
}

// A set K with a single cycle on it violating the cycle inequality: the sum
// of the cycle's entries falls below |K| * max_K(diagonal) + H * (total
// diagonal variation along the cycle).
struct CycleWitness {
  std::vector<int> cycle;  // visiting order k1,...,kt; arcs k1->k2->...->kt->k1
  Rational lhs;            // sum of entries along the cycle
  Rational rhs;            // the violated bound, lhs < rhs
};

// Exhaustively checks the cycle inequality over every nonempty subset K and
// every single cycle on K; returns the first violation in a fixed enumeration
// order (subsets by ascending bitmask, cycle tails in lexicographic order), or
// nullopt when every cycle passes. Singletons use the trivial cycle and can
// never be witnesses. Order is capped at 8.
inline std::optional<CycleWitness> cycle_criterion(const TropMatrix& c,
                                                   const DominanceParams& p) {
  if (!c.is_square()) throw ShapeError("cycle_criterion: matrix must be square");
  const int n = c.rows();
  if (n > 8) throw SizeError("cycle_criterion: exhaustive enumeration supports order <= 8");

  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> elems;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) elems.push_back(i);
    const int t = int(elems.size());

    Rational max_diag = c(elems[0], elems[0]);
    for (int k = 1; k < t; ++k) max_diag = max(max_diag, c(elems[std::size_t(k)], elems[std::size_t(k)]));

    if (t == 1) continue;  // lhs == rhs == the diagonal entry

    // Cycles on K with the smallest element first; permuting the tail
    // enumerates each cyclic permutation exactly once.
    std::vector<int> tail(elems.begin() + 1, elems.end());
    std::sort(tail.begin(), tail.end());
    do {
      std::vector<int> order;
      order.reserve(std::size_t(t));
      order.push_back(elems[0]);
      order.insert(order.end(), tail.begin(), tail.end());

      Rational lhs(0), variation(0);
      for (int k = 0; k < t; ++k) {
        const int u = order[std::size_t(k)];
        const int v = order[std::size_t((k + 1) % t)];
        lhs += c(u, v);
        variation += abs(c(u, u) - c(v, v));
      }
      Rational rhs = Rational(t) * max_diag + p.H * variation;
      if (lhs < rhs)
        return CycleWitness{std::move(order), std::move(lhs), std::move(rhs)};
    } while (std::next_permutation(tail.begin(), tail.end()));
  }
  return std::nullopt;
}

// A directed cycle of strictly negative total weight in the digraph whose arc
// (i,j) weighs m(i,j); certificate that no potentials exist.
struct NegativeCycle {
  std::vector<int> nodes;  // arcs nodes[k] -> nodes[k+1], wrapping around
  Rational weight;
};

using PotentialsResult = std::variant<Potentials, NegativeCycle>;

// Finds r with m(i,j) + r_i - r_j >= 0 for all i,j, or an explicit negative
// cycle when none exists. Bellman-Ford from a virtual source with zero-weight
// arcs to every node: the condition is exactly d_j <= d_i + m(i,j) for the
// distance vector d, and it is satisfiable iff there is no negative cycle.
// Relaxations sweep arcs in row-major order, so the result is deterministic.
inline PotentialsResult potentials_for_nonneg(const TropMatrix& m) {
  if (!m.is_square()) throw ShapeError("potentials: matrix must be square");
  const int n = m.rows();
  std::vector<Rational> dist(std::size_t(n), Rational(0));
  std::vector<int> pred(std::size_t(n), -1);

  bool changed = true;
  for (int round = 0; round < n - 1 && changed; ++round) {
    changed = false;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        Rational cand = dist[std::size_t(i)] + m(i, j);
        if (cand < dist[std::size_t(j)]) {
          dist[std::size_t(j)] = std::move(cand);
          pred[std::size_t(j)] = i;
          changed = true;
        }
      }
    }
  }

  int touched = -1;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Rational cand = dist[std::size_t(i)] + m(i, j);
      if (cand < dist[std::size_t(j)]) {
        dist[std::size_t(j)] = std::move(cand);
        pred[std::size_t(j)] = i;
        touched = j;
      }
    }
  }
  if (touched < 0) return Potentials(std::move(dist));

  // A node relaxed after n-1 full rounds hangs off a negative predecessor
  // cycle; walking n predecessors lands inside it. The walk can never fall
  // off the predecessor graph, so a missing link is an invariant breach.
  int v = touched;
  for (int k = 0; k < n; ++k) {
    v = pred[std::size_t(v)];
    if (v < 0) throw std::logic_error("potentials: predecessor walk left the graph");
  }
  std::vector<int> back;
  int cur = v;
  do {
    back.push_back(cur);
    cur = pred[std::size_t(cur)];
    if (cur < 0 || int(back.size()) > n)
      throw std::logic_error("potentials: predecessor cycle collection failed");
  } while (cur != v);
  std::reverse(back.begin(), back.end());

  Rational weight(0);
  for (std::size_t k = 0; k < back.size(); ++k)
    weight += m(back[k], back[(k + 1) % back.size()]);
  if (!(weight < Rational(0)))
    throw std::logic_error("potentials: extracted cycle is not negative");
  return NegativeCycle{std::move(back), std::move(weight)};
}

// Successful normalization: the potentials applied and the transformed,
// now H-dominant, matrix.
struct Dominantization {
  Potentials shifts;
  TropMatrix matrix;
};

using DominantizeResult = std::variant<Dominantization, CycleWitness>;

// Normalizes c to a diagonally H-dominant matrix by a similarity, or returns
// a violating cycle. When the cycle inequality holds everywhere, the auxiliary
// matrix d(i,j) = c(i,j) - H|c(i,i)-c(j,j)| - max(c(i,i),c(j,j)) has no
// negative cycle, and shortest-path potentials for d shift c into dominant
// form.
inline DominantizeResult dominantize(const TropMatrix& c, const DominanceParams& p) {
  if (!c.is_square()) throw ShapeError("dominantize: matrix must be square");
  if (auto witness = cycle_criterion(c, p)) return std::move(*witness);

  const int n = c.rows();
  TropMatrix d(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      d(i, j) = c(i, j) - p.H * abs(c(i, i) - c(j, j)) - max(c(i, i), c(j, j));

  PotentialsResult res = potentials_for_nonneg(d);
  if (!std::holds_alternative<Potentials>(res))
    throw std::logic_error("dominantize: passing cycle criterion must yield potentials");
  Potentials shifts = std::get<Potentials>(std::move(res));
  TropMatrix out = similarity(c, shifts);
  if (!is_dominant(out, p))
    throw std::logic_error("dominantize: transformed matrix is not dominant");
  return Dominantization{std::move(shifts), std::move(out)};
}

struct DominantizedPair {
  Potentials shifts;
  TropMatrix a;
  TropMatrix b;
};

using DominantizePairResult = std::variant<DominantizedPair, CycleWitness>;

// Pair form: requires equal diagonals, normalizes the entrywise minimum, and
// applies the same potentials to both matrices. A single shared similarity is
// essential; the pair property is not preserved by transforming the two sides
// independently.
inline DominantizePairResult dominantize_pair(const TropMatrix& a, const TropMatrix& b,
                                              const DominanceParams& p) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ShapeError("dominantize_pair: shapes disagree");
  if (!a.is_square()) throw ShapeError("dominantize_pair: matrices must be square");
  for (int i = 0; i < a.rows(); ++i)
    if (a(i, i) != b(i, i)) throw ValueError("dominantize_pair: diagonals must agree");

  DominantizeResult res = dominantize(hadamard_min(a, b), p);
  if (std::holds_alternative<CycleWitness>(res))
    return std::get<CycleWitness>(std::move(res));
  Dominantization dz = std::get<Dominantization>(std::move(res));
  TropMatrix ta = similarity(a, dz.shifts);
  TropMatrix tb = similarity(b, dz.shifts);
  if (!is_dominant_pair(ta, tb, p))
    throw std::logic_error("dominantize_pair: transformed pair is not dominant");
  return DominantizedPair{std::move(dz.shifts), std::move(ta), std::move(tb)};
}

}  // namespace tropid
