#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>

#include "tropid/dominance.hpp"
#include "tropid/matrix.hpp"
#include "tropid/permanent.hpp"

namespace tropid {

// Deterministic instance generation. Every generator derives a private
// stream from (master seed, draw index) by counter-based splitting, so the
// instance sequence is a pure function of the config and survives any
// reordering or parallelization of trials.
struct GenConfig {
  std::uint64_t seed = 1;
  int n = 3;                   // matrix order
  std::int64_t range = 100;    // entries lie in [-range, range]
  std::int64_t denom = 1;      // entries are multiples of 1/denom
  int trials = 1000;
};

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t state) : state_(state) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  SplitMix64 sm(master ^ (0x9E3779B97F4A7C15ULL * (index + 1)));
  sm.next();
  return sm.next();
}

// Unbiased bounded draws on top of SplitMix64. Not std::uniform_int_distribution:
// its output is implementation-defined, and reports must be bit-identical
// across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : sm_(seed) {}

  std::uint64_t next() { return sm_.next(); }

  std::uint64_t below(std::uint64_t bound) {
    // rejection sampling; threshold = 2^64 mod bound
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = sm_.next();
      if (r >= threshold) return r % bound;
    }
  }

  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return lo + std::int64_t(below(std::uint64_t(hi - lo) + 1));
  }

 private:
  SplitMix64 sm_;
};

namespace detail {

inline Rational grid_value(Rng& rng, const GenConfig& cfg, std::int64_t lo_times_denom,
                           std::int64_t hi_times_denom) {
  return Rational(rng.uniform(lo_times_denom, hi_times_denom), cfg.denom);
}

inline void check_gen_config(const GenConfig& cfg) {
  if (cfg.n < 1) throw ValueError("gen: order must be positive");
  if (cfg.range < 0) throw ValueError("gen: range must be nonnegative");
  if (cfg.denom < 1) throw ValueError("gen: denominator must be positive");
}

}  // namespace detail

// rows x cols matrix with independent entries uniform on the grid of
// multiples of 1/denom in [-range, range].
inline TropMatrix gen_matrix_shaped(const GenConfig& cfg, int rows, int cols,
                                    std::uint64_t draw_index) {
  detail::check_gen_config(cfg);
  Rng rng(derive_seed(cfg.seed, draw_index));
  const std::int64_t bound = cfg.range * cfg.denom;
  TropMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = detail::grid_value(rng, cfg, -bound, bound);
  return m;
}

inline TropMatrix gen_matrix(const GenConfig& cfg, std::uint64_t draw_index) {
  return gen_matrix_shaped(cfg, cfg.n, cfg.n, draw_index);
}

// Entrywise-nonnegative matrix on the [0, range] grid.
inline TropMatrix gen_nonneg_matrix(const GenConfig& cfg, std::uint64_t draw_index) {
  detail::check_gen_config(cfg);
  Rng rng(derive_seed(cfg.seed, draw_index));
  const std::int64_t bound = cfg.range * cfg.denom;
  TropMatrix m(cfg.n, cfg.n);
  for (int i = 0; i < cfg.n; ++i)
    for (int j = 0; j < cfg.n; ++j) m(i, j) = detail::grid_value(rng, cfg, 0, bound);
  return m;
}

inline Potentials gen_potentials(const GenConfig& cfg, std::uint64_t draw_index) {
  detail::check_gen_config(cfg);
  Rng rng(derive_seed(cfg.seed, draw_index));
  const std::int64_t bound = cfg.range * cfg.denom;
  std::vector<Rational> values;
  values.reserve(std::size_t(cfg.n));
  for (int i = 0; i < cfg.n; ++i) values.push_back(detail::grid_value(rng, cfg, -bound, bound));
  return Potentials(std::move(values));
}

namespace detail {

// Off-diagonal floor that makes dominance hold by construction: every entry
// (i,j) starts at max(d_i, d_j) + H |d_i - d_j| and only gains nonnegative
// slack. With extra_floor = max(d) - min(d), cycle sums additionally clear the
// cycle inequality for every K: each cycle of length t picks up at least
// t * spread of slack, which covers the gap between t * max_K(diagonal) and
// the sum of pairwise maxima.
inline TropMatrix dominant_from_diag(Rng& rng, const GenConfig& cfg, const DominanceParams& p,
                                     const std::vector<Rational>& diag,
                                     const Rational& extra_floor) {
  const std::int64_t bound = cfg.range * cfg.denom;
  const int n = cfg.n;
  TropMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = diag[std::size_t(i)];
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const Rational base =
          max(diag[std::size_t(i)], diag[std::size_t(j)]) +
          p.H * abs(diag[std::size_t(i)] - diag[std::size_t(j)]);
      m(i, j) = base + extra_floor + grid_value(rng, cfg, 0, bound);
    }
  }
  return m;
}

inline std::vector<Rational> draw_diag(Rng& rng, const GenConfig& cfg) {
  const std::int64_t bound = cfg.range * cfg.denom;
  std::vector<Rational> diag;
  diag.reserve(std::size_t(cfg.n));
  for (int i = 0; i < cfg.n; ++i) diag.push_back(grid_value(rng, cfg, -bound, bound));
  return diag;
}

inline Rational spread(const std::vector<Rational>& diag) {
  Rational lo = diag[0], hi = diag[0];
  for (const Rational& d : diag) {
    lo = min(lo, d);
    hi = max(hi, d);
  }
  return hi - lo;
}

}  // namespace detail

// Diagonally H-dominant pair: a shared diagonal, with each off-diagonal entry
// of both matrices drawn independently at or above the dominance bound. The
// construction guarantees the pair property, and it is asserted.
inline std::pair<TropMatrix, TropMatrix> gen_dominant_pair(const GenConfig& cfg,
                                                           const DominanceParams& p,
                                                           std::uint64_t trial) {
  detail::check_gen_config(cfg);
  Rng rng(derive_seed(cfg.seed, trial));
  const std::vector<Rational> diag = detail::draw_diag(rng, cfg);
  TropMatrix a = detail::dominant_from_diag(rng, cfg, p, diag, Rational(0));
  TropMatrix b = detail::dominant_from_diag(rng, cfg, p, diag, Rational(0));
  if (!is_dominant_pair(a, b, p))
    throw std::logic_error("gen_dominant_pair: construction violated dominance");
  return {std::move(a), std::move(b)};
}

inline TropMatrix gen_dominant_matrix(const GenConfig& cfg, const DominanceParams& p,
                                      std::uint64_t trial) {
  detail::check_gen_config(cfg);
  Rng rng(derive_seed(cfg.seed, trial));
  const std::vector<Rational> diag = detail::draw_diag(rng, cfg);
  TropMatrix a = detail::dominant_from_diag(rng, cfg, p, diag, Rational(0));
  if (!is_dominant(a, p))
    throw std::logic_error("gen_dominant_matrix: construction violated dominance");
  return a;
}

// H-dominant matrix that additionally satisfies the cycle inequality for
// every subset and cycle. Dominance alone does not imply the cycle criterion
// for orders above 2, so normalization tests need this strengthened family:
// the extra per-entry floor of max(d) - min(d) provably closes the gap.
inline TropMatrix gen_cycle_safe_dominant(const GenConfig& cfg, const DominanceParams& p,
                                          std::uint64_t trial) {
  detail::check_gen_config(cfg);
  Rng rng(derive_seed(cfg.seed, trial));
  const std::vector<Rational> diag = detail::draw_diag(rng, cfg);
  TropMatrix a = detail::dominant_from_diag(rng, cfg, p, diag, detail::spread(diag));
  if (cycle_criterion(a, p))
    throw std::logic_error("gen_cycle_safe_dominant: construction violated the cycle inequality");
  return a;
}

// Pair with a shared diagonal chosen at or below every off-diagonal entry of
// both matrices, which forces the identity permutation into both witness
// sets: any permutation moving k points replaces k diagonal entries by
// off-diagonal ones that are no smaller. Both postconditions are asserted.
inline std::pair<TropMatrix, TropMatrix> gen_sigma_id_pair(const GenConfig& cfg,
                                                           std::uint64_t trial) {
  detail::check_gen_config(cfg);
  Rng rng(derive_seed(cfg.seed, trial));
  const std::int64_t bound = cfg.range * cfg.denom;
  const int n = cfg.n;
  TropMatrix a(n, n), b(n, n);
  bool have_min = false;
  Rational low(0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      a(i, j) = detail::grid_value(rng, cfg, -bound, bound);
      b(i, j) = detail::grid_value(rng, cfg, -bound, bound);
      const Rational lower = min(a(i, j), b(i, j));
      low = have_min ? min(low, lower) : lower;
      have_min = true;
    }
  }
  if (!have_min) low = detail::grid_value(rng, cfg, -bound, bound);  // order 1: free diagonal
  for (int i = 0; i < n; ++i) {
    const Rational d = low + detail::grid_value(rng, cfg, -bound, 0);
    a(i, i) = d;
    b(i, i) = d;
  }
  for (const TropMatrix* m : {&a, &b}) {
    const PermanentReport report = permanent_with_witnesses(*m);
    bool has_id = false;
    for (const Permutation& w : report.witnesses)
      if (w.is_identity()) has_id = true;
    if (!has_id)
      throw std::logic_error("gen_sigma_id_pair: identity permutation is not a witness");
  }
  return {std::move(a), std::move(b)};
}

}  // namespace tropid
