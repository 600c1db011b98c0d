#include <string>
#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "tropid/tropid.hpp"

using tropid::GenConfig;
using tropid::Letter;
using tropid::Rational;
using tropid::TropMatrix;
using tropid::Word;

namespace {

std::string spell(const std::vector<Letter>& letters) {
  std::string s;
  for (Letter l : letters) s += (l == Letter::x) ? 'x' : 'y';
  return s;
}

std::string spell_stream(const Word& w) {
  std::string s;
  tropid::LetterStream stream(w);
  while (auto l = stream.next()) s += (*l == Letter::x) ? 'x' : 'y';
  return s;
}

}  // namespace

TEST_CASE("gamma enumerates all words of length n in lexicographic order") {
  CHECK(spell(oracle::letters_of(tropid::gamma(1))) == "xy");
  CHECK(spell(oracle::letters_of(tropid::gamma(2))) == "xxxyyxyy");
  CHECK(spell(oracle::letters_of(tropid::gamma(3))) == "xxxxxyxyxxyyyxxyxyyyxyyy");
  for (int n = 1; n <= 8; ++n)
    CHECK(tropid::gamma(n).length() == std::uint64_t(n) << n);
  CHECK_THROWS_AS(tropid::gamma(0), tropid::SizeError);
  CHECK_THROWS_AS(tropid::gamma(9), tropid::SizeError);
}

TEST_CASE("the 2x2 identity words") {
  const tropid::Identity& id = tropid::identity2();
  CHECK(id.lhs.length() == 20);
  CHECK(id.rhs.length() == 20);
  CHECK(spell_stream(id.lhs) == "xxyyyyxxxxyyxxyyyyxx");
  CHECK(spell_stream(id.rhs) == "xxyyyyxxyyxxxxyyyyxx");
  CHECK(tropid::first_difference(id.lhs, id.rhs) == 9);

  // collapsing both letters to x makes the sides the same word x^20
  const Word both_x_lhs = tropid::subst(id.lhs, Word::x(), Word::x());
  const Word both_x_rhs = tropid::subst(id.rhs, Word::x(), Word::x());
  CHECK(both_x_lhs.length() == 20);
  CHECK_FALSE(tropid::first_difference(both_x_lhs, both_x_rhs).has_value());
}

TEST_CASE("the 3x3 identity words") {
  const tropid::Identity3& id = tropid::identity3();
  CHECK(id.a.length() == 43788);
  CHECK(id.b.length() == 43788);
  CHECK(id.lhs.length() == 1795308);
  CHECK(id.rhs.length() == 1795308);
  CHECK(tropid::stream_count(id.lhs) == 1795308);
  CHECK(tropid::stream_count(id.rhs) == 1795308);

  // first difference, from the construction arithmetic: the first 8 letters of
  // the 2x2 identity words agree (8 * 87576 expanded letters), the 9th letter
  // substitutes aa versus ab (43788 shared letters), and a versus b first
  // differ right after their common 42912-letter prefix:
  // 8*87576 + 43788 + 42912 + 1 = 787309.
  CHECK(tropid::first_difference(id.lhs, id.rhs) == 787309);
}

TEST_CASE("streaming agrees with recursive expansion") {
  CHECK(spell_stream(Word::power(Word::x(), 3)) == "xxx");
  tropid::Rng rng(0x77);
  for (int t = 0; t < 200; ++t) {
    const Word w = oracle::random_word(rng, 5);
    const auto letters = oracle::letters_of(w);
    CHECK(w.length() == letters.size());
    CHECK(spell_stream(w) == spell(letters));
  }
}

TEST_CASE("word construction rejects degenerate nodes") {
  CHECK_THROWS_AS(Word::concat({}), tropid::ValueError);
  CHECK_THROWS_AS(Word::power(Word::x(), 0), tropid::ValueError);
}

TEST_CASE("evaluation routes agree") {
  GenConfig cfg;
  cfg.seed = 0xe0e0;
  cfg.n = 3;
  cfg.range = 30;
  cfg.denom = 3;

  CHECK(tropid::eval(Word::x(), tropid::gen_matrix(cfg, 0), tropid::gen_matrix(cfg, 1)) ==
        tropid::gen_matrix(cfg, 0));

  const TropMatrix a0 = tropid::gen_matrix(cfg, 2);
  CHECK(tropid::eval(tropid::gamma(2), a0, a0) == oracle::naive_pow(a0, 8));

  tropid::Rng rng(0x4242);
  for (int t = 0; t < 60; ++t) {
    const Word w = oracle::random_word(rng, 5);
    const TropMatrix x = tropid::gen_matrix(cfg, 100 + 2 * std::uint64_t(t));
    const TropMatrix y = tropid::gen_matrix(cfg, 101 + 2 * std::uint64_t(t));
    const TropMatrix direct = tropid::eval(w, x, y);
    CHECK(direct == oracle::naive_eval(w, x, y));
    CHECK(direct == tropid::eval_streamed(w, x, y));
  }

  CHECK_THROWS_AS(tropid::eval(Word::x(), TropMatrix(2, 2), TropMatrix(3, 3)),
                  tropid::ShapeError);
}

TEST_CASE("flanked words agree on dominant pairs above the threshold") {
  for (const auto& [n, strength, trials] : {std::tuple{2, 33, 300}, std::tuple{3, 145, 50}}) {
    GenConfig cfg;
    cfg.seed = 0xf00d + std::uint64_t(n);
    cfg.n = n;
    const tropid::DominanceParams p{Rational(strength)};
    const Word flank = Word::power(tropid::gamma(n), std::uint64_t(n));
    const Word wx = Word::concat({flank, Word::x(), flank});
    const Word wy = Word::concat({flank, Word::y(), flank});
    for (int t = 0; t < trials; ++t) {
      const auto [a, b] = tropid::gen_dominant_pair(cfg, p, std::uint64_t(t));
      tropid::Evaluator ev(a, b);
      CHECK(ev.eval(wx) == ev.eval(wy));
    }
  }
}

TEST_CASE("identity evaluations") {
  GenConfig cfg2;
  cfg2.seed = 0x22;
  cfg2.n = 2;
  cfg2.denom = 7;
  const tropid::Identity& id2 = tropid::identity2();
  for (std::uint64_t t = 0; t < 300; ++t) {
    const TropMatrix a = tropid::gen_matrix(cfg2, 2 * t);
    const TropMatrix b = tropid::gen_matrix(cfg2, 2 * t + 1);
    tropid::Evaluator ev(a, b);
    CHECK(ev.eval(id2.lhs) == ev.eval(id2.rhs));
  }

  GenConfig cfg3;
  cfg3.seed = 0x33;
  cfg3.n = 3;
  const tropid::Identity3& id3 = tropid::identity3();
  for (std::uint64_t t = 0; t < 50; ++t) {
    const TropMatrix a = tropid::gen_matrix(cfg3, 2 * t);
    const TropMatrix b = tropid::gen_matrix(cfg3, 2 * t + 1);
    tropid::Evaluator ev(a, b);
    CHECK(ev.eval(id3.lhs) == ev.eval(id3.rhs));
  }

  // one full cross-check of the DAG evaluator against the streamed fold of
  // the complete 1.8M-letter expansion
  const TropMatrix a = tropid::gen_matrix(cfg3, 1000);
  const TropMatrix b = tropid::gen_matrix(cfg3, 1001);
  CHECK(tropid::eval(id3.lhs, a, b) == tropid::eval_streamed(id3.lhs, a, b));
}

TEST_CASE("pinched minimum") {
  // order 1: every path is diagonal, so pinched equals full trivially
  const TropMatrix s = TropMatrix::from_rows({{Rational(5, 2)}});
  std::vector<TropMatrix> single{s};
  CHECK(tropid::pinched_min(single, s, single, 0, 0) == Rational(15, 2));

  const TropMatrix a = TropMatrix::from_rows({{0, 7}, {8, 1}});
  std::vector<TropMatrix> fac{a};
  CHECK(tropid::pinched_min(fac, a, fac, 0, 0) == Rational(0));
  CHECK(tropid::pinched_min(fac, a, fac, 0, 0) == oracle::naive_pow(a, 3)(0, 0));

  CHECK_THROWS_AS(tropid::pinched_min({}, a, fac, 0, 0), tropid::ShapeError);

  // brute-force oracle: minimize over all index tuples with the middle step
  // forced diagonal
  GenConfig cfg;
  cfg.seed = 0x9d;
  cfg.n = 3;
  cfg.range = 9;
  for (std::uint64_t t = 0; t < 40; ++t) {
    std::vector<TropMatrix> factors;
    for (std::uint64_t k = 0; k < 5; ++k)
      factors.push_back(tropid::gen_matrix(cfg, 10 * t + k));
    const std::vector<TropMatrix> prefix(factors.begin(), factors.begin() + 2);
    const TropMatrix& pivot = factors[2];
    const std::vector<TropMatrix> suffix(factors.begin() + 3, factors.end());
    const int n = cfg.n;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        bool first = true;
        Rational best(0);
        // indices k1..k4 between the five factors; the pivot is crossed
        // diagonally when k2 == k3
        for (int k1 = 0; k1 < n; ++k1)
          for (int k2 = 0; k2 < n; ++k2)
            for (int k4 = 0; k4 < n; ++k4) {
              const Rational sum = factors[0](i, k1) + factors[1](k1, k2) +
                                   factors[2](k2, k2) + factors[3](k2, k4) +
                                   factors[4](k4, j);
              if (first || sum < best) {
                best = sum;
                first = false;
              }
            }
        CHECK(tropid::pinched_min(prefix, pivot, suffix, i, j) == best);
      }
    }
  }
}

TEST_CASE("pinched minimum equals the full product on structured words") {
  const int n = 2;
  const std::int64_t g = std::int64_t(n) << n;
  const std::int64_t h = 2 * n * g + 1;
  GenConfig cfg;
  cfg.seed = 0x51;
  cfg.n = n;
  const tropid::DominanceParams p{Rational(h)};

  std::vector<Letter> half;
  tropid::LetterStream stream(Word::power(tropid::gamma(n), n));
  while (auto l = stream.next()) half.push_back(*l);
  REQUIRE(std::int64_t(half.size()) == n * g);

  for (std::uint64_t t = 0; t < 100; ++t) {
    const auto [a, b] = tropid::gen_dominant_pair(cfg, p, t);
    std::vector<TropMatrix> side;
    for (Letter l : half) side.push_back(l == Letter::x ? a : b);
    TropMatrix flank = side[0];
    for (std::size_t k = 1; k < side.size(); ++k) flank = flank * side[k];
    for (const TropMatrix* pivot : {&a, &b}) {
      const TropMatrix full = flank * *pivot * flank;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          CHECK(tropid::pinched_min(side, *pivot, side, i, j) == full(i, j));
    }
  }
}
