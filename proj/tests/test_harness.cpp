#include <catch2/catch_amalgamated.hpp>

#include "tropid/tropid.hpp"

using tropid::DominanceParams;
using tropid::GenConfig;
using tropid::PropertyReport;
using tropid::Rational;
using tropid::SuiteOptions;
using tropid::TropMatrix;
using tropid::Verdict;

TEST_CASE("matrix generator") {
  GenConfig cfg;
  cfg.seed = 0x600d;

  GenConfig degenerate = cfg;
  degenerate.range = 0;
  CHECK(tropid::gen_matrix(degenerate, 0) == TropMatrix(3, 3));

  CHECK(tropid::gen_matrix(cfg, 7) == tropid::gen_matrix(cfg, 7));
  CHECK_FALSE(tropid::gen_matrix(cfg, 7) == tropid::gen_matrix(cfg, 8));

  for (std::uint64_t idx = 0; idx < 50; ++idx) {
    const TropMatrix m = tropid::gen_matrix(cfg, idx);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        CHECK(m(i, j).is_integer());  // denom = 1
        CHECK(tropid::abs(m(i, j)) <= Rational(cfg.range));
      }
  }

  GenConfig grid = cfg;
  grid.denom = 6;
  for (std::uint64_t idx = 0; idx < 50; ++idx) {
    const TropMatrix m = tropid::gen_matrix(grid, idx);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        CHECK(tropid::abs(m(i, j)) <= Rational(grid.range));
        CHECK(m(i, j).denominator() <= 6);
        CHECK(6 % m(i, j).denominator().convert_to<int>() == 0);
      }
  }
}

TEST_CASE("dominant pair generator") {
  GenConfig cfg;
  cfg.seed = 0xd00d;
  cfg.n = 3;
  cfg.denom = 2;
  const DominanceParams p{Rational(7, 2)};
  for (std::uint64_t t = 0; t < 100; ++t) {
    const auto [a, b] = tropid::gen_dominant_pair(cfg, p, t);
    CHECK(tropid::is_dominant_pair(a, b, p));
    for (int i = 0; i < 3; ++i) CHECK(a(i, i) == b(i, i));
  }

  // degenerate range: constant zero diagonal, dominant for any strength
  GenConfig zero = cfg;
  zero.range = 0;
  zero.denom = 1;
  const auto [a, b] = tropid::gen_dominant_pair(zero, p, 0);
  CHECK(a == TropMatrix(3, 3));
  CHECK(b == TropMatrix(3, 3));
  CHECK(tropid::is_dominant_pair(a, b, DominanceParams{Rational(1000)}));
}

TEST_CASE("sigma-id pair generator") {
  GenConfig cfg;
  cfg.seed = 0x51d;
  cfg.n = 3;
  cfg.denom = 3;
  for (std::uint64_t t = 0; t < 100; ++t) {
    const auto [a, b] = tropid::gen_sigma_id_pair(cfg, t);
    for (int i = 0; i < 3; ++i) CHECK(a(i, i) == b(i, i));
    for (const TropMatrix* m : {&a, &b}) {
      const auto rep = tropid::permanent_with_witnesses(*m);
      bool has_id = false;
      for (const auto& w : rep.witnesses)
        if (w.is_identity()) has_id = true;
      CHECK(has_id);
    }
  }
}

TEST_CASE("suite registry") {
  CHECK(tropid::suites().size() == 15);
  CHECK(tropid::is_suite("identity-3x3"));
  CHECK_FALSE(tropid::is_suite("identity-4x4"));
  CHECK_THROWS_AS(tropid::suite_defaults("nope"), tropid::ValueError);
  CHECK_THROWS_AS(tropid::run_suite("nope", SuiteOptions{}), tropid::ValueError);
  for (const auto& info : tropid::suites())
    CHECK_NOTHROW(tropid::suite_defaults(info.id));
}

TEST_CASE("reports are deterministic") {
  for (const char* id : {"perm-mult", "identity-2x2", "dominantize"}) {
    SuiteOptions o = tropid::suite_defaults(id);
    o.cfg.trials = 60;
    o.cfg.seed = 41;
    auto first = tropid::run_suite(id, o).to_json();
    auto second = tropid::run_suite(id, o).to_json();
    first.erase("elapsed_seconds");
    second.erase("elapsed_seconds");
    CHECK(first == second);
  }
}

TEST_CASE("vacuous conditional runs are inconclusive") {
  SuiteOptions o = tropid::suite_defaults("perm-mult");
  o.cfg.trials = 50;
  o.cfg.range = 0;  // all-zero products are sign-singular, hypothesis never met
  const PropertyReport r = tropid::run_suite("perm-mult", o);
  REQUIRE(r.hypothesis_met.has_value());
  CHECK(*r.hypothesis_met == 0);
  CHECK(r.failures_total == 0);
  CHECK(r.verdict == Verdict::inconclusive);
}

TEST_CASE("reports round-trip through json") {
  SuiteOptions o = tropid::suite_defaults("dominantize");
  o.cfg.trials = 40;
  const PropertyReport r = tropid::run_suite("dominantize", o);
  const PropertyReport back = PropertyReport::from_json(r.to_json());
  CHECK(back.to_json() == r.to_json());
  CHECK(back.suite == "dominantize");
  CHECK(back.strength.has_value());
  CHECK(*back.strength == Rational(2));
}

TEST_CASE("failure instances reload and reproduce") {
  // Build a report around a deliberately false claim, "every generated matrix
  // is 1-dominant", to exercise the failure path end to end.
  GenConfig cfg;
  cfg.seed = 99;
  cfg.n = 3;
  const DominanceParams one{Rational(1)};

  PropertyReport report;
  report.suite = "unit-test-claim";
  report.cfg = cfg;
  int checked = 0;
  for (std::uint64_t t = 0; t < 50; ++t) {
    const TropMatrix m = tropid::gen_matrix(cfg, t);
    if (tropid::is_dominant(m, one)) continue;
    ++report.failures_total;
    tropid::FailureCase f;
    f.trial = int(t);
    f.instances.emplace_back("M", tropid::format_matrix(m));
    f.detail = "matrix is not 1-dominant";
    report.failures.push_back(std::move(f));
    ++checked;
  }
  report.verdict = report.failures_total ? Verdict::fail : Verdict::pass;
  REQUIRE(checked > 0);

  const PropertyReport back = PropertyReport::from_json(report.to_json());
  REQUIRE(back.failures.size() == report.failures.size());
  for (const auto& f : back.failures) {
    // the serialized instance parses back and still fails the same check
    const TropMatrix m = tropid::parse_matrix(f.instances.at(0).second);
    CHECK(m == tropid::gen_matrix(cfg, std::uint64_t(f.trial)));
    CHECK_FALSE(tropid::is_dominant(m, one));
  }
}

TEST_CASE("suite order constraints are enforced") {
  for (const char* id : {"identity-2x2", "identity-3x3", "factor-roundtrip", "lift-2x2"}) {
    SuiteOptions o = tropid::suite_defaults(id);
    o.cfg.n = 5;
    CHECK_THROWS_AS(tropid::run_suite(id, o), tropid::ValueError);
  }
  SuiteOptions o = tropid::suite_defaults("dom-identity");
  o.strength = Rational(10);  // below the order-2 threshold of 33
  CHECK_THROWS_AS(tropid::run_suite("dom-identity", o), tropid::ValueError);

  SuiteOptions d = tropid::suite_defaults("dichotomy");
  d.strength = Rational(3, 2);  // level must be a positive integer
  CHECK_THROWS_AS(tropid::run_suite("dichotomy", d), tropid::ValueError);
}
