#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tropid/tropid.hpp"

namespace {

using nlohmann::json;

std::uint64_t default_seed() {
  const char* env = std::getenv("TROPID_SEED");
  if (env == nullptr || *env == '\0') return 1;
  char* end = nullptr;
  errno = 0;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (errno != 0 || end == nullptr || *end != '\0')
    throw tropid::ValueError("TROPID_SEED must be an unsigned 64-bit integer");
  return v;
}

tropid::TropMatrix load_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw tropid::ParseError("cannot open '" + path + "'");
  return tropid::read_matrix(in);
}

json matrix_json(const tropid::TropMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(std::move(row));
  }
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

json potentials_json(const tropid::Potentials& p) {
  json out = json::array();
  for (const tropid::Rational& v : p.values) out.push_back(v.str());
  return out;
}

json witness_json(const tropid::CycleWitness& w) {
  json cycle = json::array();
  for (int k : w.cycle) cycle.push_back(k + 1);
  std::vector<int> sorted = w.cycle;
  std::sort(sorted.begin(), sorted.end());
  json kset = json::array();
  for (int k : sorted) kset.push_back(k + 1);
  return json{{"K", std::move(kset)},
              {"cycle", std::move(cycle)},
              {"lhs", w.lhs.str()},
              {"rhs", w.rhs.str()}};
}

std::string cycle_text(const std::vector<int>& cycle) {
  std::string out = "(";
  for (std::size_t k = 0; k < cycle.size(); ++k) {
    if (k) out += ' ';
    out += std::to_string(cycle[k] + 1);
  }
  return out + ")";
}

int cmd_perm(const std::string& path, bool as_json) {
  const tropid::TropMatrix m = load_matrix(path);
  const tropid::PermanentReport rep = tropid::permanent_with_witnesses(m);
  if (as_json) {
    json witnesses = json::array();
    for (const tropid::Permutation& w : rep.witnesses) {
      json images = json::array();
      for (int i = 0; i < w.size(); ++i) images.push_back(w(i) + 1);
      witnesses.push_back(json{{"images", std::move(images)},
                               {"cycles", w.cycles()},
                               {"parity", w.odd() ? "odd" : "even"}});
    }
    json out{{"value", rep.value.str()},
             {"witnesses", std::move(witnesses)},
             {"sign_singular", rep.sign_singular}};
    std::cout << out.dump(2) << '\n';
    return 0;
  }
  std::cout << "permanent: " << rep.value.str() << '\n';
  std::cout << "witnesses (" << rep.witnesses.size() << "):\n";
  for (const tropid::Permutation& w : rep.witnesses)
    std::cout << "  " << w.cycles() << "  [" << (w.odd() ? "odd" : "even") << "]\n";
  std::cout << "sign-singular: " << (rep.sign_singular ? "yes" : "no") << '\n';
  return 0;
}

int cmd_dominantize(const std::string& path, const std::string& strength, bool as_json) {
  const tropid::TropMatrix m = load_matrix(path);
  const tropid::DominanceParams p(tropid::Rational::parse(strength));
  const tropid::DominantizeResult res = tropid::dominantize(m, p);
  if (std::holds_alternative<tropid::Dominantization>(res)) {
    const auto& dz = std::get<tropid::Dominantization>(res);
    if (as_json) {
      json out{{"status", "ok"},
               {"potentials", potentials_json(dz.shifts)},
               {"matrix", matrix_json(dz.matrix)}};
      std::cout << out.dump(2) << '\n';
      return 0;
    }
    std::cout << "potentials:";
    for (const tropid::Rational& v : dz.shifts.values) std::cout << ' ' << v.str();
    std::cout << "\ntransformed matrix:\n";
    tropid::write_matrix(std::cout, dz.matrix);
    return 0;
  }
  const auto& w = std::get<tropid::CycleWitness>(res);
  if (as_json) {
    json out{{"status", "no_solution"}, {"witness", witness_json(w)}};
    std::cout << out.dump(2) << '\n';
    return 0;
  }
  std::vector<int> sorted = w.cycle;
  std::sort(sorted.begin(), sorted.end());
  std::cout << "no solution: K = {";
  for (std::size_t k = 0; k < sorted.size(); ++k)
    std::cout << (k ? " " : "") << sorted[k] + 1;
  std::cout << "}, cycle " << cycle_text(w.cycle) << " violates the inequality: "
            << w.lhs.str() << " < " << w.rhs.str() << '\n';
  return 0;
}

int cmd_factor(const std::string& path, bool as_json) {
  const tropid::TropMatrix m = load_matrix(path);
  const tropid::FactorResult res = tropid::factor_rank2(m);
  if (std::holds_alternative<tropid::Factorization3>(res)) {
    const auto& f = std::get<tropid::Factorization3>(res);
    if (as_json) {
      json out{{"status", "ok"}, {"P", matrix_json(f.p)}, {"Q", matrix_json(f.q)}};
      std::cout << out.dump(2) << '\n';
      return 0;
    }
    std::cout << "P:\n";
    tropid::write_matrix(std::cout, f.p);
    std::cout << "Q:\n";
    tropid::write_matrix(std::cout, f.q);
    return 0;
  }
  const char* reason = std::get<tropid::FactorFailure>(res) == tropid::FactorFailure::not_singular
                           ? "not_singular"
                           : "no_pair_found";
  if (as_json)
    std::cout << json{{"status", reason}}.dump(2) << '\n';
  else
    std::cout << "no factorization: " << reason << '\n';
  return 0;
}

void emit_word(const tropid::Word& w) {
  std::string buf;
  buf.reserve(std::size_t(w.length()) + 1);
  tropid::LetterStream s(w);
  while (auto l = s.next()) buf += (*l == tropid::Letter::x) ? 'A' : 'B';
  buf += '\n';
  std::fwrite(buf.data(), 1, buf.size(), stdout);
}

int cmd_word_gamma(int n, bool emit) {
  const tropid::Word g = tropid::gamma(n);
  if (emit) {
    emit_word(g);
    return 0;
  }
  std::cout << "letters: " << g.length() << '\n';
  return 0;
}

int cmd_word_identity3(bool emit, const std::string& side) {
  const tropid::Identity3& id = tropid::identity3();
  if (emit) {
    emit_word(side == "rhs" ? id.rhs : id.lhs);
    return 0;
  }
  std::cout << "lhs letters: " << tropid::stream_count(id.lhs) << '\n';
  std::cout << "rhs letters: " << tropid::stream_count(id.rhs) << '\n';
  const auto diff = tropid::first_difference(id.lhs, id.rhs);
  if (diff)
    std::cout << "first differing letter: position " << *diff << '\n';
  else
    std::cout << "sides are equal as words\n";
  return 0;
}

int report_exit(const tropid::PropertyReport& r) {
  return r.verdict == tropid::Verdict::pass ? 0 : 1;
}

int cmd_verify(const std::string& suite, const tropid::SuiteOptions& opts, bool as_json) {
  const tropid::PropertyReport r = tropid::run_suite(suite, opts);
  if (as_json)
    std::cout << r.to_json().dump(2) << '\n';
  else
    std::cout << r.text();
  return report_exit(r);
}

int cmd_selftest(std::uint64_t seed) {
  struct Small {
    const char* id;
    int trials;
    int n = 0;              // 0 keeps the suite default
    std::int64_t denom = 0; // 0 keeps the default
  };
  const Small plan[] = {
      {"perm-mult", 500},        {"perm-factors", 500},
      {"power-id", 500},         {"diag-commute", 500},
      {"factor-roundtrip", 120}, {"lift-2x2", 60},
      {"potentials", 200},       {"dominantize", 200},
      {"dichotomy", 200},        {"cyc-min", 200},
      {"pinch", 60},             {"dom-identity", 60},
      {"identity-2x2", 300, 0, 3}, {"identity-3x3", 30},
      {"word-count", 1},
  };
  bool all_pass = true;
  for (const Small& s : plan) {
    tropid::SuiteOptions o = tropid::suite_defaults(s.id);
    o.cfg.seed = seed;
    o.cfg.trials = s.trials;
    if (s.n > 0) o.cfg.n = s.n;
    if (s.denom > 0) o.cfg.denom = s.denom;
    const tropid::PropertyReport r = tropid::run_suite(s.id, o);
    std::printf("%-17s %-12s trials=%-6d", s.id,
                std::string(tropid::verdict_name(r.verdict)).c_str(), r.trials_run);
    if (r.hypothesis_met) std::printf(" hypothesis-met=%lld", (long long)*r.hypothesis_met);
    std::printf(" (%.2f s)\n", r.elapsed_seconds);
    if (r.verdict != tropid::Verdict::pass) {
      all_pass = false;
      for (const tropid::FailureCase& f : r.failures) {
        std::printf("  trial %d: %s\n", f.trial, f.detail.c_str());
        for (const auto& [label, text] : f.instances) std::printf("  %s:\n%s", label.c_str(), text.c_str());
      }
    }
  }
  std::printf("selftest: %s\n", all_pass ? "all suites pass" : "FAILURES");
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tropid: exact min-plus matrix algebra and identity verification"};
  app.require_subcommand(1);

  std::string file;
  bool as_json = false;

  CLI::App* perm = app.add_subcommand("perm", "permanent, witness set, sign-singularity");
  perm->add_option("file", file, "matrix file")->required();
  perm->add_flag("--json", as_json, "machine-readable output");

  std::string strength_text;
  CLI::App* domz = app.add_subcommand("dominantize", "normalize to diagonal dominance");
  domz->add_option("file", file, "matrix file")->required();
  domz->add_option("--H", strength_text, "dominance strength (positive rational)")->required();
  domz->add_flag("--json", as_json, "machine-readable output");

  CLI::App* factor = app.add_subcommand("factor", "rank-2 factorization of a 3x3 matrix");
  factor->add_option("file", file, "matrix file")->required();
  factor->add_flag("--json", as_json, "machine-readable output");

  CLI::App* word = app.add_subcommand("word", "word constructions");
  word->require_subcommand(1);
  int gamma_n = 3;
  bool count_flag = false, emit_flag = false;
  CLI::App* wgamma = word->add_subcommand("gamma", "all words of length n, concatenated");
  wgamma->add_option("--n", gamma_n, "word length (1..8)")->required();
  CLI::Option* gcount = wgamma->add_flag("--count", count_flag, "print the letter count");
  wgamma->add_flag("--emit", emit_flag, "stream letters as A/B characters")->excludes(gcount);
  std::string side = "lhs";
  CLI::App* wid3 = word->add_subcommand("identity3", "the two sides of the 3x3 identity");
  CLI::Option* icount = wid3->add_flag("--count", count_flag,
                                       "print per-side letter counts and the first difference");
  wid3->add_flag("--emit", emit_flag, "stream one side as A/B characters")->excludes(icount);
  wid3->add_option("--side", side, "side to emit: lhs or rhs")
      ->check(CLI::IsMember({"lhs", "rhs"}));

  std::string suite;
  std::uint64_t seed_flag = 0;
  int trials_flag = 0, n_flag = 0;
  std::int64_t range_flag = 0, denom_flag = 0;
  CLI::App* verify = app.add_subcommand("verify", "run a property suite");
  verify->add_option("suite", suite, "suite id (see README)")->required();
  CLI::Option* oseed = verify->add_option("--seed", seed_flag, "master seed");
  CLI::Option* otrials = verify->add_option("--trials", trials_flag, "trial count");
  CLI::Option* orange = verify->add_option("--range", range_flag, "entry range bound");
  CLI::Option* odenom = verify->add_option("--denom", denom_flag, "grid denominator");
  CLI::Option* on = verify->add_option("--n", n_flag, "matrix order");
  CLI::Option* ostrength = verify->add_option("--H", strength_text, "dominance strength / level");
  verify->add_flag("--json", as_json, "machine-readable report");

  CLI::App* selftest = app.add_subcommand("selftest", "run every suite at small trial counts");

  try {
    app.parse(argc, argv);

    if (*perm) return cmd_perm(file, as_json);
    if (*domz) return cmd_dominantize(file, strength_text, as_json);
    if (*factor) return cmd_factor(file, as_json);
    if (*word) {
      if (*wgamma) return cmd_word_gamma(gamma_n, emit_flag);
      return cmd_word_identity3(emit_flag, side);
    }
    if (*verify) {
      if (!tropid::is_suite(suite)) throw tropid::ValueError("unknown suite '" + suite + "'");
      tropid::SuiteOptions opts = tropid::suite_defaults(suite);
      opts.cfg.seed = oseed->count() ? seed_flag : default_seed();
      if (otrials->count()) opts.cfg.trials = trials_flag;
      if (orange->count()) opts.cfg.range = range_flag;
      if (odenom->count()) opts.cfg.denom = denom_flag;
      if (on->count()) opts.cfg.n = n_flag;
      if (ostrength->count()) opts.strength = tropid::Rational::parse(strength_text);
      return cmd_verify(suite, opts, as_json);
    }
    if (*selftest) return cmd_selftest(default_seed());
    return 2;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const tropid::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 2;
  }
}
