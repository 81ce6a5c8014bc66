/*
 * Copyright 2026 The varord authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// End-to-end acceptance suite. Each criterion prints one PASS/FAIL line;
// the process exits nonzero if any criterion fails. Criterion 7 needs the
// external benchmark dataset
// (--problems/--timings); without it the line reads SKIP.

#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "varord/algebra.hpp"
#include "varord/evalharness.hpp"
#include "varord/features.hpp"
#include "varord/heuristics.hpp"
#include "varord/parser.hpp"
#include "varord/projection.hpp"
#include "varord/xai_rank.hpp"

using namespace varord;

namespace {

int g_failures = 0;

void report(const std::string& name, bool ok, const std::string& detail = "") {
  std::cout << (ok ? "PASS" : "FAIL") << ": " << name;
  if (!ok && !detail.empty()) std::cout << " -- " << detail;
  std::cout << "\n";
  if (!ok) ++g_failures;
}

void run(const std::string& name, const std::function<void()>& body) {
  try {
    body();
    report(name, true);
  } catch (const std::exception& e) {
    report(name, false, e.what());
  }
}

void expect(bool cond, const std::string& what) {
  if (!cond) throw std::runtime_error(what);
}

std::string fixture(const std::string& name) {
  return std::string(VARORD_FIXTURES_DIR) + "/" + name;
}

const std::vector<std::string> kXyz = {"x1", "x2", "x3"};

Polynomial P(const std::string& text) { return parse_poly(text, kXyz); }

bool same_set(const std::vector<Polynomial>& got,
              const std::vector<std::string>& expected) {
  if (got.size() != expected.size()) return false;
  for (const std::string& text : expected) {
    bool found = false;
    for (const Polynomial& p : got) {
      if (p == P(text)) found = true;
    }
    if (!found) return false;
  }
  return true;
}

Rational feature_on(const std::string& alias, int var, const PolySystem& s) {
  return evaluate_feature(parse_feature_name(alias).with_variable(var), s);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

// ---- criterion bodies ------------------------------------------------------

void criterion1_worked_example() {
  auto start = std::chrono::steady_clock::now();

  PolySystem s3 = parse_system({"x1*x2*x3 - 1", "x1^2 - x2^2*x3"}, kXyz);
  expect(feature_on("SumMaxV", 0, s3) == 3, "first-step value for x1");
  expect(feature_on("SumMaxV", 1, s3) == 3, "first-step value for x2");
  expect(feature_on("SumMaxV", 2, s3) == 2, "first-step value for x3");

  PolySystem normalized = normalize_system(s3);
  auto raw = lazard_projection_raw(normalized, 2);
  expect(same_set(raw, {"x1*x2", "x1^2", "x2^2", "x1^3*x2 - x2^2"}),
         "raw projection factors");

  PolySystem basis = lazard_projection(normalized, 2);
  expect(same_set(basis.polys, {"x1", "x2", "x1^3 - x2"}), "projection basis");

  expect(feature_on("SumMaxV", 0, basis) == 4, "second-step value for x1");
  expect(feature_on("SumMaxV", 1, basis) == 2, "second-step value for x2");

  RandomStream rng(7);
  auto [ordering, stats] = greedy_ordering(s3, parse_heuristic("gmods"), rng);
  expect(ordering.projection_order == std::vector<std::size_t>{2, 1, 0},
         "final ordering");
  expect(ordering.class_label == 6, "class label");

  auto elapsed = std::chrono::steady_clock::now() - start;
  expect(std::chrono::duration_cast<std::chrono::milliseconds>(elapsed)
             .count() < 1000,
         "worked example must finish within 1 second");
}

void criterion2_feature_table() {
  PolySystem s =
      parse_system({"x1", "x1^2 - 2*x1*x2^2 + x2^2 - 3"}, {"x1", "x2"});
  NestedDegreeList v2 = degree_list(s, 1, Base::V);
  NestedDegreeList expected_v2 = {{Rational(0)},
                                  {Rational(0), Rational(2), Rational(2),
                                   Rational(0)}};
  expect(v2 == expected_v2, "v_2(S) nested list");
  NestedDegreeList sv1 = degree_list(s, 0, Base::SV);
  NestedDegreeList expected_sv1 = {{Rational(1)},
                                   {Rational(2), Rational(3), Rational(0),
                                    Rational(0)}};
  expect(sv1 == expected_sv1, "sv_1(S) nested list");
  expect(feature_on("MaxAvgSV", 0, s) == Rational(5, 4),
         "max(avg(sv_1(S))) = 5/4");
  expect(feature_on("SumSgAvgSgV", 1, s) == 1,
         "sum(sg(avg(sg(v_2(S))))) = 1");
}

void criterion3_feature_counts(bool* count_ok, bool* containment_ok,
                               std::string* count_detail) {
  std::vector<FeatureDescriptor> features = enumerate_features(3);
  std::set<FeatureDescriptor> merged;
  for (const FeatureDescriptor& d : features) {
    merged.insert(d.with_variable(kMergedVariable));
  }
  std::size_t proportional = proportional_feature_universe().size();

  *count_ok = features.size() == 81 && merged.size() == 27 &&
              features.size() == merged.size() * 3 && proportional == 18;
  *count_detail = "enumerated " + std::to_string(features.size()) +
                  ", merged " + std::to_string(merged.size()) +
                  ", proportional " + std::to_string(proportional) +
                  " (targets 81/27/18)";

  const char* names[] = {"SumMaxV",   "AvgAvgV",  "SumSumV",  "SumSgSumV",
                         "AvgAvgSgV", "SumMaxSV", "MaxMaxV",  "MaxMaxSV",
                         "SumSumSgV", "AvgMaxV",  "SumAvgV",  "AvgSumSV",
                         "MaxSumV"};
  std::set<std::string> aliases;
  for (const FeatureDescriptor& d : merged) {
    aliases.insert(feature_alias(d));
  }
  *containment_ok = true;
  for (const char* name : names) {
    if (!aliases.count(name)) *containment_ok = false;
  }
}

void criterion4_oracle_equivalence() {
  auto start = std::chrono::steady_clock::now();
  std::uint64_t state = 0xacceb7ed;
  auto next = [&]() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  auto random_poly = [&](unsigned max_deg, std::size_t max_terms) {
    for (;;) {
      std::vector<Term> terms;
      std::size_t nterms = 1 + next() % max_terms;
      for (std::size_t t = 0; t < nterms; ++t) {
        Term term;
        term.exps.resize(3, 0);
        unsigned budget = max_deg;
        for (std::size_t v = 0; v < 3; ++v) {
          unsigned e = static_cast<unsigned>(next() % 3);
          e = std::min(e, budget);
          term.exps[v] = e;
          budget -= e;
        }
        long c = static_cast<long>(next() % 10) - 5;
        if (c == 0) c = 2;
        term.coeff = Rational(c);
        terms.push_back(std::move(term));
      }
      Polynomial p = Polynomial::from_terms(3, std::move(terms));
      if (!p.is_zero()) return p;
    }
  };

  int pairs = 0;
  while (pairs < 100) {
    Polynomial p = random_poly(4, 6);
    Polynomial q = random_poly(4, 6);
    std::size_t var = next() % 3;
    if (p.degree(var) < 1 && q.degree(var) < 1) continue;
    expect(resultant(p, q, var) == resultant_sylvester(p, q, var),
           "PRS and Sylvester-Bareiss resultants must agree");
    Polynomial g = gcd(p, q);
    expect(try_exact_div(p, g).has_value(), "gcd must divide p");
    expect(try_exact_div(q, g).has_value(), "gcd must divide q");
    ++pairs;
  }

  // basis reconstruction on random small systems
  for (int trial = 0; trial < 20; ++trial) {
    PolySystem s;
    s.nvars = 3;
    std::size_t count = 1 + next() % 3;
    for (std::size_t i = 0; i < count; ++i) {
      s.polys.push_back(random_poly(3, 3) * random_poly(2, 2));
    }
    PolySystem basis = squarefree_gcd_free_basis(s);
    for (std::size_t i = 0; i < basis.polys.size(); ++i) {
      for (std::size_t j = i + 1; j < basis.polys.size(); ++j) {
        expect(gcd(basis.polys[i], basis.polys[j]).is_constant(),
               "basis must be pairwise coprime");
      }
    }
    for (const Polynomial& p : s.polys) {
      Polynomial rem = normalize(p);
      bool progress = true;
      while (!rem.is_constant() && progress) {
        progress = false;
        for (const Polynomial& b : basis.polys) {
          if (auto q = try_exact_div(rem, b)) {
            rem = *q;
            progress = true;
            break;
          }
        }
      }
      expect(rem.is_constant() && !rem.is_zero(),
             "inputs must reconstruct from basis powers");
    }
  }

  auto elapsed = std::chrono::steady_clock::now() - start;
  expect(std::chrono::duration_cast<std::chrono::seconds>(elapsed).count() <
             30,
         "oracle equivalence must finish within 30 seconds");
}

void criterion5_voting() {
  auto mk = [](const std::string& model,
               const std::vector<std::string>& order) {
    FeatureRanking r;
    r.model = model;
    Rational score(static_cast<unsigned long>(order.size()));
    for (const std::string& f : order) {
      r.entries.push_back({f, score});
      score -= 1;
    }
    return r;
  };
  std::vector<FeatureRanking> rankings = {mk("r1", {"A", "B", "C"}),
                                          mk("r2", {"B", "A", "C"}),
                                          mk("r3", {"A", "C", "B"})};
  VotedScores d = dowdall(rankings);
  expect(d.entries[0].feature == "A" && d.entries[0].score == Rational(5, 2),
         "dowdall A = 5/2");
  expect(d.entries[1].feature == "B" && d.entries[1].score == Rational(11, 6),
         "dowdall B = 11/6");
  expect(d.entries[2].feature == "C" && d.entries[2].score == Rational(7, 6),
         "dowdall C = 7/6");
  VotedScores b = borda(rankings);
  expect(b.entries[0].feature == "A" && b.entries[0].score == 4,
         "borda A = 4");
  expect(b.entries[1].feature == "B" && b.entries[1].score == 6,
         "borda B = 6");
  expect(b.entries[2].feature == "C" && b.entries[2].score == 8,
         "borda C = 8");

  // conservation on 50 random ranking sets
  std::uint64_t state = 5550123;
  auto next = [&]() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t k = 2 + next() % 9;
    std::size_t nrank = 1 + next() % 4;
    std::vector<std::string> universe;
    for (std::size_t i = 0; i < k; ++i) {
      universe.push_back("F" + std::to_string(i));
    }
    std::vector<FeatureRanking> rs;
    for (std::size_t r = 0; r < nrank; ++r) {
      std::vector<std::string> perm = universe;
      for (std::size_t i = perm.size(); i > 1; --i) {
        std::swap(perm[i - 1], perm[next() % i]);
      }
      rs.push_back(mk("m" + std::to_string(r), perm));
    }
    Rational h_k(0);
    for (std::size_t r = 1; r <= k; ++r) {
      h_k += Rational(1, static_cast<unsigned long>(r));
    }
    Rational total(0);
    for (const RankEntry& e : dowdall(rs).entries) total += e.score;
    expect(total == Rational(static_cast<unsigned long>(nrank)) * h_k,
           "dowdall conservation");
  }

  // committed winner-flip fixture
  std::vector<ShapRecord> records =
      load_shap_csv_file(fixture("vote_flip_shap.csv"));
  std::vector<FeatureRanking> fr;
  for (const std::string& model : models_in(records)) {
    fr.push_back(model_feature_ranking(records, model, true));
  }
  expect(dowdall(fr).entries[0].feature != borda(fr).entries[0].feature,
         "flip fixture: dowdall and borda winners differ");

  // transcription-style voted table reproduces the published top six
  VotedScores published;
  {
    std::ifstream in(fixture("reference_voted.csv"));
    expect(static_cast<bool>(in), "reference_voted.csv must open");
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line)) {
      auto comma = line.rfind(',');
      std::string feat = line.substr(0, comma);
      std::string score = line.substr(comma + 1);
      Rational value;
      auto slash = score.find('/');
      if (slash == std::string::npos) {
        value = Rational(Integer(score));
      } else {
        value = Rational(Integer(score.substr(0, slash)),
                         Integer(score.substr(slash + 1)));
      }
      published.entries.push_back({feat, value});
    }
  }
  std::vector<std::string> six = top_k(published, 6);
  expect(six[0] == "sum(max(v_i(S)))", "published rank 1");
  expect(six[1] == "avg(avg(v_i(S)))", "published rank 2");
  std::set<std::string> expected_six = {
      "sum(max(v_i(S)))",      "avg(avg(v_i(S)))", "sum(sum(v_i(S)))",
      "sum(sg(sum(v_i(S))))",  "avg(avg(sg(v_i(S))))",
      "sum(max(sv_i(S)))"};
  expect(std::set<std::string>(six.begin(), six.end()) == expected_six,
         "published top six set");
}

void criterion6_harness() {
  auto problems = load_problems_file(fixture("eval_problems.jsonl"));
  TimingTable timings =
      load_timings_file(fixture("eval_timings.csv"), Rational(60));

  MetricsReport vb = evaluate_virtual_best(timings);
  expect(vb.accuracy_pct == 100 && vb.markup_avg == 0,
         "virtual best: accuracy 100, markup 0");

  EvalOptions opts;
  opts.master_seed = 7;
  MetricsReport r =
      evaluate(problems, timings, parse_heuristic("gmods"), opts);
  expect(r.accuracy_pct == 50, "fixture accuracy 50");
  expect(r.total_time == 122, "fixture total time 122");
  expect(r.markup_avg == Rational(117, 8), "fixture markup 117/8");
  expect(r.completed == 1, "fixture completed 1");

  expect(markup(Rational(2) * timings.time_limit, Rational(1, 2)) ==
             Rational(239, 3),
         "timeout penalty 2x limit in the markup example");

  EvalOptions serial;
  serial.repetitions = 25;
  serial.master_seed = 31;
  serial.threads = 1;
  EvalOptions parallel = serial;
  parallel.threads = 8;
  HeuristicChain rnd = parse_heuristic("random");
  std::string a =
      metrics_csv({{"random", evaluate(problems, timings, rnd, serial)}});
  std::string b =
      metrics_csv({{"random", evaluate(problems, timings, rnd, parallel)}});
  expect(a == b, "byte-identical reports across parallel schedules");
}

void criterion7_external_dataset(const std::string& problems_path,
                                 const std::string& timings_path) {
  auto problems = load_problems_file(problems_path);
  TimingTable timings = load_timings_file(timings_path, Rational(60));

  EvalOptions opts;
  opts.master_seed = 1;
  opts.repetitions = 5;

  std::map<std::string, MetricsReport> reports;
  for (const char* name : {"gmods", "Brown", "T1", "T2", "random"}) {
    reports.emplace(name,
                    evaluate(problems, timings, parse_heuristic(name), opts));
  }
  reports.emplace("virtual-best", evaluate_virtual_best(timings));

  std::vector<NamedReport> table;
  for (const char* name :
       {"gmods", "Brown", "T1", "T2", "random", "virtual-best"}) {
    table.push_back({name, reports.at(name)});
  }
  std::cout << metrics_table(table);

  expect(reports.at("gmods").markup_avg < reports.at("Brown").markup_avg,
         "gmods beats Brown on markup");
  expect(reports.at("gmods").total_time < reports.at("Brown").total_time,
         "gmods beats Brown on total time");
  expect(reports.at("T1").total_time < reports.at("gmods").total_time,
         "T1 beats gmods on total time");
  expect(reports.at("T1").completed > reports.at("gmods").completed,
         "T1 beats gmods on completed");
  for (const char* name : {"gmods", "Brown", "T1", "T2"}) {
    expect(reports.at("random").accuracy_pct <
               reports.at(name).accuracy_pct,
           "random is worst on accuracy");
  }
}

void criterion8_cli_determinism() {
  namespace fs = std::filesystem;
  fs::path dir =
      fs::temp_directory_path() /
      ("varord_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);

  const std::string cli = VARORD_CLI_PATH;
  expect(fs::exists(cli), "CLI binary must exist: " + cli);

  auto shell = [&](const std::string& command) {
    int rc = std::system(command.c_str());
    expect(rc == 0, "command failed: " + command);
  };

  std::vector<std::pair<std::string, std::string>> invocations = {
      {"choose",
       cli + " choose --vars x1,x2,x3 --poly 'x1*x2*x3 - 1' --poly "
             "'x1^2 - x2^2*x3' --heuristic gmods --seed 7"},
      {"project",
       cli + " project --vars x1,x2,x3 --poly 'x1*x2*x3 - 1' --poly "
             "'x1^2 - x2^2*x3' --var x3"},
      {"features",
       cli + " features --vars x1,x2 --poly 'x1' --poly "
             "'x1^2 - 2*x1*x2^2 + x2^2 - 3'"},
      {"rank", cli + " rank --shap " + fixture("reference_shap.csv") +
                   " --vote dowdall --top 6"},
      {"evaluate", cli + " evaluate --problems " +
                       fixture("eval_problems.jsonl") + " --timings " +
                       fixture("eval_timings.csv") +
                       " --heuristic random,gmods,virtual-best --seed 11 "
                       "--reps 40"},
      {"survival", cli + " survival --problems " +
                       fixture("eval_problems.jsonl") + " --timings " +
                       fixture("eval_timings.csv") +
                       " --heuristic virtual-best"},
      {"triples",
       cli + " triples --features "
             "SumMaxV,AvgAvgV,SumSumV,SumSgSumV,AvgAvgSgV,SumMaxSV"},
  };

  for (const auto& [name, command] : invocations) {
    fs::path out1 = dir / (name + ".1");
    fs::path out2 = dir / (name + ".2");
    shell(command + " --output " + out1.string());
    shell(command + " --output " + out2.string());
    std::string run1 = read_file(out1.string());
    std::string run2 = read_file(out2.string());
    expect(!run1.empty(), name + ": output must not be empty");
    expect(run1 == run2, name + ": repeated runs must be byte-identical");
  }

  // the worked example through the CLI
  fs::path chosen = dir / "chosen.txt";
  shell(cli + " choose --vars x1,x2,x3 --poly 'x1*x2*x3 - 1' --poly "
              "'x1^2 - x2^2*x3' --heuristic gmods --seed 7 --output " +
        chosen.string());
  std::string text = read_file(chosen.string());
  expect(text.find("x3 > x2 > x1 (class 6)") != std::string::npos,
         "CLI choose must print the worked-example ordering");

  // error paths exit nonzero
  int rc = std::system((cli + " evaluate --problems /nonexistent.jsonl "
                              "--timings /nonexistent.csv >/dev/null "
                              "2>&1")
                           .c_str());
  expect(rc != 0, "missing inputs must exit nonzero");

  // every flag a subcommand accepts must appear in its --help output
  const std::map<std::string, std::vector<std::string>> documented = {
      {"features",
       {"--vars", "--poly", "--problems", "--id", "--list", "--nvars",
        "--output"}},
      {"project",
       {"--vars", "--poly", "--problems", "--id", "--var", "--raw",
        "--output"}},
      {"choose",
       {"--vars", "--poly", "--problems", "--id", "--heuristic", "--seed",
        "--output"}},
      {"rank",
       {"--shap", "--vote", "--top", "--no-proportional", "--stages",
        "--output"}},
      {"triples",
       {"--features", "--problems", "--timings", "--seed", "--reps",
        "--time-limit", "--penalty-factor", "--format", "--output"}},
      {"evaluate",
       {"--problems", "--timings", "--heuristic", "--seed", "--reps",
        "--time-limit", "--penalty-factor", "--charge-heuristic-time",
        "--format", "--choice-log", "--output"}},
      {"survival",
       {"--problems", "--timings", "--heuristic", "--seed", "--time-limit",
        "--output"}},
  };
  for (const auto& [sub, flags] : documented) {
    fs::path help_file = dir / (sub + ".help");
    shell(cli + " " + sub + " --help > " + help_file.string());
    std::string help = read_file(help_file.string());
    for (const std::string& flag : flags) {
      expect(help.find(flag) != std::string::npos,
             sub + " --help must document " + flag);
    }
  }

  fs::remove_all(dir);
}

}  // namespace

int main(int argc, char** argv) {
  std::string external_problems, external_timings;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--problems" && i + 1 < argc) external_problems = argv[++i];
    if (arg == "--timings" && i + 1 < argc) external_timings = argv[++i];
  }

  run("criterion 1: worked projection example", criterion1_worked_example);
  run("criterion 2: feature semantics table", criterion2_feature_table);

  {
    bool count_ok = false, containment_ok = false;
    std::string detail;
    try {
      criterion3_feature_counts(&count_ok, &containment_ok, &detail);
    } catch (const std::exception& e) {
      detail = e.what();
    }
    report("criterion 3a: feature counts 81/27/18", count_ok, detail);
    report("criterion 3b: published feature names present", containment_ok);
  }

  run("criterion 4: dual-route algebra oracles", criterion4_oracle_equivalence);
  run("criterion 5: voting correctness", criterion5_voting);
  run("criterion 6: harness correctness", criterion6_harness);

  if (external_problems.empty() || external_timings.empty()) {
    std::cout << "SKIP: criterion 7: external benchmark dataset not "
                 "supplied (--problems/--timings)\n";
  } else {
    run("criterion 7: external dataset structural orderings", [&] {
      criterion7_external_dataset(external_problems, external_timings);
    });
  }

  run("criterion 8: CLI determinism", criterion8_cli_determinism);

  if (g_failures > 0) {
    std::cout << g_failures << " criteria failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
