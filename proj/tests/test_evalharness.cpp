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

#include <doctest.h>

#include <cmath>
#include <sstream>

#include "varord/evalharness.hpp"

using namespace varord;

namespace {

std::string fixture(const std::string& name) {
  return std::string(VARORD_FIXTURES_DIR) + "/" + name;
}

TimingTable fixture_timings() {
  return load_timings_file(fixture("eval_timings.csv"), Rational(60));
}

std::map<std::string, PolySystem> fixture_problems() {
  return load_problems_file(fixture("eval_problems.jsonl"));
}

}  // namespace

TEST_CASE("markup formula") {
  CHECK(markup(Rational(3), Rational(3)) == 0);
  CHECK(markup(Rational(3), Rational(1)) == 1);
  // penalized timeout at factor 2, limit 60, against a half-second optimum
  CHECK(markup(Rational(120), Rational(1, 2)) == Rational(239, 3));
  CHECK_THROWS_AS(markup(Rational(1), Rational(2)), std::invalid_argument);
  CHECK_THROWS_AS(markup(Rational(-1), Rational(-2)), std::invalid_argument);
}

TEST_CASE("timings loader") {
  TimingTable t = fixture_timings();
  CHECK(t.order == std::vector<std::string>{"P1", "P2"});
  CHECK(t.nvars == 3);
  CHECK(t.dropped_all_timeout == 0);
  const auto& p1 = t.rows.at("P1");
  REQUIRE(p1.size() == 6);
  CHECK(p1[0].seconds == 10);
  CHECK(p1[2].timeout);
  CHECK(p1[5].seconds == 2);
}

TEST_CASE("timings loader drops rows with no finisher and clamps to limit") {
  std::ostringstream warnings;
  TimingTable t = load_timings_file(fixture("timings_with_dead_row.csv"),
                                    Rational(60), &warnings);
  CHECK(t.order == std::vector<std::string>{"alive", "edge"});
  CHECK(t.dropped_all_timeout == 1);
  CHECK(warnings.str().find("dead") != std::string::npos);
  // 60 is within the limit; 59.999 too
  const auto& edge = t.rows.at("edge");
  CHECK(!edge[0].timeout);
  CHECK(edge[0].seconds == 60);
  CHECK(edge[1].seconds == Rational(59999, 1000));
}

TEST_CASE("timings loader rejects malformed input") {
  {
    std::istringstream in("nope,ord1\n");
    CHECK_THROWS(load_timings(in, Rational(60)));
  }
  {
    std::istringstream in("problem,ord1,ord2,bad3,ord4,ord5,ord6\np,1,2,3,4,5,6\n");
    CHECK_THROWS(load_timings(in, Rational(60)));
  }
  {
    std::istringstream in(
        "problem,ord1,ord2,ord3,ord4,ord5,ord6\np,1,2,x,4,5,6\n");
    CHECK_THROWS(load_timings(in, Rational(60)));
  }
  {
    std::istringstream in(
        "problem,ord1,ord2,ord3,ord4,ord5,ord6\np,-1,2,3,4,5,6\n");
    CHECK_THROWS(load_timings(in, Rational(60)));
  }
  {
    std::istringstream in("problem,ord1,ord2,ord3,ord4,ord5,ord6\np,1,2\n");
    CHECK_THROWS(load_timings(in, Rational(60)));
  }
}

TEST_CASE("problems loader") {
  auto problems = fixture_problems();
  REQUIRE(problems.size() == 2);
  CHECK(problems.at("P1").polys.size() == 2);
  CHECK(problems.at("P1").nvars == 3);
  CHECK(problems.at("P2").var_names ==
        std::vector<std::string>{"x1", "x2", "x3"});
  std::istringstream bad("{\"id\": \"x\"}\n");
  CHECK_THROWS(load_problems(bad));
}

TEST_CASE("hand-computed two-problem report") {
  auto problems = fixture_problems();
  TimingTable timings = fixture_timings();
  EvalOptions opts;
  opts.repetitions = 1;
  opts.master_seed = 7;

  MetricsReport r =
      evaluate(problems, timings, parse_heuristic("gmods"), opts);
  // P1 -> class 6 (2s, optimal); P2 -> class 1 (timeout, penalized 120)
  CHECK(r.accuracy_pct == 50);
  CHECK(r.total_time == 122);
  CHECK(r.markup_avg == Rational(117, 8));  // (0 + 117/4) / 2
  CHECK(r.completed == 1);
  CHECK(r.tie_rate_pct == 0);
  CHECK(r.problem_count == 2);
  REQUIRE(r.choice_log.at("P1").size() == 1);
  CHECK(r.choice_log.at("P1").begin()->first == 6);
  CHECK(r.choice_log.at("P2").begin()->first == 1);
}

TEST_CASE("deterministic chains are unaffected by repetition averaging") {
  auto problems = fixture_problems();
  TimingTable timings = fixture_timings();
  EvalOptions once;
  once.repetitions = 1;
  EvalOptions many;
  many.repetitions = 5;
  MetricsReport a = evaluate(problems, timings, parse_heuristic("gmods"), once);
  MetricsReport b = evaluate(problems, timings, parse_heuristic("gmods"), many);
  CHECK(a.accuracy_pct == b.accuracy_pct);
  CHECK(a.total_time == b.total_time);
  CHECK(a.markup_avg == b.markup_avg);
  CHECK(a.completed == b.completed);
}

TEST_CASE("virtual best dominates") {
  auto problems = fixture_problems();
  TimingTable timings = fixture_timings();
  MetricsReport vb = evaluate_virtual_best(timings);
  CHECK(vb.accuracy_pct == 100);
  CHECK(vb.markup_avg == 0);
  CHECK(vb.total_time == 5);  // 2 + 3
  CHECK(vb.completed == 2);

  EvalOptions opts;
  for (const char* name : {"gmods", "Brown", "T1", "random"}) {
    MetricsReport r =
        evaluate(problems, timings, parse_heuristic(name), opts);
    CHECK(r.total_time >= vb.total_time);
    CHECK(r.completed <= vb.completed);
    CHECK(r.markup_avg >= 0);
  }
}

TEST_CASE("penalty factor monotonicity") {
  auto problems = fixture_problems();
  TimingTable timings = fixture_timings();
  EvalOptions p2;
  EvalOptions p3;
  p3.penalty_factor = 3;
  MetricsReport a = evaluate(problems, timings, parse_heuristic("gmods"), p2);
  MetricsReport b = evaluate(problems, timings, parse_heuristic("gmods"), p3);
  CHECK(b.total_time >= a.total_time);
  CHECK(b.markup_avg >= a.markup_avg);
}

TEST_CASE("determinism across thread counts and replay") {
  auto problems = fixture_problems();
  TimingTable timings = fixture_timings();
  EvalOptions serial;
  serial.repetitions = 40;
  serial.master_seed = 99;
  serial.threads = 1;
  EvalOptions parallel = serial;
  parallel.threads = 4;
  HeuristicChain chain = parse_heuristic("random");
  MetricsReport a = evaluate(problems, timings, chain, serial);
  MetricsReport b = evaluate(problems, timings, chain, parallel);
  CHECK(a.accuracy_pct == b.accuracy_pct);
  CHECK(a.total_time == b.total_time);
  CHECK(a.markup_avg == b.markup_avg);
  CHECK(a.completed == b.completed);
  CHECK(a.tie_rate_pct == b.tie_rate_pct);
  CHECK(a.choice_log == b.choice_log);
  CHECK(a.tie_log == b.tie_log);
  CHECK(metrics_csv({{"random", a}}) == metrics_csv({{"random", b}}));
  CHECK(choice_log_csv(a) == choice_log_csv(b));
}

TEST_CASE("random baseline accuracy matches the binomial expectation") {
  auto problems = fixture_problems();
  TimingTable timings = fixture_timings();
  // per-problem co-optimal counts: P1 has one optimal ordering, P2 has one
  const double p = 1.0 / 6.0;
  const unsigned reps = 3000;
  EvalOptions opts;
  opts.repetitions = reps;
  opts.master_seed = 2026;
  MetricsReport r =
      evaluate(problems, timings, parse_heuristic("random"), opts);
  double runs = 2.0 * reps;
  double expected_pct = p * 100.0;
  double sigma_pct = 100.0 * std::sqrt(p * (1 - p) / runs);
  double got = r.accuracy_pct.get_d();
  CHECK(got > expected_pct - 3 * sigma_pct);
  CHECK(got < expected_pct + 3 * sigma_pct);
  // a random chain fires the tie-breaker on every run
  CHECK(r.tie_rate_pct == 100);
}

TEST_CASE("evaluate validates ids and repetitions") {
  auto problems = fixture_problems();
  TimingTable timings = fixture_timings();
  EvalOptions opts;

  auto missing = problems;
  missing.erase("P1");
  CHECK_THROWS_AS(evaluate(missing, timings, parse_heuristic("gmods"), opts),
                  std::invalid_argument);

  auto extra = problems;
  extra.emplace("P3", problems.at("P1"));
  CHECK_THROWS_AS(evaluate(extra, timings, parse_heuristic("gmods"), opts),
                  std::invalid_argument);

  EvalOptions zero;
  zero.repetitions = 0;
  CHECK_THROWS_AS(evaluate(problems, timings, parse_heuristic("gmods"), zero),
                  std::invalid_argument);

  TimingTable empty;
  CHECK_THROWS_AS(evaluate(problems, empty, parse_heuristic("gmods"), opts),
                  std::invalid_argument);
}

TEST_CASE("survival curve") {
  TimingTable timings = fixture_timings();
  std::map<std::string, int> gmods_choices{{"P1", 6}, {"P2", 1}};
  auto curve = survival_curve(timings, gmods_choices);
  REQUIRE(curve.size() == 1);  // P2 timed out under class 1
  CHECK(curve[0].first == 2);
  CHECK(curve[0].second == 1);

  std::map<std::string, int> vb_choices{{"P1", 6}, {"P2", 3}};
  auto vb = survival_curve(timings, vb_choices);
  REQUIRE(vb.size() == 2);
  CHECK(vb[0] == std::pair<Rational, std::size_t>(Rational(2), 1));
  CHECK(vb[1] == std::pair<Rational, std::size_t>(Rational(3), 2));
  // virtual best dominates pointwise
  for (const auto& [t, count] : curve) {
    std::size_t vb_count = 0;
    for (const auto& [vt, vc] : vb) {
      if (vt <= t) vb_count = vc;
    }
    CHECK(vb_count >= count);
  }

  TimingTable empty_table = timings;
  empty_table.order.clear();
  empty_table.rows.clear();
  CHECK(survival_curve(empty_table, {}).empty());

  CHECK_THROWS_AS(survival_curve(timings, {{"P1", 6}}),
                  std::invalid_argument);
}

TEST_CASE("report rendering is stable") {
  auto problems = fixture_problems();
  TimingTable timings = fixture_timings();
  EvalOptions opts;
  MetricsReport r =
      evaluate(problems, timings, parse_heuristic("gmods"), opts);
  std::string csv = metrics_csv({{"gmods", r}});
  CHECK(csv ==
        "name,accuracy,total_time,markup,completed,tie_rate\n"
        "gmods,50.00,122.0,14.63,1.0,0.0\n");
  std::string table = metrics_table({{"gmods", r}});
  CHECK(table.find("Accuracy") != std::string::npos);
  CHECK(table.find("50.00") != std::string::npos);
  std::string choices = choice_log_csv(r);
  CHECK(choices ==
        "problem,class,count,tie_runs\n"
        "P1,6,1,0\n"
        "P2,1,1,0\n");
}
