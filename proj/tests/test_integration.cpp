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

// Whole-pipeline comparison on a committed mini-benchmark whose timing
// structure separates the heuristics: Brown's max-degree criterion ties
// where the degree-sum criterion does not (the A problems), and a full
// degree-sum tie forces gmods to guess where a second chain link settles
// the choice (problem B).

#include <doctest.h>

#include <map>

#include "varord/evalharness.hpp"

using namespace varord;

namespace {

std::string fixture(const std::string& name) {
  return std::string(VARORD_FIXTURES_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("mini-benchmark separates the heuristic families") {
  auto problems = load_problems_file(fixture("bench_problems.jsonl"));
  TimingTable timings =
      load_timings_file(fixture("bench_timings.csv"), Rational(60));
  REQUIRE(timings.order.size() == 7);

  EvalOptions opts;
  opts.master_seed = 1;
  opts.repetitions = 200;

  std::map<std::string, MetricsReport> reports;
  for (const char* name : {"gmods", "Brown", "T1", "T2", "random"}) {
    reports.emplace(name,
                    evaluate(problems, timings, parse_heuristic(name), opts));
  }
  reports.emplace("virtual-best", evaluate_virtual_best(timings));

  const MetricsReport& gmods = reports.at("gmods");
  const MetricsReport& brown = reports.at("Brown");
  const MetricsReport& t1 = reports.at("T1");
  const MetricsReport& random = reports.at("random");
  const MetricsReport& vb = reports.at("virtual-best");

  // the orderings the heuristics are expected to exhibit
  CHECK(gmods.markup_avg < brown.markup_avg);
  CHECK(gmods.total_time < brown.total_time);
  CHECK(t1.total_time < gmods.total_time);
  CHECK(t1.completed > gmods.completed);
  for (const char* name : {"gmods", "Brown", "T1", "T2"}) {
    CHECK(random.accuracy_pct < reports.at(name).accuracy_pct);
  }

  // virtual best bounds everything
  for (const auto& [name, r] : reports) {
    CHECK(r.total_time >= vb.total_time);
    CHECK(r.completed <= vb.completed);
    CHECK(r.accuracy_pct <= vb.accuracy_pct);
  }

  // T1 resolves problem B without guessing: it completes all 7 problems
  CHECK(t1.completed == 7);
  // Brown needs its random fallback on every A problem; T1 only on B
  CHECK(t1.tie_rate_pct < brown.tie_rate_pct);
  CHECK(t1.tie_rate_pct <= gmods.tie_rate_pct);
}
