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

#ifndef VARORD_EVALHARNESS_HPP
#define VARORD_EVALHARNESS_HPP

#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "varord/heuristics.hpp"
#include "varord/polynomial.hpp"

namespace varord {

// Evaluates ordering heuristics against per-problem per-ordering runtime
// tables: accuracy, total time, markup, completed problems, tie-break rate.
// Orderings that hit the time limit are charged a penalty factor (default 2)
// times the limit. All statistics are exact rationals; reports are
// byte-deterministic for a fixed seed.

struct TimingEntry {
  bool timeout = false;
  Rational seconds;  // meaningful only when !timeout
};

struct TimingTable {
  std::vector<std::string> order;  // retained problem ids, file order
  std::map<std::string, std::vector<TimingEntry>> rows;  // id -> per class
  Rational time_limit;
  std::size_t nvars = 3;
  std::size_t dropped_all_timeout = 0;
};

/// Loads the timings CSV: header `problem,ord1,...,ord6`, cells are decimal
/// seconds or the literal `timeout`. Problems whose every ordering timed
/// out are dropped with a warning on `warnings` (if given). Cells exceeding
/// the time limit are treated as timeouts (datasets store penalized values
/// in place).
TimingTable load_timings(std::istream& in, const Rational& time_limit,
                         std::ostream* warnings = nullptr);
TimingTable load_timings_file(const std::string& path,
                              const Rational& time_limit,
                              std::ostream* warnings = nullptr);

/// One problem record per line: {"id": ..., "vars": [...], "polys": [...]}.
std::map<std::string, PolySystem> load_problems(std::istream& in);
std::map<std::string, PolySystem> load_problems_file(const std::string& path);

/// markup = (t_heuristic - t_optimal) / (t_optimal + 1).
/// Requires 0 <= t_optimal <= t_heuristic.
Rational markup(const Rational& t_heuristic, const Rational& t_optimal);

struct EvalOptions {
  unsigned repetitions = 1;
  std::uint64_t master_seed = 0;
  Rational penalty_factor = Rational(2);
  bool charge_heuristic_time = false;  // adds wall-clock cost of the chain
  unsigned threads = 0;                // 0 = one thread per core
};

struct MetricsReport {
  Rational accuracy_pct;   // [0, 100]
  Rational total_time;     // seconds, averaged over repetitions
  Rational markup_avg;
  Rational completed;      // fractional under repetition averaging
  Rational tie_rate_pct;   // share of runs where the random policy fired
  unsigned repetitions = 1;
  std::size_t problem_count = 0;
  // id -> class label -> times chosen across repetitions
  std::map<std::string, std::map<int, unsigned>> choice_log;
  // id -> repetitions in which the random tie-break fired
  std::map<std::string, unsigned> tie_log;
};

/// Runs the chain over every problem and repetition. Problem ids must match
/// between `problems` and `timings` exactly. Deterministic for fixed
/// options regardless of thread count (sub-seeds are derived per problem
/// and repetition; reduction is index-ordered).
MetricsReport evaluate(const std::map<std::string, PolySystem>& problems,
                       const TimingTable& timings,
                       const HeuristicChain& chain, const EvalOptions& opts);

/// The hypothetical heuristic that always picks the fastest ordering.
MetricsReport evaluate_virtual_best(const TimingTable& timings);

/// Survival curve for a fixed choice of class per problem: points
/// (t, problems completed within t), timeouts excluded, one point per
/// distinct time, monotone nondecreasing.
std::vector<std::pair<Rational, std::size_t>> survival_curve(
    const TimingTable& timings, const std::map<std::string, int>& choices);

// --- report rendering (shared by the C API and the CLI) ---

struct NamedReport {
  std::string name;
  MetricsReport report;
};

std::string metrics_csv(const std::vector<NamedReport>& reports);
std::string metrics_table(const std::vector<NamedReport>& reports);
std::string choice_log_csv(const MetricsReport& report);
std::string survival_csv(
    const std::vector<std::pair<Rational, std::size_t>>& curve);

}  // namespace varord

#endif  // VARORD_EVALHARNESS_HPP
