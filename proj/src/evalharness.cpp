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

#include "varord/evalharness.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "varord/parser.hpp"

namespace varord {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  for (char c : line) {
    if (c == ',') {
      cells.push_back(cell);
      cell.clear();
    } else if (c != '\r') {
      cell.push_back(c);
    }
  }
  cells.push_back(cell);
  return cells;
}

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

}  // namespace

TimingTable load_timings(std::istream& in, const Rational& time_limit,
                         std::ostream* warnings) {
  if (time_limit <= 0) throw std::invalid_argument("time limit must be > 0");
  std::string line;
  if (!std::getline(in, line)) {
    throw std::runtime_error("timings: empty input, header required");
  }
  std::vector<std::string> header = split_csv_line(line);
  std::size_t ncols = header.size();
  if (ncols < 2 || trim(header[0]) != "problem") {
    throw std::runtime_error("timings: header must start with 'problem'");
  }
  for (std::size_t i = 1; i < ncols; ++i) {
    if (trim(header[i]) != "ord" + std::to_string(i)) {
      throw std::runtime_error("timings: unknown ordering column '" +
                               trim(header[i]) + "'");
    }
  }
  std::size_t norders = ncols - 1;
  // norders must be d! for some d; the shipped schema is 6 columns.
  std::size_t nvars = 1, fact = 1;
  while (fact < norders) {
    ++nvars;
    fact *= nvars;
  }
  if (fact != norders) {
    throw std::runtime_error("timings: ordering column count is not d!");
  }

  TimingTable table;
  table.time_limit = time_limit;
  table.nvars = nvars;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    std::vector<std::string> cells = split_csv_line(line);
    if (cells.size() != ncols) {
      throw std::runtime_error("timings: line " + std::to_string(lineno) +
                               ": expected " + std::to_string(ncols) +
                               " cells");
    }
    std::string id = trim(cells[0]);
    if (id.empty()) {
      throw std::runtime_error("timings: line " + std::to_string(lineno) +
                               ": empty problem id");
    }
    if (table.rows.count(id)) {
      throw std::runtime_error("timings: duplicate problem id '" + id + "'");
    }
    std::vector<TimingEntry> row;
    row.reserve(norders);
    bool any_finished = false;
    for (std::size_t i = 1; i < ncols; ++i) {
      std::string cell = trim(cells[i]);
      TimingEntry entry;
      if (cell == "timeout") {
        entry.timeout = true;
      } else {
        Rational t;
        try {
          t = rational_from_decimal(cell);
        } catch (const std::invalid_argument&) {
          throw std::runtime_error("timings: line " + std::to_string(lineno) +
                                   ": malformed time '" + cell + "'");
        }
        if (t < 0) {
          throw std::runtime_error("timings: line " + std::to_string(lineno) +
                                   ": negative time");
        }
        if (t > time_limit) {
          // datasets store the penalized value in place of a marker
          if (warnings) {
            *warnings << "timings: " << id << " ord" << i
                      << " exceeds the time limit; treated as timeout\n";
          }
          entry.timeout = true;
        } else {
          entry.seconds = t;
          any_finished = true;
        }
      }
      row.push_back(std::move(entry));
    }
    if (!any_finished) {
      ++table.dropped_all_timeout;
      if (warnings) {
        *warnings << "timings: dropping '" << id
                  << "': no ordering finished within the limit\n";
      }
      continue;
    }
    table.order.push_back(id);
    table.rows.emplace(std::move(id), std::move(row));
  }
  return table;
}

TimingTable load_timings_file(const std::string& path,
                              const Rational& time_limit,
                              std::ostream* warnings) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open timings file: " + path);
  return load_timings(in, time_limit, warnings);
}

std::map<std::string, PolySystem> load_problems(std::istream& in) {
  std::map<std::string, PolySystem> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw std::runtime_error("problems: line " + std::to_string(lineno) +
                               ": " + e.what());
    }
    if (!j.contains("id") || !j.contains("vars") || !j.contains("polys")) {
      throw std::runtime_error("problems: line " + std::to_string(lineno) +
                               ": record needs id, vars, polys");
    }
    std::string id = j["id"].is_string()
                         ? j["id"].get<std::string>()
                         : j["id"].dump();
    std::vector<std::string> vars =
        j["vars"].get<std::vector<std::string>>();
    std::vector<std::string> polys =
        j["polys"].get<std::vector<std::string>>();
    if (out.count(id)) {
      throw std::runtime_error("problems: duplicate id '" + id + "'");
    }
    out.emplace(std::move(id), parse_system(polys, vars));
  }
  return out;
}

std::map<std::string, PolySystem> load_problems_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open problems file: " + path);
  return load_problems(in);
}

Rational markup(const Rational& t_heuristic, const Rational& t_optimal) {
  if (t_heuristic < 0 || t_optimal < 0) {
    throw std::invalid_argument("markup: negative time");
  }
  if (t_optimal > t_heuristic) {
    throw std::invalid_argument("markup: t_optimal exceeds t_heuristic");
  }
  return (t_heuristic - t_optimal) / (t_optimal + 1);
}

namespace {

Rational row_optimum(const std::vector<TimingEntry>& row) {
  bool have = false;
  Rational best;
  for (const TimingEntry& e : row) {
    if (e.timeout) continue;
    if (!have || e.seconds < best) {
      best = e.seconds;
      have = true;
    }
  }
  if (!have) throw std::logic_error("timing row with no finished ordering");
  return best;
}

struct ProblemOutcome {
  unsigned hits = 0;
  unsigned completed = 0;
  unsigned random_fired = 0;
  Rational time_sum;
  Rational markup_sum;
  Rational heuristic_seconds;  // wall clock, only when charged
  std::map<int, unsigned> choices;
};

ProblemOutcome evaluate_problem(const std::string& id,
                                const PolySystem& system,
                                const std::vector<TimingEntry>& row,
                                const Rational& time_limit,
                                const HeuristicChain& chain,
                                const EvalOptions& opts) {
  ProblemOutcome outcome;
  outcome.time_sum = 0;
  outcome.markup_sum = 0;
  outcome.heuristic_seconds = 0;
  Rational t_opt = row_optimum(row);
  Rational penalized = opts.penalty_factor * time_limit;
  for (unsigned rep = 0; rep < opts.repetitions; ++rep) {
    RandomStream rng(derive_subseed(opts.master_seed, id, rep));
    std::chrono::steady_clock::time_point t0;
    if (opts.charge_heuristic_time) t0 = std::chrono::steady_clock::now();
    auto [ordering, stats] = greedy_ordering(system, chain, rng);
    if (opts.charge_heuristic_time) {
      auto dt = std::chrono::steady_clock::now() - t0;
      long ns =
          std::chrono::duration_cast<std::chrono::nanoseconds>(dt).count();
      outcome.heuristic_seconds += Rational(ns, 1000000000);
    }
    const TimingEntry& cell =
        row.at(static_cast<std::size_t>(ordering.class_label - 1));
    Rational t = cell.timeout ? penalized : cell.seconds;
    if (t == t_opt) ++outcome.hits;
    if (!cell.timeout) ++outcome.completed;
    if (stats.any_random_fired()) ++outcome.random_fired;
    outcome.time_sum += t;
    outcome.markup_sum += markup(t, t_opt);
    ++outcome.choices[ordering.class_label];
  }
  return outcome;
}

}  // namespace

MetricsReport evaluate(const std::map<std::string, PolySystem>& problems,
                       const TimingTable& timings,
                       const HeuristicChain& chain, const EvalOptions& opts) {
  if (opts.repetitions < 1) {
    throw std::invalid_argument("repetitions must be >= 1");
  }
  if (timings.order.empty()) throw std::invalid_argument("zero problems");
  for (const std::string& id : timings.order) {
    if (!problems.count(id)) {
      throw std::invalid_argument("problem id missing from systems: " + id);
    }
  }
  for (const auto& [id, _] : problems) {
    if (!timings.rows.count(id)) {
      throw std::invalid_argument("problem id missing from timings: " + id);
    }
  }

  const std::size_t n = timings.order.size();
  std::vector<ProblemOutcome> outcomes(n);

  unsigned nthreads = opts.threads;
  if (nthreads == 0) {
    nthreads = std::max(1u, std::thread::hardware_concurrency());
  }
  nthreads = static_cast<unsigned>(
      std::min<std::size_t>(nthreads, n));

  auto worker = [&](unsigned tid) {
    for (std::size_t i = tid; i < n; i += nthreads) {
      const std::string& id = timings.order[i];
      outcomes[i] = evaluate_problem(id, problems.at(id),
                                     timings.rows.at(id), timings.time_limit,
                                     chain, opts);
    }
  };
  if (nthreads <= 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker, t);
    for (std::thread& t : pool) t.join();
  }

  // Index-ordered reduction: identical results for any thread count.
  MetricsReport report;
  report.repetitions = opts.repetitions;
  report.problem_count = n;
  unsigned long hits = 0, completed = 0, random_fired = 0;
  Rational time_sum = 0, markup_sum = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const ProblemOutcome& o = outcomes[i];
    hits += o.hits;
    completed += o.completed;
    random_fired += o.random_fired;
    time_sum += o.time_sum + o.heuristic_seconds;
    markup_sum += o.markup_sum;
    report.choice_log[timings.order[i]] = o.choices;
    report.tie_log[timings.order[i]] = o.random_fired;
  }
  const Rational runs(static_cast<unsigned long>(n) * opts.repetitions);
  report.accuracy_pct = Rational(hits) / runs * 100;
  report.total_time = time_sum / Rational(opts.repetitions);
  report.markup_avg = markup_sum / runs;
  report.completed = Rational(completed) / Rational(opts.repetitions);
  report.tie_rate_pct = Rational(random_fired) / runs * 100;
  return report;
}

MetricsReport evaluate_virtual_best(const TimingTable& timings) {
  if (timings.order.empty()) throw std::invalid_argument("zero problems");
  MetricsReport report;
  report.repetitions = 1;
  report.problem_count = timings.order.size();
  Rational total = 0;
  for (const std::string& id : timings.order) {
    const auto& row = timings.rows.at(id);
    Rational t_opt = row_optimum(row);
    total += t_opt;
    // log the first class achieving the optimum
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (!row[c].timeout && row[c].seconds == t_opt) {
        report.choice_log[id][static_cast<int>(c) + 1] = 1;
        break;
      }
    }
  }
  report.accuracy_pct = 100;
  report.total_time = total;
  report.markup_avg = 0;
  report.completed = Rational(
      static_cast<unsigned long>(timings.order.size()));
  report.tie_rate_pct = 0;
  return report;
}

std::vector<std::pair<Rational, std::size_t>> survival_curve(
    const TimingTable& timings, const std::map<std::string, int>& choices) {
  std::vector<Rational> times;
  for (const std::string& id : timings.order) {
    auto it = choices.find(id);
    if (it == choices.end()) {
      throw std::invalid_argument("survival_curve: no choice for '" + id +
                                  "'");
    }
    const auto& row = timings.rows.at(id);
    int cls = it->second;
    if (cls < 1 || static_cast<std::size_t>(cls) > row.size()) {
      throw std::invalid_argument("survival_curve: class label out of range");
    }
    const TimingEntry& cell = row[static_cast<std::size_t>(cls - 1)];
    if (!cell.timeout) times.push_back(cell.seconds);
  }
  std::sort(times.begin(), times.end());
  std::vector<std::pair<Rational, std::size_t>> curve;
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (!curve.empty() && curve.back().first == times[i]) {
      curve.back().second = i + 1;
    } else {
      curve.emplace_back(times[i], i + 1);
    }
  }
  return curve;
}

// ---------------------------------------------------------------------------
// Rendering.

namespace {

struct Row {
  std::string name, accuracy, total, markup, completed, ties;
};

Row render_row(const NamedReport& nr) {
  return Row{nr.name,
             rational_to_fixed(nr.report.accuracy_pct, 2),
             rational_to_fixed(nr.report.total_time, 1),
             rational_to_fixed(nr.report.markup_avg, 2),
             rational_to_fixed(nr.report.completed, 1),
             rational_to_fixed(nr.report.tie_rate_pct, 1)};
}

}  // namespace

std::string metrics_csv(const std::vector<NamedReport>& reports) {
  std::ostringstream out;
  out << "name,accuracy,total_time,markup,completed,tie_rate\n";
  for (const NamedReport& nr : reports) {
    Row r = render_row(nr);
    out << r.name << "," << r.accuracy << "," << r.total << "," << r.markup
        << "," << r.completed << "," << r.ties << "\n";
  }
  return out.str();
}

std::string metrics_table(const std::vector<NamedReport>& reports) {
  const char* headers[6] = {"Name",      "Accuracy",  "Total time",
                            "Markup",    "Completed", "Tie rate"};
  std::vector<Row> rows;
  rows.reserve(reports.size());
  for (const NamedReport& nr : reports) rows.push_back(render_row(nr));

  std::size_t width[6];
  for (int c = 0; c < 6; ++c) width[c] = std::string(headers[c]).size();
  for (const Row& r : rows) {
    const std::string* cells[6] = {&r.name,   &r.accuracy,  &r.total,
                                   &r.markup, &r.completed, &r.ties};
    for (int c = 0; c < 6; ++c) width[c] = std::max(width[c], cells[c]->size());
  }
  std::ostringstream out;
  for (int c = 0; c < 6; ++c) {
    out << std::left << std::setw(static_cast<int>(width[c]) + 2)
        << headers[c];
  }
  out << "\n";
  for (const Row& r : rows) {
    const std::string* cells[6] = {&r.name,   &r.accuracy,  &r.total,
                                   &r.markup, &r.completed, &r.ties};
    for (int c = 0; c < 6; ++c) {
      out << std::left << std::setw(static_cast<int>(width[c]) + 2)
          << *cells[c];
    }
    out << "\n";
  }
  return out.str();
}

std::string choice_log_csv(const MetricsReport& report) {
  std::ostringstream out;
  out << "problem,class,count,tie_runs\n";
  for (const auto& [id, classes] : report.choice_log) {
    unsigned ties = 0;
    auto it = report.tie_log.find(id);
    if (it != report.tie_log.end()) ties = it->second;
    for (const auto& [cls, count] : classes) {
      out << id << "," << cls << "," << count << "," << ties << "\n";
    }
  }
  return out.str();
}

std::string survival_csv(
    const std::vector<std::pair<Rational, std::size_t>>& curve) {
  std::ostringstream out;
  out << "time,completed\n";
  for (const auto& [t, n] : curve) {
    out << rational_to_fixed(t, 6) << "," << n << "\n";
  }
  return out.str();
}

}  // namespace varord
