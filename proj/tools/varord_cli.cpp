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

// Command-line front end. Everything goes through the C API in varord.h;
// this file contains argument handling and output plumbing only.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "varord.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitInternal = 2;

[[noreturn]] void die(vo_status status) {
  std::cerr << "error: " << vo_last_error() << "\n";
  std::exit(status == VO_EINTERNAL ? kExitInternal : kExitInput);
}

void check(vo_status status) {
  if (status != VO_OK) die(status);
}

std::string take_string(char* s) {
  std::string out(s);
  vo_string_destroy(s);
  return out;
}

std::vector<std::string> take_strings(char** strings, size_t count) {
  std::vector<std::string> out;
  out.reserve(count);
  for (size_t i = 0; i < count; ++i) out.emplace_back(strings[i]);
  vo_strings_destroy(strings, count);
  return out;
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write " << path << "\n";
    std::exit(kExitInput);
  }
  out << text;
}

std::vector<std::string> split_list(const std::string& csv) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(csv);
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<const char*> c_view(const std::vector<std::string>& v) {
  std::vector<const char*> out;
  out.reserve(v.size());
  for (const std::string& s : v) out.push_back(s.c_str());
  return out;
}

struct SystemHandle {
  vo_system* ptr = nullptr;
  ~SystemHandle() { vo_system_destroy(ptr); }
};

// Shared flags for commands that take a polynomial system either inline
// (--vars/--poly) or from a problems file (--problems/--id).
struct SystemInput {
  std::string vars_csv;
  std::vector<std::string> polys;
  std::string problems_path;
  std::string id;

  void attach(CLI::App* cmd) {
    cmd->add_option("--vars", vars_csv,
                    "Comma-separated variable names, e.g. x1,x2,x3");
    cmd->add_option("--poly", polys,
                    "Polynomial (repeatable), e.g. \"x1*x2*x3 - 1\"");
    cmd->add_option("--problems", problems_path,
                    "Problems file (one JSON record per line)");
    cmd->add_option("--id", id, "Problem id to pick from --problems");
  }

  vo_system* load() const {
    if (!problems_path.empty()) {
      if (id.empty()) {
        std::cerr << "error: --problems requires --id\n";
        std::exit(kExitInput);
      }
      vo_problems* problems = nullptr;
      check(vo_problems_load(problems_path.c_str(), &problems));
      vo_system* sys = nullptr;
      vo_status st = vo_problems_get(problems, id.c_str(), &sys);
      vo_problems_destroy(problems);
      check(st);
      return sys;
    }
    if (vars_csv.empty() || polys.empty()) {
      std::cerr << "error: provide --vars and --poly, or --problems/--id\n";
      std::exit(kExitInput);
    }
    std::vector<std::string> vars = split_list(vars_csv);
    std::vector<const char*> cvars = c_view(vars);
    std::vector<const char*> cpolys = c_view(polys);
    vo_system* sys = nullptr;
    check(vo_system_create(cvars.data(), cvars.size(), cpolys.data(),
                           cpolys.size(), &sys));
    return sys;
  }
};

std::string var_name(const vo_system* sys, size_t index) {
  char* s = nullptr;
  check(vo_system_var_name(sys, index, &s));
  return take_string(s);
}

size_t resolve_var(const vo_system* sys, const std::string& token) {
  for (size_t v = 0; v < vo_system_nvars(sys); ++v) {
    if (var_name(sys, v) == token) return v;
  }
  try {
    std::size_t pos = 0;
    long k = std::stol(token, &pos);
    if (pos == token.size() && k >= 1 &&
        static_cast<size_t>(k) <= vo_system_nvars(sys)) {
      return static_cast<size_t>(k - 1);
    }
  } catch (const std::exception&) {
  }
  std::cerr << "error: unknown variable '" << token << "'\n";
  std::exit(kExitInput);
}

vo_eval_options make_options(uint64_t seed, unsigned reps, bool charge,
                             const std::string& penalty) {
  vo_eval_options opts;
  opts.master_seed = seed;
  opts.repetitions = reps;
  opts.charge_heuristic_time = charge ? 1 : 0;
  opts.penalty_factor = penalty.c_str();
  return opts;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"varord: variable-ordering heuristics for CAD"};
  app.require_subcommand(1);

  // ---- features ----
  auto* cmd_features = app.add_subcommand(
      "features", "Evaluate the feature vector of a system, or list the "
                  "enumerated features");
  SystemInput features_input;
  features_input.attach(cmd_features);
  bool features_list = false;
  size_t features_nvars = 3;
  std::string features_output;
  cmd_features->add_flag("--list", features_list,
                         "Only list feature names (uses --nvars)");
  cmd_features->add_option("--nvars", features_nvars,
                           "Variable count for --list (default 3)");
  cmd_features->add_option("--output", features_output,
                           "Output file (default stdout)");

  // ---- project ----
  auto* cmd_project = app.add_subcommand(
      "project", "Print the Lazard projection basis for a system");
  SystemInput project_input;
  project_input.attach(cmd_project);
  std::string project_var;
  bool project_raw = false;
  std::string project_output;
  cmd_project->add_option("--var", project_var,
                          "Variable to eliminate (name or 1-based index)")
      ->required();
  cmd_project->add_flag("--raw", project_raw,
                        "Print the raw projection factors instead of the "
                        "basis");
  cmd_project->add_option("--output", project_output,
                          "Output file (default stdout)");

  // ---- choose ----
  auto* cmd_choose = app.add_subcommand(
      "choose", "Choose a variable ordering with a named heuristic");
  SystemInput choose_input;
  choose_input.attach(cmd_choose);
  std::string choose_heuristic = "gmods";
  uint64_t choose_seed = 0;
  std::string choose_output;
  cmd_choose->add_option("--heuristic", choose_heuristic,
                         "Heuristic name or A>B>C chain (default gmods)");
  cmd_choose->add_option("--seed", choose_seed,
                         "Random seed for tie-breaking (default 0)");
  cmd_choose->add_option("--output", choose_output,
                         "Output file (default stdout)");

  // ---- rank ----
  auto* cmd_rank = app.add_subcommand(
      "rank", "Aggregate attribution scores into merged feature rankings "
              "and a cross-model vote");
  std::string rank_shap;
  std::string rank_vote = "dowdall";
  size_t rank_top = 0;
  bool rank_no_proportional = false;
  std::string rank_stages;
  std::string rank_output;
  cmd_rank->add_option("--shap", rank_shap, "Attribution CSV (model,class,"
                                            "instance,feature,shap_value)")
      ->required();
  cmd_rank->add_option("--vote", rank_vote,
                       "Vote rule: dowdall or borda (default dowdall)");
  cmd_rank->add_option("--top", rank_top,
                       "Print only the top K voted feature names");
  cmd_rank->add_flag("--no-proportional", rank_no_proportional,
                     "Skip the proportional merge (keep 27 features)");
  cmd_rank->add_option("--stages", rank_stages,
                       "Directory for per-model stage CSVs (raw, merged, "
                       "proportional)");
  cmd_rank->add_option("--output", rank_output,
                       "Output file (default stdout)");

  // ---- triples ----
  auto* cmd_triples = app.add_subcommand(
      "triples", "Enumerate the ordered feature triples of a top-6 list; "
                 "with timing data, evaluate them into a leaderboard");
  std::string triples_features;
  std::string triples_problems, triples_timings;
  uint64_t triples_seed = 0;
  unsigned triples_reps = 1;
  std::string triples_limit = "60";
  std::string triples_penalty = "2";
  std::string triples_format = "csv";
  std::string triples_output;
  cmd_triples->add_option("--features", triples_features,
                          "Comma-separated CamelCase features (e.g. the "
                          "top six)")
      ->required();
  cmd_triples->add_option("--problems", triples_problems, "Problems file");
  cmd_triples->add_option("--timings", triples_timings, "Timings CSV");
  cmd_triples->add_option("--seed", triples_seed, "Master seed (default 0)");
  cmd_triples->add_option("--reps", triples_reps,
                          "Repetitions per problem (default 1)");
  cmd_triples->add_option("--time-limit", triples_limit,
                          "Time limit in seconds (default 60)");
  cmd_triples->add_option("--penalty-factor", triples_penalty,
                          "Timeout penalty factor (default 2)");
  cmd_triples->add_option("--format", triples_format,
                          "Output format: csv or table (default csv)");
  cmd_triples->add_option("--output", triples_output,
                          "Output file (default stdout)");

  // ---- evaluate ----
  auto* cmd_evaluate = app.add_subcommand(
      "evaluate", "Evaluate heuristics against a timing table");
  std::string eval_problems, eval_timings;
  std::string eval_heuristics = "gmods";
  uint64_t eval_seed = 0;
  unsigned eval_reps = 1;
  std::string eval_limit = "60";
  std::string eval_penalty = "2";
  bool eval_charge = false;
  std::string eval_format = "csv";
  std::string eval_choice_log;
  std::string eval_output;
  cmd_evaluate->add_option("--problems", eval_problems, "Problems file")
      ->required();
  cmd_evaluate->add_option("--timings", eval_timings, "Timings CSV")
      ->required();
  cmd_evaluate->add_option("--heuristic", eval_heuristics,
                           "Comma-separated heuristic names; virtual-best "
                           "is recognized (default gmods)");
  cmd_evaluate->add_option("--seed", eval_seed, "Master seed (default 0)");
  cmd_evaluate->add_option("--reps", eval_reps,
                           "Repetitions per problem (default 1)");
  cmd_evaluate->add_option("--time-limit", eval_limit,
                           "Time limit in seconds (default 60)");
  cmd_evaluate->add_option("--penalty-factor", eval_penalty,
                           "Timeout penalty factor (default 2)");
  cmd_evaluate->add_flag("--charge-heuristic-time", eval_charge,
                         "Add wall-clock heuristic cost to total time "
                         "(default off; makes output timing-dependent)");
  cmd_evaluate->add_option("--format", eval_format,
                           "Output format: csv or table (default csv)");
  cmd_evaluate->add_option("--choice-log", eval_choice_log,
                           "File for the per-problem choice log of the last "
                           "heuristic");
  cmd_evaluate->add_option("--output", eval_output,
                           "Output file (default stdout)");

  // ---- survival ----
  auto* cmd_survival = app.add_subcommand(
      "survival", "Emit survival-curve points for one heuristic");
  std::string surv_problems, surv_timings;
  std::string surv_heuristic = "gmods";
  uint64_t surv_seed = 0;
  std::string surv_limit = "60";
  std::string surv_output;
  cmd_survival->add_option("--problems", surv_problems, "Problems file")
      ->required();
  cmd_survival->add_option("--timings", surv_timings, "Timings CSV")
      ->required();
  cmd_survival->add_option("--heuristic", surv_heuristic,
                           "Heuristic name; virtual-best is recognized "
                           "(default gmods)");
  cmd_survival->add_option("--seed", surv_seed, "Master seed (default 0)");
  cmd_survival->add_option("--time-limit", surv_limit,
                           "Time limit in seconds (default 60)");
  cmd_survival->add_option("--output", surv_output,
                           "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);  // prints the message or the help text
    return code == 0 ? kExitOk : kExitInput;
  }

  if (cmd_features->parsed()) {
    if (features_list) {
      char** names = nullptr;
      size_t count = 0;
      check(vo_feature_list(features_nvars, &names, &count));
      std::ostringstream out;
      for (const std::string& n : take_strings(names, count)) out << n << "\n";
      write_output(out.str(), features_output);
      return kExitOk;
    }
    SystemHandle sys{features_input.load()};
    char** names = nullptr;
    size_t count = 0;
    check(vo_feature_list(vo_system_nvars(sys.ptr), &names, &count));
    std::ostringstream out;
    out << "feature,value\n";
    for (const std::string& n : take_strings(names, count)) {
      char* value = nullptr;
      check(vo_feature_eval(sys.ptr, n.c_str(), &value));
      out << n << "," << take_string(value) << "\n";
    }
    write_output(out.str(), features_output);
    return kExitOk;
  }

  if (cmd_project->parsed()) {
    SystemHandle sys{project_input.load()};
    size_t var = resolve_var(sys.ptr, project_var);
    SystemHandle result;
    check(project_raw ? vo_system_project_raw(sys.ptr, var, &result.ptr)
                      : vo_system_project(sys.ptr, var, &result.ptr));
    std::ostringstream out;
    for (size_t i = 0; i < vo_system_size(result.ptr); ++i) {
      char* text = nullptr;
      check(vo_system_poly(result.ptr, i, &text));
      out << take_string(text) << "\n";
    }
    write_output(out.str(), project_output);
    return kExitOk;
  }

  if (cmd_choose->parsed()) {
    SystemHandle sys{choose_input.load()};
    vo_chain* chain = nullptr;
    check(vo_chain_parse(choose_heuristic.c_str(), &chain));
    std::vector<size_t> order(vo_system_nvars(sys.ptr));
    int class_label = 0;
    char* tiestats = nullptr;
    vo_status st = vo_choose(sys.ptr, chain, choose_seed, order.data(),
                             &class_label, &tiestats);
    vo_chain_destroy(chain);
    check(st);
    std::ostringstream out;
    for (size_t i = 0; i < order.size(); ++i) {
      if (i) out << " > ";
      out << var_name(sys.ptr, order[i]);
    }
    out << " (class " << class_label << ")\n";
    out << "ties: " << take_string(tiestats) << "\n";
    write_output(out.str(), choose_output);
    return kExitOk;
  }

  if (cmd_rank->parsed()) {
    vo_shap* shap = nullptr;
    check(vo_shap_load(rank_shap.c_str(), &shap));
    int proportional = rank_no_proportional ? 0 : 1;
    if (!rank_stages.empty()) {
      char** models = nullptr;
      size_t nmodels = 0;
      check(vo_shap_models(shap, &models, &nmodels));
      const char* stage_names[3] = {"raw", "merged", "proportional"};
      for (const std::string& model : take_strings(models, nmodels)) {
        for (int stage = 0; stage < 3; ++stage) {
          char* csv = nullptr;
          check(vo_shap_ranking_csv(shap, model.c_str(), stage, &csv));
          write_output(take_string(csv), rank_stages + "/" + model + "_" +
                                             stage_names[stage] + ".csv");
        }
      }
    }
    std::ostringstream out;
    if (rank_top > 0) {
      char** names = nullptr;
      size_t count = 0;
      vo_status st = vo_shap_top(shap, rank_vote.c_str(), proportional,
                                 rank_top, &names, &count);
      if (st != VO_OK) {
        vo_shap_destroy(shap);
        die(st);
      }
      for (const std::string& n : take_strings(names, count)) out << n << "\n";
    } else {
      char* csv = nullptr;
      vo_status st =
          vo_shap_vote_csv(shap, rank_vote.c_str(), proportional, &csv);
      if (st != VO_OK) {
        vo_shap_destroy(shap);
        die(st);
      }
      out << take_string(csv);
    }
    vo_shap_destroy(shap);
    write_output(out.str(), rank_output);
    return kExitOk;
  }

  if (cmd_triples->parsed()) {
    std::vector<std::string> features = split_list(triples_features);
    std::vector<const char*> cfeatures = c_view(features);
    if (triples_problems.empty() || triples_timings.empty()) {
      char** chains = nullptr;
      size_t count = 0;
      check(vo_triples(cfeatures.data(), cfeatures.size(), &chains, &count));
      std::ostringstream out;
      for (const std::string& c : take_strings(chains, count)) out << c << "\n";
      write_output(out.str(), triples_output);
      return kExitOk;
    }
    vo_problems* problems = nullptr;
    check(vo_problems_load(triples_problems.c_str(), &problems));
    vo_timings* timings = nullptr;
    vo_status st = vo_timings_load(triples_timings.c_str(),
                                   triples_limit.c_str(), &timings);
    if (st != VO_OK) {
      vo_problems_destroy(problems);
      die(st);
    }
    vo_eval_options opts =
        make_options(triples_seed, triples_reps, false, triples_penalty);
    char* report = nullptr;
    st = vo_triples_leaderboard(problems, timings, cfeatures.data(),
                                cfeatures.size(), &opts,
                                triples_format == "table" ? 1 : 0, &report);
    vo_timings_destroy(timings);
    vo_problems_destroy(problems);
    check(st);
    write_output(take_string(report), triples_output);
    return kExitOk;
  }

  if (cmd_evaluate->parsed()) {
    vo_problems* problems = nullptr;
    check(vo_problems_load(eval_problems.c_str(), &problems));
    vo_timings* timings = nullptr;
    vo_status st =
        vo_timings_load(eval_timings.c_str(), eval_limit.c_str(), &timings);
    if (st != VO_OK) {
      vo_problems_destroy(problems);
      die(st);
    }
    std::vector<std::string> names = split_list(eval_heuristics);
    std::vector<const char*> cnames = c_view(names);
    vo_eval_options opts =
        make_options(eval_seed, eval_reps, eval_charge, eval_penalty);
    char* report = nullptr;
    char* choices = nullptr;
    st = vo_evaluate(problems, timings, cnames.data(), cnames.size(), &opts,
                     eval_format == "table" ? 1 : 0, &report,
                     eval_choice_log.empty() ? nullptr : &choices);
    vo_timings_destroy(timings);
    vo_problems_destroy(problems);
    check(st);
    write_output(take_string(report), eval_output);
    if (choices) write_output(take_string(choices), eval_choice_log);
    return kExitOk;
  }

  if (cmd_survival->parsed()) {
    vo_problems* problems = nullptr;
    check(vo_problems_load(surv_problems.c_str(), &problems));
    vo_timings* timings = nullptr;
    vo_status st =
        vo_timings_load(surv_timings.c_str(), surv_limit.c_str(), &timings);
    if (st != VO_OK) {
      vo_problems_destroy(problems);
      die(st);
    }
    vo_eval_options opts = make_options(surv_seed, 1, false, "2");
    char* csv = nullptr;
    st = vo_survival(problems, timings, surv_heuristic.c_str(), &opts, &csv);
    vo_timings_destroy(timings);
    vo_problems_destroy(problems);
    check(st);
    write_output(take_string(csv), surv_output);
    return kExitOk;
  }

  return kExitOk;
}
