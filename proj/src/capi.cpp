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

#include "varord.h"

#include <algorithm>
#include <cstring>
#include <new>
#include <sstream>
#include <string>
#include <vector>

#include "varord/evalharness.hpp"
#include "varord/features.hpp"
#include "varord/heuristics.hpp"
#include "varord/parser.hpp"
#include "varord/projection.hpp"
#include "varord/xai_rank.hpp"

using namespace varord;

struct vo_system {
  PolySystem sys;
};
struct vo_chain {
  HeuristicChain chain;
};
struct vo_shap {
  std::vector<ShapRecord> records;
};
struct vo_timings {
  TimingTable table;
};
struct vo_problems {
  std::map<std::string, PolySystem> problems;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& msg) { g_last_error = msg; }

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

char** dup_strings(const std::vector<std::string>& v) {
  char** out = new char*[v.size()];
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = dup_string(v[i]);
  return out;
}

// Maps C++ failures onto status codes; parse and I/O problems carry their
// own exception types or messages.
template <typename Fn>
vo_status guarded(vo_status failure_code, Fn&& fn) {
  try {
    fn();
    return VO_OK;
  } catch (const ParseError& e) {
    set_error(std::string(e.what()) + " at position " +
              std::to_string(e.position()));
    return VO_EPARSE;
  } catch (const std::invalid_argument& e) {
    set_error(e.what());
    return VO_EINVAL;
  } catch (const std::out_of_range& e) {
    set_error(e.what());
    return VO_EINVAL;
  } catch (const std::domain_error& e) {
    set_error(e.what());
    return VO_EINVAL;
  } catch (const std::runtime_error& e) {
    set_error(e.what());
    return failure_code;
  } catch (const std::bad_alloc&) {
    set_error("out of memory");
    return VO_EINTERNAL;
  } catch (const std::exception& e) {
    set_error(e.what());
    return VO_EINTERNAL;
  }
}

vo_status require(bool cond, const char* msg) {
  if (cond) return VO_OK;
  set_error(msg);
  return VO_EINVAL;
}

EvalOptions make_options(const vo_eval_options* opts) {
  EvalOptions o;
  if (opts) {
    o.master_seed = opts->master_seed;
    o.repetitions = opts->repetitions == 0 ? 1 : opts->repetitions;
    o.charge_heuristic_time = opts->charge_heuristic_time != 0;
    o.penalty_factor = rational_from_decimal(
        opts->penalty_factor ? opts->penalty_factor : "2");
  }
  return o;
}

std::vector<NamedReport> run_heuristics(
    const vo_problems* p, const vo_timings* t,
    const std::vector<std::string>& names, const EvalOptions& opts) {
  std::vector<NamedReport> reports;
  for (const std::string& name : names) {
    if (name == "virtual-best") {
      reports.push_back({name, evaluate_virtual_best(t->table)});
    } else {
      HeuristicChain chain = parse_heuristic(name);
      reports.push_back({name, evaluate(p->problems, t->table, chain, opts)});
    }
  }
  return reports;
}

VotedScores vote_for(const vo_shap* s, const std::string& method,
                     bool merge_proportional) {
  std::vector<FeatureRanking> rankings;
  for (const std::string& model : models_in(s->records)) {
    rankings.push_back(
        model_feature_ranking(s->records, model, merge_proportional));
  }
  if (method == "dowdall") return dowdall(rankings);
  if (method == "borda") return borda(rankings);
  throw std::invalid_argument("vote method must be dowdall or borda");
}

}  // namespace

extern "C" {

const char* vo_last_error(void) { return g_last_error.c_str(); }

const char* vo_version(void) { return "1.0.0"; }

void vo_string_destroy(char* s) { delete[] s; }

void vo_strings_destroy(char** strings, size_t count) {
  if (!strings) return;
  for (size_t i = 0; i < count; ++i) delete[] strings[i];
  delete[] strings;
}

/* ------------------------------------------------------------------ */

vo_status vo_system_create(const char* const* var_names, size_t nvars,
                           const char* const* polys, size_t npolys,
                           vo_system** out) {
  if (vo_status st = require(out && var_names && (polys || npolys == 0),
                             "null argument");
      st != VO_OK) {
    return st;
  }
  return guarded(VO_EPARSE, [&] {
    std::vector<std::string> names(var_names, var_names + nvars);
    std::vector<std::string> texts(polys, polys + npolys);
    *out = new vo_system{parse_system(texts, names)};
  });
}

void vo_system_destroy(vo_system* s) { delete s; }

size_t vo_system_nvars(const vo_system* s) { return s ? s->sys.nvars : 0; }

size_t vo_system_size(const vo_system* s) {
  return s ? s->sys.polys.size() : 0;
}

vo_status vo_system_poly(const vo_system* s, size_t index, char** out) {
  if (vo_status st = require(s && out, "null argument"); st != VO_OK) {
    return st;
  }
  if (vo_status st = require(index < s->sys.polys.size(),
                             "polynomial index out of range");
      st != VO_OK) {
    return st;
  }
  return guarded(VO_EINTERNAL, [&] {
    *out = dup_string(s->sys.polys[index].to_string(
        s->sys.names_or_default()));
  });
}

vo_status vo_system_var_name(const vo_system* s, size_t index, char** out) {
  if (vo_status st = require(s && out, "null argument"); st != VO_OK) {
    return st;
  }
  if (vo_status st =
          require(index < s->sys.nvars, "variable index out of range");
      st != VO_OK) {
    return st;
  }
  return guarded(VO_EINTERNAL, [&] {
    *out = dup_string(s->sys.names_or_default()[index]);
  });
}

vo_status vo_system_normalize(const vo_system* s, vo_system** out) {
  if (vo_status st = require(s && out, "null argument"); st != VO_OK) {
    return st;
  }
  return guarded(VO_EINTERNAL,
                 [&] { *out = new vo_system{normalize_system(s->sys)}; });
}

vo_status vo_system_project(const vo_system* s, size_t var, vo_system** out) {
  if (vo_status st = require(s && out, "null argument"); st != VO_OK) {
    return st;
  }
  return guarded(VO_EINTERNAL, [&] {
    *out = new vo_system{lazard_projection(normalize_system(s->sys), var)};
  });
}

vo_status vo_system_project_raw(const vo_system* s, size_t var,
                                vo_system** out) {
  if (vo_status st = require(s && out, "null argument"); st != VO_OK) {
    return st;
  }
  return guarded(VO_EINTERNAL, [&] {
    PolySystem normalized = normalize_system(s->sys);
    PolySystem raw;
    raw.nvars = normalized.nvars;
    raw.var_names = normalized.var_names;
    raw.polys = lazard_projection_raw(normalized, var);
    *out = new vo_system{std::move(raw)};
  });
}

vo_status vo_system_basis(const vo_system* s, vo_system** out) {
  if (vo_status st = require(s && out, "null argument"); st != VO_OK) {
    return st;
  }
  return guarded(VO_EINTERNAL,
                 [&] { *out = new vo_system{squarefree_gcd_free_basis(s->sys)}; });
}

/* ------------------------------------------------------------------ */

vo_status vo_feature_list(size_t nvars, char*** names_out,
                          size_t* count_out) {
  if (vo_status st = require(names_out && count_out, "null argument");
      st != VO_OK) {
    return st;
  }
  return guarded(VO_EINTERNAL, [&] {
    std::vector<std::string> names;
    for (const FeatureDescriptor& d : enumerate_features(nvars)) {
      names.push_back(feature_name(d));
    }
    *names_out = dup_strings(names);
    *count_out = names.size();
  });
}

vo_status vo_feature_eval(const vo_system* s, const char* feature,
                          char** value_out) {
  if (vo_status st = require(s && feature && value_out, "null argument");
      st != VO_OK) {
    return st;
  }
  return guarded(VO_EPARSE, [&] {
    FeatureDescriptor d = parse_feature_name(feature);
    if (d.variable == kMergedVariable) {
      // A merged name evaluates to the sum over all variables.
      Rational total(0);
      for (std::size_t v = 0; v < s->sys.nvars; ++v) {
        total += evaluate_feature(d.with_variable(static_cast<int>(v)),
                                  s->sys);
      }
      *value_out = dup_string(rational_to_string(total));
    } else {
      *value_out =
          dup_string(rational_to_string(evaluate_feature(d, s->sys)));
    }
  });
}

vo_status vo_degree_list(const vo_system* s, size_t var, const char* kind,
                         char** out) {
  if (vo_status st = require(s && kind && out, "null argument");
      st != VO_OK) {
    return st;
  }
  std::string k = kind;
  if (vo_status st = require(k == "v" || k == "sv", "kind must be v or sv");
      st != VO_OK) {
    return st;
  }
  return guarded(VO_EINTERNAL, [&] {
    NestedDegreeList lists =
        degree_list(s->sys, var, k == "v" ? Base::V : Base::SV);
    std::ostringstream text;
    text << "[";
    for (std::size_t i = 0; i < lists.size(); ++i) {
      if (i) text << ",";
      text << "[";
      for (std::size_t j = 0; j < lists[i].size(); ++j) {
        if (j) text << ",";
        text << rational_to_string(lists[i][j]);
      }
      text << "]";
    }
    text << "]";
    *out = dup_string(text.str());
  });
}

/* ------------------------------------------------------------------ */

vo_status vo_chain_parse(const char* name, vo_chain** out) {
  if (vo_status st = require(name && out, "null argument"); st != VO_OK) {
    return st;
  }
  return guarded(VO_EPARSE,
                 [&] { *out = new vo_chain{parse_heuristic(name)}; });
}

void vo_chain_destroy(vo_chain* c) { delete c; }

vo_status vo_chain_name(const vo_chain* c, char** out) {
  if (vo_status st = require(c && out, "null argument"); st != VO_OK) {
    return st;
  }
  return guarded(VO_EINTERNAL, [&] { *out = dup_string(c->chain.name); });
}

vo_status vo_choose(const vo_system* s, const vo_chain* c, uint64_t seed,
                    size_t* order_out, int* class_label_out,
                    char** tiestats_out) {
  if (vo_status st =
          require(s && c && order_out && class_label_out, "null argument");
      st != VO_OK) {
    return st;
  }
  return guarded(VO_EINTERNAL, [&] {
    RandomStream rng(seed);
    auto [ordering, stats] = greedy_ordering(s->sys, c->chain, rng);
    for (std::size_t i = 0; i < ordering.projection_order.size(); ++i) {
      order_out[i] = ordering.projection_order[i];
    }
    *class_label_out = ordering.class_label;
    if (tiestats_out) *tiestats_out = dup_string(stats.to_string());
  });
}

vo_status vo_mods(const vo_system* s, size_t* order_out, int* class_label_out,
                  char** product_out) {
  if (vo_status st =
          require(s && order_out && class_label_out, "null argument");
      st != VO_OK) {
    return st;
  }
  return guarded(VO_EINTERNAL, [&] {
    auto [ordering, product] = mods_ordering(s->sys);
    for (std::size_t i = 0; i < ordering.projection_order.size(); ++i) {
      order_out[i] = ordering.projection_order[i];
    }
    *class_label_out = ordering.class_label;
    if (product_out) *product_out = dup_string(product.get_str());
  });
}

vo_status vo_triples(const char* const* top_names, size_t ntop,
                     char*** chains_out, size_t* count_out) {
  if (vo_status st =
          require(top_names && chains_out && count_out, "null argument");
      st != VO_OK) {
    return st;
  }
  return guarded(VO_EPARSE, [&] {
    std::vector<FeatureDescriptor> top;
    for (size_t i = 0; i < ntop; ++i) {
      top.push_back(parse_feature_name(top_names[i]));
    }
    std::vector<std::string> names;
    for (const HeuristicChain& chain : enumerate_triples(top)) {
      names.push_back(chain.name);
    }
    *chains_out = dup_strings(names);
    *count_out = names.size();
  });
}

/* ------------------------------------------------------------------ */

vo_status vo_shap_load(const char* path, vo_shap** out) {
  if (vo_status st = require(path && out, "null argument"); st != VO_OK) {
    return st;
  }
  return guarded(VO_EIO,
                 [&] { *out = new vo_shap{load_shap_csv_file(path)}; });
}

void vo_shap_destroy(vo_shap* s) { delete s; }

vo_status vo_shap_models(const vo_shap* s, char*** models_out,
                         size_t* count_out) {
  if (vo_status st = require(s && models_out && count_out, "null argument");
      st != VO_OK) {
    return st;
  }
  return guarded(VO_EINTERNAL, [&] {
    std::vector<std::string> models = models_in(s->records);
    *models_out = dup_strings(models);
    *count_out = models.size();
  });
}

vo_status vo_shap_ranking_csv(const vo_shap* s, const char* model, int stage,
                              char** csv_out) {
  if (vo_status st = require(s && model && csv_out, "null argument");
      st != VO_OK) {
    return st;
  }
  if (vo_status st = require(stage >= 0 && stage <= 2,
                             "stage must be 0 (raw), 1 (merged) or 2 "
                             "(proportional)");
      st != VO_OK) {
    return st;
  }
  return guarded(VO_EINVAL, [&] {
    std::vector<RankEntry> entries;
    if (stage == 0) {
      entries = raw_aggregation(s->records, model);
    } else {
      entries =
          model_feature_ranking(s->records, model, stage == 2).entries;
    }
    *csv_out = dup_string(rank_entries_csv(entries));
  });
}

vo_status vo_shap_vote_csv(const vo_shap* s, const char* method,
                           int merge_proportional, char** csv_out) {
  if (vo_status st = require(s && method && csv_out, "null argument");
      st != VO_OK) {
    return st;
  }
  return guarded(VO_EINVAL, [&] {
    VotedScores voted = vote_for(s, method, merge_proportional != 0);
    *csv_out = dup_string(rank_entries_csv(voted.entries));
  });
}

vo_status vo_shap_top(const vo_shap* s, const char* method,
                      int merge_proportional, size_t k, char*** names_out,
                      size_t* count_out) {
  if (vo_status st =
          require(s && method && names_out && count_out, "null argument");
      st != VO_OK) {
    return st;
  }
  return guarded(VO_EINVAL, [&] {
    VotedScores voted = vote_for(s, method, merge_proportional != 0);
    std::vector<std::string> names = top_k(voted, k);
    *names_out = dup_strings(names);
    *count_out = names.size();
  });
}

/* ------------------------------------------------------------------ */

vo_status vo_timings_load(const char* path, const char* time_limit,
                          vo_timings** out) {
  if (vo_status st = require(path && out, "null argument"); st != VO_OK) {
    return st;
  }
  return guarded(VO_EIO, [&] {
    Rational limit = rational_from_decimal(time_limit ? time_limit : "60");
    *out = new vo_timings{load_timings_file(path, limit, nullptr)};
  });
}

void vo_timings_destroy(vo_timings* t) { delete t; }

size_t vo_timings_count(const vo_timings* t) {
  return t ? t->table.order.size() : 0;
}

size_t vo_timings_dropped(const vo_timings* t) {
  return t ? t->table.dropped_all_timeout : 0;
}

vo_status vo_problems_load(const char* path, vo_problems** out) {
  if (vo_status st = require(path && out, "null argument"); st != VO_OK) {
    return st;
  }
  return guarded(VO_EIO,
                 [&] { *out = new vo_problems{load_problems_file(path)}; });
}

void vo_problems_destroy(vo_problems* p) { delete p; }

size_t vo_problems_count(const vo_problems* p) {
  return p ? p->problems.size() : 0;
}

vo_status vo_problems_get(const vo_problems* p, const char* id,
                          vo_system** out) {
  if (vo_status st = require(p && id && out, "null argument"); st != VO_OK) {
    return st;
  }
  auto it = p->problems.find(id);
  if (it == p->problems.end()) {
    set_error(std::string("unknown problem id: ") + id);
    return VO_EINVAL;
  }
  return guarded(VO_EINTERNAL, [&] { *out = new vo_system{it->second}; });
}

vo_status vo_evaluate(const vo_problems* p, const vo_timings* t,
                      const char* const* heuristics, size_t nheuristics,
                      const vo_eval_options* opts, int format,
                      char** report_out, char** choices_csv_out) {
  if (vo_status st = require(p && t && heuristics && nheuristics > 0 &&
                                 report_out,
                             "null argument");
      st != VO_OK) {
    return st;
  }
  return guarded(VO_EINVAL, [&] {
    EvalOptions options = make_options(opts);
    std::vector<std::string> names(heuristics, heuristics + nheuristics);
    std::vector<NamedReport> reports = run_heuristics(p, t, names, options);
    *report_out = dup_string(format == 1 ? metrics_table(reports)
                                         : metrics_csv(reports));
    if (choices_csv_out) {
      *choices_csv_out = dup_string(choice_log_csv(reports.back().report));
    }
  });
}

vo_status vo_survival(const vo_problems* p, const vo_timings* t,
                      const char* heuristic, const vo_eval_options* opts,
                      char** csv_out) {
  if (vo_status st =
          require(p && t && heuristic && csv_out, "null argument");
      st != VO_OK) {
    return st;
  }
  return guarded(VO_EINVAL, [&] {
    EvalOptions options = make_options(opts);
    options.repetitions = 1;  // a survival curve is one concrete run
    std::vector<NamedReport> reports =
        run_heuristics(p, t, {heuristic}, options);
    std::map<std::string, int> choices;
    for (const auto& [id, classes] : reports[0].report.choice_log) {
      choices[id] = classes.begin()->first;
    }
    *csv_out = dup_string(survival_csv(survival_curve(t->table, choices)));
  });
}

vo_status vo_triples_leaderboard(const vo_problems* p, const vo_timings* t,
                                 const char* const* top_names, size_t ntop,
                                 const vo_eval_options* opts, int format,
                                 char** report_out) {
  if (vo_status st =
          require(p && t && top_names && report_out, "null argument");
      st != VO_OK) {
    return st;
  }
  return guarded(VO_EINVAL, [&] {
    std::vector<FeatureDescriptor> top;
    for (size_t i = 0; i < ntop; ++i) {
      top.push_back(parse_feature_name(top_names[i]));
    }
    EvalOptions options = make_options(opts);
    std::vector<NamedReport> reports;
    for (const HeuristicChain& chain : enumerate_triples(top)) {
      reports.push_back(
          {chain.name, evaluate(p->problems, t->table, chain, options)});
    }
    std::stable_sort(reports.begin(), reports.end(),
                     [](const NamedReport& a, const NamedReport& b) {
                       int c = cmp(a.report.markup_avg, b.report.markup_avg);
                       if (c != 0) return c < 0;
                       return a.name < b.name;
                     });
    *report_out = dup_string(format == 1 ? metrics_table(reports)
                                         : metrics_csv(reports));
  });
}

} /* extern "C" */
