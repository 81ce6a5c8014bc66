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

#ifndef VARORD_XAI_RANK_HPP
#define VARORD_XAI_RANK_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "varord/features.hpp"

namespace varord {

// Aggregation of per-instance feature attributions into per-model feature
// rankings and a cross-model vote. Attribution magnitudes are summed per
// feature, merged across the variable index, optionally merged across
// proportional features, and combined with the Dowdall or Borda rules.
// Everything is exact rational arithmetic.

struct ShapRecord {
  std::string model;
  int class_label = 0;       // 1-based output class
  std::string instance;
  std::string feature;       // functional name, e.g. "sum(max(v_1(S)))"
  Rational shap_value;
};

/// CSV with header `model,class,instance,feature,shap_value`.
std::vector<ShapRecord> load_shap_csv(std::istream& in);
std::vector<ShapRecord> load_shap_csv_file(const std::string& path);

/// Models present, in first-appearance order.
std::vector<std::string> models_in(const std::vector<ShapRecord>& records);

struct RankEntry {
  std::string feature;
  Rational score;
};

struct FeatureRanking {
  std::string model;
  std::vector<RankEntry> entries;       // strictly sorted, descending score
  std::vector<std::string> tie_notes;   // equal scores broken lexicographically
};

/// Per-raw-feature |shap| totals for one model (no merging), sorted.
std::vector<RankEntry> raw_aggregation(const std::vector<ShapRecord>& records,
                                       const std::string& model);

/// The model's ranking after summing across the variable index (and, when
/// merge_proportional, across proportionality classes under the outer-sum
/// representative).
FeatureRanking model_feature_ranking(const std::vector<ShapRecord>& records,
                                     const std::string& model,
                                     bool merge_proportional);

struct VotedScores {
  std::vector<RankEntry> entries;
  std::vector<std::string> tie_notes;
};

/// Dowdall: rank r earns 1/r; ranked by descending reward.
VotedScores dowdall(const std::vector<FeatureRanking>& rankings);

/// Borda: rank r is penalized r; ranked by ascending penalty.
VotedScores borda(const std::vector<FeatureRanking>& rankings);

/// First k feature names of a voted ranking. k must not exceed the size.
std::vector<std::string> top_k(const VotedScores& scores, std::size_t k);

/// "feature,score" rows with exact rational scores.
std::string rank_entries_csv(const std::vector<RankEntry>& entries);

}  // namespace varord

#endif  // VARORD_XAI_RANK_HPP
