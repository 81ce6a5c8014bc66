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

#include "varord/xai_rank.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

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

// Sorts score map entries descending by score, logging lexicographic
// tie-breaks. `ascending` flips the score order (Borda penalties).
std::vector<RankEntry> sorted_entries(
    const std::map<std::string, Rational>& scores, bool ascending,
    std::vector<std::string>* tie_notes) {
  std::vector<RankEntry> entries;
  entries.reserve(scores.size());
  for (const auto& [name, score] : scores) entries.push_back({name, score});
  std::stable_sort(entries.begin(), entries.end(),
                   [ascending](const RankEntry& a, const RankEntry& b) {
                     int c = cmp(a.score, b.score);
                     if (c != 0) return ascending ? c < 0 : c > 0;
                     return a.feature < b.feature;
                   });
  if (tie_notes) {
    for (std::size_t i = 1; i < entries.size(); ++i) {
      if (entries[i].score == entries[i - 1].score) {
        tie_notes->push_back("tie between '" + entries[i - 1].feature +
                             "' and '" + entries[i].feature +
                             "' broken lexicographically");
      }
    }
  }
  return entries;
}

}  // namespace

std::vector<ShapRecord> load_shap_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) {
    throw std::runtime_error("shap: empty input, header required");
  }
  std::vector<std::string> header = split_csv_line(line);
  const std::vector<std::string> expected = {"model", "class", "instance",
                                             "feature", "shap_value"};
  if (header.size() != expected.size()) {
    throw std::runtime_error("shap: header must be model,class,instance," \
                             "feature,shap_value");
  }
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (trim(header[i]) != expected[i]) {
      throw std::runtime_error("shap: unexpected header column '" +
                               trim(header[i]) + "'");
    }
  }
  std::vector<ShapRecord> records;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    std::vector<std::string> cells = split_csv_line(line);
    if (cells.size() != expected.size()) {
      throw std::runtime_error("shap: line " + std::to_string(lineno) +
                               ": wrong cell count");
    }
    ShapRecord r;
    r.model = trim(cells[0]);
    try {
      r.class_label = std::stoi(trim(cells[1]));
    } catch (const std::exception&) {
      throw std::runtime_error("shap: line " + std::to_string(lineno) +
                               ": malformed class label");
    }
    r.instance = trim(cells[2]);
    r.feature = trim(cells[3]);
    parse_feature_name(r.feature);  // must name a known feature
    try {
      r.shap_value = rational_from_decimal(trim(cells[4]));
    } catch (const std::invalid_argument&) {
      throw std::runtime_error("shap: line " + std::to_string(lineno) +
                               ": malformed shap_value");
    }
    records.push_back(std::move(r));
  }
  return records;
}

std::vector<ShapRecord> load_shap_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open shap file: " + path);
  return load_shap_csv(in);
}

std::vector<std::string> models_in(const std::vector<ShapRecord>& records) {
  std::vector<std::string> models;
  for (const ShapRecord& r : records) {
    if (std::find(models.begin(), models.end(), r.model) == models.end()) {
      models.push_back(r.model);
    }
  }
  return models;
}

std::vector<RankEntry> raw_aggregation(const std::vector<ShapRecord>& records,
                                       const std::string& model) {
  std::map<std::string, Rational> scores;
  for (const ShapRecord& r : records) {
    if (r.model != model) continue;
    FeatureDescriptor d = canonicalize(parse_feature_name(r.feature));
    scores[feature_name(d)] += abs(r.shap_value);
  }
  if (scores.empty()) {
    throw std::invalid_argument("no records for model '" + model + "'");
  }
  return sorted_entries(scores, false, nullptr);
}

FeatureRanking model_feature_ranking(const std::vector<ShapRecord>& records,
                                     const std::string& model,
                                     bool merge_proportional) {
  std::map<std::string, Rational> scores;
  for (const ShapRecord& r : records) {
    if (r.model != model) continue;
    FeatureDescriptor d = canonicalize(parse_feature_name(r.feature));
    d.variable = kMergedVariable;
    if (merge_proportional) d = proportional_representative(d);
    scores[feature_name(d)] += abs(r.shap_value);
  }
  if (scores.empty()) {
    throw std::invalid_argument("no records for model '" + model + "'");
  }
  FeatureRanking ranking;
  ranking.model = model;
  ranking.entries = sorted_entries(scores, false, &ranking.tie_notes);
  return ranking;
}

namespace {

void check_universe(const std::vector<FeatureRanking>& rankings) {
  if (rankings.empty()) throw std::invalid_argument("no rankings to combine");
  std::set<std::string> universe;
  for (const RankEntry& e : rankings[0].entries) universe.insert(e.feature);
  for (const FeatureRanking& r : rankings) {
    std::set<std::string> here;
    for (const RankEntry& e : r.entries) here.insert(e.feature);
    if (here != universe) {
      throw std::invalid_argument(
          "rankings do not share a feature universe (model '" + r.model +
          "')");
    }
  }
}

}  // namespace

VotedScores dowdall(const std::vector<FeatureRanking>& rankings) {
  check_universe(rankings);
  std::map<std::string, Rational> scores;
  for (const FeatureRanking& r : rankings) {
    for (std::size_t rank = 0; rank < r.entries.size(); ++rank) {
      scores[r.entries[rank].feature] +=
          Rational(1, static_cast<unsigned long>(rank + 1));
    }
  }
  VotedScores voted;
  voted.entries = sorted_entries(scores, false, &voted.tie_notes);
  return voted;
}

VotedScores borda(const std::vector<FeatureRanking>& rankings) {
  check_universe(rankings);
  std::map<std::string, Rational> penalties;
  for (const FeatureRanking& r : rankings) {
    for (std::size_t rank = 0; rank < r.entries.size(); ++rank) {
      penalties[r.entries[rank].feature] +=
          Rational(static_cast<unsigned long>(rank + 1));
    }
  }
  VotedScores voted;
  voted.entries = sorted_entries(penalties, true, &voted.tie_notes);
  return voted;
}

std::vector<std::string> top_k(const VotedScores& scores, std::size_t k) {
  if (k > scores.entries.size()) {
    throw std::invalid_argument("top_k: k exceeds the entry count");
  }
  std::vector<std::string> names;
  names.reserve(k);
  for (std::size_t i = 0; i < k; ++i) names.push_back(scores.entries[i].feature);
  return names;
}

std::string rank_entries_csv(const std::vector<RankEntry>& entries) {
  std::ostringstream out;
  out << "feature,score\n";
  for (const RankEntry& e : entries) {
    out << e.feature << "," << rational_to_string(e.score) << "\n";
  }
  return out.str();
}

}  // namespace varord
