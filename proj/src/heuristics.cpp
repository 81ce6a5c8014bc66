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

#include "varord/heuristics.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "varord/projection.hpp"

namespace varord {

std::size_t RandomStream::below(std::size_t n) {
  if (n == 0) throw std::invalid_argument("below(0)");
  std::uint64_t bound = static_cast<std::uint64_t>(n);
  std::uint64_t threshold = (-bound) % bound;
  for (;;) {
    std::uint64_t r = next();
    if (r >= threshold) return static_cast<std::size_t>(r % bound);
  }
}

std::uint64_t mix64(std::uint64_t x) {
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t derive_subseed(std::uint64_t master_seed,
                             const std::string& problem_id,
                             std::uint64_t repetition) {
  return mix64(mix64(master_seed ^ fnv1a64(problem_id)) + repetition);
}

int class_label_of(const std::vector<std::size_t>& projection_order) {
  // 1-based lexicographic rank via the factorial number system.
  const std::size_t n = projection_order.size();
  std::vector<std::size_t> remaining;
  for (std::size_t i = 0; i < n; ++i) remaining.push_back(i);
  std::size_t rank = 0;
  for (std::size_t i = 0; i < n; ++i) {
    auto it = std::find(remaining.begin(), remaining.end(),
                        projection_order[i]);
    if (it == remaining.end()) {
      throw std::invalid_argument("projection_order is not a permutation");
    }
    std::size_t idx = static_cast<std::size_t>(it - remaining.begin());
    std::size_t fact = 1;  // (n - i - 1)!
    for (std::size_t k = 2; k <= n - i - 1; ++k) fact *= k;
    rank += idx * fact;
    remaining.erase(it);
  }
  return static_cast<int>(rank) + 1;
}

std::vector<std::size_t> ordering_of_class(int class_label,
                                           std::size_t nvars) {
  std::size_t total = 1;
  for (std::size_t k = 2; k <= nvars; ++k) total *= k;
  if (class_label < 1 || static_cast<std::size_t>(class_label) > total) {
    throw std::out_of_range("class label out of range");
  }
  std::size_t rank = static_cast<std::size_t>(class_label) - 1;
  std::vector<std::size_t> remaining;
  for (std::size_t i = 0; i < nvars; ++i) remaining.push_back(i);
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < nvars; ++i) {
    std::size_t fact = 1;
    for (std::size_t k = 1; k <= nvars - i - 1; ++k) fact *= k;
    std::size_t idx = rank / fact;
    rank %= fact;
    order.push_back(remaining[idx]);
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(idx));
  }
  return order;
}

bool TieStats::any_random_fired() const {
  for (const DecisionStats& d : decisions) {
    if (d.random_fired) return true;
  }
  return false;
}

std::string TieStats::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < decisions.size(); ++i) {
    if (i > 0) out << "; ";
    out << "step " << i + 1 << ":";
    if (decisions[i].tied_after_link.empty()) {
      out << " no links";
    } else {
      for (std::size_t t : decisions[i].tied_after_link) out << " " << t;
    }
    if (decisions[i].random_fired) out << " (random)";
  }
  return out.str();
}

std::pair<std::size_t, DecisionStats> choose_variable_among(
    const PolySystem& s, const std::vector<std::size_t>& candidates,
    const HeuristicChain& chain, RandomStream& rng) {
  if (candidates.empty()) {
    throw std::invalid_argument("no candidate variables");
  }
  DecisionStats stats;
  std::vector<std::size_t> tied = candidates;
  for (const FeatureDescriptor& link : chain.links) {
    if (tied.size() == 1) break;
    std::vector<Rational> values;
    values.reserve(tied.size());
    for (std::size_t var : tied) {
      values.push_back(
          evaluate_feature(link.with_variable(static_cast<int>(var)), s));
    }
    Rational best = values[0];
    for (const Rational& v : values) {
      if (v < best) best = v;
    }
    std::vector<std::size_t> next;
    for (std::size_t i = 0; i < tied.size(); ++i) {
      if (values[i] == best) next.push_back(tied[i]);
    }
    tied = std::move(next);
    stats.tied_after_link.push_back(tied.size());
  }
  std::size_t chosen;
  if (tied.size() == 1) {
    chosen = tied[0];
  } else if (chain.tie_policy == TiePolicy::Random) {
    chosen = tied[rng.below(tied.size())];
    stats.random_fired = true;
  } else {
    chosen = tied[0];  // candidates ascending, so lowest index
  }
  return {chosen, stats};
}

std::pair<std::size_t, DecisionStats> choose_variable(
    const PolySystem& s, const HeuristicChain& chain, RandomStream& rng) {
  std::vector<std::size_t> all;
  for (std::size_t v = 0; v < s.nvars; ++v) all.push_back(v);
  return choose_variable_among(s, all, chain, rng);
}

std::pair<VariableOrdering, TieStats> greedy_ordering(
    const PolySystem& s, const HeuristicChain& chain, RandomStream& rng) {
  PolySystem current = normalize_system(s);
  std::vector<std::size_t> remaining;
  for (std::size_t v = 0; v < s.nvars; ++v) remaining.push_back(v);

  VariableOrdering ordering;
  TieStats stats;
  while (remaining.size() > 1) {
    auto [var, dstats] = choose_variable_among(current, remaining, chain, rng);
    ordering.projection_order.push_back(var);
    stats.decisions.push_back(std::move(dstats));
    current = lazard_projection(current, var);
    remaining.erase(std::find(remaining.begin(), remaining.end(), var));
  }
  if (!remaining.empty()) ordering.projection_order.push_back(remaining[0]);
  ordering.class_label = class_label_of(ordering.projection_order);
  return {ordering, stats};
}

std::pair<VariableOrdering, Integer> mods_ordering(const PolySystem& s) {
  if (s.nvars > 8) {
    throw std::invalid_argument("mods_ordering is guarded to nvars <= 8");
  }
  if (s.nvars == 0) throw std::invalid_argument("empty system");
  const FeatureDescriptor summaxv = parse_feature_name("SumMaxV");

  PolySystem base = normalize_system(s);
  std::vector<std::size_t> perm;
  for (std::size_t v = 0; v < s.nvars; ++v) perm.push_back(v);

  bool have_best = false;
  VariableOrdering best_ordering;
  Integer best_product;
  do {
    PolySystem current = base;
    Integer product(1);
    for (std::size_t i = 0; i < perm.size(); ++i) {
      Rational f = evaluate_feature(
          summaxv.with_variable(static_cast<int>(perm[i])), current);
      product *= f.get_num();  // feature is integer-valued on raw degrees
      if (i + 1 < perm.size()) current = lazard_projection(current, perm[i]);
    }
    if (!have_best || product < best_product) {
      have_best = true;
      best_product = product;
      best_ordering.projection_order = perm;
    }
    // std::next_permutation walks lexicographically, so the first minimum
    // found already has the lowest class label.
  } while (std::next_permutation(perm.begin(), perm.end()));

  best_ordering.class_label = class_label_of(best_ordering.projection_order);
  return {best_ordering, best_product};
}

namespace {

const std::map<std::string, std::string>& registered_aliases() {
  static const std::map<std::string, std::string> kAliases = {
      {"Brown", "MaxMaxV>MaxMaxSV>SumSumSgV"},
      {"gmods", "SumMaxV"},
      {"T1", "SumMaxV>AvgAvgV>SumSumV"},
      {"T2", "SumMaxV>SumSumSgV>SumSumV"},
  };
  return kAliases;
}

}  // namespace

HeuristicChain parse_heuristic(const std::string& name) {
  if (name.empty()) throw std::invalid_argument("empty heuristic name");

  HeuristicChain chain;
  chain.name = name;
  chain.tie_policy = TiePolicy::Random;
  if (name == "random") return chain;  // no links: pure tie policy

  std::string expansion = name;
  auto alias = registered_aliases().find(name);
  if (alias != registered_aliases().end()) expansion = alias->second;

  std::size_t start = 0;
  while (start <= expansion.size()) {
    std::size_t sep = expansion.find('>', start);
    std::string token = expansion.substr(
        start, sep == std::string::npos ? std::string::npos : sep - start);
    if (token.empty()) {
      throw std::invalid_argument("malformed heuristic chain: '" + name +
                                  "'");
    }
    FeatureDescriptor d = parse_feature_name(token);
    if (d.variable != kMergedVariable) {
      throw std::invalid_argument(
          "heuristic links must be variable-merged features: '" + token +
          "'");
    }
    chain.links.push_back(d);
    if (sep == std::string::npos) break;
    start = sep + 1;
  }
  return chain;
}

std::vector<HeuristicChain> enumerate_triples(
    const std::vector<FeatureDescriptor>& top) {
  for (std::size_t i = 0; i < top.size(); ++i) {
    for (std::size_t j = i + 1; j < top.size(); ++j) {
      if (canonicalize(top[i]).with_variable(kMergedVariable) ==
          canonicalize(top[j]).with_variable(kMergedVariable)) {
        throw std::invalid_argument("duplicate descriptors in triple input");
      }
    }
  }
  std::vector<HeuristicChain> out;
  for (std::size_t i = 0; i < top.size(); ++i) {
    for (std::size_t j = 0; j < top.size(); ++j) {
      if (j == i) continue;
      for (std::size_t k = 0; k < top.size(); ++k) {
        if (k == i || k == j) continue;
        HeuristicChain chain;
        chain.tie_policy = TiePolicy::Random;
        chain.links = {top[i].with_variable(kMergedVariable),
                       top[j].with_variable(kMergedVariable),
                       top[k].with_variable(kMergedVariable)};
        chain.name = feature_alias(chain.links[0]) + ">" +
                     feature_alias(chain.links[1]) + ">" +
                     feature_alias(chain.links[2]);
        out.push_back(std::move(chain));
      }
    }
  }
  return out;
}

}  // namespace varord
