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

#ifndef VARORD_HEURISTICS_HPP
#define VARORD_HEURISTICS_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "varord/features.hpp"
#include "varord/polynomial.hpp"

namespace varord {

// Greedy variable-ordering heuristics: a chain of variable-merged features
// is evaluated per candidate variable; the argmin set survives each link;
// remaining ties fall to the tie policy. The chosen variable is eliminated
// by Lazard projection and the process repeats on the projected basis.

/// Deterministic, platform-independent random stream (splitmix64).
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform draw from [0, n) by rejection; unbiased and reproducible.
  std::size_t below(std::size_t n);

 private:
  std::uint64_t state_;
};

/// One scrambling pass of the splitmix64 finalizer.
std::uint64_t mix64(std::uint64_t x);
std::uint64_t fnv1a64(const std::string& s);

/// Sub-seed for a (problem, repetition) pair:
///   mix64(mix64(master ^ fnv1a64(problem_id)) + repetition)
/// so evaluation order and parallel scheduling cannot change results.
std::uint64_t derive_subseed(std::uint64_t master_seed,
                             const std::string& problem_id,
                             std::uint64_t repetition);

/// A complete projection order: first element is projected first (the
/// greatest variable). class_label is the 1-based lexicographic rank of the
/// permutation; for three variables this is the conventional 1-6 class
/// numbering (class 6 = x3 > x2 > x1).
struct VariableOrdering {
  std::vector<std::size_t> projection_order;
  int class_label = 0;
};

int class_label_of(const std::vector<std::size_t>& projection_order);
std::vector<std::size_t> ordering_of_class(int class_label,
                                           std::size_t nvars);

enum class TiePolicy : std::uint8_t { Random, LowestIndex };

struct HeuristicChain {
  std::vector<FeatureDescriptor> links;  // variable-merged descriptors
  TiePolicy tie_policy = TiePolicy::Random;
  std::string name;
};

/// Per-decision tie bookkeeping: how many candidates remained tied after
/// each evaluated link, and whether the random policy had to fire.
struct DecisionStats {
  std::vector<std::size_t> tied_after_link;
  bool random_fired = false;
};

struct TieStats {
  std::vector<DecisionStats> decisions;

  bool any_random_fired() const;
  std::string to_string() const;
};

/// Chooses one variable among `candidates` (nonempty, strictly ascending).
std::pair<std::size_t, DecisionStats> choose_variable_among(
    const PolySystem& s, const std::vector<std::size_t>& candidates,
    const HeuristicChain& chain, RandomStream& rng);

/// Chooses the first variable of the ordering (all variables candidate).
std::pair<std::size_t, DecisionStats> choose_variable(
    const PolySystem& s, const HeuristicChain& chain, RandomStream& rng);

/// Full greedy ordering: choose, project, repeat on the basis. Variables
/// absent from the current system evaluate to 0 on every feature and are
/// eliminated for free. The input is normalized on entry.
std::pair<VariableOrdering, TieStats> greedy_ordering(
    const PolySystem& s, const HeuristicChain& chain, RandomStream& rng);

/// Exhaustive reference heuristic: computes the full projection chain for
/// every ordering and minimizes the product over projection steps of
/// sum(max(v(S_j))) for the variable eliminated at each step. Ties break
/// toward the lowest class label. Guarded to nvars <= 8.
std::pair<VariableOrdering, Integer> mods_ordering(const PolySystem& s);

/// Parses "A>B>C" chains of CamelCase feature aliases plus the registered
/// names: Brown, gmods, T1, T2, random.
HeuristicChain parse_heuristic(const std::string& name);

/// All ordered triples of distinct descriptors, as chains, in input-index
/// lexicographic order. Throws on duplicate inputs.
std::vector<HeuristicChain> enumerate_triples(
    const std::vector<FeatureDescriptor>& top);

}  // namespace varord

#endif  // VARORD_HEURISTICS_HPP
