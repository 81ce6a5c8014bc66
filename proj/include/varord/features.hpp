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

#ifndef VARORD_FEATURES_HPP
#define VARORD_FEATURES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "varord/polynomial.hpp"

namespace varord {

// Degree-based features of polynomial systems. A feature is built from a
// nested degree list (one inner list per polynomial, one entry per monomial)
// by an optional elementwise sign transform, an aggregation per polynomial,
// another optional sign transform, and a final aggregation over the system:
//
//   outer_op( [sg] inner_op( [sg] base_var(S) ) )
//
// with base in {v, sv} and the ops in {max, sum, avg}. v_i lists the degree
// of variable i in each monomial; sv_i lists the total degree of each
// monomial containing variable i (0 otherwise).

enum class Base : std::uint8_t { V, SV };
enum class AggOp : std::uint8_t { Max, Sum, Avg };

/// variable == kMergedVariable marks a variable-merged descriptor
/// ("v_i" rather than "v_1"), as used in heuristic chains and merged
/// rankings.
inline constexpr int kMergedVariable = -1;

struct FeatureDescriptor {
  Base base = Base::V;
  bool inner_sg = false;
  AggOp inner_op = AggOp::Max;
  bool mid_sg = false;
  AggOp outer_op = AggOp::Max;
  int variable = kMergedVariable;

  friend auto operator<=>(const FeatureDescriptor&,
                          const FeatureDescriptor&) = default;

  FeatureDescriptor with_variable(int var) const {
    FeatureDescriptor d = *this;
    d.variable = var;
    return d;
  }
};

using NestedDegreeList = std::vector<std::vector<Rational>>;

/// Per-polynomial degree lists for one variable, in the system's polynomial
/// order and the canonical monomial order of each polynomial.
NestedDegreeList degree_list(const PolySystem& s, std::size_t var, Base kind);

/// Evaluates a descriptor (variable must be concrete) on a system.
/// avg and max of an empty list are defined as 0, keeping features total.
Rational evaluate_feature(const FeatureDescriptor& d, const PolySystem& s);

/// Lowercase functional name, e.g. "sum(max(v_1(S)))"; merged descriptors
/// print the variable slot as "i".
std::string feature_name(const FeatureDescriptor& d);

/// CamelCase alias without variable index, e.g. "SumMaxV", "SumSgSumV".
std::string feature_alias(const FeatureDescriptor& d);

/// Parses either naming form. Functional names may carry a concrete
/// variable ("v_2") or the merged slot ("v_i"); aliases are always merged.
/// Throws std::invalid_argument on unknown names.
FeatureDescriptor parse_feature_name(const std::string& name);

/// Rewrites a descriptor to the canonical representative of its
/// value-equivalence class:
///  - any descriptor with a sign transform after the inner op computes the
///    per-polynomial occurrence indicator, canonical sum(sg(sum(v)));
///  - max of a signed list equals that same indicator;
///  - a sign transform under the inner op makes v and sv coincide.
FeatureDescriptor canonicalize(const FeatureDescriptor& d);

/// All distinct features over nvars variables: the full grammar,
/// canonicalized, then deduplicated by value identity on the probe corpus.
/// Deterministic canonical order; every variable gets the same count.
std::vector<FeatureDescriptor> enumerate_features(std::size_t nvars);

/// The variable-merged feature universe (27 descriptors) in canonical order.
std::vector<FeatureDescriptor> merged_feature_universe();

/// Representatives after merging proportional features (18 descriptors).
std::vector<FeatureDescriptor> proportional_feature_universe();

/// True when the two descriptors induce the same per-variable argmin sets
/// on every system: equal up to outer sum vs. outer avg (the factor is the
/// polynomial count, independent of the variable).
bool ranking_equivalent(const FeatureDescriptor& d1,
                        const FeatureDescriptor& d2);

/// Canonical representative of the proportionality class (outer avg is
/// replaced by outer sum).
FeatureDescriptor proportional_representative(const FeatureDescriptor& d);

/// Seed of the deduplication probe corpus; fixed so enumeration is
/// reproducible across builds.
inline constexpr std::uint64_t kProbeCorpusSeed = 0x76a70d5eedf00dULL;

/// The corpus itself: 200 seeded random systems, 1-4 polynomials each,
/// total degree <= 5. Exposed for the equivalence tests.
std::vector<PolySystem> probe_corpus(std::size_t nvars);

}  // namespace varord

#endif  // VARORD_FEATURES_HPP
