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

#include "varord/features.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace varord {

namespace {

const AggOp kOps[] = {AggOp::Max, AggOp::Sum, AggOp::Avg};

std::string op_lower(AggOp op) {
  switch (op) {
    case AggOp::Max:
      return "max";
    case AggOp::Sum:
      return "sum";
    case AggOp::Avg:
      return "avg";
  }
  return {};
}

std::string op_camel(AggOp op) {
  switch (op) {
    case AggOp::Max:
      return "Max";
    case AggOp::Sum:
      return "Sum";
    case AggOp::Avg:
      return "Avg";
  }
  return {};
}

Rational sg(const Rational& x) {
  int s = sgn(x);
  return Rational(s);
}

Rational aggregate(AggOp op, const std::vector<Rational>& xs) {
  if (xs.empty()) return Rational(0);  // empty max/avg defined as 0
  switch (op) {
    case AggOp::Max: {
      Rational m = xs[0];
      for (const Rational& x : xs) {
        if (x > m) m = x;
      }
      return m;
    }
    case AggOp::Sum: {
      Rational s(0);
      for (const Rational& x : xs) s += x;
      return s;
    }
    case AggOp::Avg: {
      Rational s(0);
      for (const Rational& x : xs) s += x;
      return s / Rational(static_cast<unsigned long>(xs.size()));
    }
  }
  return Rational(0);
}

}  // namespace

NestedDegreeList degree_list(const PolySystem& s, std::size_t var, Base kind) {
  if (var >= s.nvars) throw std::out_of_range("variable index out of range");
  NestedDegreeList out;
  out.reserve(s.polys.size());
  for (const Polynomial& p : s.polys) {
    std::vector<Rational> inner;
    inner.reserve(p.terms().size());
    for (const Term& t : p.terms()) {
      if (kind == Base::V) {
        inner.emplace_back(static_cast<unsigned long>(t.exps[var]));
      } else {
        inner.emplace_back(static_cast<unsigned long>(
            t.exps[var] > 0 ? t.total_degree() : 0));
      }
    }
    out.push_back(std::move(inner));
  }
  return out;
}

Rational evaluate_feature(const FeatureDescriptor& d, const PolySystem& s) {
  if (d.variable < 0) {
    throw std::invalid_argument(
        "evaluate_feature requires a concrete variable index");
  }
  NestedDegreeList lists =
      degree_list(s, static_cast<std::size_t>(d.variable), d.base);
  std::vector<Rational> per_poly;
  per_poly.reserve(lists.size());
  for (auto& inner : lists) {
    if (d.inner_sg) {
      for (Rational& x : inner) x = sg(x);
    }
    per_poly.push_back(aggregate(d.inner_op, inner));
  }
  if (d.mid_sg) {
    for (Rational& x : per_poly) x = sg(x);
  }
  return aggregate(d.outer_op, per_poly);
}

std::string feature_name(const FeatureDescriptor& d) {
  std::string var = d.variable < 0 ? "i" : std::to_string(d.variable + 1);
  std::string base = d.base == Base::V ? "v" : "sv";
  std::string inner = base + "_" + var + "(S)";
  if (d.inner_sg) inner = "sg(" + inner + ")";
  inner = op_lower(d.inner_op) + "(" + inner + ")";
  if (d.mid_sg) inner = "sg(" + inner + ")";
  return op_lower(d.outer_op) + "(" + inner + ")";
}

std::string feature_alias(const FeatureDescriptor& d) {
  std::string s = op_camel(d.outer_op);
  if (d.mid_sg) s += "Sg";
  s += op_camel(d.inner_op);
  if (d.inner_sg) s += "Sg";
  s += d.base == Base::V ? "V" : "SV";
  return s;
}

namespace {

// Parses "sum(sg(max(sv_2(S))))" style names.
FeatureDescriptor parse_functional(const std::string& name) {
  std::size_t pos = 0;
  auto fail = [&]() -> void {
    throw std::invalid_argument("unknown feature name: '" + name + "'");
  };
  auto take = [&](const std::string& tok) -> bool {
    if (name.compare(pos, tok.size(), tok) == 0) {
      pos += tok.size();
      return true;
    }
    return false;
  };
  auto take_op = [&](AggOp& op) -> bool {
    for (AggOp o : kOps) {
      if (take(op_lower(o) + "(")) {
        op = o;
        return true;
      }
    }
    return false;
  };

  FeatureDescriptor d;
  int closes = 0;
  if (!take_op(d.outer_op)) fail();
  ++closes;
  if (take("sg(")) {
    d.mid_sg = true;
    ++closes;
  }
  if (!take_op(d.inner_op)) fail();
  ++closes;
  if (take("sg(")) {
    d.inner_sg = true;
    ++closes;
  }
  if (take("sv_")) {
    d.base = Base::SV;
  } else if (take("v_")) {
    d.base = Base::V;
  } else {
    fail();
  }
  if (take("i")) {
    d.variable = kMergedVariable;
  } else {
    std::size_t start = pos;
    while (pos < name.size() && std::isdigit(name[pos])) ++pos;
    if (pos == start) fail();
    d.variable = std::stoi(name.substr(start, pos - start)) - 1;
    if (d.variable < 0) fail();
  }
  if (!take("(S)")) fail();
  for (int i = 0; i < closes; ++i) {
    if (!take(")")) fail();
  }
  if (pos != name.size()) fail();
  return d;
}

// Parses "SumSgSumV" style aliases (always variable-merged).
FeatureDescriptor parse_alias(const std::string& name) {
  std::size_t pos = 0;
  auto fail = [&]() -> void {
    throw std::invalid_argument("unknown feature alias: '" + name + "'");
  };
  auto take = [&](const std::string& tok) -> bool {
    if (name.compare(pos, tok.size(), tok) == 0) {
      pos += tok.size();
      return true;
    }
    return false;
  };
  auto take_op = [&](AggOp& op) -> bool {
    for (AggOp o : kOps) {
      if (take(op_camel(o))) {
        op = o;
        return true;
      }
    }
    return false;
  };

  FeatureDescriptor d;
  d.variable = kMergedVariable;
  if (!take_op(d.outer_op)) fail();
  // "Sg" here is the mid transform only if an op follows; "SgV"/"SgSV"
  // belongs to the inner position.
  std::size_t mark = pos;
  if (take("Sg")) {
    AggOp tmp;
    if (take_op(tmp)) {
      d.mid_sg = true;
      d.inner_op = tmp;
    } else {
      pos = mark;
    }
  }
  if (!d.mid_sg && !take_op(d.inner_op)) fail();
  if (take("SgSV")) {
    d.inner_sg = true;
    d.base = Base::SV;
  } else if (take("SgV")) {
    d.inner_sg = true;
    d.base = Base::V;
  } else if (take("SV")) {
    d.base = Base::SV;
  } else if (take("V")) {
    d.base = Base::V;
  } else {
    fail();
  }
  if (pos != name.size()) fail();
  return d;
}

}  // namespace

FeatureDescriptor parse_feature_name(const std::string& name) {
  if (name.empty()) throw std::invalid_argument("empty feature name");
  if (std::islower(static_cast<unsigned char>(name[0]))) {
    return parse_functional(name);
  }
  return parse_alias(name);
}

FeatureDescriptor canonicalize(const FeatureDescriptor& d) {
  FeatureDescriptor c = d;
  // Nonnegative lists make every aggregate positive exactly when some entry
  // is, so a sign transform after the inner op always yields the
  // per-polynomial "contains the variable" indicator.
  if (c.mid_sg || (c.inner_sg && c.inner_op == AggOp::Max)) {
    c.base = Base::V;
    c.inner_sg = false;
    c.inner_op = AggOp::Sum;
    c.mid_sg = true;
    return c;
  }
  // Under an inner sign transform, sv and v produce the same 0/1 list.
  if (c.inner_sg) c.base = Base::V;
  return c;
}

bool ranking_equivalent(const FeatureDescriptor& d1,
                        const FeatureDescriptor& d2) {
  FeatureDescriptor a = canonicalize(d1);
  FeatureDescriptor b = canonicalize(d2);
  a.variable = kMergedVariable;
  b.variable = kMergedVariable;
  if (a == b) return true;
  FeatureDescriptor b2 = b;
  b2.outer_op = a.outer_op;
  if (a != b2) return false;
  return (a.outer_op == AggOp::Sum && b.outer_op == AggOp::Avg) ||
         (a.outer_op == AggOp::Avg && b.outer_op == AggOp::Sum);
}

FeatureDescriptor proportional_representative(const FeatureDescriptor& d) {
  FeatureDescriptor c = canonicalize(d);
  if (c.outer_op == AggOp::Avg) c.outer_op = AggOp::Sum;
  return c;
}

namespace {

struct SplitMixLocal {
  std::uint64_t state;
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  std::uint64_t below(std::uint64_t n) { return next() % n; }
};

}  // namespace

std::vector<PolySystem> probe_corpus(std::size_t nvars) {
  SplitMixLocal rng{kProbeCorpusSeed + nvars};
  std::vector<PolySystem> corpus;
  corpus.reserve(200);
  for (int sysno = 0; sysno < 200; ++sysno) {
    PolySystem s;
    s.nvars = nvars;
    std::size_t npolys = 1 + rng.below(4);
    for (std::size_t pi = 0; pi < npolys; ++pi) {
      Polynomial p(nvars);
      while (p.is_zero()) {
        std::vector<Term> terms;
        std::size_t nterms = 1 + rng.below(6);
        for (std::size_t ti = 0; ti < nterms; ++ti) {
          Term t;
          t.exps.resize(nvars, 0);
          unsigned budget = 5;
          for (std::size_t v = 0; v < nvars; ++v) {
            unsigned e = static_cast<unsigned>(rng.below(4));
            e = std::min(e, budget);
            t.exps[v] = e;
            budget -= e;
          }
          long c = static_cast<long>(rng.below(18)) - 9;
          if (c >= 0) ++c;  // nonzero in [-9, 9]
          t.coeff = Rational(c);
          terms.push_back(std::move(t));
        }
        p = Polynomial::from_terms(nvars, std::move(terms));
      }
      s.polys.push_back(std::move(p));
    }
    corpus.push_back(std::move(s));
  }
  return corpus;
}

namespace {

std::vector<FeatureDescriptor> canonical_forms_one_variable(int variable) {
  std::vector<FeatureDescriptor> out;
  for (Base base : {Base::V, Base::SV}) {
    for (bool inner_sg : {false, true}) {
      for (AggOp inner : kOps) {
        for (bool mid_sg : {false, true}) {
          for (AggOp outer : kOps) {
            FeatureDescriptor d{base, inner_sg, inner, mid_sg, outer,
                                variable};
            FeatureDescriptor c = canonicalize(d);
            if (std::find(out.begin(), out.end(), c) == out.end()) {
              out.push_back(c);
            }
          }
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<FeatureDescriptor> enumerate_features(std::size_t nvars) {
  if (nvars < 1) throw std::invalid_argument("nvars must be >= 1");
  std::vector<PolySystem> corpus = probe_corpus(nvars);
  std::vector<FeatureDescriptor> out;
  for (std::size_t var = 0; var < nvars; ++var) {
    std::vector<FeatureDescriptor> canon =
        canonical_forms_one_variable(static_cast<int>(var));
    // Value-identity pass over the probe corpus: descriptors whose values
    // agree everywhere collapse to the smaller representative.
    std::map<std::vector<Rational>, FeatureDescriptor> by_signature;
    for (const FeatureDescriptor& d : canon) {
      std::vector<Rational> signature;
      signature.reserve(corpus.size());
      for (const PolySystem& s : corpus) {
        signature.push_back(evaluate_feature(d, s));
      }
      auto it = by_signature.find(signature);
      if (it == by_signature.end() || d < it->second) {
        by_signature.insert_or_assign(std::move(signature), d);
      }
    }
    std::vector<FeatureDescriptor> kept;
    kept.reserve(by_signature.size());
    for (const auto& [_, d] : by_signature) kept.push_back(d);
    std::sort(kept.begin(), kept.end());
    out.insert(out.end(), kept.begin(), kept.end());
  }
  return out;
}

std::vector<FeatureDescriptor> merged_feature_universe() {
  std::vector<FeatureDescriptor> out =
      canonical_forms_one_variable(kMergedVariable);
  return out;
}

std::vector<FeatureDescriptor> proportional_feature_universe() {
  std::vector<FeatureDescriptor> out;
  for (const FeatureDescriptor& d : merged_feature_universe()) {
    FeatureDescriptor rep = proportional_representative(d);
    if (std::find(out.begin(), out.end(), rep) == out.end()) {
      out.push_back(rep);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace varord
