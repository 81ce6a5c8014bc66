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

#include "varord/projection.hpp"

#include <algorithm>
#include <stdexcept>

#include "varord/algebra.hpp"

namespace varord {

namespace {

void sort_and_dedup(std::vector<Polynomial>& polys) {
  std::sort(polys.begin(), polys.end(),
            [](const Polynomial& a, const Polynomial& b) {
              return compare_polynomials(a, b) > 0;
            });
  polys.erase(std::unique(polys.begin(), polys.end()), polys.end());
}

std::vector<Polynomial> normalized_nonconstant(
    const std::vector<Polynomial>& in) {
  std::vector<Polynomial> out;
  out.reserve(in.size());
  for (const Polynomial& p : in) {
    Polynomial n = normalize(p);
    if (n.is_constant()) continue;
    out.push_back(std::move(n));
  }
  sort_and_dedup(out);
  return out;
}

}  // namespace

PolySystem normalize_system(const PolySystem& s) {
  PolySystem out;
  out.nvars = s.nvars;
  out.var_names = s.var_names;
  out.polys = normalized_nonconstant(s.polys);
  return out;
}

PolySystem squarefree_gcd_free_basis(const PolySystem& s) {
  // Seed with the multiplicity-graded squarefree factors so that every
  // input stays a product of powers of the final basis.
  std::vector<Polynomial> work;
  work.reserve(s.polys.size());
  for (const Polynomial& p : s.polys) {
    for (auto& [factor, mult] : squarefree_decomposition(p)) {
      work.push_back(std::move(factor));
    }
  }
  sort_and_dedup(work);

  // Refine until pairwise coprime. Splitting a pair strictly reduces the
  // total degree of the set, so this terminates.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < work.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < work.size() && !changed; ++j) {
        Polynomial g = gcd(work[i], work[j]);
        if (g.is_constant()) continue;
        Polynomial qi = normalize(exact_div(work[i], g));
        Polynomial qj = normalize(exact_div(work[j], g));
        std::vector<Polynomial> next;
        next.reserve(work.size() + 2);
        for (std::size_t k = 0; k < work.size(); ++k) {
          if (k != i && k != j) next.push_back(work[k]);
        }
        if (!qi.is_constant()) next.push_back(std::move(qi));
        if (!qj.is_constant()) next.push_back(std::move(qj));
        next.push_back(std::move(g));
        work = std::move(next);
        sort_and_dedup(work);
        changed = true;
      }
    }
  }

  PolySystem out;
  out.nvars = s.nvars;
  out.var_names = s.var_names;
  out.polys = std::move(work);
  return out;
}

std::vector<Polynomial> lazard_projection_raw(const PolySystem& s,
                                              std::size_t var) {
  if (var >= s.nvars) throw std::out_of_range("variable index out of range");
  std::vector<Polynomial> factors;
  std::vector<const Polynomial*> active;
  for (const Polynomial& p : s.polys) {
    int d = p.degree(var);
    if (d < 1) {
      factors.push_back(p);  // constant in var: passes through
      continue;
    }
    active.push_back(&p);
    factors.push_back(leading_coeff(p, var));
    factors.push_back(trailing_coeff(p, var));
    if (d >= 2) factors.push_back(discriminant(p, var));
  }
  for (std::size_t i = 0; i < active.size(); ++i) {
    for (std::size_t j = i + 1; j < active.size(); ++j) {
      factors.push_back(resultant(*active[i], *active[j], var));
    }
  }
  return normalized_nonconstant(factors);
}

PolySystem lazard_projection(const PolySystem& s, std::size_t var) {
  PolySystem raw;
  raw.nvars = s.nvars;
  raw.var_names = s.var_names;
  raw.polys = lazard_projection_raw(s, var);
  return squarefree_gcd_free_basis(raw);
}

}  // namespace varord
