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

#include <doctest.h>

#include <algorithm>

#include "varord/algebra.hpp"
#include "varord/parser.hpp"
#include "varord/projection.hpp"

using namespace varord;

namespace {

const std::vector<std::string> kXyz = {"x1", "x2", "x3"};

Polynomial P(const std::string& text) { return parse_poly(text, kXyz); }

PolySystem S(const std::vector<std::string>& polys) {
  return parse_system(polys, kXyz);
}

bool same_set(const std::vector<Polynomial>& got,
              const std::vector<std::string>& expected) {
  if (got.size() != expected.size()) return false;
  for (const std::string& text : expected) {
    if (std::find(got.begin(), got.end(), P(text)) == got.end()) return false;
  }
  return true;
}

// Checks that `p` is a rational constant times a product of powers of basis
// members, by stripping divisors until only a constant remains.
bool reconstructs(const Polynomial& p, const std::vector<Polynomial>& basis) {
  Polynomial rem = normalize(p);
  bool progress = true;
  while (!rem.is_constant() && progress) {
    progress = false;
    for (const Polynomial& b : basis) {
      if (auto q = try_exact_div(rem, b)) {
        rem = *q;
        progress = true;
        break;
      }
    }
  }
  return rem.is_constant() && !rem.is_zero();
}

}  // namespace

TEST_CASE("normalize_system drops constants, zeros and duplicates") {
  PolySystem s = S({"0", "7", "-2*x1", "x1", "x1"});
  PolySystem n = normalize_system(s);
  CHECK(same_set(n.polys, {"x1"}));
}

TEST_CASE("basis of the worked projection set") {
  PolySystem raw = S({"x1^3*x2 - x2^2", "x1*x2", "x2^2", "x1^2"});
  PolySystem basis = squarefree_gcd_free_basis(raw);
  CHECK(same_set(basis.polys, {"x1", "x2", "x1^3 - x2"}));
}

TEST_CASE("basis squeezes repeated factors and duplicates") {
  CHECK(same_set(squarefree_gcd_free_basis(S({"x1^2"})).polys, {"x1"}));
  Polynomial p = P("x1^2 - x2");
  PolySystem dup;
  dup.nvars = 3;
  dup.polys = {p, p};
  CHECK(same_set(squarefree_gcd_free_basis(dup).polys, {"x1^2 - x2"}));
  CHECK(same_set(squarefree_gcd_free_basis(S({"(x1^2 - x2)^3"})).polys,
                 {"x1^2 - x2"}));
}

TEST_CASE("basis members are pairwise coprime, squarefree, and reconstruct") {
  PolySystem s = S({"x1^2*x2 - x2^3", "x1^2 - x2^2", "x1*x2^2 + x2^3",
                    "(x1 + x2)^2*x3", "(x1 - 2*x3)^2*(x2 + 1)"});
  PolySystem basis = squarefree_gcd_free_basis(s);
  for (std::size_t i = 0; i < basis.polys.size(); ++i) {
    CHECK(normalize(basis.polys[i]) == basis.polys[i]);
    CHECK(squarefree_part(basis.polys[i]) == basis.polys[i]);
    for (std::size_t j = i + 1; j < basis.polys.size(); ++j) {
      CHECK(gcd(basis.polys[i], basis.polys[j]).is_constant());
    }
  }
  for (const Polynomial& p : s.polys) {
    CHECK(reconstructs(p, basis.polys));
  }
}

TEST_CASE("Lazard projection of the worked three-variable system") {
  PolySystem s = S({"x1*x2*x3 - 1", "x1^2 - x2^2*x3"});
  auto raw = lazard_projection_raw(s, 2);
  CHECK(same_set(raw, {"x1*x2", "x1^2", "x2^2", "x1^3*x2 - x2^2"}));
  PolySystem basis = lazard_projection(s, 2);
  CHECK(same_set(basis.polys, {"x1", "x2", "x1^3 - x2"}));
  for (const Polynomial& p : basis.polys) {
    CHECK(p.degree(2) <= 0);  // eliminated variable never occurs
  }
}

TEST_CASE("projection passes systems without the variable through") {
  PolySystem s = S({"x1^2 - x2", "x1 + 5"});
  PolySystem out = lazard_projection(s, 2);
  PolySystem expected = normalize_system(s);
  // members without repeated factors survive unchanged
  CHECK(same_set(out.polys,
                 {expected.polys[0].to_string(kXyz),
                  expected.polys[1].to_string(kXyz)}));
}

TEST_CASE("projection of a single quadratic") {
  PolySystem s = S({"x3^2 - x1"});
  auto raw = lazard_projection_raw(s, 2);
  CHECK(same_set(raw, {"x1"}));  // lc is constant; tc and disc both give x1
  PolySystem basis = lazard_projection(s, 2);
  CHECK(same_set(basis.polys, {"x1"}));
}

TEST_CASE("second projection step of the worked example") {
  PolySystem s2 = S({"x1", "x2", "x1^3 - x2"});
  PolySystem s1 = lazard_projection(s2, 1);
  CHECK(same_set(s1.polys, {"x1"}));
}
