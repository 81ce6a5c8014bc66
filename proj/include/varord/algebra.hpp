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

#ifndef VARORD_ALGEBRA_HPP
#define VARORD_ALGEBRA_HPP

#include <optional>
#include <utility>
#include <vector>

#include "varord/polynomial.hpp"

namespace varord {

// Exact algebraic operations on multivariate polynomials: the univariate
// view with polynomial coefficients, GCDs via the subresultant PRS with
// recursive variable elimination, resultants both via the subresultant PRS
// and via a fraction-free (Bareiss) Sylvester determinant, and
// discriminants. The two resultant routes are independent implementations
// and must agree exactly; tests rely on that.

/// Coefficients of p viewed as univariate in `var`, ascending by power.
/// Entry d is the coefficient polynomial of var^d (var-free). Size is
/// degree(p, var) + 1; empty for the zero polynomial.
std::vector<Polynomial> coeffs_wrt(const Polynomial& p, std::size_t var);

/// Reassembles sum_d coeffs[d] * var^d.
Polynomial from_coeffs_wrt(std::size_t nvars, std::size_t var,
                           const std::vector<Polynomial>& coeffs);

Polynomial leading_coeff(const Polynomial& p, std::size_t var);
/// Coefficient of the lowest power of `var` actually present in p. For
/// p = var * q with no var-free term this is the coefficient of var^1,
/// not zero.
Polynomial trailing_coeff(const Polynomial& p, std::size_t var);

Polynomial derivative(const Polynomial& p, std::size_t var);

/// Exact division: returns p / d when d divides p, nullopt otherwise.
std::optional<Polynomial> try_exact_div(const Polynomial& p,
                                        const Polynomial& d);
/// Exact division; throws std::domain_error when d does not divide p.
Polynomial exact_div(const Polynomial& p, const Polynomial& d);

/// Canonical representative of p up to a nonzero rational factor: integer
/// coefficients with content 1 and positive leading coefficient under the
/// monomial order. normalize(0) = 0.
Polynomial normalize(const Polynomial& p);

/// GCD, total: gcd(p, 0) = normalize(p), gcd(0, 0) = 0. Result is
/// normalized and divides both inputs exactly. Subresultant PRS with
/// recursive elimination of variables.
Polynomial gcd(const Polynomial& p, const Polynomial& q);

/// Resultant of p and q with respect to `var`: the determinant of the
/// Sylvester matrix with p's coefficient rows first. Computed via the
/// subresultant PRS with exact sign bookkeeping.
///
/// Preconditions: neither input zero; not both constant in var.
Polynomial resultant(const Polynomial& p, const Polynomial& q,
                     std::size_t var);

/// Same value as resultant(), computed independently by fraction-free
/// Gaussian elimination (Bareiss) on the Sylvester matrix.
Polynomial resultant_sylvester(const Polynomial& p, const Polynomial& q,
                               std::size_t var);

/// Discriminant in `var`: (-1)^(d(d-1)/2) * res(p, dp/dvar) / lc(p),
/// d = degree(p, var). Requires d >= 2; the division is exact.
Polynomial discriminant(const Polynomial& p, std::size_t var);

/// Squarefree part: p divided by gcd(p, dp/dx1, ..., dp/dxn), normalized.
Polynomial squarefree_part(const Polynomial& p);

/// Multiplicity-graded squarefree decomposition (Yun's algorithm in the
/// main variable, contents handled recursively): up to a rational constant,
/// p equals the product of factor^multiplicity over the returned pairs.
/// Factors are normalized and nonconstant; the zero polynomial and
/// constants decompose to an empty list.
std::vector<std::pair<Polynomial, unsigned>> squarefree_decomposition(
    const Polynomial& p);

}  // namespace varord

#endif  // VARORD_ALGEBRA_HPP
