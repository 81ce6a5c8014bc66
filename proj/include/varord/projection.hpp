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

#ifndef VARORD_PROJECTION_HPP
#define VARORD_PROJECTION_HPP

#include <vector>

#include "varord/polynomial.hpp"

namespace varord {

/// Normalizes a system: each member normalized, zero and constant members
/// dropped, exact duplicates removed, canonical (descending) order.
PolySystem normalize_system(const PolySystem& s);

/// GCD-free squarefree basis: pairwise-coprime, squarefree, primitive,
/// sign-normalized, nonconstant polynomials such that every member of `s`
/// is, up to a rational constant, a product of powers of basis members.
/// Constants and zeros are dropped. Output in canonical (descending) order.
PolySystem squarefree_gcd_free_basis(const PolySystem& s);

/// The raw Lazard projection factors with respect to `var`, before basis
/// reduction: for each p of positive degree in var its leading and trailing
/// coefficients plus (degree >= 2) its discriminant, the resultant of every
/// pair of positive degree, and all members constant in var passed through.
/// Factors are normalized, constants dropped, duplicates removed.
std::vector<Polynomial> lazard_projection_raw(const PolySystem& s,
                                              std::size_t var);

/// Lazard projection: the squarefree GCD-free basis of the raw factor set.
/// The eliminated variable does not occur in any member; the ambient
/// variable indexing is preserved.
PolySystem lazard_projection(const PolySystem& s, std::size_t var);

}  // namespace varord

#endif  // VARORD_PROJECTION_HPP
