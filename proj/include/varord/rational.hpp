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

#ifndef VARORD_RATIONAL_HPP
#define VARORD_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace varord {

// All exact arithmetic in the library runs over GMP rationals. No floating
// point is used anywhere in the algebraic or reporting paths.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses a decimal literal ("3", "-0.25", "1.5e-3") into an exact rational.
/// Throws std::invalid_argument on malformed input.
Rational rational_from_decimal(const std::string& text);

/// Renders q as "n" or "n/d" (canonical lowest terms).
std::string rational_to_string(const Rational& q);

/// Renders q as a fixed-point decimal with `places` fractional digits,
/// rounding half away from zero. Exact integer arithmetic throughout.
std::string rational_to_fixed(const Rational& q, int places);

}  // namespace varord

#endif  // VARORD_RATIONAL_HPP
