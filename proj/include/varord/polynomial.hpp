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

#ifndef VARORD_POLYNOMIAL_HPP
#define VARORD_POLYNOMIAL_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "varord/rational.hpp"

namespace varord {

// Exact multivariate polynomials with rational coefficients. A polynomial is
// kept in canonical form at all times: terms sorted in descending
// lexicographic order of exponent vectors (x1 > x2 > ... > xn), no duplicate
// exponent vectors, no zero coefficients. The zero polynomial has an empty
// term list. All values are immutable after construction and safe to share
// across threads.

/// One term: exponent vector (length == nvars) plus a nonzero coefficient.
struct Term {
  std::vector<unsigned> exps;
  Rational coeff;

  unsigned total_degree() const;
};

/// Descending-lex comparison of exponent vectors: returns <0, 0, >0 like
/// strcmp. Vectors must have equal length.
int compare_monomials(const std::vector<unsigned>& a,
                      const std::vector<unsigned>& b);

class Polynomial {
 public:
  Polynomial() = default;  // zero polynomial in 0 variables
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Rational& c);
  static Polynomial variable(std::size_t nvars, std::size_t var);
  /// Builds a canonical polynomial from arbitrary (exps, coeff) pairs:
  /// merges duplicates, drops zeros, sorts.
  static Polynomial from_terms(std::size_t nvars, std::vector<Term> terms);

  std::size_t nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;  // zero or a single degree-0 term
  Rational constant_value() const;  // requires is_constant()

  /// Degree in one variable; -1 for the zero polynomial.
  int degree(std::size_t var) const;
  /// Total degree; -1 for the zero polynomial.
  int total_degree() const;
  bool contains_var(std::size_t var) const { return degree(var) > 0; }

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& rhs) const;
  Polynomial operator-(const Polynomial& rhs) const;
  Polynomial operator*(const Polynomial& rhs) const;
  Polynomial operator*(const Rational& c) const;

  bool operator==(const Polynomial& rhs) const;
  bool operator!=(const Polynomial& rhs) const { return !(*this == rhs); }

  /// Canonical text form: descending monomial order, explicit '*',
  /// '^' for powers >= 2, e.g. "x1^2 - 2*x1*x2^2 + x2^2 - 3".
  std::string to_string(const std::vector<std::string>& var_names) const;
  std::string to_string() const;  // default names x1..xn

 private:
  std::size_t nvars_ = 0;
  std::vector<Term> terms_;  // canonical: desc lex, unique, nonzero
};

/// Total order on canonical polynomials: term-by-term comparison (monomial
/// first, then coefficient), longer sequence wins on a common prefix.
/// Returns <0, 0, >0.
int compare_polynomials(const Polynomial& a, const Polynomial& b);

/// An ordered set of polynomials over a shared variable count. Variable
/// names are carried along for parsing and printing; they have no effect on
/// any computation.
struct PolySystem {
  std::vector<Polynomial> polys;
  std::size_t nvars = 0;
  std::vector<std::string> var_names;  // empty => defaults x1..xn

  std::vector<std::string> names_or_default() const;
};

/// Default variable names x1..xn.
std::vector<std::string> default_var_names(std::size_t nvars);

}  // namespace varord

#endif  // VARORD_POLYNOMIAL_HPP
