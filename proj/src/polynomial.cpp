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

#include "varord/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace varord {

unsigned Term::total_degree() const {
  unsigned d = 0;
  for (unsigned e : exps) d += e;
  return d;
}

int compare_monomials(const std::vector<unsigned>& a,
                      const std::vector<unsigned>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
  Polynomial p(nvars);
  if (c != 0) {
    p.terms_.push_back(Term{std::vector<unsigned>(nvars, 0), c});
  }
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t var) {
  if (var >= nvars) throw std::out_of_range("variable index out of range");
  Polynomial p(nvars);
  std::vector<unsigned> e(nvars, 0);
  e[var] = 1;
  p.terms_.push_back(Term{std::move(e), Rational(1)});
  return p;
}

Polynomial Polynomial::from_terms(std::size_t nvars, std::vector<Term> terms) {
  for (const Term& t : terms) {
    if (t.exps.size() != nvars) {
      throw std::invalid_argument("term exponent length != nvars");
    }
  }
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return compare_monomials(a.exps, b.exps) > 0;
  });
  Polynomial p(nvars);
  for (Term& t : terms) {
    if (!p.terms_.empty() &&
        compare_monomials(p.terms_.back().exps, t.exps) == 0) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else if (t.coeff != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_[0].total_degree() == 0);
}

Rational Polynomial::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant()) throw std::logic_error("not a constant polynomial");
  return terms_[0].coeff;
}

int Polynomial::degree(std::size_t var) const {
  if (var >= nvars_) throw std::out_of_range("variable index out of range");
  if (terms_.empty()) return -1;
  unsigned d = 0;
  for (const Term& t : terms_) d = std::max(d, t.exps[var]);
  return static_cast<int>(d);
}

int Polynomial::total_degree() const {
  if (terms_.empty()) return -1;
  unsigned d = 0;
  for (const Term& t : terms_) d = std::max(d, t.total_degree());
  return static_cast<int>(d);
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (Term& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
  if (nvars_ != rhs.nvars_) throw std::invalid_argument("nvars mismatch");
  Polynomial r(nvars_);
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < rhs.terms_.size()) {
    int c = compare_monomials(terms_[i].exps, rhs.terms_[j].exps);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(rhs.terms_[j++]);
    } else {
      Rational sum = terms_[i].coeff + rhs.terms_[j].coeff;
      if (sum != 0) r.terms_.push_back(Term{terms_[i].exps, sum});
      ++i;
      ++j;
    }
  }
  while (i < terms_.size()) r.terms_.push_back(terms_[i++]);
  while (j < rhs.terms_.size()) r.terms_.push_back(rhs.terms_[j++]);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
  return *this + (-rhs);
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
  if (nvars_ != rhs.nvars_) throw std::invalid_argument("nvars mismatch");
  std::vector<Term> prod;
  prod.reserve(terms_.size() * rhs.terms_.size());
  for (const Term& a : terms_) {
    for (const Term& b : rhs.terms_) {
      Term t;
      t.exps.resize(nvars_);
      for (std::size_t k = 0; k < nvars_; ++k) {
        t.exps[k] = a.exps[k] + b.exps[k];
      }
      t.coeff = a.coeff * b.coeff;
      prod.push_back(std::move(t));
    }
  }
  return from_terms(nvars_, std::move(prod));
}

Polynomial Polynomial::operator*(const Rational& c) const {
  Polynomial r(nvars_);
  if (c == 0) return r;
  r.terms_ = terms_;
  for (Term& t : r.terms_) t.coeff *= c;
  return r;
}

bool Polynomial::operator==(const Polynomial& rhs) const {
  if (nvars_ != rhs.nvars_ || terms_.size() != rhs.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].coeff != rhs.terms_[i].coeff ||
        compare_monomials(terms_[i].exps, rhs.terms_[i].exps) != 0) {
      return false;
    }
  }
  return true;
}

namespace {

void print_monomial(std::ostringstream& out, const Term& t,
                    const std::vector<std::string>& names) {
  bool first = true;
  for (std::size_t k = 0; k < t.exps.size(); ++k) {
    if (t.exps[k] == 0) continue;
    if (!first) out << "*";
    out << names[k];
    if (t.exps[k] >= 2) out << "^" << t.exps[k];
    first = false;
  }
}

std::string coeff_str(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace

std::string Polynomial::to_string(
    const std::vector<std::string>& var_names) const {
  if (var_names.size() != nvars_) {
    throw std::invalid_argument("variable name count != nvars");
  }
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const Term& t : terms_) {
    Rational mag = abs(t.coeff);
    if (first) {
      if (t.coeff < 0) out << "-";
      first = false;
    } else {
      out << (t.coeff < 0 ? " - " : " + ");
    }
    if (t.total_degree() == 0) {
      out << coeff_str(mag);
    } else {
      if (mag != 1) out << coeff_str(mag) << "*";
      print_monomial(out, t, var_names);
    }
  }
  return out.str();
}

std::string Polynomial::to_string() const {
  return to_string(default_var_names(nvars_));
}

int compare_polynomials(const Polynomial& a, const Polynomial& b) {
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  for (std::size_t i = 0; i < std::min(ta.size(), tb.size()); ++i) {
    int c = compare_monomials(ta[i].exps, tb[i].exps);
    if (c != 0) return c;
    int cc = cmp(ta[i].coeff, tb[i].coeff);
    if (cc != 0) return cc;
  }
  if (ta.size() != tb.size()) return ta.size() < tb.size() ? -1 : 1;
  return 0;
}

std::vector<std::string> default_var_names(std::size_t nvars) {
  std::vector<std::string> names;
  names.reserve(nvars);
  for (std::size_t i = 1; i <= nvars; ++i) {
    names.push_back("x" + std::to_string(i));
  }
  return names;
}

std::vector<std::string> PolySystem::names_or_default() const {
  if (var_names.size() == nvars) return var_names;
  return default_var_names(nvars);
}

}  // namespace varord
