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

#include "varord/rational.hpp"

#include <cctype>
#include <cstdlib>
#include <stdexcept>

namespace varord {

Rational rational_from_decimal(const std::string& text) {
  std::size_t i = 0;
  const std::size_t n = text.size();
  auto fail = [&]() -> void {
    throw std::invalid_argument("malformed decimal literal: '" + text + "'");
  };
  if (n == 0) fail();

  bool negative = false;
  if (text[i] == '+' || text[i] == '-') {
    negative = text[i] == '-';
    ++i;
  }
  std::string int_digits, frac_digits;
  while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
    int_digits.push_back(text[i++]);
  }
  if (i < n && text[i] == '.') {
    ++i;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
      frac_digits.push_back(text[i++]);
    }
  }
  if (int_digits.empty() && frac_digits.empty()) fail();

  long exp10 = 0;
  if (i < n && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    bool exp_neg = false;
    if (i < n && (text[i] == '+' || text[i] == '-')) {
      exp_neg = text[i] == '-';
      ++i;
    }
    if (i >= n || !std::isdigit(static_cast<unsigned char>(text[i]))) fail();
    std::string exp_digits;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
      exp_digits.push_back(text[i++]);
    }
    exp10 = std::strtol(exp_digits.c_str(), nullptr, 10);
    if (exp_neg) exp10 = -exp10;
  }
  if (i != n) fail();

  Integer num(int_digits.empty() ? "0" : int_digits);
  for (char c : frac_digits) {
    num *= 10;
    num += c - '0';
  }
  Integer den(1);
  for (std::size_t k = 0; k < frac_digits.size(); ++k) den *= 10;

  long e = exp10;
  while (e > 0) {
    num *= 10;
    --e;
  }
  while (e < 0) {
    den *= 10;
    ++e;
  }
  if (negative) num = -num;

  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string rational_to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string rational_to_fixed(const Rational& q, int places) {
  Integer scale(1);
  for (int i = 0; i < places; ++i) scale *= 10;

  // round(q * scale) half away from zero, using truncating integer division
  Integer num = q.get_num() * scale;
  const Integer& den = q.get_den();
  Integer quot, rem;
  mpz_tdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(),
              den.get_mpz_t());
  Integer twice_rem = 2 * abs(rem);
  if (twice_rem >= den) {
    quot += sgn(num) < 0 ? -1 : 1;
  }

  bool negative = quot < 0;
  Integer mag = abs(quot);
  std::string digits = mag.get_str();
  if (places == 0) return (negative ? "-" : "") + digits;
  if (digits.size() <= static_cast<std::size_t>(places)) {
    digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(),
                  '0');
  }
  digits.insert(digits.size() - static_cast<std::size_t>(places), ".");
  return (negative ? "-" : "") + digits;
}

}  // namespace varord
