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

#include "varord/algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace varord {

namespace {

Polynomial one(std::size_t nvars) {
  return Polynomial::constant(nvars, Rational(1));
}

Polynomial poly_pow(const Polynomial& p, unsigned e) {
  Polynomial acc = one(p.nvars());
  for (unsigned i = 0; i < e; ++i) acc = acc * p;
  return acc;
}

}  // namespace

std::vector<Polynomial> coeffs_wrt(const Polynomial& p, std::size_t var) {
  if (var >= p.nvars()) throw std::out_of_range("variable index out of range");
  int d = p.degree(var);
  if (d < 0) return {};
  std::vector<std::vector<Term>> buckets(static_cast<std::size_t>(d) + 1);
  for (const Term& t : p.terms()) {
    Term u = t;
    unsigned power = u.exps[var];
    u.exps[var] = 0;
    buckets[power].push_back(std::move(u));
  }
  std::vector<Polynomial> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) {
    out.push_back(Polynomial::from_terms(p.nvars(), std::move(b)));
  }
  return out;
}

Polynomial from_coeffs_wrt(std::size_t nvars, std::size_t var,
                           const std::vector<Polynomial>& coeffs) {
  std::vector<Term> terms;
  for (std::size_t d = 0; d < coeffs.size(); ++d) {
    for (const Term& t : coeffs[d].terms()) {
      Term u = t;
      u.exps[var] += static_cast<unsigned>(d);
      terms.push_back(std::move(u));
    }
  }
  return Polynomial::from_terms(nvars, std::move(terms));
}

Polynomial leading_coeff(const Polynomial& p, std::size_t var) {
  auto cs = coeffs_wrt(p, var);
  if (cs.empty()) return Polynomial(p.nvars());
  return cs.back();
}

Polynomial trailing_coeff(const Polynomial& p, std::size_t var) {
  auto cs = coeffs_wrt(p, var);
  for (const Polynomial& c : cs) {
    if (!c.is_zero()) return c;
  }
  return Polynomial(p.nvars());
}

Polynomial derivative(const Polynomial& p, std::size_t var) {
  if (var >= p.nvars()) throw std::out_of_range("variable index out of range");
  std::vector<Term> terms;
  for (const Term& t : p.terms()) {
    if (t.exps[var] == 0) continue;
    Term u = t;
    u.coeff *= static_cast<long>(u.exps[var]);
    u.exps[var] -= 1;
    terms.push_back(std::move(u));
  }
  return Polynomial::from_terms(p.nvars(), std::move(terms));
}

std::optional<Polynomial> try_exact_div(const Polynomial& p,
                                        const Polynomial& d) {
  if (d.is_zero()) return std::nullopt;
  if (p.nvars() != d.nvars()) throw std::invalid_argument("nvars mismatch");
  const std::size_t nvars = p.nvars();
  Polynomial rem = p;
  std::vector<Term> quot_terms;
  const Term& dlead = d.terms().front();
  // Leading-term elimination under the monomial order; lex over the
  // exponent lattice is a well-order so this terminates.
  while (!rem.is_zero()) {
    const Term& rlead = rem.terms().front();
    Term t;
    t.exps.resize(nvars);
    for (std::size_t k = 0; k < nvars; ++k) {
      if (rlead.exps[k] < dlead.exps[k]) return std::nullopt;
      t.exps[k] = rlead.exps[k] - dlead.exps[k];
    }
    t.coeff = rlead.coeff / dlead.coeff;
    Polynomial tp = Polynomial::from_terms(nvars, {t});
    rem = rem - tp * d;
    quot_terms.push_back(std::move(t));
  }
  return Polynomial::from_terms(nvars, std::move(quot_terms));
}

Polynomial exact_div(const Polynomial& p, const Polynomial& d) {
  auto q = try_exact_div(p, d);
  if (!q) throw std::domain_error("exact_div: divisor does not divide");
  return *q;
}

Polynomial normalize(const Polynomial& p) {
  if (p.is_zero()) return p;
  Integer num_gcd(0), den_lcm(1);
  for (const Term& t : p.terms()) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(),
            t.coeff.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
            t.coeff.get_den().get_mpz_t());
  }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (p.terms().front().coeff < 0) scale = -scale;
  return p * scale;
}

// ---------------------------------------------------------------------------
// Univariate views with polynomial coefficients.

namespace {

// A polynomial seen as dense ascending coefficients in one variable. The
// coefficient polynomials never contain that variable.
struct UniView {
  std::vector<Polynomial> c;  // ascending; trimmed (back() nonzero) or empty

  int deg() const { return static_cast<int>(c.size()) - 1; }
  bool zero() const { return c.empty(); }
  const Polynomial& lc() const { return c.back(); }

  void trim() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
  }
};

UniView uni_view(const Polynomial& p, std::size_t var) {
  UniView v{coeffs_wrt(p, var)};
  v.trim();
  return v;
}

UniView divide_coeffs(const UniView& a, const Polynomial& f) {
  UniView r;
  r.c.reserve(a.c.size());
  for (const Polynomial& x : a.c) r.c.push_back(exact_div(x, f));
  r.trim();
  return r;
}

// Pseudo-remainder: returns R with lc(B)^(degA-degB+1) * A = Q*B + R.
// The full power of lc(B) is always applied, as the subresultant formulas
// require.
UniView prem(const UniView& a, const UniView& b) {
  int m = a.deg(), n = b.deg();
  if (n < 0) throw std::domain_error("prem: division by zero");
  UniView r = a;
  const Polynomial& d = b.lc();
  for (int k = m - n; k >= 0; --k) {
    r.trim();
    if (r.deg() == n + k) {
      Polynomial lead = r.c.back();
      // r = d*r - lead * b * x^k
      for (Polynomial& x : r.c) x = x * d;
      for (int i = 0; i <= n; ++i) {
        r.c[static_cast<std::size_t>(i + k)] =
            r.c[static_cast<std::size_t>(i + k)] -
            b.c[static_cast<std::size_t>(i)] * lead;
      }
    } else {
      for (Polynomial& x : r.c) x = x * d;
    }
  }
  r.trim();
  return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// GCD: subresultant PRS, eliminating one variable at a time.

namespace {

// Highest-index variable occurring in p or q, or -1 if neither has one.
int main_variable(const Polynomial& p, const Polynomial& q) {
  for (int v = static_cast<int>(p.nvars()) - 1; v >= 0; --v) {
    if (p.degree(static_cast<std::size_t>(v)) > 0 ||
        q.degree(static_cast<std::size_t>(v)) > 0) {
      return v;
    }
  }
  return -1;
}

Polynomial content_wrt(const Polynomial& p, std::size_t var);

Polynomial gcd_impl(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero()) return normalize(q);
  if (q.is_zero()) return normalize(p);
  if (p.is_constant() || q.is_constant()) return one(p.nvars());

  int mv = main_variable(p, q);
  if (mv < 0) return one(p.nvars());
  std::size_t var = static_cast<std::size_t>(mv);

  if (p.degree(var) == 0) return gcd_impl(p, content_wrt(q, var));
  if (q.degree(var) == 0) return gcd_impl(q, content_wrt(p, var));

  Polynomial cont_p = content_wrt(p, var);
  Polynomial cont_q = content_wrt(q, var);
  Polynomial cont = gcd_impl(cont_p, cont_q);

  UniView u = uni_view(exact_div(p, cont_p), var);
  UniView v = uni_view(exact_div(q, cont_q), var);
  if (u.deg() < v.deg()) std::swap(u, v);

  const std::size_t nvars = p.nvars();
  Polynomial g = one(nvars), h = one(nvars);
  Polynomial result;  // primitive gcd of the primitive parts
  for (;;) {
    int delta = u.deg() - v.deg();
    UniView r = prem(u, v);
    if (r.zero()) {
      Polynomial vv = from_coeffs_wrt(nvars, var, v.c);
      result = exact_div(vv, content_wrt(vv, var));
      break;
    }
    if (r.deg() == 0) {
      result = one(nvars);
      break;
    }
    u = v;
    v = divide_coeffs(r, g * poly_pow(h, static_cast<unsigned>(delta)));
    g = u.lc();
    if (delta >= 1) {
      h = exact_div(poly_pow(g, static_cast<unsigned>(delta)),
                    poly_pow(h, static_cast<unsigned>(delta - 1)));
    }
  }
  return normalize(cont * result);
}

// Content of p with respect to var: the gcd of its var-coefficients.
Polynomial content_wrt(const Polynomial& p, std::size_t var) {
  Polynomial acc(p.nvars());
  for (const Polynomial& c : coeffs_wrt(p, var)) {
    if (c.is_zero()) continue;
    acc = gcd_impl(acc, c);
    if (acc.is_constant() && !acc.is_zero()) return acc;
  }
  return acc;
}

}  // namespace

Polynomial gcd(const Polynomial& p, const Polynomial& q) {
  if (!p.is_zero() && !q.is_zero() && p.nvars() != q.nvars()) {
    throw std::invalid_argument("nvars mismatch");
  }
  return gcd_impl(p, q);
}

// ---------------------------------------------------------------------------
// Resultants.

Polynomial resultant(const Polynomial& p, const Polynomial& q,
                     std::size_t var) {
  if (p.is_zero() || q.is_zero()) {
    throw std::domain_error("resultant: zero polynomial input");
  }
  const std::size_t nvars = p.nvars();
  UniView a = uni_view(p, var);
  UniView b = uni_view(q, var);
  int m = a.deg(), n = b.deg();
  if (m == 0 && n == 0) {
    throw std::domain_error("resultant: both inputs constant in variable");
  }
  int sign = 1;
  if (m < n) {
    std::swap(a, b);
    if ((m & 1) && (n & 1)) sign = -sign;
    std::swap(m, n);
  }
  if (n == 0) {
    // B is a nonzero constant in var: res = lc(B)^degA.
    Polynomial r = poly_pow(b.lc(), static_cast<unsigned>(m));
    return sign < 0 ? -r : r;
  }

  Polynomial g = one(nvars), h = one(nvars);
  for (;;) {
    int da = a.deg(), db = b.deg();
    int delta = da - db;
    if ((da & 1) && (db & 1)) sign = -sign;
    UniView r = prem(a, b);
    a = b;
    if (r.zero()) return Polynomial(nvars);  // common factor
    b = divide_coeffs(r, g * poly_pow(h, static_cast<unsigned>(delta)));
    g = a.lc();
    if (delta >= 1) {
      h = exact_div(poly_pow(g, static_cast<unsigned>(delta)),
                    poly_pow(h, static_cast<unsigned>(delta - 1)));
    }
    if (b.deg() == 0) {
      int dfin = a.deg();
      Polynomial res =
          exact_div(poly_pow(b.lc(), static_cast<unsigned>(dfin)),
                    poly_pow(h, static_cast<unsigned>(dfin - 1)));
      return sign < 0 ? -res : res;
    }
  }
}

Polynomial resultant_sylvester(const Polynomial& p, const Polynomial& q,
                               std::size_t var) {
  if (p.is_zero() || q.is_zero()) {
    throw std::domain_error("resultant: zero polynomial input");
  }
  const std::size_t nvars = p.nvars();
  std::vector<Polynomial> pc = coeffs_wrt(p, var);
  std::vector<Polynomial> qc = coeffs_wrt(q, var);
  const int m = static_cast<int>(pc.size()) - 1;
  const int n = static_cast<int>(qc.size()) - 1;
  if (m == 0 && n == 0) {
    throw std::domain_error("resultant: both inputs constant in variable");
  }
  if (m == 0) return poly_pow(pc[0], static_cast<unsigned>(n));
  if (n == 0) return poly_pow(qc[0], static_cast<unsigned>(m));

  const int N = m + n;
  std::vector<std::vector<Polynomial>> M(
      static_cast<std::size_t>(N),
      std::vector<Polynomial>(static_cast<std::size_t>(N),
                              Polynomial(nvars)));
  // n rows of p's coefficients (descending), then m rows of q's.
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= m; ++j) {
      M[i][i + j] = pc[static_cast<std::size_t>(m - j)];
    }
  }
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j <= n; ++j) {
      M[n + i][i + j] = qc[static_cast<std::size_t>(n - j)];
    }
  }

  // Bareiss fraction-free elimination; all divisions exact.
  int sign = 1;
  Polynomial prev = one(nvars);
  for (int k = 0; k < N - 1; ++k) {
    if (M[k][k].is_zero()) {
      int pivot = -1;
      for (int r = k + 1; r < N; ++r) {
        if (!M[r][k].is_zero()) {
          pivot = r;
          break;
        }
      }
      if (pivot < 0) return Polynomial(nvars);
      std::swap(M[k], M[pivot]);
      sign = -sign;
    }
    for (int i = k + 1; i < N; ++i) {
      for (int j = k + 1; j < N; ++j) {
        M[i][j] = exact_div(M[i][j] * M[k][k] - M[i][k] * M[k][j], prev);
      }
      M[i][k] = Polynomial(nvars);
    }
    prev = M[k][k];
  }
  Polynomial det = M[N - 1][N - 1];
  return sign < 0 ? -det : det;
}

Polynomial discriminant(const Polynomial& p, std::size_t var) {
  int d = p.degree(var);
  if (d < 2) {
    throw std::domain_error("discriminant requires degree >= 2 in variable");
  }
  Polynomial res = resultant(p, derivative(p, var), var);
  Polynomial disc = exact_div(res, leading_coeff(p, var));
  if ((static_cast<long>(d) * (d - 1) / 2) % 2 != 0) disc = -disc;
  return disc;
}

Polynomial squarefree_part(const Polynomial& p) {
  if (p.is_zero()) return p;
  Polynomial n = normalize(p);
  if (n.is_constant()) return n;
  Polynomial g(p.nvars());
  for (std::size_t v = 0; v < p.nvars(); ++v) {
    if (n.degree(v) > 0) g = gcd(g, derivative(n, v));
  }
  g = gcd(n, g);
  return normalize(exact_div(n, g));
}

std::vector<std::pair<Polynomial, unsigned>> squarefree_decomposition(
    const Polynomial& p) {
  std::vector<std::pair<Polynomial, unsigned>> out;
  if (p.is_zero()) return out;
  Polynomial n = normalize(p);
  if (n.is_constant()) return out;

  int mv = -1;
  for (int v = static_cast<int>(n.nvars()) - 1; v >= 0; --v) {
    if (n.degree(static_cast<std::size_t>(v)) > 0) {
      mv = v;
      break;
    }
  }
  std::size_t var = static_cast<std::size_t>(mv);

  Polynomial cont = content_wrt(n, var);
  Polynomial pp = exact_div(n, cont);

  // Yun's algorithm on the var-primitive part. Every irreducible factor of
  // pp involves var, so this yields the full multiplicity grading.
  Polynomial d = derivative(pp, var);
  Polynomial g = gcd(pp, d);
  Polynomial c = exact_div(pp, g);
  Polynomial w = exact_div(d, g) - derivative(c, var);
  unsigned mult = 1;
  while (c.degree(var) > 0) {
    Polynomial a = gcd(c, w);
    c = exact_div(c, a);
    w = exact_div(w, a) - derivative(c, var);
    if (!a.is_constant()) out.emplace_back(normalize(a), mult);
    ++mult;
  }

  for (auto& [factor, m] : squarefree_decomposition(cont)) {
    out.emplace_back(std::move(factor), m);
  }
  return out;
}

}  // namespace varord
