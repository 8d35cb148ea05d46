#pragma once

#include <random>
#include <vector>

#include "cancelkit/numberfield.hpp"
#include "cancelkit/parse.hpp"

namespace testing {

using namespace cancelkit;

inline const NumberField& QQ() {
  static const NumberField K = NumberField::rationals();
  return K;
}

inline Rational frac(long p, long q = 1) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

inline FieldElement num(const NumberField& K, long p, long q = 1) { return K.from_rational(frac(p, q)); }
inline FieldElement num(long p, long q = 1) { return num(QQ(), p, q); }

/// Polynomial over K from integer coefficients, lowest degree first.
inline KPoly poly(const std::vector<long>& c, const NumberField& K = QQ()) {
  std::vector<FieldElement> v;
  for (long a : c) v.push_back(num(K, a));
  return KPoly(K.zero(), std::move(v));
}

inline KPoly px(const char* text, const NumberField& K = QQ()) { return parse_polynomial(text, K); }

/// Small nonzero-denominator rational with |p| <= bound, 1 <= q <= bound.
inline Rational random_rational(std::mt19937_64& rng, long bound) {
  std::uniform_int_distribution<long> p(-bound, bound), q(1, bound);
  return frac(p(rng), q(rng));
}

inline Rational random_nonzero_rational(std::mt19937_64& rng, long bound) {
  for (;;) {
    Rational r = random_rational(rng, bound);
    if (sgn(r) != 0) return r;
  }
}

inline FieldElement random_element(std::mt19937_64& rng, const NumberField& K, long bound) {
  std::vector<Rational> c;
  for (int i = 0; i < K.degree(); ++i) c.push_back(random_rational(rng, bound));
  return K.element(std::move(c));
}

inline KPoly random_poly(std::mt19937_64& rng, const NumberField& K, int degree, long bound) {
  std::vector<FieldElement> c;
  for (int i = 0; i <= degree; ++i) c.push_back(random_element(rng, K, bound));
  while (c.back().is_zero()) c.back() = random_element(rng, K, bound);
  return KPoly(K.zero(), std::move(c));
}

inline long binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Closed form of the coefficients of T_r in x + 1/x normalisation:
/// T_r = sum_k (-1)^k r/(r-k) C(r-k, k) x^{r-2k}.
inline KPoly chebyshev_closed_form(int r, const NumberField& K = QQ()) {
  std::vector<FieldElement> c(static_cast<std::size_t>(r) + 1, K.zero());
  for (int k = 0; 2 * k <= r; ++k) {
    Rational a = frac(r * binomial(r - k, k), r - k);
    if (k % 2) a = -a;
    c[static_cast<std::size_t>(r - 2 * k)] = K.from_rational(a);
  }
  return KPoly(K.zero(), std::move(c));
}

}  // namespace testing
