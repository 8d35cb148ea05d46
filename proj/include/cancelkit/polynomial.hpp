#pragma once

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "cancelkit/error.hpp"
#include "cancelkit/rational.hpp"

namespace cancelkit {

/// Scalar hooks a coefficient type provides. Elements of a number field or a
/// tower carry their field, so the neutral elements are built "like" an
/// existing value rather than from nothing.
template <class T>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
  static Rational zero_like(const Rational&) { return Rational(0); }
  static Rational one_like(const Rational&) { return Rational(1); }
  static Rational from_rational(const Rational&, const Rational& q) { return q; }
  static bool is_zero(const Rational& a) { return sgn(a) == 0; }
  static bool same_field(const Rational&, const Rational&) { return true; }
  static std::string to_string(const Rational& a) { return cancelkit::to_string(a); }
};

/// Dense univariate polynomial; coeffs()[i] multiplies x^i. The highest stored
/// coefficient is nonzero, so the zero polynomial has no coefficients and degree -1.
template <class T>
class Polynomial {
 public:
  using scalar_type = T;
  using traits = scalar_traits<T>;

  explicit Polynomial(T zero) : zero_(std::move(zero)) {}

  Polynomial(T zero, std::vector<T> coeffs) : zero_(std::move(zero)), c_(std::move(coeffs)) {
    normalize();
  }

  static Polynomial constant(const T& c) { return Polynomial(traits::zero_like(c), {c}); }

  static Polynomial monomial(const T& c, std::size_t k) {
    std::vector<T> v(k + 1, traits::zero_like(c));
    v[k] = c;
    return Polynomial(traits::zero_like(c), std::move(v));
  }

  /// The polynomial x over the field of `like`.
  static Polynomial identity(const T& like) { return monomial(traits::one_like(like), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  std::size_t size() const { return c_.size(); }
  const std::vector<T>& coeffs() const { return c_; }
  const T& zero() const { return zero_; }
  T one() const { return traits::one_like(zero_); }

  const T& operator[](std::size_t i) const { return i < c_.size() ? c_[i] : zero_; }
  const T& leading() const { return c_.empty() ? zero_ : c_.back(); }

  /// Horner evaluation.
  template <class U>
  U operator()(const U& x) const {
    if (c_.empty()) return x - x;
    U acc = x - x + c_.back();
    for (std::size_t i = c_.size() - 1; i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  Polynomial operator-() const {
    Polynomial r(*this);
    for (auto& a : r.c_) a = -a;
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) {
    check_field(o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), zero_);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
    normalize();
    return *this;
  }

  Polynomial& operator-=(const Polynomial& o) {
    check_field(o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), zero_);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
    normalize();
    return *this;
  }

  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_field(b);
    if (a.is_zero() || b.is_zero()) return Polynomial(a.zero_);
    std::vector<T> r(a.c_.size() + b.c_.size() - 1, a.zero_);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (traits::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    }
    return Polynomial(a.zero_, std::move(r));
  }

  friend Polynomial operator*(const T& s, const Polynomial& p) {
    std::vector<T> r;
    r.reserve(p.c_.size());
    for (const auto& a : p.c_) r.push_back(s * a);
    return Polynomial(p.zero_, std::move(r));
  }
  friend Polynomial operator*(const Polynomial& p, const T& s) { return s * p; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (!(a.c_[i] == b.c_[i])) return false;
    return true;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  /// Exponents carrying a nonzero coefficient, ascending.
  std::vector<int> support() const {
    std::vector<int> s;
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!traits::is_zero(c_[i])) s.push_back(static_cast<int>(i));
    return s;
  }

  void check_field(const Polynomial& o) const {
    if (!traits::same_field(zero_, o.zero_))
      throw Error(ErrorCode::kFieldMismatch, "polynomials over different coefficient fields");
  }

 private:
  void normalize() {
    while (!c_.empty() && traits::is_zero(c_.back())) c_.pop_back();
  }

  T zero_;
  std::vector<T> c_;
};

template <class T>
Polynomial<T> derivative(const Polynomial<T>& f) {
  std::vector<T> r;
  for (std::size_t i = 1; i < f.size(); ++i)
    r.push_back(f[i] * scalar_traits<T>::from_rational(f.zero(), Rational(static_cast<long>(i))));
  return Polynomial<T>(f.zero(), std::move(r));
}

/// Euclidean division over a field: returns (q, r) with f = q*g + r, deg r < deg g.
template <class T>
std::pair<Polynomial<T>, Polynomial<T>> divmod(const Polynomial<T>& f, const Polynomial<T>& g) {
  f.check_field(g);
  if (g.is_zero()) throw Error(ErrorCode::kDivisionByZero, "polynomial division by zero");
  if (f.degree() < g.degree()) return {Polynomial<T>(f.zero()), f};
  std::vector<T> rem = f.coeffs();
  std::vector<T> quo(f.size() - g.size() + 1, f.zero());
  const T inv_lead = f.one() / g.leading();
  const std::size_t gd = g.size() - 1;
  for (std::size_t k = quo.size(); k-- > 0;) {
    T c = rem[k + gd] * inv_lead;
    if (scalar_traits<T>::is_zero(c)) continue;
    for (std::size_t j = 0; j <= gd; ++j) rem[k + j] = rem[k + j] - c * g[j];
    quo[k] = std::move(c);
  }
  rem.resize(gd, f.zero());
  return {Polynomial<T>(f.zero(), std::move(quo)), Polynomial<T>(f.zero(), std::move(rem))};
}

template <class T>
Polynomial<T> monic(const Polynomial<T>& f) {
  if (f.is_zero()) return f;
  return (f.one() / f.leading()) * f;
}

/// Monic gcd (zero if both inputs are zero).
template <class T>
Polynomial<T> gcd(Polynomial<T> a, Polynomial<T> b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

/// Extended gcd: returns (g, s, t) with s*a + t*b = g, g monic.
template <class T>
std::tuple<Polynomial<T>, Polynomial<T>, Polynomial<T>> extended_gcd(const Polynomial<T>& a,
                                                                     const Polynomial<T>& b) {
  using P = Polynomial<T>;
  P r0 = a, r1 = b;
  P s0 = P::constant(a.one()), s1(a.zero());
  P t0(a.zero()), t1 = P::constant(a.one());
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    P s2 = s0 - q * s1;
    P t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  T inv = a.one() / r0.leading();
  return {inv * r0, inv * s0, inv * t0};
}

template <class T>
Polynomial<T> pow(const Polynomial<T>& f, unsigned e) {
  Polynomial<T> result = Polynomial<T>::constant(f.one());
  Polynomial<T> base = f;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

/// f(g(x)) by Horner's scheme.
template <class T>
Polynomial<T> compose(const Polynomial<T>& f, const Polynomial<T>& g) {
  f.check_field(g);
  Polynomial<T> acc(f.zero());
  for (std::size_t i = f.size(); i-- > 0;) acc = acc * g + Polynomial<T>::constant(f[i]);
  return acc;
}

/// f(x + v), computed with a Taylor shift (no polynomial products).
template <class T>
Polynomial<T> shift(const Polynomial<T>& f, const T& v) {
  if (scalar_traits<T>::is_zero(v) || f.degree() <= 0) return f;
  std::vector<T> c = f.coeffs();
  const std::size_t n = c.size();
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = n - 1; j-- > i;) c[j] = c[j] + v * c[j + 1];
  return Polynomial<T>(f.zero(), std::move(c));
}

/// f(u x).
template <class T>
Polynomial<T> scale(const Polynomial<T>& f, const T& u) {
  std::vector<T> c = f.coeffs();
  T p = f.one();
  for (auto& a : c) {
    a = a * p;
    p = p * u;
  }
  return Polynomial<T>(f.zero(), std::move(c));
}

/// Changes coefficient type through `map` (e.g. Rational -> FieldElement).
template <class U, class T, class F>
Polynomial<U> map_coeffs(const Polynomial<T>& f, const U& zero, F&& map) {
  std::vector<U> c;
  c.reserve(f.size());
  for (const auto& a : f.coeffs()) c.push_back(map(a));
  return Polynomial<U>(zero, std::move(c));
}

/// Text form "c_k*x^k + ... + c_0"; coefficients that are not plain numbers are
/// parenthesised so the result re-parses.
template <class T>
std::string to_string(const Polynomial<T>& f, const std::string& var = "x") {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = f.size(); i-- > 0;) {
    if (scalar_traits<T>::is_zero(f[i])) continue;
    std::string c = scalar_traits<T>::to_string(f[i]);
    bool negative = false;
    bool compound = c.find_first_of("+ ", 1) != std::string::npos || c.find('-', 1) != std::string::npos;
    if (!compound && !c.empty() && c[0] == '-') {
      negative = true;
      c = c.substr(1);
    }
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    if (compound) c = "(" + c + ")";
    if (i == 0) {
      out << c;
      continue;
    }
    if (c != "1") out << c << "*";
    out << var;
    if (i > 1) out << "^" << i;
  }
  return out.str();
}

}  // namespace cancelkit
