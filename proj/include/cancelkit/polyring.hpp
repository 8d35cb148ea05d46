#pragma once

#include <map>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "cancelkit/error.hpp"
#include "cancelkit/polynomial.hpp"

namespace cancelkit {

/// P_r = x^r over the field of `like`.
template <class T>
Polynomial<T> power_map(int r, const T& like) {
  if (r < 1) throw Error(ErrorCode::kInvalidArgument, "power_map: r must be >= 1");
  return Polynomial<T>::monomial(scalar_traits<T>::one_like(like), static_cast<std::size_t>(r));
}

/// Chebyshev polynomial normalised by T_r(x + 1/x) = x^r + x^{-r}:
/// T_1 = x, T_2 = x^2 - 2, T_{n+1} = x T_n - T_{n-1} with T_0 = 2.
/// This is not the cosine normalisation; T_2 is x^2 - 2, not 2x^2 - 1.
template <class T>
Polynomial<T> chebyshev(int r, const T& like) {
  if (r < 1) throw Error(ErrorCode::kInvalidArgument, "chebyshev: r must be >= 1");
  using P = Polynomial<T>;
  using tr = scalar_traits<T>;
  const P x = P::identity(like);
  P prev = P::constant(tr::from_rational(like, Rational(2)));
  P cur = x;
  for (int k = 1; k < r; ++k) {
    P next = x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// f = a0 + sum_{i>=1} a[i] T_i, with a0 multiplying the constant 1 (not T_0 = 2).
template <class T>
struct ChebyshevExpansion {
  T a0;
  std::map<int, T> a;  // only nonzero entries

  /// Highest index present (0 for a constant).
  int top() const { return a.empty() ? 0 : a.rbegin()->first; }

  Polynomial<T> reconstruct() const {
    Polynomial<T> f = Polynomial<T>::constant(a0);
    for (const auto& [i, c] : a) f += c * chebyshev(i, a0);
    return f;
  }
};

/// Exact expansion in the basis {1, T_1, T_2, ...}. Runs Horner's scheme in the
/// Chebyshev basis using x*T_i = T_{i+1} + T_{i-1} (i >= 2), x*T_1 = T_2 + 2.
template <class T>
ChebyshevExpansion<T> cheb_expand(const Polynomial<T>& f) {
  using tr = scalar_traits<T>;
  const T zero = f.zero();
  std::vector<T> b;  // b[0]: constant, b[i]: coefficient of T_i
  for (std::size_t k = f.size(); k-- > 0;) {
    std::vector<T> next(b.size() + 1, zero);
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (tr::is_zero(b[i])) continue;
      next[i + 1] = next[i + 1] + b[i];
      if (i == 1) {
        next[0] = next[0] + b[1] + b[1];
      } else if (i >= 2) {
        next[i - 1] = next[i - 1] + b[i];
      }
    }
    if (next.empty()) next.push_back(zero);
    next[0] = next[0] + f[k];
    b = std::move(next);
  }
  ChebyshevExpansion<T> e{b.empty() ? zero : b[0], {}};
  for (std::size_t i = 1; i < b.size(); ++i)
    if (!tr::is_zero(b[i])) e.a.emplace(static_cast<int>(i), b[i]);
  return e;
}

enum class FormKind {
  kPowerInner,   // f in K[x^d]: monomial support in dZ
  kLinearTimes,  // f = x Q(x^d): monomial support in 1 + dZ
  kChebInner,    // f = P o T_d: Chebyshev support in dZ (index 0 allowed)
};

template <class T>
bool form_check(const Polynomial<T>& f, int d, FormKind kind) {
  if (d < 2) throw Error(ErrorCode::kInvalidArgument, "form_check: d must be >= 2");
  switch (kind) {
    case FormKind::kPowerInner:
      for (int i : f.support())
        if (i % d != 0) return false;
      return true;
    case FormKind::kLinearTimes:
      for (int i : f.support())
        if ((i - 1) % d != 0) return false;
      return true;
    case FormKind::kChebInner:
      for (const auto& [i, c] : cheb_expand(f).a)
        if (i % d != 0) return false;
      return true;
  }
  return false;
}

/// Returns P with P(x^d) = f (kPowerInner) or P o T_d = f (kChebInner), checked
/// by recomposition. Throws Error(kFormViolation) when f has no such form.
template <class T>
Polynomial<T> extract_outer(const Polynomial<T>& f, int d, FormKind kind) {
  if (kind == FormKind::kLinearTimes)
    throw Error(ErrorCode::kInvalidArgument, "extract_outer: kind must be POWER_INNER or CHEB_INNER");
  if (!form_check(f, d, kind))
    throw Error(ErrorCode::kFormViolation, "extract_outer: polynomial is not of the requested form");
  using P = Polynomial<T>;
  P outer(f.zero());
  P inner(f.zero());
  if (kind == FormKind::kPowerInner) {
    std::vector<T> c;
    for (std::size_t i = 0; i < f.size(); i += static_cast<std::size_t>(d)) c.push_back(f[i]);
    outer = P(f.zero(), std::move(c));
    inner = power_map(d, f.zero());
  } else {
    const auto e = cheb_expand(f);
    outer = P::constant(e.a0);
    for (const auto& [i, c] : e.a) outer += c * chebyshev(i / d, f.zero());
    inner = chebyshev(d, f.zero());
  }
  if (compose(outer, inner) != f)
    throw Error(ErrorCode::kFormViolation, "extract_outer: recomposition mismatch");
  return outer;
}

namespace detail {

/// Tries f = h o g with deg g = e, g monic and g(0) = 0. Returns (h, g).
template <class T>
std::optional<std::pair<Polynomial<T>, Polynomial<T>>> right_factor(const Polynomial<T>& f, int e) {
  using P = Polynomial<T>;
  using tr = scalar_traits<T>;
  const int n = f.degree();
  const int r = n / e;
  const P fm = monic(f);
  const T inv_r = f.one() / tr::from_rational(f.zero(), Rational(r));
  std::vector<T> g(static_cast<std::size_t>(e) + 1, f.zero());
  g[static_cast<std::size_t>(e)] = f.one();
  // Coefficients of x^{n-k}, k = 1..e-1, fix b_{e-k} one at a time.
  for (int k = 1; k < e; ++k) {
    const P partial(f.zero(), g);
    const P pw = pow(partial, static_cast<unsigned>(r));
    const std::size_t idx = static_cast<std::size_t>(n - k);
    g[static_cast<std::size_t>(e - k)] = (fm[idx] - pw[idx]) * inv_r;
  }
  const P gp(f.zero(), g);
  std::vector<T> h;
  P rest = fm;
  for (int i = 0; i <= r; ++i) {
    auto [q, rem] = divmod(rest, gp);
    if (rem.degree() > 0) return std::nullopt;
    h.push_back(rem[0]);
    rest = std::move(q);
  }
  if (!rest.is_zero()) return std::nullopt;
  P hp = f.leading() * P(f.zero(), std::move(h));
  if (compose(hp, gp) != f) return std::nullopt;
  return std::make_pair(std::move(hp), gp);
}

}  // namespace detail

/// Complete functional decomposition f = f_1 o f_2 o ... o f_k into
/// indecomposable factors of degree >= 2 (outermost first). Right-factor degrees
/// are scanned in increasing order, so the innermost factor found has the
/// smallest possible degree; that factor is therefore indecomposable.
template <class T>
std::vector<Polynomial<T>> decompose(const Polynomial<T>& f) {
  if (f.degree() < 2) throw Error(ErrorCode::kDegreeTooSmall, "decompose: degree must be >= 2");
  const int n = f.degree();
  for (int e = 2; e < n; ++e) {
    if (n % e != 0) continue;
    if (auto split = detail::right_factor(f, e)) {
      auto factors = decompose(split->first);
      factors.push_back(std::move(split->second));
      return factors;
    }
  }
  return {f};
}

/// Left-to-right composition of a decomposition list.
template <class T>
Polynomial<T> compose_all(const std::vector<Polynomial<T>>& factors) {
  Polynomial<T> acc = factors.back();
  for (std::size_t i = factors.size() - 1; i-- > 0;) acc = compose(factors[i], acc);
  return acc;
}

// ---------------------------------------------------------------------------

/// Finitely supported sum of c_k x^k over integer k.
template <class T>
class LaurentPolynomial {
 public:
  explicit LaurentPolynomial(T zero) : zero_(std::move(zero)) {}
  LaurentPolynomial(T zero, const std::map<int, T>& terms) : zero_(std::move(zero)) {
    for (const auto& [k, c] : terms) add_term(k, c);
  }

  static LaurentPolynomial monomial(const T& c, int k) {
    LaurentPolynomial l(scalar_traits<T>::zero_like(c));
    l.add_term(k, c);
    return l;
  }
  static LaurentPolynomial constant(const T& c) { return monomial(c, 0); }

  const std::map<int, T>& terms() const { return t_; }
  const T& zero() const { return zero_; }

  void add_term(int k, const T& c) {
    auto it = t_.find(k);
    if (it == t_.end()) {
      if (!scalar_traits<T>::is_zero(c)) t_.emplace(k, c);
      return;
    }
    it->second = it->second + c;
    if (scalar_traits<T>::is_zero(it->second)) t_.erase(it);
  }

  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) {
    for (const auto& [k, c] : b.t_) a.add_term(k, c);
    return a;
  }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) {
    for (const auto& [k, c] : b.t_) a.add_term(k, -c);
    return a;
  }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    LaurentPolynomial r(a.zero_);
    for (const auto& [i, x] : a.t_)
      for (const auto& [j, y] : b.t_) r.add_term(i + j, x * y);
    return r;
  }
  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    if (a.t_.size() != b.t_.size()) return false;
    auto it = b.t_.begin();
    for (const auto& [k, c] : a.t_) {
      if (k != it->first || !(c == it->second)) return false;
      ++it;
    }
    return true;
  }

 private:
  T zero_;
  std::map<int, T> t_;
};

/// f(s(x)) in the Laurent ring.
template <class T>
LaurentPolynomial<T> laurent_substitute(const Polynomial<T>& f, const LaurentPolynomial<T>& s) {
  using L = LaurentPolynomial<T>;
  L acc(f.zero());
  for (std::size_t i = f.size(); i-- > 0;) acc = acc * s + L::constant(f[i]);
  return acc;
}

}  // namespace cancelkit
