#include "cancelkit/numberfield.hpp"

#include <algorithm>
#include <sstream>

#include "cancelkit/polyring.hpp"
#include "cancelkit/zfactor.hpp"

namespace cancelkit {

struct NumberField::Data {
  QPoly minpoly{Rational(0)};
  int n = 1;
};

namespace {

std::shared_ptr<const NumberField::Data> make_data(QPoly m) {
  auto d = std::make_shared<NumberField::Data>();
  d->n = m.degree();
  d->minpoly = std::move(m);
  return d;
}

// Clears denominators: an integer polynomial with the same roots.
zfactor::ZPoly to_integer_poly(const QPoly& f) {
  Integer den = 1;
  for (const auto& c : f.coeffs()) den = lcm(den, c.get_den());
  zfactor::ZPoly z;
  for (const auto& c : f.coeffs()) z.push_back(Integer(c * den));
  return z;
}

QPoly from_integer_poly(const zfactor::ZPoly& z) {
  std::vector<Rational> c(z.begin(), z.end());
  return monic(QPoly(Rational(0), std::move(c)));
}

Rational determinant(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && sgn(m[piv][col]) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (sgn(m[r][col]) == 0) continue;
      Rational f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

// Newton interpolation through (i, values[i]), i = 0..len-1.
QPoly interpolate(const std::vector<Rational>& values) {
  const std::size_t n = values.size();
  std::vector<Rational> dd = values;
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i) dd[i] = (dd[i] - dd[i - 1]) / Rational(static_cast<long>(level));
  QPoly result(Rational(0));
  for (std::size_t i = n; i-- > 0;) {
    // result = result * (x - i) + dd[i]
    QPoly lin(Rational(0), {Rational(-static_cast<long>(i)), Rational(1)});
    result = result * lin + QPoly::constant(dd[i]);
  }
  return result;
}

bool is_squarefree(const QPoly& f) { return gcd(f, derivative(f)).degree() == 0; }

}  // namespace

// ---------------------------------------------------------------------------
// NumberField

NumberField NumberField::create(std::vector<Rational> minpoly) {
  QPoly m(Rational(0), std::move(minpoly));
  if (m.degree() < 1) throw Error(ErrorCode::kInvalidArgument, "minimal polynomial must have degree >= 1");
  if (m.leading() != 1) throw Error(ErrorCode::kNotMonic, "minimal polynomial must be monic");
  if (m.degree() > kMaxDegree)
    throw Error(ErrorCode::kUnsupportedDegree,
                "field degree " + std::to_string(m.degree()) + " exceeds " + std::to_string(kMaxDegree));
  if (!is_squarefree(m)) throw Error(ErrorCode::kNotSquarefree, "minimal polynomial is not squarefree");
  if (m.degree() > 1) {
    auto factors = zfactor::factor_squarefree(to_integer_poly(m));
    if (factors.size() > 1)
      throw Error(ErrorCode::kReducible, "minimal polynomial has the factor " +
                                             to_string(from_integer_poly(factors.front()), "t"));
  }
  return NumberField(make_data(std::move(m)));
}

NumberField NumberField::rationals() { return NumberField(make_data(QPoly(Rational(0), {Rational(0), Rational(1)}))); }

int NumberField::degree() const { return d_->n; }
const QPoly& NumberField::minimal_polynomial() const { return d_->minpoly; }

FieldElement NumberField::zero() const { return FieldElement(*this, {}); }
FieldElement NumberField::one() const { return FieldElement(*this, {Rational(1)}); }

FieldElement NumberField::generator() const {
  if (d_->n == 1) return FieldElement(*this, {-d_->minpoly[0]});
  return FieldElement(*this, {Rational(0), Rational(1)});
}

FieldElement NumberField::from_rational(const Rational& q) const { return FieldElement(*this, {q}); }

FieldElement NumberField::element(std::vector<Rational> coords) const { return FieldElement(*this, std::move(coords)); }

bool operator==(const NumberField& a, const NumberField& b) {
  if (a.d_ == b.d_) return true;
  if (a.d_->n != b.d_->n) return false;
  return a.d_->n == 1 || a.d_->minpoly == b.d_->minpoly;
}

// ---------------------------------------------------------------------------
// FieldElement

FieldElement::FieldElement(NumberField field, std::vector<Rational> coords)
    : field_(std::move(field)), c_(std::move(coords)) {
  const auto n = static_cast<std::size_t>(field_.degree());
  if (c_.size() > n) {
    const QPoly& m = field_.minimal_polynomial();
    for (std::size_t k = c_.size(); k-- > n;) {
      if (sgn(c_[k]) == 0) continue;
      const Rational top = c_[k];
      for (std::size_t i = 0; i < n; ++i) c_[k - n + i] -= top * m[i];
    }
  }
  c_.resize(n, Rational(0));
}

bool FieldElement::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return sgn(q) == 0; });
}

bool FieldElement::is_one() const { return is_rational() && c_[0] == 1; }

bool FieldElement::is_rational() const {
  return std::all_of(c_.begin() + 1, c_.end(), [](const Rational& q) { return sgn(q) == 0; });
}

FieldElement FieldElement::operator-() const {
  FieldElement r(*this);
  for (auto& q : r.c_) q = -q;
  return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  if (field_ != o.field_) throw Error(ErrorCode::kFieldMismatch, "adding elements of different fields");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
  if (field_ != o.field_) throw Error(ErrorCode::kFieldMismatch, "subtracting elements of different fields");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  if (field_ != o.field_) throw Error(ErrorCode::kFieldMismatch, "multiplying elements of different fields");
  const std::size_t n = c_.size();
  if (n == 1) {
    c_[0] *= o.c_[0];
    return *this;
  }
  std::vector<Rational> prod(2 * n - 1, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(c_[i]) == 0) continue;
    for (std::size_t j = 0; j < n; ++j) prod[i + j] += c_[i] * o.c_[j];
  }
  *this = FieldElement(field_, std::move(prod));
  return *this;
}

FieldElement FieldElement::scaled(const Rational& q) const {
  FieldElement r(*this);
  for (auto& c : r.c_) c *= q;
  return r;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw Error(ErrorCode::kDivisionByZero, "inverse of zero");
  if (c_.size() == 1) return FieldElement(field_, {1 / c_[0]});
  QPoly a(Rational(0), c_);
  auto [g, s, t] = extended_gcd(a, field_.minimal_polynomial());
  (void)t;
  return FieldElement(field_, s.coeffs());
}

FieldElement FieldElement::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  FieldElement result = field_.one();
  FieldElement base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

Rational FieldElement::norm() const {
  const std::size_t n = c_.size();
  if (n == 1) return c_[0];
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  FieldElement col = *this;
  const FieldElement alpha = field_.generator();
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) m[i][j] = col.c_[i];
    col *= alpha;
  }
  return determinant(std::move(m));
}

bool operator==(const FieldElement& a, const FieldElement& b) { return a.field_ == b.field_ && a.c_ == b.c_; }

bool canonical_less(const FieldElement& a, const FieldElement& b) {
  auto shape = [](const FieldElement& e) {
    int nnz = 0, top = -1;
    for (std::size_t i = 0; i < e.c_.size(); ++i)
      if (sgn(e.c_[i]) != 0) {
        ++nnz;
        top = static_cast<int>(i);
      }
    return std::make_pair(nnz, top);
  };
  const auto sa = shape(a), sb = shape(b);
  if (sa != sb) return sa < sb;
  for (std::size_t i = 0; i < a.c_.size() && i < b.c_.size(); ++i) {
    const Rational x = abs(a.c_[i]), y = abs(b.c_[i]);
    if (x != y) return x < y;
    if (a.c_[i] != b.c_[i]) return sgn(a.c_[i]) > 0;
  }
  return false;
}

std::string to_string(const FieldElement& a) {
  std::ostringstream out;
  bool first = true;
  const auto& c = a.coords();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (sgn(c[i]) == 0) continue;
    const Rational mag = abs(c[i]);
    if (first) {
      if (sgn(c[i]) < 0) out << "-";
    } else {
      out << (sgn(c[i]) < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << "*";
    out << "t";
    if (i > 1) out << "^" << i;
  }
  return first ? "0" : out.str();
}

KPoly to_field(const QPoly& f, const NumberField& K) {
  return map_coeffs(f, K.zero(), [&](const Rational& q) { return K.from_rational(q); });
}

// ---------------------------------------------------------------------------
// Factoring and roots

std::vector<QPoly> irreducible_factors(const QPoly& f) {
  if (f.degree() < 1) return {};
  std::vector<QPoly> out;
  for (const auto& z : zfactor::factor_squarefree(to_integer_poly(f))) out.push_back(from_integer_poly(z));
  return out;
}

int euler_phi(int d) {
  int result = d;
  int n = d;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

QPoly cyclotomic(int d) {
  if (d < 1) throw Error(ErrorCode::kInvalidArgument, "cyclotomic: d must be >= 1");
  QPoly num = QPoly::monomial(Rational(1), static_cast<std::size_t>(d)) - QPoly::constant(Rational(1));
  for (int e = 1; e < d; ++e)
    if (d % e == 0) num = divmod(num, cyclotomic(e)).first;
  return num;
}

QPoly real_cyclotomic(int d) {
  if (d < 3) throw Error(ErrorCode::kInvalidArgument, "real_cyclotomic: d must be >= 3");
  const QPoly phi = cyclotomic(d);
  const int m = phi.degree() / 2;
  // z^{-m} Phi_d(z) = c_m + sum_k c_{m+k} (z^k + z^{-k}) and z^k + z^{-k} = T_k(z + 1/z).
  QPoly psi = QPoly::constant(phi[static_cast<std::size_t>(m)]);
  for (int k = 1; k <= m; ++k) psi += phi[static_cast<std::size_t>(m + k)] * chebyshev(k, Rational(0));
  return psi;
}

std::vector<FieldElement> roots_in_field(const KPoly& input) {
  if (input.degree() < 1) return {};
  const NumberField& K = input.zero().field();
  KPoly f = monic(input);
  {
    KPoly g = gcd(f, derivative(f));
    if (g.degree() > 0) f = divmod(f, g).first;
  }
  std::vector<FieldElement> roots;
  if (f.degree() == 1) {
    roots.push_back(-f[0]);
    return roots;
  }
  const int n = K.degree();
  if (n == 1) {
    std::vector<Rational> c;
    for (const auto& a : f.coeffs()) c.push_back(a.rational_part());
    for (const auto& g : irreducible_factors(QPoly(Rational(0), std::move(c))))
      if (g.degree() == 1) roots.push_back(K.from_rational(-g[0]));
  } else {
    const FieldElement alpha = K.generator();
    const int D = n * f.degree();
    for (int attempt = 0;; ++attempt) {
      const long k = (attempt % 2 == 0) ? attempt / 2 : -(attempt + 1) / 2;
      const FieldElement shift_by = Rational(k) * alpha;
      std::vector<Rational> values;
      for (int x0 = 0; x0 <= D; ++x0) values.push_back(f(K.from_rational(Rational(x0)) - shift_by).norm());
      const QPoly N = interpolate(values);
      if (!is_squarefree(N)) continue;
      const KPoly back = KPoly(K.zero(), {shift_by, K.one()});  // x + k alpha
      for (const auto& g : irreducible_factors(N)) {
        if (g.degree() != n) continue;
        KPoly h = gcd(f, compose(to_field(g, K), back));
        if (h.degree() == 1) roots.push_back(-h[0]);
      }
      break;
    }
  }
  std::sort(roots.begin(), roots.end(), canonical_less);
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

std::optional<FieldElement> contains_primitive_root(const NumberField& K, int d) {
  if (d < 1) throw Error(ErrorCode::kInvalidArgument, "contains_primitive_root: d must be >= 1");
  if (d == 1) return K.one();
  if (d == 2) return K.from_rational(Rational(-1));
  if (K.degree() % euler_phi(d) != 0) return std::nullopt;
  auto roots = roots_in_field(to_field(cyclotomic(d), K));
  if (roots.empty()) return std::nullopt;
  return roots.front();
}

std::vector<FieldElement> real_cyclotomic_roots(const NumberField& K, int d) {
  if (d < 3) throw Error(ErrorCode::kInvalidArgument, "real_cyclotomic_roots: d must be >= 3");
  if (K.degree() % (euler_phi(d) / 2) != 0) return {};
  return roots_in_field(to_field(real_cyclotomic(d), K));
}

std::optional<FieldElement> is_square(const FieldElement& a) {
  const NumberField& K = a.field();
  if (a.is_zero()) return K.zero();
  if (K.degree() == 1) {
    const Rational& q = a.rational_part();
    if (sgn(q) < 0) return std::nullopt;
    if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) return std::nullopt;
    Integer num, den;
    mpz_sqrt(num.get_mpz_t(), q.get_num_mpz_t());
    mpz_sqrt(den.get_mpz_t(), q.get_den_mpz_t());
    return K.from_rational(Rational(num, den));
  }
  const KPoly f(K.zero(), {-a, K.zero(), K.one()});
  for (const auto& r : roots_in_field(f)) {
    const auto& c = r.coords();
    auto it = std::find_if(c.begin(), c.end(), [](const Rational& q) { return sgn(q) != 0; });
    if (it != c.end() && sgn(*it) > 0) return r;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// QuadraticTower

struct QuadraticTower::Data {
  NumberField base;
  FieldElement w;
  std::optional<FieldElement> root;
};

QuadraticTower QuadraticTower::adjoin_sqrt(const FieldElement& w) {
  if (w.is_zero()) throw Error(ErrorCode::kZeroRadicand, "cannot adjoin sqrt(0)");
  auto d = std::make_shared<Data>(Data{w.field(), w, is_square(w)});
  return QuadraticTower(std::move(d));
}

const NumberField& QuadraticTower::base() const { return d_->base; }
const FieldElement& QuadraticTower::radicand() const { return d_->w; }
bool QuadraticTower::is_trivial() const { return d_->root.has_value(); }
const std::optional<FieldElement>& QuadraticTower::base_root() const { return d_->root; }

bool operator==(const QuadraticTower& a, const QuadraticTower& b) {
  return a.d_ == b.d_ || (a.d_->base == b.d_->base && a.d_->w == b.d_->w);
}

TowerElement::TowerElement(QuadraticTower tower, FieldElement p, FieldElement q)
    : tower_(std::move(tower)), p_(std::move(p)), q_(std::move(q)) {
  normalize();
}

TowerElement::TowerElement(QuadraticTower tower, FieldElement p)
    : tower_(std::move(tower)), p_(std::move(p)), q_(p_.field().zero()) {}

TowerElement TowerElement::sqrt_radicand(const QuadraticTower& tower) {
  return TowerElement(tower, tower.base().zero(), tower.base().one());
}

void TowerElement::normalize() {
  if (tower_.is_trivial() && !q_.is_zero()) {
    p_ += q_ * *tower_.base_root();
    q_ = p_.field().zero();
  }
}

TowerElement operator+(const TowerElement& a, const TowerElement& b) {
  return TowerElement(a.tower_, a.p_ + b.p_, a.q_ + b.q_);
}

TowerElement operator-(const TowerElement& a, const TowerElement& b) {
  return TowerElement(a.tower_, a.p_ - b.p_, a.q_ - b.q_);
}

TowerElement operator*(const TowerElement& a, const TowerElement& b) {
  if (a.q_.is_zero() && b.q_.is_zero()) return TowerElement(a.tower_, a.p_ * b.p_);
  const FieldElement& w = a.tower_.radicand();
  return TowerElement(a.tower_, a.p_ * b.p_ + a.q_ * b.q_ * w, a.p_ * b.q_ + a.q_ * b.p_);
}

TowerElement TowerElement::inverse() const {
  if (is_zero()) throw Error(ErrorCode::kDivisionByZero, "inverse of zero in quadratic tower");
  if (q_.is_zero()) return TowerElement(tower_, p_.inverse());
  const FieldElement den = (p_ * p_ - q_ * q_ * tower_.radicand()).inverse();
  return TowerElement(tower_, p_ * den, -q_ * den);
}

std::string to_string(const TowerElement& a) {
  if (a.q().is_zero()) return to_string(a.p());
  std::string s = "(" + to_string(a.q()) + ")*sqrt(" + to_string(a.tower().radicand()) + ")";
  if (a.p().is_zero()) return s;
  return "(" + to_string(a.p()) + ") + " + s;
}

}  // namespace cancelkit
