#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cancelkit/polynomial.hpp"
#include "cancelkit/rational.hpp"

namespace cancelkit {

using QPoly = Polynomial<Rational>;

class FieldElement;

/// K = Q(alpha) given by the monic irreducible minimal polynomial of alpha.
/// A cheap handle: copies share the same immutable data.
class NumberField {
 public:
  /// Largest degree accepted by create(); irreducibility is proved by factoring.
  static constexpr int kMaxDegree = 16;

  /// Validates `minpoly` (coefficients lowest degree first): monic, degree >= 1,
  /// squarefree and irreducible over Q.
  static NumberField create(std::vector<Rational> minpoly);
  static NumberField create(const QPoly& minpoly) { return create(minpoly.coeffs()); }
  static NumberField rationals();

  int degree() const;
  bool is_rational() const { return degree() == 1; }
  const QPoly& minimal_polynomial() const;

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement generator() const;
  FieldElement from_rational(const Rational& q) const;
  /// Element with the given power-basis coordinates (padded or reduced as needed).
  FieldElement element(std::vector<Rational> coords) const;

  /// All degree-1 fields are Q; otherwise equal minimal polynomials.
  friend bool operator==(const NumberField& a, const NumberField& b);
  friend bool operator!=(const NumberField& a, const NumberField& b) { return !(a == b); }

  struct Data;  // opaque

 private:
  explicit NumberField(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;
  friend class FieldElement;
};

/// Exact element of a number field in the power basis 1, alpha, ..., alpha^{n-1}.
class FieldElement {
 public:
  FieldElement(NumberField field, std::vector<Rational> coords);

  const NumberField& field() const { return field_; }
  const std::vector<Rational>& coords() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  /// True when every coordinate above the constant one is zero.
  bool is_rational() const;
  /// The constant coordinate; meaningful when is_rational().
  const Rational& rational_part() const { return c_[0]; }

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator/=(const FieldElement& o) { return *this *= o.inverse(); }

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
  friend FieldElement operator*(const Rational& q, FieldElement a) { return a.scaled(q); }
  friend FieldElement operator*(FieldElement a, const Rational& q) { return a.scaled(q); }
  friend FieldElement operator+(FieldElement a, const Rational& q) { return a += a.field_.from_rational(q); }
  friend FieldElement operator-(FieldElement a, const Rational& q) { return a -= a.field_.from_rational(q); }

  /// Throws Error(kDivisionByZero) for zero.
  FieldElement inverse() const;
  FieldElement pow(long e) const;
  /// N_{K/Q}: determinant of multiplication-by-this on the power basis.
  Rational norm() const;

  friend bool operator==(const FieldElement& a, const FieldElement& b);
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

  /// Deterministic total order used to sort root lists: fewer nonzero
  /// coordinates first, then lower top index, then coordinate by coordinate
  /// (smaller absolute value first, positive before negative).
  friend bool canonical_less(const FieldElement& a, const FieldElement& b);

 private:
  FieldElement scaled(const Rational& q) const;

  NumberField field_;
  std::vector<Rational> c_;
};

/// "c0 + c1*t + c2*t^2" with rationals printed as "p/q"; "0" for zero.
std::string to_string(const FieldElement& a);

template <>
struct scalar_traits<FieldElement> {
  static FieldElement zero_like(const FieldElement& a) { return a.field().zero(); }
  static FieldElement one_like(const FieldElement& a) { return a.field().one(); }
  static FieldElement from_rational(const FieldElement& a, const Rational& q) { return a.field().from_rational(q); }
  static bool is_zero(const FieldElement& a) { return a.is_zero(); }
  static bool same_field(const FieldElement& a, const FieldElement& b) { return a.field() == b.field(); }
  static std::string to_string(const FieldElement& a) { return cancelkit::to_string(a); }
};

using KPoly = Polynomial<FieldElement>;

/// Lifts a rational polynomial into K[x].
KPoly to_field(const QPoly& f, const NumberField& K);

/// Monic irreducible factors over Q of a squarefree rational polynomial.
std::vector<QPoly> irreducible_factors(const QPoly& f);

/// The d-th cyclotomic polynomial Phi_d over Q.
QPoly cyclotomic(int d);
/// Minimal polynomial of zeta_d + 1/zeta_d (d >= 3), degree phi(d)/2.
QPoly real_cyclotomic(int d);
int euler_phi(int d);

/// Distinct roots in K of f in K[x] (Trager norm method; linear factors only),
/// sorted with canonical_less.
std::vector<FieldElement> roots_in_field(const KPoly& f);

/// Returns epsilon in K of multiplicative order exactly d, or nothing.
std::optional<FieldElement> contains_primitive_root(const NumberField& K, int d);

/// All roots in K of Psi_d, i.e. the values 2cos(2 pi k / d), gcd(k, d) = 1, lying in K.
std::vector<FieldElement> real_cyclotomic_roots(const NumberField& K, int d);

/// s with s^2 = a, choosing the root whose first nonzero coordinate is positive.
std::optional<FieldElement> is_square(const FieldElement& a);

// ---------------------------------------------------------------------------

/// K(sqrt w) for one w in K. When w is already a square in K the tower is
/// trivial and every element is normalised into the base (q = 0).
class QuadraticTower {
 public:
  /// Throws Error(kZeroRadicand) for w = 0.
  static QuadraticTower adjoin_sqrt(const FieldElement& w);

  const NumberField& base() const;
  const FieldElement& radicand() const;
  bool is_trivial() const;
  /// sqrt(w) in K when the tower is trivial.
  const std::optional<FieldElement>& base_root() const;

  friend bool operator==(const QuadraticTower& a, const QuadraticTower& b);

  struct Data;  // opaque

 private:
  explicit QuadraticTower(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;
  friend class TowerElement;
};

/// p + q*sqrt(w) with p, q in the base field.
class TowerElement {
 public:
  TowerElement(QuadraticTower tower, FieldElement p, FieldElement q);
  TowerElement(QuadraticTower tower, FieldElement p);

  static TowerElement sqrt_radicand(const QuadraticTower& tower);

  const QuadraticTower& tower() const { return tower_; }
  const FieldElement& p() const { return p_; }
  const FieldElement& q() const { return q_; }
  /// Exact membership test: the element lies in the base field iff q = 0.
  bool in_base() const { return q_.is_zero(); }
  bool is_zero() const { return p_.is_zero() && q_.is_zero(); }

  TowerElement operator-() const { return TowerElement(tower_, -p_, -q_); }
  friend TowerElement operator+(const TowerElement& a, const TowerElement& b);
  friend TowerElement operator-(const TowerElement& a, const TowerElement& b);
  friend TowerElement operator*(const TowerElement& a, const TowerElement& b);
  friend TowerElement operator/(const TowerElement& a, const TowerElement& b) { return a * b.inverse(); }
  TowerElement inverse() const;

  friend bool operator==(const TowerElement& a, const TowerElement& b) {
    return a.p_ == b.p_ && a.q_ == b.q_;
  }

 private:
  void normalize();

  QuadraticTower tower_;
  FieldElement p_, q_;
};

std::string to_string(const TowerElement& a);

template <>
struct scalar_traits<TowerElement> {
  static TowerElement zero_like(const TowerElement& a) { return TowerElement(a.tower(), a.p().field().zero()); }
  static TowerElement one_like(const TowerElement& a) { return TowerElement(a.tower(), a.p().field().one()); }
  static TowerElement from_rational(const TowerElement& a, const Rational& q) {
    return TowerElement(a.tower(), a.p().field().from_rational(q));
  }
  static bool is_zero(const TowerElement& a) { return a.is_zero(); }
  static bool same_field(const TowerElement& a, const TowerElement& b) { return a.tower() == b.tower(); }
  static std::string to_string(const TowerElement& a) { return cancelkit::to_string(a); }
};

using TowerPoly = Polynomial<TowerElement>;

}  // namespace cancelkit
