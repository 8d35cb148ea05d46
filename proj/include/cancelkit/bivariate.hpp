#pragma once

#include <map>
#include <string>
#include <utility>

#include "cancelkit/numberfield.hpp"

namespace cancelkit {

/// Sparse polynomial in X, Y over K; key (i, j) is the exponent of X^i Y^j.
/// Map order is lexicographic with X > Y, which is the order used for division.
class BivariatePolynomial {
 public:
  using Monomial = std::pair<int, int>;

  explicit BivariatePolynomial(FieldElement zero) : zero_(std::move(zero)) {}

  static BivariatePolynomial term(const FieldElement& c, int i, int j);
  /// f(X) and f(Y).
  static BivariatePolynomial in_x(const KPoly& f);
  static BivariatePolynomial in_y(const KPoly& f);

  const std::map<Monomial, FieldElement>& terms() const { return t_; }
  const FieldElement& zero() const { return zero_; }
  bool is_zero() const { return t_.empty(); }
  int total_degree() const;

  void add_term(const Monomial& m, const FieldElement& c);

  friend BivariatePolynomial operator+(BivariatePolynomial a, const BivariatePolynomial& b);
  friend BivariatePolynomial operator-(BivariatePolynomial a, const BivariatePolynomial& b);
  friend BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b);
  friend BivariatePolynomial operator*(const FieldElement& c, const BivariatePolynomial& a);
  friend bool operator==(const BivariatePolynomial& a, const BivariatePolynomial& b) { return a.t_ == b.t_; }

  FieldElement operator()(const FieldElement& x, const FieldElement& y) const;

  /// F(f(X), g(Y)).
  BivariatePolynomial substitute(const KPoly& f, const KPoly& g) const;

 private:
  FieldElement zero_;
  std::map<Monomial, FieldElement> t_;
};

/// Division by a single polynomial under lex order; a single divisor is a
/// Groebner basis of its ideal, so the remainder is zero iff f | g.
struct BivariateDivision {
  BivariatePolynomial quotient, remainder;
};
BivariateDivision divide(const BivariatePolynomial& g, const BivariatePolynomial& f);
bool divides(const BivariatePolynomial& f, const BivariatePolynomial& g);

/// "X^2 + X*Y - 3", highest lex term first.
std::string to_string(const BivariatePolynomial& F);

}  // namespace cancelkit
