#pragma once

#include <optional>
#include <set>
#include <utility>

#include "cancelkit/numberfield.hpp"

namespace cancelkit {

/// l(x) = u x + v. Only u^2 is ever needed: the conditions the decider checks
/// depend on u through u^2 (and on the sign of T_r), so u itself is kept only
/// when it happens to lie in K.
struct LinearConjugator {
  FieldElement v;
  std::optional<FieldElement> u_squared;
  std::optional<FieldElement> u_in_K;
};

enum class NormalKind { kPower, kChebyshev, kXQXd, kGeneric };

const char* to_string(NormalKind k);

struct NormalFormReport {
  std::set<NormalKind> kinds;
  int r = 0;
  LinearConjugator conjugator;
  KPoly centered;
  /// gcd{i - 1 : i in the centered support}, when >= 2.
  std::optional<int> xqxd_gcd;
  /// +1 or -1: l^{-1} o f o l = sign * T_r. Always known for odd r.
  std::optional<int> sign_resolved;
  /// For POWER: the order r - 1 of the group of admissible scalings u.
  std::optional<int> scaling_ambiguity;

  bool has(NormalKind k) const { return kinds.count(k) != 0; }
};

/// v = -a_{r-1} / (r a_r) and g(x) = f(x + v) - v, so g has no x^{r-1} term.
std::pair<FieldElement, KPoly> center(const KPoly& f);

/// Throws Error(kDegreeTooSmall) for deg f < 2.
NormalFormReport classify(const KPoly& f);

/// f(sqrt(w) x + v) over K(sqrt w), w = tower.radicand().
TowerPoly conjugate_by(const KPoly& f, const FieldElement& v, const QuadraticTower& tower);

}  // namespace cancelkit
