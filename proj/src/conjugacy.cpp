#include "cancelkit/conjugacy.hpp"

#include <cstdlib>
#include <numeric>

#include "cancelkit/polyring.hpp"

namespace cancelkit {

const char* to_string(NormalKind k) {
  switch (k) {
    case NormalKind::kPower: return "POWER";
    case NormalKind::kChebyshev: return "CHEBYSHEV";
    case NormalKind::kXQXd: return "XQXD";
    case NormalKind::kGeneric: return "GENERIC";
  }
  return "?";
}

std::pair<FieldElement, KPoly> center(const KPoly& f) {
  const int r = f.degree();
  if (r < 1) throw Error(ErrorCode::kDegreeTooSmall, "center: degree must be >= 1");
  const std::size_t top = static_cast<std::size_t>(r);
  const FieldElement v = -f[top - 1] / (Rational(r) * f[top]);
  KPoly g = shift(f, v) - KPoly::constant(v);
  return {v, std::move(g)};
}

namespace {

constexpr int kMaxRootSearchExponent = 12;

// Coefficients of the candidate a_r u T_r(x/u) written with w = u^2 only:
// the x^{r-2j} coefficient is a_r w^j t_{r,r-2j}.
KPoly chebyshev_model(const FieldElement& a_r, const FieldElement& w, int r) {
  const QPoly T = chebyshev(r, Rational(0));
  std::vector<FieldElement> c(static_cast<std::size_t>(r) + 1, a_r.field().zero());
  FieldElement wj = a_r.field().one();
  for (int j = 0; 2 * j <= r; ++j) {
    const std::size_t k = static_cast<std::size_t>(r - 2 * j);
    c[k] = a_r * wj * T[k];
    wj *= w;
  }
  return KPoly(a_r.field().zero(), std::move(c));
}

// A root u in K of u^e = c: the real rational root when there is one, else
// (small e only) the canonical root found by factoring.
std::optional<FieldElement> power_scaling(const FieldElement& c, int e) {
  const NumberField& K = c.field();
  if (c.is_rational()) {
    const Rational& q = c.rational_part();
    if (sgn(q) > 0 || e % 2 == 1) {
      Integer num, den;
      const Integer an = abs(q.get_num());
      const bool exact_num = mpz_root(num.get_mpz_t(), an.get_mpz_t(), static_cast<unsigned long>(e)) != 0;
      const bool exact_den = mpz_root(den.get_mpz_t(), q.get_den_mpz_t(), static_cast<unsigned long>(e)) != 0;
      if (exact_num && exact_den) return K.from_rational(Rational(sgn(q) < 0 ? Integer(-num) : num, den));
    }
  }
  if (e > kMaxRootSearchExponent) return std::nullopt;
  auto roots = roots_in_field(KPoly::monomial(K.one(), static_cast<std::size_t>(e)) - KPoly::constant(c));
  if (roots.empty()) return std::nullopt;
  return roots.front();
}

}  // namespace

NormalFormReport classify(const KPoly& f) {
  const int r = f.degree();
  if (r < 2) throw Error(ErrorCode::kDegreeTooSmall, "classify: degree must be >= 2");
  auto [v, g] = center(f);
  const NumberField& K = f.zero().field();
  const FieldElement a_r = g.leading();

  NormalFormReport rep{{}, r, LinearConjugator{v, std::nullopt, std::nullopt}, g, {}, {}, {}};

  const auto support = g.support();
  if (support.size() == 1) {
    rep.kinds.insert(NormalKind::kPower);
    rep.scaling_ambiguity = r - 1;
    if (auto u = power_scaling(a_r.inverse(), r - 1)) {
      rep.conjugator.u_squared = *u * *u;
      rep.conjugator.u_in_K = std::move(u);
    }
  }

  const FieldElement& a_r2 = g[static_cast<std::size_t>(r - 2)];
  if (!a_r2.is_zero()) {
    const FieldElement w = -a_r2 / (Rational(r) * a_r);
    if ((a_r * a_r * w.pow(r - 1)).is_one() && g == chebyshev_model(a_r, w, r)) {
      rep.kinds.insert(NormalKind::kChebyshev);
      rep.conjugator.u_squared = w;
      rep.conjugator.u_in_K = is_square(w);
      if (r % 2 == 1) {
        const FieldElement s = a_r * w.pow((r - 1) / 2);
        rep.sign_resolved = s.is_one() ? 1 : -1;
      } else if (rep.conjugator.u_in_K) {
        const FieldElement s = a_r * rep.conjugator.u_in_K->pow(r - 1);
        rep.sign_resolved = s.is_one() ? 1 : -1;
      }
    }
  }

  int gg = 0;
  for (int i : support) gg = std::gcd(gg, std::abs(i - 1));
  if (gg >= 2) {
    rep.kinds.insert(NormalKind::kXQXd);
    rep.xqxd_gcd = gg;
  }

  if (rep.kinds.empty()) rep.kinds.insert(NormalKind::kGeneric);
  if (!rep.conjugator.u_squared && !rep.has(NormalKind::kPower)) {
    rep.conjugator.u_squared = K.one();
    rep.conjugator.u_in_K = K.one();
  }
  return rep;
}

TowerPoly conjugate_by(const KPoly& f, const FieldElement& v, const QuadraticTower& tower) {
  const KPoly shifted = shift(f, v);
  const TowerElement s = TowerElement::sqrt_radicand(tower);
  TowerElement p(tower, tower.base().one());
  std::vector<TowerElement> c;
  for (const auto& a : shifted.coeffs()) {
    c.push_back(TowerElement(tower, a) * p);
    p = p * s;
  }
  return TowerPoly(TowerElement(tower, tower.base().zero()), std::move(c));
}

}  // namespace cancelkit
