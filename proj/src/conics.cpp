#include "cancelkit/conics.hpp"

#include <array>
#include <sstream>

#include "cancelkit/error.hpp"

namespace cancelkit {

FieldElement Conic::operator()(const FieldElement& x, const FieldElement& y) const {
  return cXX * x * x + cXY * x * y + cYY * y * y + cX * x + cY * y + c1;
}

FieldElement Conic::discriminant() const {
  // det [[2a, b, d], [b, 2c, e], [d, e, 2f]]
  const FieldElement a2 = cXX * Rational(2), c2 = cYY * Rational(2), f2 = c1 * Rational(2);
  return a2 * (c2 * f2 - cY * cY) - cXY * (cXY * f2 - cY * cX) + cX * (cXY * cY - c2 * cX);
}

std::string to_string(const Conic& c) {
  const std::array<std::pair<const FieldElement*, const char*>, 6> terms{{
      {&c.cXX, "X^2"}, {&c.cXY, "X*Y"}, {&c.cYY, "Y^2"}, {&c.cX, "X"}, {&c.cY, "Y"}, {&c.c1, ""}}};
  std::ostringstream out;
  bool first = true;
  for (const auto& [coef, mono] : terms) {
    if (coef->is_zero()) continue;
    std::string s = to_string(*coef);
    bool negative = false;
    const bool compound = s.find(' ') != std::string::npos;
    if (!compound && s[0] == '-') {
      negative = true;
      s = s.substr(1);
    }
    if (compound) s = "(" + s + ")";
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    if (*mono == '\0') {
      out << s;
    } else {
      if (s != "1") out << s << "*";
      out << mono;
    }
  }
  return first ? "0" : out.str();
}

const char* to_string(ConicStatus s) {
  switch (s) {
    case ConicStatus::kPointFound: return "POINT_FOUND";
    case ConicStatus::kNoPoint: return "NO_POINT";
    case ConicStatus::kUnknown: return "UNKNOWN";
  }
  return "?";
}

Conic conic_from_case3(const FieldElement& u2, const FieldElement& v, const FieldElement& c) {
  const NumberField& K = c.field();
  const FieldElement lin = (c - Rational(2)) * v;
  const FieldElement constant = (K.from_rational(Rational(2)) - c) * v * v + (c * c - Rational(4)) * u2;
  return Conic{K.one(), -c, K.one(), lin, lin, constant};
}

namespace {

// ---------------------------------------------------------------------------
// Integer helpers

std::vector<Integer> prime_factors(Integer n) {
  std::vector<Integer> out;
  if (n < 0) n = -n;
  if (n < 2) return out;
  for (Integer p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

// n = s^2 * core with core squarefree (sign kept in core).
std::pair<Integer, Integer> square_split(const Integer& n) {
  Integer core = n < 0 ? Integer(-1) : Integer(1);
  Integer s = 1;
  Integer m = abs(n);
  for (const auto& p : prime_factors(m)) {
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) s *= p;
    if (e % 2) core *= p;
  }
  return {s, core};
}

int valuation(Integer& n, const Integer& p) {
  int e = 0;
  while (n != 0 && n % p == 0) {
    n /= p;
    ++e;
  }
  return e;
}

int legendre(const Integer& a, const Integer& p) { return mpz_legendre(a.get_mpz_t(), p.get_mpz_t()); }

// Hilbert symbol (a, b)_p for nonzero integers; p = 0 means the real place.
int hilbert(Integer a, Integer b, const Integer& p) {
  if (p == 0) return (a < 0 && b < 0) ? -1 : 1;
  const int alpha = valuation(a, p);
  const int beta = valuation(b, p);
  if (p == 2) {
    auto eps = [](const Integer& u) -> int {
      Integer m = u % 4;
      if (m < 0) m += 4;
      return m == 3 ? 1 : 0;
    };
    auto omega = [](const Integer& u) -> int {
      Integer m = u % 8;
      if (m < 0) m += 8;
      return (m == 3 || m == 5) ? 1 : 0;
    };
    const int e = eps(a) * eps(b) + alpha * omega(b) + beta * omega(a);
    return e % 2 ? -1 : 1;
  }
  int s = 1;
  if ((alpha * beta) % 2 && p % 4 == 3) s = -s;
  if (beta % 2) s *= legendre(a, p);
  if (alpha % 2) s *= legendre(b, p);
  return s;
}

Integer mod_pos(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

Integer powmod(const Integer& b, const Integer& e, const Integer& m) {
  Integer r;
  mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
  return r;
}

// Tonelli-Shanks; a must be a square mod the prime p.
Integer sqrt_mod_prime(const Integer& a0, const Integer& p) {
  const Integer a = mod_pos(a0, p);
  if (a == 0 || p == 2) return a;
  if (legendre(a, p) != 1) throw Error(ErrorCode::kInvalidArgument, "sqrt_mod_prime: not a residue");
  Integer q = p - 1;
  int s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  Integer z = 2;
  while (legendre(z, p) != -1) ++z;
  Integer m = s, c = powmod(z, q, p), t = powmod(a, q, p), r = powmod(a, (q + 1) / 2, p);
  while (t != 1) {
    int i = 0;
    Integer tt = t;
    while (tt != 1) {
      tt = tt * tt % p;
      ++i;
    }
    Integer b = c;
    for (int k = 0; k < m.get_si() - i - 1; ++k) b = b * b % p;
    m = i;
    c = b * b % p;
    t = t * c % p;
    r = r * b % p;
  }
  return r;
}

// t with t^2 = a mod |n|, n squarefree, |t| <= |n|/2.
Integer sqrt_mod_squarefree(const Integer& a, const Integer& n) {
  const Integer m = abs(n);
  Integer t = 0, mod = 1;
  for (const auto& p : prime_factors(m)) {
    const Integer r = sqrt_mod_prime(a, p);
    // CRT: t' = t + mod * k with t' = r mod p
    Integer inv;
    mpz_invert(inv.get_mpz_t(), Integer(mod % p).get_mpz_t(), p.get_mpz_t());
    const Integer k = mod_pos((r - t) * inv, p);
    t += mod * k;
    mod *= p;
  }
  t = mod_pos(t, m);
  if (2 * t > m) t -= m;
  return t;
}

using Triple = std::array<Integer, 3>;

// Nontrivial (x, y, z) with x^2 = a y^2 + b z^2 for squarefree a, b that are
// everywhere locally isotropic (Legendre's descent).
Triple legendre_solve(const Integer& a, const Integer& b, int depth = 0) {
  if (depth > 200) throw Error(ErrorCode::kInvalidArgument, "legendre_solve: descent did not terminate");
  if (a == 1) return {1, 1, 0};
  if (b == 1) return {1, 0, 1};
  if (a == -b) return {0, 1, 1};
  if (abs(a) > abs(b)) {
    auto s = legendre_solve(b, a, depth + 1);
    return {s[0], s[2], s[1]};
  }
  const Integer t = sqrt_mod_squarefree(a, b);
  const Integer kp = (t * t - a) / b;
  auto [s, k2] = square_split(kp);
  const auto r = legendre_solve(a, k2, depth + 1);
  Triple out{r[0] * t + a * r[1], r[0] + t * r[1], k2 * s * r[2]};
  Integer g = gcd(gcd(out[0], out[1]), out[2]);
  if (g != 0)
    for (auto& v : out) v /= g;
  return out;
}

// ---------------------------------------------------------------------------
// Rational ternary forms

using Vec3 = std::array<Rational, 3>;
using Mat3 = std::array<Vec3, 3>;

Rational bilinear(const Mat3& S, const Vec3& x, const Vec3& y) {
  Rational s = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) s += x[i] * S[i][j] * y[j];
  return s;
}

struct Diagonal {
  std::vector<Vec3> basis;  // columns of P
  std::vector<Rational> lambda;
};

// Orthogonal basis for the form x^T S x.
Diagonal diagonalize(const Mat3& S) {
  std::vector<Vec3> V{{Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}}};
  Diagonal out;
  while (!V.empty()) {
    std::optional<std::size_t> pick;
    Vec3 v{};
    for (std::size_t i = 0; i < V.size() && !pick; ++i)
      if (sgn(bilinear(S, V[i], V[i])) != 0) {
        pick = i;
        v = V[i];
      }
    for (std::size_t i = 0; i < V.size() && !pick; ++i)
      for (std::size_t j = i + 1; j < V.size() && !pick; ++j)
        if (sgn(bilinear(S, V[i], V[j])) != 0) {
          pick = i;
          for (int k = 0; k < 3; ++k) v[k] = V[i][k] + V[j][k];
        }
    if (!pick) {
      for (const auto& w : V) {
        out.basis.push_back(w);
        out.lambda.push_back(0);
      }
      break;
    }
    const Rational q = bilinear(S, v, v);
    std::vector<Vec3> rest;
    for (std::size_t i = 0; i < V.size(); ++i) {
      if (i == *pick) continue;
      const Rational f = bilinear(S, V[i], v) / q;
      Vec3 w = V[i];
      for (int k = 0; k < 3; ++k) w[k] -= f * v[k];
      rest.push_back(w);
    }
    out.basis.push_back(v);
    out.lambda.push_back(q);
    V = std::move(rest);
  }
  return out;
}

Vec3 combine(const Diagonal& D, const Vec3& coords) {
  Vec3 v{0, 0, 0};
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) v[k] += coords[i] * D.basis[i][k];
  return v;
}

// The first affine point in span{u1, u2} (the projective line they span).
std::optional<Vec3> affine_on_line(const Vec3& u1, const Vec3& u2) {
  for (const Rational& s : height_ordered_rationals(8)) {
    Vec3 v;
    for (int k = 0; k < 3; ++k) v[k] = u2[k] + s * u1[k];
    if (sgn(v[2]) != 0) return v;
  }
  if (sgn(u1[2]) != 0) return u1;
  return std::nullopt;
}

Point to_point(const NumberField& K, const Vec3& v) {
  return {K.from_rational(v[0] / v[2]), K.from_rational(v[1] / v[2])};
}

// y with C(x, y) = 0 over Q, if one exists.
std::optional<Rational> solve_y_rational(const Conic& c, const Rational& x) {
  const Rational A = c.cYY.rational_part();
  const Rational B = c.cXY.rational_part() * x + c.cY.rational_part();
  const Rational C = (c.cXX.rational_part() * x + c.cX.rational_part()) * x + c.c1.rational_part();
  if (sgn(A) == 0) {
    if (sgn(B) != 0) return -C / B;
    if (sgn(C) == 0) return Rational(0);
    return std::nullopt;
  }
  const Rational D = B * B - 4 * A * C;
  auto root = is_square(NumberField::rationals().from_rational(D));
  if (!root) return std::nullopt;
  return (-B + root->rational_part()) / (2 * A);
}

ConicVerdict found(const Point& p, std::string cert) {
  return ConicVerdict{ConicStatus::kPointFound, p, {}, std::move(cert)};
}

}  // namespace

ConicVerdict conic_rational_point(const Conic& c) {
  const NumberField& K = c.field();
  if (!K.is_rational()) throw Error(ErrorCode::kInvalidArgument, "conic_rational_point: field must be Q");
  if (c.cXX.is_zero() && c.cXY.is_zero() && c.cYY.is_zero())
    throw Error(ErrorCode::kInvalidArgument, "conic_rational_point: no quadratic part");

  for (const Rational& x : rationals_up_to_height(8))
    if (auto y = solve_y_rational(c, x)) return found({K.from_rational(x), K.from_rational(*y)}, "small height search");

  const Rational a = c.cXX.rational_part(), b = c.cXY.rational_part(), cc = c.cYY.rational_part();
  const Rational d = c.cX.rational_part(), e = c.cY.rational_part(), f = c.c1.rational_part();
  const Mat3 S{{Vec3{a, b / 2, d / 2}, Vec3{b / 2, cc, e / 2}, Vec3{d / 2, e / 2, f}}};
  const Diagonal D = diagonalize(S);
  std::vector<int> nz, zero;
  for (int i = 0; i < 3; ++i) (sgn(D.lambda[static_cast<std::size_t>(i)]) != 0 ? nz : zero).push_back(i);

  if (nz.size() == 3) {
    // x1^2 = A x2^2 + B x3^2 with A = -l2/l1, B = -l3/l1.
    const Rational A = -D.lambda[1] / D.lambda[0];
    const Rational B = -D.lambda[2] / D.lambda[0];
    auto [sa, a0] = square_split(A.get_num() * A.get_den());
    auto [sb, b0] = square_split(B.get_num() * B.get_den());
    // A = (sa / den_A)^2 a0, likewise B.
    const Rational ra = Rational(sa) / A.get_den();
    const Rational rb = Rational(sb) / B.get_den();

    ConicVerdict v;
    std::vector<Integer> places{0, 2};
    for (const auto& p : prime_factors(a0 * b0))
      if (p != 2) places.push_back(p);
    for (const auto& p : places)
      if (hilbert(a0, b0, p) == -1) v.obstructions.push_back(p == 0 ? "inf" : p.get_str());
    if (!v.obstructions.empty()) {
      v.status = ConicStatus::kNoPoint;
      v.certificate = "local obstruction at";
      for (std::size_t i = 0; i < v.obstructions.size(); ++i)
        v.certificate += (i ? ", " : " ") + v.obstructions[i];
      return v;
    }
    const Triple t = legendre_solve(a0, b0);
    // x1 = x, a0 y^2 = A x2^2 so x2 = y / ra; likewise x3.
    const Vec3 w = combine(D, Vec3{Rational(t[0]), Rational(t[1]) / ra, Rational(t[2]) / rb});
    if (sgn(w[2]) != 0) return found(to_point(K, w), "Legendre descent");
    // A point at infinity; take the second intersection of a line through it.
    for (const Vec3& dir : {Vec3{0, 0, 1}, Vec3{1, 0, 1}, Vec3{0, 1, 1}, Vec3{1, 1, 1}, Vec3{1, -1, 1}}) {
      const Rational q = bilinear(S, dir, dir);
      if (sgn(q) == 0) continue;
      const Rational s = -2 * bilinear(S, w, dir) / q;
      Vec3 p;
      for (int k = 0; k < 3; ++k) p[k] = w[k] + s * dir[k];
      if (sgn(p[2]) != 0) return found(to_point(K, p), "Legendre descent");
    }
    throw Error(ErrorCode::kInvalidArgument, "conic_rational_point: no affine point near the descent solution");
  }

  // Degenerate: a pair of lines, a double line, or a single point.
  if (nz.size() == 2) {
    const Rational l1 = D.lambda[static_cast<std::size_t>(nz[0])], l2 = D.lambda[static_cast<std::size_t>(nz[1])];
    const Vec3& rad = D.basis[static_cast<std::size_t>(zero[0])];
    if (auto s = is_square(NumberField::rationals().from_rational(-l2 / l1))) {
      Vec3 coords{0, 0, 0};
      coords[static_cast<std::size_t>(nz[0])] = s->rational_part();
      coords[static_cast<std::size_t>(nz[1])] = 1;
      if (auto p = affine_on_line(combine(D, coords), rad)) return found(to_point(K, *p), "degenerate: line pair");
    }
    if (sgn(rad[2]) != 0) return found(to_point(K, rad), "degenerate: singular point");
    return ConicVerdict{ConicStatus::kNoPoint, std::nullopt, {}, "degenerate: the only rational point is at infinity"};
  }
  const Vec3& r1 = D.basis[static_cast<std::size_t>(zero[0])];
  const Vec3& r2 = D.basis[static_cast<std::size_t>(zero[1])];
  if (auto p = affine_on_line(r1, r2)) return found(to_point(K, *p), "degenerate: double line");
  return ConicVerdict{ConicStatus::kNoPoint, std::nullopt, {}, "degenerate: double line at infinity"};
}

// ---------------------------------------------------------------------------

ConicParametrization::ConicParametrization(Conic c, Point p) : c_(std::move(c)), p_(std::move(p)) {}

std::optional<Point> ConicParametrization::at(const FieldElement& t) const {
  const auto& [x0, y0] = p_;
  const FieldElement q2 = c_.cXX + (c_.cXY + c_.cYY * t) * t;
  if (q2.is_zero()) return std::nullopt;
  const FieldElement lin = c_.cXX * x0 * Rational(2) + c_.cXY * (y0 + t * x0) + c_.cYY * y0 * t * Rational(2) +
                           c_.cX + c_.cY * t;
  const FieldElement s = -lin / q2;
  return Point{x0 + s, y0 + t * s};
}

std::optional<Point> ConicParametrization::vertical() const {
  const auto& [x0, y0] = p_;
  if (c_.cYY.is_zero()) return std::nullopt;
  const FieldElement s = -(c_.cXY * x0 + c_.cYY * y0 * Rational(2) + c_.cY) / c_.cYY;
  return Point{x0, y0 + s};
}

ConicParametrization conic_parametrize(const Conic& c, const Point& p) {
  if (c.is_degenerate()) throw Error(ErrorCode::kDegenerateConic, "cannot parametrize a degenerate conic");
  if (!c(p.first, p.second).is_zero()) throw Error(ErrorCode::kInvalidArgument, "base point is not on the conic");
  return ConicParametrization(c, p);
}

// ---------------------------------------------------------------------------

ConicVerdict conic_point_search(const Conic& c, long height_bound) {
  const NumberField& K = c.field();
  const std::vector<Rational> vals = rationals_up_to_height(height_bound);
  const std::size_t n = static_cast<std::size_t>(K.degree());

  auto try_x = [&](const FieldElement& x) -> std::optional<Point> {
    const FieldElement A = c.cYY;
    const FieldElement B = c.cXY * x + c.cY;
    const FieldElement C = (c.cXX * x + c.cX) * x + c.c1;
    if (A.is_zero()) {
      if (!B.is_zero()) return Point{x, -C / B};
      if (C.is_zero()) return Point{x, K.zero()};
      return std::nullopt;
    }
    auto root = is_square(B * B - A * C * Rational(4));
    if (!root) return std::nullopt;
    return Point{x, (*root - B) / (A * Rational(2))};
  };

  // Coordinate tuples in order of their largest index into `vals`.
  for (std::size_t top = 0; top < vals.size(); ++top) {
    std::vector<std::size_t> idx(n, 0);
    while (true) {
      bool hits_top = false;
      for (auto i : idx) hits_top |= (i == top);
      if (hits_top) {
        std::vector<Rational> coords;
        for (auto i : idx) coords.push_back(vals[i]);
        if (auto p = try_x(K.element(std::move(coords))))
          return found(*p, "search to height " + std::to_string(height_bound));
      }
      std::size_t k = 0;
      while (k < n && idx[k] == top) idx[k++] = 0;
      if (k == n) break;
      ++idx[k];
    }
  }
  return ConicVerdict{ConicStatus::kUnknown, std::nullopt, {},
                      "no point with coordinates of height <= " + std::to_string(height_bound)};
}

}  // namespace cancelkit
