#include "cancelkit/zfactor.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>

#include "cancelkit/error.hpp"

namespace cancelkit::zfactor {
namespace {

// ---------------------------------------------------------------------------
// Polynomials over F_p, p an odd prime below 2^31.

using u64 = std::uint64_t;
using MPoly = std::vector<u64>;

void trim(MPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const MPoly& a) { return static_cast<int>(a.size()) - 1; }

u64 powmod(u64 b, u64 e, u64 p) {
  u64 r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

MPoly sub(MPoly a, const MPoly& b, u64 p) {
  if (b.size() > a.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

MPoly add(MPoly a, const MPoly& b, u64 p) {
  if (b.size() > a.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + b[i]) % p;
  trim(a);
  return a;
}

MPoly mul(const MPoly& a, const MPoly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  MPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  trim(r);
  return r;
}

MPoly scale(MPoly a, u64 s, u64 p) {
  for (auto& c : a) c = c * s % p;
  trim(a);
  return a;
}

// (quotient, remainder)
std::pair<MPoly, MPoly> divmod(MPoly a, const MPoly& b, u64 p) {
  if (deg(a) < deg(b)) return {{}, a};
  const u64 inv = invmod(b.back(), p);
  MPoly q(a.size() - b.size() + 1, 0);
  for (std::size_t k = q.size(); k-- > 0;) {
    u64 c = a[k + b.size() - 1] * inv % p;
    q[k] = c;
    if (!c) continue;
    for (std::size_t j = 0; j < b.size(); ++j) a[k + j] = (a[k + j] + p - c * b[j] % p) % p;
  }
  a.resize(b.size() - 1);
  trim(a);
  trim(q);
  return {q, a};
}

MPoly rem(const MPoly& a, const MPoly& b, u64 p) { return divmod(a, b, p).second; }

MPoly make_monic(const MPoly& a, u64 p) { return a.empty() ? a : scale(a, invmod(a.back(), p), p); }

MPoly gcd(MPoly a, MPoly b, u64 p) {
  while (!b.empty()) {
    MPoly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a, p);
}

// s*a + t*b = 1 for coprime a, b.
std::pair<MPoly, MPoly> bezout(const MPoly& a, const MPoly& b, u64 p) {
  MPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1, p);
    MPoly s2 = sub(s0, mul(q, s1, p), p);
    MPoly t2 = sub(t0, mul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (deg(r0) != 0) throw Error(ErrorCode::kInvalidArgument, "bezout: inputs not coprime mod p");
  u64 inv = invmod(r0[0], p);
  return {scale(s0, inv, p), scale(t0, inv, p)};
}

MPoly derivative(const MPoly& a, u64 p) {
  MPoly d;
  for (std::size_t i = 1; i < a.size(); ++i) d.push_back(a[i] * (i % p) % p);
  trim(d);
  return d;
}

// base^e mod m, e given as a big integer.
MPoly powmod_poly(MPoly base, const Integer& e, const MPoly& m, u64 p) {
  MPoly r{1};
  base = rem(base, m, p);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    r = rem(mul(r, r, p), m, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = rem(mul(r, base, p), m, p);
  }
  return r;
}

// Equal-degree splitting (Cantor-Zassenhaus) of a monic squarefree g whose
// irreducible factors all have degree d.
void equal_degree_split(const MPoly& g, int d, u64 p, std::mt19937_64& rng, std::vector<MPoly>& out) {
  if (deg(g) == d) {
    out.push_back(g);
    return;
  }
  Integer q;
  mpz_ui_pow_ui(q.get_mpz_t(), p, static_cast<unsigned long>(d));
  const Integer e = (q - 1) / 2;
  std::uniform_int_distribution<u64> coin(0, p - 1);
  for (;;) {
    MPoly a(g.size() - 1);
    for (auto& c : a) c = coin(rng);
    trim(a);
    if (deg(a) < 1) continue;
    MPoly b = sub(powmod_poly(a, e, g, p), MPoly{1}, p);
    MPoly h = gcd(b, g, p);
    if (deg(h) > 0 && deg(h) < deg(g)) {
      equal_degree_split(h, d, p, rng, out);
      equal_degree_split(divmod(g, h, p).first, d, p, rng, out);
      return;
    }
  }
}

// Monic irreducible factors of a monic squarefree polynomial over F_p.
std::vector<MPoly> factor_mod_p(const MPoly& f, u64 p) {
  std::vector<MPoly> out;
  std::mt19937_64 rng(0x5eed + p);
  MPoly rest = f;
  MPoly h{0, 1};
  const MPoly x{0, 1};
  for (int d = 1; 2 * d <= deg(rest); ++d) {
    h = powmod_poly(h, Integer(static_cast<unsigned long>(p)), rest, p);
    MPoly g = gcd(sub(h, x, p), rest, p);
    if (deg(g) > 0) {
      equal_degree_split(g, d, p, rng, out);
      rest = divmod(rest, g, p).first;
      h = rem(h, rest, p);
    }
  }
  if (deg(rest) > 0) out.push_back(rest);
  return out;
}

// ---------------------------------------------------------------------------
// Integer polynomials.

void trim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

Integer content(const ZPoly& a) {
  Integer g = 0;
  for (const auto& c : a) g = cancelkit::gcd(g, c);
  return g;
}

ZPoly primitive_part(ZPoly a) {
  Integer g = content(a);
  if (g == 0) return a;
  if (a.back() < 0) g = -g;
  for (auto& c : a) c /= g;
  return a;
}

Integer mod_nonneg(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

Integer mod_symmetric(const Integer& a, const Integer& m) {
  Integer r = mod_nonneg(a, m);
  if (2 * r > m) r -= m;
  return r;
}

ZPoly reduce(ZPoly a, const Integer& m, bool symmetric) {
  for (auto& c : a) c = symmetric ? mod_symmetric(c, m) : mod_nonneg(c, m);
  trim(a);
  return a;
}

MPoly to_mod(const ZPoly& a, u64 p) {
  MPoly r(a.size());
  const Integer P(static_cast<unsigned long>(p));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mod_nonneg(a[i], P).get_ui();
  trim(r);
  return r;
}

ZPoly from_mod(const MPoly& a) {
  ZPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = Integer(static_cast<unsigned long>(a[i]));
  return r;
}

// Exact division test over Z: returns quotient if b | a.
bool divides(const ZPoly& b, const ZPoly& a, ZPoly* quotient) {
  if (deg(a) < deg(b)) return false;
  ZPoly r = a;
  ZPoly q(a.size() - b.size() + 1, 0);
  for (std::size_t k = q.size(); k-- > 0;) {
    const Integer& top = r[k + b.size() - 1];
    if (top % b.back() != 0) return false;
    Integer c = top / b.back();
    for (std::size_t j = 0; j < b.size(); ++j) r[k + j] -= c * b[j];
    q[k] = c;
  }
  trim(r);
  if (!r.empty()) return false;
  if (quotient) {
    trim(q);
    *quotient = std::move(q);
  }
  return true;
}

// Lifts f = g*h (mod p), g monic, from mod p to mod p^k; f known modulo `modulus` = p^k.
std::pair<ZPoly, ZPoly> hensel_lift(const ZPoly& f, const MPoly& g, const MPoly& h, u64 p, unsigned k,
                                    const Integer& modulus) {
  auto [s, t] = bezout(g, h, p);
  ZPoly G = from_mod(g), H = from_mod(h);
  H.back() = mod_nonneg(f.back(), modulus);
  Integer m(static_cast<unsigned long>(p));
  const Integer P(static_cast<unsigned long>(p));
  for (unsigned step = 1; step < k; ++step) {
    ZPoly e = reduce(zmul(G, H), modulus, false);
    ZPoly diff(std::max(f.size(), e.size()), 0);
    for (std::size_t i = 0; i < f.size(); ++i) diff[i] += f[i];
    for (std::size_t i = 0; i < e.size(); ++i) diff[i] -= e[i];
    diff = reduce(diff, modulus, false);
    for (auto& c : diff) c /= m;  // exact: f = G*H mod m
    MPoly ep = to_mod(diff, p);
    auto [q, tau] = divmod(mul(t, ep, p), g, p);
    MPoly sigma = add(mul(s, ep, p), mul(q, h, p), p);
    ZPoly tz = from_mod(tau), sz = from_mod(sigma);
    if (G.size() < tz.size()) G.resize(tz.size(), 0);
    for (std::size_t i = 0; i < tz.size(); ++i) G[i] += m * tz[i];
    if (H.size() < sz.size()) H.resize(sz.size(), 0);
    for (std::size_t i = 0; i < sz.size(); ++i) H[i] += m * sz[i];
    m *= P;
  }
  return {reduce(G, modulus, false), reduce(H, modulus, false)};
}

// Lifts monic modular factors of f (f = lc * prod factors mod p) to monic factors mod p^k.
void lift_all(const ZPoly& f, const std::vector<MPoly>& factors, u64 p, unsigned k, const Integer& modulus,
              std::vector<ZPoly>& out) {
  if (factors.size() == 1) {
    Integer inv;
    Integer lc = mod_nonneg(f.back(), modulus);
    mpz_invert(inv.get_mpz_t(), lc.get_mpz_t(), modulus.get_mpz_t());
    ZPoly g = f;
    for (auto& c : g) c = mod_nonneg(c * inv, modulus);
    out.push_back(g);
    return;
  }
  const std::size_t half = factors.size() / 2;
  std::vector<MPoly> left(factors.begin(), factors.begin() + half);
  std::vector<MPoly> right(factors.begin() + half, factors.end());
  MPoly g{1}, h = to_mod(ZPoly{f.back()}, p);
  for (const auto& a : left) g = mul(g, a, p);
  for (const auto& a : right) h = mul(h, a, p);
  auto [G, H] = hensel_lift(f, g, h, p, k, modulus);
  lift_all(G, left, p, k, modulus, out);
  lift_all(H, right, p, k, modulus, out);
}

bool is_small_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool lex_less(const ZPoly& a, const ZPoly& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

// Subsets of {0..n-1} of size s in lexicographic order.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t s = idx.size();
  for (std::size_t i = s; i-- > 0;) {
    if (idx[i] < n - s + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<ZPoly> factor_squarefree(const ZPoly& input) {
  ZPoly f = primitive_part(input);
  trim(f);
  if (deg(f) < 1) throw Error(ErrorCode::kInvalidArgument, "factor_squarefree: degree < 1");
  if (deg(f) == 1) return {f};

  // Pick the prime (among the first few good ones) with the fewest modular factors.
  u64 best_p = 0;
  std::vector<MPoly> best;
  int good = 0;
  for (u64 p = 3; good < 6 && p < 100000; p += 2) {
    if (!is_small_prime(p)) continue;
    MPoly fp = to_mod(f, p);
    if (deg(fp) != deg(f)) continue;
    if (deg(gcd(fp, derivative(fp, p), p)) != 0) continue;
    ++good;
    auto facs = factor_mod_p(make_monic(fp, p), p);
    if (best_p == 0 || facs.size() < best.size()) {
      best_p = p;
      best = std::move(facs);
    }
    if (best.size() == 1) return {f};
  }
  if (best_p == 0) throw Error(ErrorCode::kInvalidArgument, "factor_squarefree: no good prime (input not squarefree?)");
  std::sort(best.begin(), best.end());

  // Coefficient bound for any factor of f: 2^n * ||f||_2 (Mignotte), times |lc|.
  Integer norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  Integer root;
  mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
  Integer bound = (root + 1) * (Integer(1) << static_cast<unsigned long>(deg(f))) * abs(f.back());
  Integer modulus = Integer(static_cast<unsigned long>(best_p));
  unsigned k = 1;
  while (modulus <= 2 * bound) {
    modulus *= best_p;
    ++k;
  }

  std::vector<ZPoly> lifted;
  lift_all(f, best, best_p, k, modulus, lifted);

  // Recombination.
  std::vector<ZPoly> result;
  ZPoly rest = f;
  std::size_t s = 1;
  while (2 * s <= lifted.size()) {
    bool found = false;
    std::vector<std::size_t> idx(s);
    std::iota(idx.begin(), idx.end(), 0);
    do {
      ZPoly g{rest.back()};
      for (auto i : idx) g = reduce(zmul(g, lifted[i]), modulus, true);
      g = primitive_part(g);
      ZPoly q;
      if (deg(g) >= 1 && divides(g, rest, &q)) {
        result.push_back(g);
        rest = primitive_part(q);
        std::vector<ZPoly> remaining;
        for (std::size_t i = 0, j = 0; i < lifted.size(); ++i) {
          if (j < idx.size() && idx[j] == i) {
            ++j;
            continue;
          }
          remaining.push_back(lifted[i]);
        }
        lifted = std::move(remaining);
        found = true;
        break;
      }
    } while (next_combination(idx, lifted.size()));
    if (!found) ++s;
  }
  if (deg(rest) >= 1) result.push_back(primitive_part(rest));
  std::sort(result.begin(), result.end(), lex_less);
  return result;
}

}  // namespace cancelkit::zfactor
