#include <doctest.h>

#include <random>

#include "cancelkit/error.hpp"
#include "cancelkit/polyring.hpp"
#include "support.hpp"

using namespace cancelkit;
using namespace testing;

namespace {

KPoly T(int r) { return chebyshev(r, QQ().zero()); }
KPoly P(int r) { return power_map(r, QQ().zero()); }

using Laurent = LaurentPolynomial<FieldElement>;

Laurent x_plus_inverse() {
  return Laurent::monomial(num(1), 1) + Laurent::monomial(num(1), -1);
}

KPoly random_odd(std::mt19937_64& rng, int degree) {
  std::vector<FieldElement> c(static_cast<std::size_t>(degree) + 1, num(0));
  for (int i = 1; i <= degree; i += 2) c[static_cast<std::size_t>(i)] = QQ().from_rational(random_rational(rng, 5));
  c.back() = num(1);
  return KPoly(QQ().zero(), std::move(c));
}

}  // namespace

TEST_CASE("compose") {
  CHECK(compose(P(2), px("x + 1")) == px("x^2 + 2*x + 1"));
  CHECK(compose(T(2), T(3)) == chebyshev_closed_form(6));
  CHECK(chebyshev_closed_form(6) == px("x^6 - 6*x^4 + 9*x^2 - 2"));
  auto f = px("3*x^4 - x + 7/2");
  CHECK(compose(f, px("x")) == f);
  auto K = parse_field("t^2 - 2");
  CHECK_THROWS_AS(compose(f, px("x^2", K)), Error);
}

TEST_CASE("chebyshev and power maps") {
  CHECK(T(1) == px("x"));
  CHECK(T(2) == px("x^2 - 2"));
  CHECK(T(3) == px("x^3 - 3*x"));
  CHECK(T(4) == px("x^4 - 4*x^2 + 2"));
  for (int r = 1; r <= 30; ++r) CHECK(T(r) == chebyshev_closed_form(r));
  CHECK(P(5) == poly({0, 0, 0, 0, 0, 1}));
  CHECK_THROWS_AS(chebyshev(0, num(0)), Error);
}

TEST_CASE("nesting") {
  for (int m = 1; m <= 8; ++m)
    for (int n = 1; n <= 8; ++n) {
      CHECK(compose(T(m), T(n)) == chebyshev_closed_form(m * n));
      CHECK(compose(P(m), P(n)) == P(m * n));
    }
}

TEST_CASE("semiconjugacy with x + 1/x") {
  for (int r = 1; r <= 10; ++r) {
    auto lhs = laurent_substitute(T(r), x_plus_inverse());
    auto rhs = Laurent::monomial(num(1), r) + Laurent::monomial(num(1), -r);
    CHECK(lhs == rhs);
  }
  CHECK(laurent_substitute(px("x"), x_plus_inverse()) == x_plus_inverse());
}

TEST_CASE("chebyshev expansion") {
  auto e = cheb_expand(px("x^2"));
  CHECK(e.a0 == num(2));
  CHECK(e.a.size() == 1);
  CHECK(e.a.at(2) == num(1));

  e = cheb_expand(px("x^3"));
  CHECK(e.a0 == num(0));
  CHECK(e.a.at(1) == num(3));
  CHECK(e.a.at(3) == num(1));
  CHECK(e.a.size() == 2);

  e = cheb_expand(px("5"));
  CHECK(e.a0 == num(5));
  CHECK(e.a.empty());

  // (x + 1/x)^n = sum_k C(n, k) x^{n-2k}, so x^n = sum_{2k<n} C(n, k) T_{n-2k} + [n even] C(n, n/2).
  for (int n = 1; n <= 14; ++n) {
    auto ex = cheb_expand(P(n));
    CHECK(ex.top() == n);
    for (int k = 0; 2 * k < n; ++k) CHECK(ex.a.at(n - 2 * k) == num(binomial(n, k)));
    CHECK(ex.a0 == num(n % 2 == 0 ? binomial(n, n / 2) : 0));
  }
}

TEST_CASE("chebyshev expansion round trip") {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> deg(0, 12);
  for (auto K : {QQ(), parse_field("t^2 + 1")}) {
    for (int i = 0; i < 500; ++i) {
      auto f = random_poly(rng, K, deg(rng), 20);
      auto e = cheb_expand(f);
      REQUIRE(e.reconstruct() == f);
      if (f.degree() > 0) REQUIRE(e.top() == f.degree());
    }
  }
}

TEST_CASE("form checks") {
  CHECK(form_check(px("x^6 + 2*x^3 - 1"), 3, FormKind::kPowerInner));
  CHECK_FALSE(form_check(px("x^6 + x"), 3, FormKind::kPowerInner));
  CHECK(form_check(px("x^3 - 2*x"), 2, FormKind::kLinearTimes));
  CHECK_FALSE(form_check(px("x^3 - 2"), 2, FormKind::kLinearTimes));
  CHECK(form_check(T(6), 3, FormKind::kChebInner));
  CHECK_FALSE(form_check(T(6) + px("x"), 3, FormKind::kChebInner));
  CHECK_THROWS_AS(form_check(T(6), 1, FormKind::kChebInner), Error);
}

TEST_CASE("outer factors") {
  CHECK(extract_outer(px("x^6 + 2*x^3"), 3, FormKind::kPowerInner) == px("x^2 + 2*x"));
  CHECK(extract_outer(T(6), 3, FormKind::kChebInner) == T(2));
  CHECK(extract_outer(px("x^2"), 2, FormKind::kChebInner) == px("x + 2"));
  try {
    extract_outer(px("x^3"), 2, FormKind::kPowerInner);
    FAIL("expected FORM_VIOLATION");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kFormViolation);
  }

  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    auto outer = random_poly(rng, QQ(), 1 + i % 4, 9);
    int d = 2 + i % 3;
    CHECK(extract_outer(compose(outer, P(d)), d, FormKind::kPowerInner) == outer);
    CHECK(extract_outer(compose(outer, T(d)), d, FormKind::kChebInner) == outer);
  }
}

TEST_CASE("decomposition") {
  auto f = decompose(P(6));
  CHECK(compose_all(f) == P(6));
  CHECK(f.size() == 2);
  CHECK(decompose(px("x^4 + 2*x^2")) == std::vector<KPoly>{px("x^2 + 2*x"), px("x^2")});
  CHECK(decompose(px("x^3 - 2*x")) == std::vector<KPoly>{px("x^3 - 2*x")});
  CHECK(decompose(T(12)).size() == 3);

  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> deg(2, 3);
  for (int i = 0; i < 60; ++i) {
    auto g = random_poly(rng, QQ(), deg(rng), 7);
    auto h = random_poly(rng, QQ(), deg(rng), 7);
    auto fh = compose(g, h);
    auto parts = decompose(fh);
    REQUIRE(compose_all(parts) == fh);
    for (const auto& p : parts) {
      CHECK(p.degree() >= 2);
      CHECK(decompose(p).size() == 1);
    }
  }
}

TEST_CASE("odd polynomials compose to odd polynomials") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    auto f = random_odd(rng, 3 + 2 * (i % 3));
    auto g = random_odd(rng, 3 + 2 * ((i / 3) % 2));
    for (int e : compose(f, g).support()) REQUIRE(e % 2 == 1);
  }
}

TEST_CASE("laurent substitution") {
  auto s = x_plus_inverse();
  CHECK(laurent_substitute(T(2), s) == Laurent::monomial(num(1), 2) + Laurent::monomial(num(1), -2));
  CHECK(laurent_substitute(T(3), s) == Laurent::monomial(num(1), 3) + Laurent::monomial(num(1), -3));
}
