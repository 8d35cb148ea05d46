#include <doctest.h>

#include <numeric>
#include <random>

#include "cancelkit/error.hpp"
#include "cancelkit/numberfield.hpp"
#include "support.hpp"

using namespace cancelkit;
using namespace testing;

namespace {

NumberField field(const char* minpoly) { return parse_field(minpoly); }

ErrorCode create_error(std::vector<Rational> c) {
  try {
    NumberField::create(std::move(c));
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInvalidArgument;
}

}  // namespace

TEST_CASE("field construction") {
  CHECK(NumberField::create({frac(0), frac(1)}).is_rational());
  auto z3 = NumberField::create({frac(1), frac(1), frac(1)});
  CHECK(z3.degree() == 2);
  CHECK(create_error({frac(-1), frac(0), frac(1)}) == ErrorCode::kReducible);
  CHECK(create_error({frac(1), frac(2)}) == ErrorCode::kNotMonic);
  CHECK(create_error({frac(0), frac(0), frac(1)}) == ErrorCode::kNotSquarefree);
  CHECK(create_error({frac(4), frac(0), frac(0), frac(0), frac(1)}) == ErrorCode::kReducible);  // (t^2-2t+2)(t^2+2t+2)
  CHECK_NOTHROW(field("t^4 + 1"));
  CHECK_NOTHROW(field("t^3 - 2"));
}

TEST_CASE("inverse") {
  CHECK(num(3, 2).inverse() == num(2, 3));
  auto K = field("t^2 - 2");
  auto a = K.generator();
  CHECK((K.one() + a).inverse() == a - frac(1));
  auto Z = field("t^2 + t + 1");
  auto z = Z.generator();
  CHECK(z.inverse() == -z - frac(1));
  CHECK_THROWS_AS(K.zero().inverse(), Error);
}

TEST_CASE("field axioms on random elements") {
  std::mt19937_64 rng(20261016);
  for (const char* m : {"t", "t^2 - 2", "t^2 + t + 1", "t^3 - 2", "t^4 + 1"}) {
    auto K = field(m);
    for (int i = 0; i < 1000; ++i) {
      auto x = random_element(rng, K, 9), y = random_element(rng, K, 9), z = random_element(rng, K, 9);
      REQUIRE((x * y) * z == x * (y * z));
      REQUIRE((x + y) * z == x * z + y * z);
      REQUIRE(x * y == y * x);
      if (!x.is_zero()) REQUIRE(x * x.inverse() == K.one());
    }
  }
}

TEST_CASE("rational embedding behaves as Q") {
  auto K = field("t^3 - 2");
  auto a = K.from_rational(frac(3, 4)), b = K.from_rational(frac(-5, 6));
  CHECK((a * b).is_rational());
  CHECK((a * b).rational_part() == frac(3, 4) * frac(-5, 6));
  CHECK((a / b).rational_part() == frac(3, 4) / frac(-5, 6));
  CHECK(K.generator().pow(3) == K.from_rational(frac(2)));
}

TEST_CASE("primitive roots of unity") {
  CHECK(*contains_primitive_root(QQ(), 2) == num(-1));
  CHECK(*contains_primitive_root(QQ(), 1) == num(1));
  CHECK_FALSE(contains_primitive_root(QQ(), 3));
  auto Z3 = field("t^2 + t + 1");
  CHECK(*contains_primitive_root(Z3, 3) == Z3.generator());

  // Q(zeta_12): the roots of unity are exactly the powers of the generator.
  auto K = field("t^4 - t^2 + 1");
  std::vector<FieldElement> powers{K.one()};
  for (int k = 1; k < 12; ++k) powers.push_back(powers.back() * K.generator());
  REQUIRE(powers.back() * K.generator() == K.one());
  for (int d = 1; d <= 30; ++d) {
    bool oracle = false;
    for (int k = 0; k < 12; ++k) {
      int order = 12 / std::gcd(12, k);
      if (order == d) oracle = true;
    }
    auto eps = contains_primitive_root(K, d);
    CHECK_MESSAGE(eps.has_value() == oracle, "d = " << d);
    if (eps) {
      CHECK(eps->pow(d) == K.one());
      for (int e = 1; e < d; ++e)
        if (d % e == 0) CHECK(eps->pow(e) != K.one());
    }
  }
}

TEST_CASE("real cyclotomic roots") {
  CHECK(real_cyclotomic_roots(QQ(), 3) == std::vector<FieldElement>{num(-1)});
  CHECK(real_cyclotomic_roots(QQ(), 4) == std::vector<FieldElement>{num(0)});
  CHECK(real_cyclotomic_roots(QQ(), 6) == std::vector<FieldElement>{num(1)});
  CHECK(real_cyclotomic_roots(QQ(), 5).empty());
  for (int d = 7; d <= 40; ++d) CHECK(real_cyclotomic_roots(QQ(), d).empty());

  // 2cos(pi/4) = sqrt 2 and 2cos(3pi/4) = -sqrt 2.
  auto K = field("t^2 - 2");
  auto roots = real_cyclotomic_roots(K, 8);
  REQUIRE(roots.size() == 2);
  for (const auto& c : roots) CHECK(c * c == K.from_rational(frac(2)));
  for (int d = 3; d <= 24; ++d)
    for (const auto& c : real_cyclotomic_roots(K, d)) CHECK(to_field(real_cyclotomic(d), K)(c).is_zero());
}

TEST_CASE("cyclotomic polynomial degrees") {
  for (int d = 1; d <= 60; ++d) CHECK(cyclotomic(d).degree() == euler_phi(d));
  for (int d = 3; d <= 60; ++d) CHECK(real_cyclotomic(d).degree() * 2 == euler_phi(d));
  CHECK(real_cyclotomic(5) == QPoly(Rational(0), {frac(-1), frac(1), frac(1)}));
}

TEST_CASE("square roots") {
  CHECK(*is_square(num(9, 4)) == num(3, 2));
  CHECK_FALSE(is_square(num(2)));
  auto K = field("t^2 - 2");
  CHECK(*is_square(K.from_rational(frac(2))) == K.generator());

  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    Rational a = random_rational(rng, 60);
    auto s = is_square(QQ().from_rational(a));
    bool oracle = sgn(a) >= 0 && mpz_perfect_square_p(a.get_num_mpz_t()) && mpz_perfect_square_p(a.get_den_mpz_t());
    CHECK(s.has_value() == oracle);
    if (s) CHECK(*s * *s == QQ().from_rational(a));
  }
  for (int i = 0; i < 200; ++i) {
    auto x = random_element(rng, K, 6);
    auto s = is_square(x * x);
    REQUIRE(s);
    CHECK((*s == x || *s == -x));
    auto y = random_element(rng, K, 6);
    auto sy = is_square(y);
    auto oracle = roots_in_field(KPoly(K.zero(), {-y, K.zero(), K.one()}));
    CHECK(sy.has_value() == !oracle.empty());
  }
}

TEST_CASE("quadratic towers") {
  auto trivial = QuadraticTower::adjoin_sqrt(num(4));
  CHECK(trivial.is_trivial());
  CHECK(*trivial.base_root() == num(2));

  auto i = QuadraticTower::adjoin_sqrt(num(-1));
  CHECK_FALSE(i.is_trivial());
  auto sq = TowerElement::sqrt_radicand(i);
  CHECK(sq * sq == TowerElement(i, num(-1)));
  CHECK((sq * sq).in_base());

  auto r3 = QuadraticTower::adjoin_sqrt(num(3));
  TowerElement e(r3, num(1), num(2));
  CHECK(e * e == TowerElement(r3, num(13), num(4)));
  CHECK(e * e.inverse() == TowerElement(r3, num(1)));
  CHECK_THROWS_AS(QuadraticTower::adjoin_sqrt(num(0)), Error);
}

TEST_CASE("text form") {
  auto K = field("t^2 - 2");
  CHECK(to_string(K.element({frac(1, 2), frac(-3)})) == "1/2 - 3*t");
  CHECK(to_string(K.zero()) == "0");
}
