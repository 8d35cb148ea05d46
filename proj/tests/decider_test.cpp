#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "cancelkit/decider.hpp"
#include "cancelkit/error.hpp"
#include "cancelkit/polyring.hpp"
#include "cancelkit/report.hpp"
#include "support.hpp"

using namespace cancelkit;
using namespace testing;

namespace {

GeneratorSet gens(const char* text, const NumberField& K = QQ()) { return GeneratorSet(K, parse_generators(text, K)); }

Word word(const GeneratorSet& S, std::vector<int> idx) { return Word{idx, materialize(S, idx)}; }

std::set<std::string> monoid_oracle(const GeneratorSet& S, int L) {
  std::set<std::string> out;
  std::vector<KPoly> level{KPoly::identity(S.field().one())};
  for (int k = 1; k <= L; ++k) {
    std::vector<KPoly> next;
    for (const auto& f : level)
      for (const auto& g : S.generators()) next.push_back(compose(g, f));
    for (const auto& f : next) out.insert(to_string(f));
    level = std::move(next);
  }
  return out;
}

bool has_witness(const DecisionReport& r, CaseTag tag, std::vector<int> h1, std::vector<int> h2, int d) {
  return std::any_of(r.witnesses.begin(), r.witnesses.end(), [&](const ObstructionWitness& w) {
    return w.tag == tag && w.h1.indices == h1 && w.h2.indices == h2 && w.d == d;
  });
}

}  // namespace

TEST_CASE("generator sets") {
  auto S = gens("x^2, x^3, x^2");
  CHECK(S.size() == 2);
  try {
    gens("x^2, x + 1");
    FAIL("expected DEGREE_LT_2");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kDegreeLessThanTwo);
  }
  auto K = parse_field("t^2 - 2");
  CHECK_THROWS_AS(GeneratorSet(QQ(), {px("x^2"), px("x^2", K)}), Error);
}

TEST_CASE("monoid enumeration") {
  auto S = gens("x^2");
  auto m = enumerate_monoid(S, 3);
  REQUIRE(m.words.size() == 3);
  CHECK(m.words[0].poly == px("x^2"));
  CHECK(m.words[1].poly == px("x^4"));
  CHECK(m.words[2].poly == px("x^8"));

  S = gens("T(2), T(3)");
  m = enumerate_monoid(S, 2);
  std::vector<KPoly> expect{chebyshev_closed_form(2), chebyshev_closed_form(3), chebyshev_closed_form(4),
                            chebyshev_closed_form(6), chebyshev_closed_form(9)};
  REQUIRE(m.words.size() == expect.size());
  for (std::size_t i = 0; i < expect.size(); ++i) CHECK(m.words[i].poly == expect[i]);
  CHECK(m.words[3].indices == std::vector<int>{0, 1});

  CHECK(enumerate_monoid(gens("x^2, x^2 + 1"), 2).words.size() == 6);

  std::mt19937_64 rng(31);
  for (int n = 0; n < 20; ++n) {
    std::vector<KPoly> g;
    for (int i = 0; i < 2 + n % 2; ++i) g.push_back(n % 3 == 0 ? chebyshev(2 + i, num(0)) : random_poly(rng, QQ(), 2, 2));
    GeneratorSet R(QQ(), g);
    auto slice = enumerate_monoid(R, 3);
    std::set<std::string> got;
    for (const auto& w : slice.words) {
      got.insert(to_string(w.poly));
      CHECK(materialize(R, w.indices) == w.poly);
    }
    CHECK(got == monoid_oracle(R, 3));
    CHECK(got.size() == slice.words.size());
  }
}

TEST_CASE("monoid caps") {
  MonoidOptions opt;
  opt.word_cap = 10;
  auto m = enumerate_monoid(gens("x^2, x^3, x^2 + 1"), 4, opt);
  CHECK(m.exploded);
  CHECK(m.words.size() <= 10);
  opt = {};
  opt.degree_cap = 8;
  m = enumerate_monoid(gens("x^2, x^3"), 5, opt);
  for (const auto& w : m.words) CHECK(w.poly.degree() <= 8);
}

TEST_CASE("case 1") {
  auto S = gens("x^3 - 2*x, x^2, x^3");
  auto w = check_case1(word(S, {0}), word(S, {1}), QQ());
  REQUIRE(w.size() == 1);
  CHECK(w[0].d == 2);
  CHECK(w[0].conjugator.v == num(0));
  CHECK(*w[0].inner_Q == "y - 2");
  CHECK(w[0].outer == "y");
  CHECK(*w[0].epsilon == num(-1));
  CHECK(check_case1(word(S, {1}), word(S, {0}), QQ()).empty());
  CHECK(check_case1(word(S, {1}), word(S, {1}), QQ()).empty());
  CHECK(check_case1(word(S, {0}), word(S, {2}), QQ()).empty());
}

TEST_CASE("case 2") {
  auto S = gens("x^3, x^2, x^2 + 2*x");
  auto w = check_case2(word(S, {0}), word(S, {1}), QQ());
  REQUIRE(w.size() == 1);
  CHECK(w[0].d == 2);
  CHECK(check_case2(word(S, {0}), word(S, {0}), QQ()).empty());
  CHECK(check_case2(word(S, {2}), word(S, {0}), QQ()).empty());
  CHECK(check_case2(word(S, {2}), word(S, {1}), QQ()).empty());
}

TEST_CASE("case 3") {
  auto S = gens("T(2), T(3), T(4)");
  auto w = check_case3(word(S, {1}), word(S, {0}), QQ());
  REQUIRE(w.size() == 1);
  CHECK(w[0].tag == CaseTag::kCase3A);
  CHECK(w[0].d == 2);
  CHECK(w[0].r == 3);

  w = check_case3(word(S, {2}), word(S, {1}), QQ());
  REQUIRE(w.size() == 1);
  CHECK(w[0].tag == CaseTag::kCase3B);
  CHECK(w[0].d == 3);
  CHECK(*w[0].trace == num(-1));
  CHECK(to_string(*w[0].conic) == "X^2 + X*Y + Y^2 - 3");
  CHECK(w[0].conic_verdict->status == ConicStatus::kPointFound);
  CHECK(*w[0].conic_verdict->point == Point{num(1), num(1)});

  CHECK(check_case3(word(S, {1}), word(S, {1}), QQ()).empty());
}

TEST_CASE("witness divisibility invariants") {
  for (const char* g : {"T(2), T(3)", "x^3, x^2", "x^3 - 2*x, x^2", "T(4), T(3)", "T(5), x^2"}) {
    DecideOptions opt;
    opt.depth = 2;
    auto r = decide(gens(g), opt);
    for (const auto& w : r.witnesses) {
      CHECK_NOTHROW(check_divisibility(w));
      const int n2 = w.h2.poly.degree();
      CHECK(n2 % w.d == 0);
    }
  }
  auto S = gens("x^3, x^2");
  auto bad = check_case2(word(S, {0}), word(S, {1}), QQ()).at(0);
  bad.h2 = bad.h1;
  CHECK_THROWS_AS(check_divisibility(bad), Error);
}

TEST_CASE("decide") {
  DecideOptions opt;
  opt.depth = 1;
  auto r = decide(gens("T(2), T(3)"), opt);
  CHECK(r.verdict == Verdict::kObstructed);
  CHECK(has_witness(r, CaseTag::kCase3A, {1}, {0}, 2));

  opt.depth = 6;
  r = decide(gens("x^2 + 1"), opt);
  CHECK(r.verdict == Verdict::kNoObstructionUpToDepth);
  CHECK(r.witnesses.empty());

  opt.depth = 2;
  r = decide(gens("x^3, x^2"), opt);
  CHECK(has_witness(r, CaseTag::kCase1, {0}, {1}, 2));
  CHECK(has_witness(r, CaseTag::kCase2, {0}, {1}, 2));
  for (const auto& w : r.witnesses) CHECK(w.status == WitnessStatus::kVerified);
  CHECK(std::is_sorted(r.witnesses.begin(), r.witnesses.end(), witness_less));
}

TEST_CASE("absence prover") {
  auto p = prove_absence(gens("T(5), P(5)"));
  REQUIRE(p);
  std::set<int> d;
  for (const auto& [k, why] : p->candidate_d) d.insert(k);
  CHECK(std::includes(std::set<int>{2, 3, 4, 6}.begin(), std::set<int>{2, 3, 4, 6}.end(), d.begin(), d.end()));
  CHECK(p->degree_primes == std::set<int>{5});
  CHECK_FALSE(prove_absence(gens("x^2, x^3")));
  p = prove_absence(gens("x^7"));
  REQUIRE(p);
  CHECK(p->degree_primes == std::set<int>{7});

  DecideOptions opt;
  opt.depth = 2;
  auto r = decide(gens("T(5), P(5)"), opt);
  CHECK(r.verdict == Verdict::kProvenCancellation);
  CHECK(r.absence_proof);
}

TEST_CASE("support residues are unchanged by scaling") {
  std::mt19937_64 rng(8);
  for (int n = 0; n < 200; ++n) {
    auto f = random_poly(rng, QQ(), 1 + n % 9, 4);
    auto u = QQ().from_rational(random_nonzero_rational(rng, 7));
    auto g = scale(f, u);
    CHECK(g.support() == f.support());
    for (int d = 2; d <= 5; ++d)
      CHECK(form_check(g, d, FormKind::kPowerInner) == form_check(f, d, FormKind::kPowerInner));
  }
}

TEST_CASE("decide is deterministic across thread counts") {
  for (const char* g : {"T(2), T(3)", "x^3, x^2 + x", "T(4), T(3), x^2"}) {
    DecideOptions opt;
    opt.depth = 3;
    opt.threads = 1;
    auto a = canonical_dump(to_json(decide(gens(g), opt)));
    opt.threads = 4;
    auto b = canonical_dump(to_json(decide(gens(g), opt)));
    CHECK(a == b);
  }
}
