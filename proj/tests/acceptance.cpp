// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 on any FAIL.
// Usage: acceptance [--json FILE]
#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "cancelkit/conics.hpp"
#include "cancelkit/conjugacy.hpp"
#include "cancelkit/decider.hpp"
#include "cancelkit/polyring.hpp"
#include "cancelkit/report.hpp"
#include "cancelkit/witness.hpp"
#include "support.hpp"

using namespace cancelkit;
using namespace testing;

namespace {

struct Outcome {
  std::vector<std::string> failures;
  Json report = Json::object();

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

struct Criterion {
  int id;
  std::string title;
  double budget_s;
  std::function<void(Outcome&)> body;
};

GeneratorSet gens(const char* text) { return GeneratorSet(QQ(), parse_generators(text, QQ())); }

DecisionReport run_decide(const GeneratorSet& S, int depth, bool prover = true) {
  DecideOptions o;
  o.depth = depth;
  o.use_prover = prover;
  return decide(S, o);
}

const ObstructionWitness* find(const DecisionReport& r, CaseTag tag, std::vector<int> h1, std::vector<int> h2, int d) {
  for (const auto& w : r.witnesses)
    if (w.tag == tag && w.h1.indices == h1 && w.h2.indices == h2 && w.d == d) return &w;
  return nullptr;
}

FieldElement apply_word(const GeneratorSet& S, const std::vector<int>& word, FieldElement x) {
  for (int i : word) x = S[static_cast<std::size_t>(i)](x);
  return x;
}

// The named witnesses of the four obstructed sets.
struct NamedWitness {
  std::string label;
  const char* generators;
  CaseTag tag;
  std::vector<int> h1, h2;
  int d;
};

const std::vector<NamedWitness>& named_witnesses() {
  static const std::vector<NamedWitness> v{
      {"{T2,T3} 3a", "T(2), T(3)", CaseTag::kCase3A, {1}, {0}, 2},
      {"{x^3,x^2} case 1", "x^3, x^2", CaseTag::kCase1, {0}, {1}, 2},
      {"{x^3,x^2} case 2", "x^3, x^2", CaseTag::kCase2, {0}, {1}, 2},
      {"{x^3-2x,x^2} case 1", "x^3 - 2*x, x^2", CaseTag::kCase1, {0}, {1}, 2},
      {"{T4,T3} 3b", "T(4), T(3)", CaseTag::kCase3B, {0}, {1}, 3},
  };
  return v;
}

void obstruction_certificates(Outcome& out) {
  for (const char* g : {"T(2), T(3)", "x^3, x^2", "x^3 - 2*x, x^2", "T(4), T(3)"}) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto r = run_decide(gens(g), 2);
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.expect(s < 5.0, std::string(g) + ": took " + std::to_string(s) + " s");
    out.expect(r.verdict == Verdict::kObstructed, std::string(g) + ": not OBSTRUCTED");
    for (const auto& w : r.witnesses)
      out.expect(w.status == WitnessStatus::kVerified, std::string(g) + ": witness not VERIFIED");
    out.report[g] = to_json(r);
  }
  for (const auto& n : named_witnesses()) {
    const auto r = run_decide(gens(n.generators), 2);
    out.expect(find(r, n.tag, n.h1, n.h2, n.d) != nullptr, n.label + ": witness missing");
  }
  const auto r = run_decide(gens("T(4), T(3)"), 2);
  if (const auto* w = find(r, CaseTag::kCase3B, {0}, {1}, 3)) {
    out.expect(to_string(*w->conic) == "X^2 + X*Y + Y^2 - 3", "{T4,T3}: conic is " + to_string(*w->conic));
    out.expect(w->conic_verdict && w->conic_verdict->point == Point{num(1), num(1)}, "{T4,T3}: conic point is not (1, 1)");
  }
}

void moreover_pairs(Outcome& out) {
  for (const auto& n : named_witnesses()) {
    const auto S = gens(n.generators);
    const auto r = run_decide(S, 2);
    const auto* w = find(r, n.tag, n.h1, n.h2, n.d);
    if (!w) {
      out.expect(false, n.label + ": witness missing");
      continue;
    }
    for (int j = 0; j <= 3; ++j) {
      const auto pairs = generate_pairs(*w, j, 25);
      std::set<std::string> distinct;
      Json js = Json::array();
      for (const auto& p : pairs) {
        distinct.insert(to_string(p.a) + "," + to_string(p.b));
        FieldElement a = p.a, b = p.b;
        for (int k = 0; k < j; ++k) {
          a = apply_word(S, w->h1.indices, a);
          b = apply_word(S, w->h1.indices, b);
        }
        const bool ok = a != b && apply_word(S, w->h2.indices, a) == apply_word(S, w->h2.indices, b);
        out.expect(ok, n.label + ": pair (" + to_string(p.a) + ", " + to_string(p.b) + ") fails at j = " + std::to_string(j));
        out.expect(verify_pair_stepwise(S, *w, p), n.label + ": stepwise check failed");
        js.push_back(to_json(p));
      }
      out.expect(distinct.size() >= 25, n.label + ": only " + std::to_string(distinct.size()) + " distinct pairs");
      out.report[n.label][std::to_string(j)] = js;
    }
  }
}

void proven_cancellation(Outcome& out) {
  const auto S = gens("T(5), P(5)");
  for (int L : {1, 2, 3, 4, 8}) {
    const auto r = run_decide(S, L);
    out.expect(r.verdict == Verdict::kProvenCancellation && r.absence_proof.has_value(),
               "L = " + std::to_string(L) + ": not PROVEN_CANCELLATION");
    if (L == 1) out.report["proof"] = to_json(r);
  }
  const auto audit = run_decide(S, 4, false);
  out.expect(audit.witnesses.empty(), "audit at L = 4 found " + std::to_string(audit.witnesses.size()) + " witnesses");
  out.expect(!audit.stats.exploded, "audit at L = 4 hit the word cap");
  out.report["audit"] = to_json(audit);
}

void negative_controls(Outcome& out) {
  for (const char* g : {"x^2", "x^2 + 1"}) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto r = run_decide(gens(g), 6);
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.expect(s < 30.0, std::string(g) + ": took " + std::to_string(s) + " s");
    out.expect(r.witnesses.empty() && r.verdict != Verdict::kObstructed, std::string(g) + ": witness found");
    out.report[g] = to_json(r);
  }
}

bool has_small_point(const std::array<long, 6>& c) {
  for (std::int64_t z = 1; z <= 50; ++z)
    for (std::int64_t x = -50; x <= 50; ++x)
      for (std::int64_t y = -50; y <= 50; ++y)
        if (c[0] * x * x + c[1] * x * y + c[2] * y * y + c[3] * x * z + c[4] * y * z + c[5] * z * z == 0) return true;
  return false;
}

void conic_module(Outcome& out) {
  std::mt19937_64 rng(5150);
  std::uniform_int_distribution<long> coef(-20, 20);
  Json verdicts = Json::array();
  int found = 0, none = 0;
  for (int n = 0; n < 200; ++n) {
    std::array<long, 6> c{};
    do {
      for (auto& a : c) a = coef(rng);
    } while (c[0] == 0 && c[1] == 0 && c[2] == 0);
    const Conic C{num(c[0]), num(c[1]), num(c[2]), num(c[3]), num(c[4]), num(c[5])};
    const auto v = conic_rational_point(C);
    verdicts.push_back(Json{{"conic", to_string(C)}, {"verdict", to_json(v)}});
    if (v.status == ConicStatus::kPointFound) {
      ++found;
      out.expect(C(v.point->first, v.point->second).is_zero(), to_string(C) + ": point off the conic");
    } else if (v.status == ConicStatus::kNoPoint) {
      ++none;
      out.expect(!has_small_point(c), to_string(C) + ": NO_POINT but a height-50 point exists");
    } else {
      out.expect(false, to_string(C) + ": UNKNOWN over Q");
    }
  }
  out.report["solver"] = verdicts;
  out.report["found"] = found;
  out.report["no_point"] = none;

  for (auto [d, m] : {std::pair{3, "t^2 + t + 1"}, std::pair{4, "t^2 + 1"}, std::pair{6, "t^2 - t + 1"}}) {
    const auto K = parse_field(m);
    const auto eps = contains_primitive_root(K, d);
    out.expect(eps.has_value(), "no primitive root for d = " + std::to_string(d));
    if (!eps) continue;
    const auto c = *eps + eps->inverse();
    const auto C = conic_from_case3(K.one(), K.zero(), c);
    for (int n = 0; n < 50; ++n) {
      const auto x = K.from_rational(random_nonzero_rational(rng, 30));
      const auto ex = *eps * x;
      out.expect(C(x + x.inverse(), ex + ex.inverse()).is_zero(), "membership fails for d = " + std::to_string(d));
    }
    for (int n = 0; n < 50; ++n) {
      const auto u = K.from_rational(random_nonzero_rational(rng, 25));
      const auto v = K.from_rational(random_rational(rng, 25));
      const auto Cuv = conic_from_case3(u * u, v, c);
      out.expect(Cuv(u * frac(2) + v, u * c + v).is_zero(), "explicit point off the conic for d = " + std::to_string(d));
    }
  }
}

void algebra_suites(Outcome& out) {
  const auto T = [](int r) { return chebyshev(r, num(0)); };
  int checks = 0;
  for (int m = 1; m <= 8; ++m)
    for (int n = 1; n <= 8; ++n, ++checks) {
      out.expect(compose(T(m), T(n)) == chebyshev_closed_form(m * n), "T_m o T_n != T_mn");
      out.expect(compose(power_map(m, num(0)), power_map(n, num(0))) == power_map(m * n, num(0)), "P_m o P_n != P_mn");
    }
  using Laurent = LaurentPolynomial<FieldElement>;
  const auto s = Laurent::monomial(num(1), 1) + Laurent::monomial(num(1), -1);
  for (int r = 1; r <= 10; ++r, ++checks)
    out.expect(laurent_substitute(T(r), s) == Laurent::monomial(num(1), r) + Laurent::monomial(num(1), -r),
               "semiconjugacy fails for r = " + std::to_string(r));

  std::mt19937_64 rng(6);
  std::uniform_int_distribution<int> deg(0, 12);
  for (int n = 0; n < 500; ++n, ++checks) {
    const auto f = random_poly(rng, QQ(), deg(rng), 20);
    out.expect(cheb_expand(f).reconstruct() == f, "cheb_expand round trip: " + to_string(f));
  }

  std::uniform_int_distribution<int> kind_d(0, 2), r_d(2, 9);
  for (int n = 0; n < 200; ++n, ++checks) {
    const int kind = kind_d(rng), r = r_d(rng);
    KPoly nf = kind == 0 ? power_map(r, num(0)) : T(r);
    if (kind == 2) nf = -nf;
    const auto u = QQ().from_rational(random_nonzero_rational(rng, 4));
    const auto v = QQ().from_rational(random_rational(rng, 6));
    const KPoly l(QQ().zero(), {v, u});
    const KPoly l_inv(QQ().zero(), {-v / u, u.inverse()});
    const auto rep = classify(compose(l, compose(nf, l_inv)));
    const bool ok = rep.has(kind == 0 ? NormalKind::kPower : NormalKind::kChebyshev) && rep.r == r &&
                    rep.conjugator.v == v && rep.conjugator.u_squared && *rep.conjugator.u_squared == u * u;
    out.expect(ok, "conjugacy round trip fails: kind " + std::to_string(kind) + ", r " + std::to_string(r));
  }

  std::uniform_int_distribution<int> small(2, 3);
  for (int n = 0; n < 100; ++n, ++checks) {
    const auto f = compose(random_poly(rng, QQ(), small(rng), 7), random_poly(rng, QQ(), small(rng), 7));
    const auto parts = decompose(f);
    bool ok = compose_all(parts) == f;
    for (const auto& p : parts) ok = ok && p.degree() >= 2 && decompose(p).size() == 1;
    out.expect(ok, "decompose fails on " + to_string(f));
  }
  out.report["checks"] = checks;
}

std::vector<BivariatePolynomial> inventory(const DecisionReport& r) {
  std::vector<BivariatePolynomial> curves;
  std::set<std::string> seen;
  for (const auto& w : r.witnesses)
    if (w.curve && seen.insert(to_string(*w.curve)).second) curves.push_back(*w.curve);
  return curves;
}

bool on_any(const std::vector<BivariatePolynomial>& curves, const FieldElement& a, const FieldElement& b) {
  return std::any_of(curves.begin(), curves.end(), [&](const BivariatePolynomial& F) { return F(a, b).is_zero(); });
}

void cross_validation(Outcome& out) {
  for (const auto& n : named_witnesses()) {
    const auto S = gens(n.generators);
    const auto r = run_decide(S, 2);
    const auto* w = find(r, n.tag, n.h1, n.h2, n.d);
    if (!w) {
      out.expect(false, n.label + ": witness missing");
      continue;
    }
    Json depths = Json::array();
    for (int j : {0, 1}) {
      const int bound = w->h1.length() * j + w->h2.length();
      for (const auto& p : generate_pairs(*w, j, 25)) {
        const auto hit = collision_oracle(S, p.a, p.b, bound);
        out.expect(hit && hit->depth <= bound, n.label + ": no collision within depth " + std::to_string(bound));
        depths.push_back(hit ? hit->depth : -1);
      }
    }
    out.report["generated"][n.label] = depths;
  }

  // Random pairs off every inventory curve: a first collision at depth k must
  // come from a depth-(k-1) pair lying on an inventory curve.
  const auto pool = rationals_up_to_height(10);
  std::mt19937_64 rng(777);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  int collisions = 0;
  for (const char* g : {"T(2), T(3)", "x^3, x^2", "x^3 - 2*x, x^2", "T(4), T(3)"}) {
    const auto S = gens(g);
    const auto curves = inventory(run_decide(S, 2));
    Json rows = Json::array();
    for (int n = 0; n < 25;) {
      const auto a = QQ().from_rational(pool[pick(rng)]), b = QQ().from_rational(pool[pick(rng)]);
      if (a == b || on_any(curves, a, b)) continue;
      ++n;
      const auto hit = collision_oracle(S, a, b, 4);
      Json row{{"a", to_json(a)}, {"b", to_json(b)}};
      if (hit) {
        ++collisions;
        const std::vector<int> prefix(hit->word.begin(), hit->word.begin() + (hit->depth - 1));
        const bool explained = on_any(curves, apply_word(S, prefix, a), apply_word(S, prefix, b));
        out.expect(explained, std::string(g) + ": unexplained collision of (" + to_string(a) + ", " + to_string(b) + ")");
        row["word"] = hit->word;
        row["depth"] = hit->depth;
      }
      rows.push_back(row);
    }
    out.report["off_curve"][g] = rows;

    // Off-curve pairs whose first image lands on an inventory curve collide
    // only at depth >= 2; they exercise the rule above.
    Json deep = Json::array();
    for (const auto& qa : pool)
      for (const auto& qb : pool) {
        const auto a = QQ().from_rational(qa), b = QQ().from_rational(qb);
        if (a == b || on_any(curves, a, b)) continue;
        bool lands = false;
        for (const auto& f : S.generators()) lands = lands || (f(a) != f(b) && on_any(curves, f(a), f(b)));
        if (!lands) continue;
        const auto hit = collision_oracle(S, a, b, 4);
        out.expect(hit.has_value(), std::string(g) + ": (" + to_string(a) + ", " + to_string(b) + ") never collides");
        if (!hit) continue;
        ++collisions;
        const std::vector<int> prefix(hit->word.begin(), hit->word.begin() + (hit->depth - 1));
        out.expect(hit->depth >= 2, std::string(g) + ": off-curve pair collides at depth 1");
        out.expect(on_any(curves, apply_word(S, prefix, a), apply_word(S, prefix, b)),
                   std::string(g) + ": unexplained collision of (" + to_string(a) + ", " + to_string(b) + ")");
        deep.push_back(Json{{"a", to_json(a)}, {"b", to_json(b)}, {"word", hit->word}, {"depth", hit->depth}});
      }
    out.report["preimage_pairs"][g] = deep;
  }
  out.report["off_curve_collisions"] = collisions;
}

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> v{
      {1, "obstruction certificates", 20.0, obstruction_certificates},
      {2, "counterexample pairs for j = 0..3", 30.0, moreover_pairs},
      {3, "{T5, P5} proven cancellation and audit", 60.0, proven_cancellation},
      {4, "negative controls at depth 6", 60.0, negative_controls},
      {5, "conic solver, membership and explicit point", 120.0, conic_module},
      {6, "algebra suites", 60.0, algebra_suites},
      {7, "collision oracle cross-validation", 120.0, cross_validation},
  };
  return v;
}

void print(int id, bool ok, const std::string& title, double seconds, const std::vector<std::string>& failures) {
  std::cout << (ok ? "PASS" : "FAIL") << "  " << id << "  " << title << "  (" << std::fixed << std::setprecision(2)
            << seconds << " s)\n";
  for (std::size_t i = 0; i < failures.size() && i < 10; ++i) std::cout << "      " << failures[i] << "\n";
  if (failures.size() > 10) std::cout << "      ... " << failures.size() - 10 << " more\n";
  std::cout.flush();
}

Json run_suite(bool verbose, bool& all_ok) {
  Json suite = Json::object();
  for (const auto& c : criteria()) {
    Outcome out;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.body(out);
    } catch (const std::exception& e) {
      out.failures.push_back(std::string("exception: ") + e.what());
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (s > c.budget_s) out.failures.push_back("over the time budget of " + std::to_string(c.budget_s) + " s");
    const bool ok = out.failures.empty();
    all_ok = all_ok && ok;
    if (verbose) print(c.id, ok, c.title, s, out.failures);
    suite[std::to_string(c.id)] = out.report;
  }
  return suite;
}

}  // namespace

int main(int argc, char** argv) {
  std::string json_path;
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--json") json_path = argv[i + 1];

  bool all_ok = true;
  const std::string first = canonical_dump(run_suite(true, all_ok));

  const auto t0 = std::chrono::steady_clock::now();
  bool second_ok = true;
  const std::string second = canonical_dump(run_suite(false, second_ok));
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::vector<std::string> failures;
  if (first != second) failures.push_back("the two runs produced different JSON reports");
  if (!second_ok) failures.push_back("the second run did not pass");
  print(8, failures.empty(), "determinism of two full runs (" + std::to_string(first.size()) + " bytes)", s, failures);
  all_ok = all_ok && failures.empty();

  if (!json_path.empty()) std::ofstream(json_path) << first;
  return all_ok ? 0 : 1;
}
