#include "cancelkit/decider.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <thread>

#include "cancelkit/polyring.hpp"
#include "cancelkit/witness.hpp"

namespace cancelkit {

GeneratorSet::GeneratorSet(NumberField field, std::vector<KPoly> generators) : field_(std::move(field)) {
  for (auto& g : generators) {
    if (g.degree() < 2)
      throw Error(ErrorCode::kDegreeLessThanTwo, "generator " + to_string(g) + " has degree < 2");
    if (g.zero().field() != field_) throw Error(ErrorCode::kFieldMismatch, "generator over a different field");
    if (std::find(gens_.begin(), gens_.end(), g) == gens_.end()) gens_.push_back(std::move(g));
  }
  if (gens_.empty()) throw Error(ErrorCode::kInvalidArgument, "empty generator set");
}

bool shortlex_less(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

KPoly materialize(const GeneratorSet& S, const std::vector<int>& indices) {
  if (indices.empty()) throw Error(ErrorCode::kInvalidArgument, "empty word");
  KPoly p = S[static_cast<std::size_t>(indices.front())];
  for (std::size_t k = 1; k < indices.size(); ++k) p = compose(S[static_cast<std::size_t>(indices[k])], p);
  return p;
}

std::string to_string(const std::vector<int>& indices) {
  std::string s = "[";
  for (std::size_t k = 0; k < indices.size(); ++k) s += (k ? "," : "") + std::to_string(indices[k]);
  return s + "]";
}

MonoidSlice enumerate_monoid(const GeneratorSet& S, int L, const MonoidOptions& opt) {
  if (L < 1) throw Error(ErrorCode::kInvalidArgument, "enumerate_monoid: depth must be >= 1");
  MonoidSlice out;
  std::map<std::string, std::size_t> seen;
  std::vector<std::size_t> frontier;

  auto offer = [&](std::vector<int> indices, KPoly poly) {
    std::string key = to_string(poly);
    if (seen.count(key)) return;
    seen.emplace(std::move(key), out.words.size());
    frontier.push_back(out.words.size());
    out.words.push_back(Word{std::move(indices), std::move(poly)});
  };

  for (std::size_t i = 0; i < S.size(); ++i) {
    if (S[i].degree() > opt.degree_cap) continue;
    ++out.words_generated;
    offer({static_cast<int>(i)}, S[i]);
  }
  for (int len = 2; len <= L && !out.exploded; ++len) {
    const std::vector<std::size_t> parents = std::move(frontier);
    frontier.clear();
    for (std::size_t p : parents) {
      for (std::size_t i = 0; i < S.size(); ++i) {
        const long deg = static_cast<long>(out.words[p].poly.degree()) * S[i].degree();
        if (deg > opt.degree_cap) continue;
        if (++out.words_generated > opt.word_cap) {
          out.exploded = true;
          break;
        }
        std::vector<int> indices = out.words[p].indices;
        indices.push_back(static_cast<int>(i));
        KPoly poly = compose(S[i], out.words[p].poly);
        offer(std::move(indices), std::move(poly));
      }
      if (out.exploded) break;
    }
  }
  std::sort(out.words.begin(), out.words.end(), [](const Word& a, const Word& b) {
    if (a.poly.degree() != b.poly.degree()) return a.poly.degree() < b.poly.degree();
    return shortlex_less(a.indices, b.indices);
  });
  return out;
}

const char* to_string(CaseTag t) {
  switch (t) {
    case CaseTag::kCase1: return "1";
    case CaseTag::kCase2: return "2";
    case CaseTag::kCase3A: return "3a";
    case CaseTag::kCase3B: return "3b";
  }
  return "?";
}

const char* to_string(WitnessStatus s) {
  switch (s) {
    case WitnessStatus::kUnchecked: return "UNCHECKED";
    case WitnessStatus::kVerified: return "VERIFIED";
    case WitnessStatus::kConditional: return "CONDITIONAL";
  }
  return "?";
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kObstructed: return "OBSTRUCTED";
    case Verdict::kNoObstructionUpToDepth: return "NO_OBSTRUCTION_UPTO_DEPTH";
    case Verdict::kProvenCancellation: return "PROVEN_CANCELLATION";
  }
  return "?";
}

void check_divisibility(const ObstructionWitness& w) {
  const int d = w.d;
  const int n1 = w.h1.poly.degree(), n2 = w.h2.poly.degree();
  bool ok = d >= 2 && n2 % d == 0;
  switch (w.tag) {
    case CaseTag::kCase1: ok = ok && (n1 - 1) % d == 0; break;
    case CaseTag::kCase2: ok = ok && (w.r - 1) % d == 0; break;
    case CaseTag::kCase3A:
    case CaseTag::kCase3B: ok = ok && ((w.r - 1) % d == 0 || (w.r + 1) % d == 0); break;
  }
  if (!ok)
    throw Error(ErrorCode::kCertificateFailure,
                std::string("case ") + to_string(w.tag) + " witness violates its divisibility conditions");
}

bool witness_less(const ObstructionWitness& a, const ObstructionWitness& b) {
  const int la = a.h1.length() + a.h2.length(), lb = b.h1.length() + b.h2.length();
  if (la != lb) return la < lb;
  if (a.h1.indices != b.h1.indices) return shortlex_less(a.h1.indices, b.h1.indices);
  if (a.h2.indices != b.h2.indices) return shortlex_less(a.h2.indices, b.h2.indices);
  if (a.d != b.d) return a.d < b.d;
  if (a.tag != b.tag) return a.tag < b.tag;
  if (a.trace && b.trace && *a.trace != *b.trace) return canonical_less(*a.trace, *b.trace);
  return false;
}

namespace {

std::vector<int> divisors_from_2(int n) {
  std::vector<int> out;
  n = std::abs(n);
  for (int d = 2; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

// Field-level data shared by all pair checks; safe to use from several threads.
class FieldCache {
 public:
  FieldCache(NumberField K, long height_bound) : K_(std::move(K)), height_bound_(height_bound) {}

  const NumberField& field() const { return K_; }
  long height_bound() const { return height_bound_; }

  std::optional<FieldElement> primitive_root(int d) {
    std::lock_guard<std::mutex> lock(m_);
    auto it = prim_.find(d);
    if (it == prim_.end()) it = prim_.emplace(d, contains_primitive_root(K_, d)).first;
    return it->second;
  }

  std::vector<FieldElement> traces(int d) {
    std::lock_guard<std::mutex> lock(m_);
    auto it = psi_.find(d);
    if (it == psi_.end()) it = psi_.emplace(d, real_cyclotomic_roots(K_, d)).first;
    return it->second;
  }

  ConicVerdict solve(const Conic& c, const std::optional<Point>& explicit_point) {
    const std::string key = to_string(c);
    {
      std::lock_guard<std::mutex> lock(m_);
      auto it = conics_.find(key);
      if (it != conics_.end()) return it->second;
    }
    ConicVerdict v;
    if (K_.is_rational()) {
      v = conic_rational_point(c);
      if (v.status == ConicStatus::kNoPoint && explicit_point)
        throw Error(ErrorCode::kCertificateFailure, "conic reported pointless despite an explicit point");
    } else if (explicit_point) {
      v = ConicVerdict{ConicStatus::kPointFound, explicit_point, {}, "explicit point (2u + v, uc + v)"};
    } else {
      v = conic_point_search(c, height_bound_);
    }
    std::lock_guard<std::mutex> lock(m_);
    conics_.emplace(key, v);
    return v;
  }

 private:
  NumberField K_;
  long height_bound_;
  std::mutex m_;
  std::map<int, std::optional<FieldElement>> prim_;
  std::map<int, std::vector<FieldElement>> psi_;
  std::map<std::string, ConicVerdict> conics_;
};

ObstructionWitness base_witness(CaseTag tag, const Word& h1, const Word& h2, int d, const NormalFormReport& nf) {
  return ObstructionWitness{
      .tag = tag, .h1 = h1, .h2 = h2, .d = d, .r = nf.r, .conjugator = nf.conjugator, .sign = nf.sign_resolved};
}

std::vector<ObstructionWitness> case1(const Word& h1, const NormalFormReport& nf, const Word& h2, FieldCache& fc) {
  std::vector<ObstructionWitness> out;
  if (!nf.xqxd_gcd) return out;
  const int n2 = h2.poly.degree();
  std::optional<KPoly> shifted;
  for (int d : divisors_from_2(*nf.xqxd_gcd)) {
    if (n2 % d != 0) continue;
    auto eps = fc.primitive_root(d);
    if (!eps) continue;
    // u = 1 here, so l(x) = x + v.
    if (!shifted) shifted = shift(h2.poly, nf.conjugator.v);
    if (!form_check(*shifted, d, FormKind::kPowerInner)) continue;
    ObstructionWitness w = base_witness(CaseTag::kCase1, h1, h2, d, nf);
    w.epsilon = eps;
    w.outer = to_string(extract_outer(*shifted, d, FormKind::kPowerInner), "y");
    std::vector<FieldElement> q;
    for (std::size_t i = 1; i < nf.centered.size(); i += static_cast<std::size_t>(d)) q.push_back(nf.centered[i]);
    w.inner_Q = to_string(KPoly(nf.centered.zero(), std::move(q)), "y");
    out.push_back(std::move(w));
  }
  return out;
}

// Monomial support mod d is unchanged by x -> u x, so l = x + v suffices even
// though u (with u^{r-1} = 1/a_r) need not lie in K.
std::vector<ObstructionWitness> case2(const Word& h1, const NormalFormReport& nf, const Word& h2, FieldCache& fc) {
  std::vector<ObstructionWitness> out;
  if (!nf.has(NormalKind::kPower)) return out;
  const int n2 = h2.poly.degree();
  std::optional<KPoly> shifted;
  for (int d : divisors_from_2(nf.r - 1)) {
    if (n2 % d != 0) continue;
    auto eps = fc.primitive_root(d);
    if (!eps) continue;
    if (!shifted) shifted = shift(h2.poly, nf.conjugator.v);
    if (!form_check(*shifted, d, FormKind::kPowerInner)) continue;
    ObstructionWitness w = base_witness(CaseTag::kCase2, h1, h2, d, nf);
    w.epsilon = eps;
    w.outer = to_string(extract_outer(*shifted, d, FormKind::kPowerInner), "y");
    out.push_back(std::move(w));
  }
  return out;
}

// The Chebyshev-basis support of h2(u x + v) mod d does not depend on the sign
// of u (T_i(-x) = (-1)^i T_i(x)), so the tower K(sqrt(u^2)) is enough.
std::vector<ObstructionWitness> case3(const Word& h1, const NormalFormReport& nf, const Word& h2, FieldCache& fc) {
  std::vector<ObstructionWitness> out;
  if (!nf.has(NormalKind::kChebyshev)) return out;
  const int r = nf.r, n2 = h2.poly.degree();
  std::vector<int> ds;
  for (int d = 2; d <= r + 1; ++d)
    if (n2 % d == 0 && ((r - 1) % d == 0 || (r + 1) % d == 0)) ds.push_back(d);
  if (ds.empty()) return out;

  const FieldElement& v = nf.conjugator.v;
  const FieldElement& w2 = *nf.conjugator.u_squared;
  const QuadraticTower tower = QuadraticTower::adjoin_sqrt(w2);
  const TowerPoly H = conjugate_by(h2.poly, v, tower);
  const auto expansion = cheb_expand(H);

  for (int d : ds) {
    bool inner = true;
    for (const auto& [i, c] : expansion.a) inner = inner && i % d == 0;
    if (!inner) continue;
    const std::string outer = to_string(extract_outer(H, d, FormKind::kChebInner), "y");
    if (d == 2) {
      ObstructionWitness w = base_witness(CaseTag::kCase3A, h1, h2, d, nf);
      w.trace = fc.field().from_rational(Rational(-2));
      w.outer = outer;
      out.push_back(std::move(w));
      continue;
    }
    for (const FieldElement& c : fc.traces(d)) {
      ObstructionWitness w = base_witness(CaseTag::kCase3B, h1, h2, d, nf);
      w.trace = c;
      w.outer = outer;
      w.conic = conic_from_case3(w2, v, c);
      if (const auto& u = nf.conjugator.u_in_K) w.explicit_point = Point{*u * Rational(2) + v, *u * c + v};
      w.conic_verdict = fc.solve(*w.conic, w.explicit_point);
      if (w.conic_verdict->status == ConicStatus::kNoPoint) continue;
      out.push_back(std::move(w));
    }
  }
  return out;
}

std::vector<ObstructionWitness> check_pair(const Word& h1, const NormalFormReport& nf, const Word& h2,
                                           FieldCache& fc) {
  auto out = case1(h1, nf, h2, fc);
  for (auto& w : case2(h1, nf, h2, fc)) out.push_back(std::move(w));
  for (auto& w : case3(h1, nf, h2, fc)) out.push_back(std::move(w));
  return out;
}

std::set<int> prime_divisors(int n) {
  std::set<int> out;
  for (int p = 2; p * p <= n; ++p)
    while (n % p == 0) {
      out.insert(p);
      n /= p;
    }
  if (n > 1) out.insert(n);
  return out;
}

void verify(ObstructionWitness& w) {
  check_divisibility(w);
  const InvariantCurve curve = invariant_curve(w);
  w.curve = curve.equation;
  if (w.tag == CaseTag::kCase3B && w.conic_verdict->status != ConicStatus::kPointFound) {
    w.status = WitnessStatus::kConditional;
    return;
  }
  if (generate_pairs(w, 0, 1).empty())
    throw Error(ErrorCode::kCertificateFailure, "witness produced no counterexample pair");
  w.status = WitnessStatus::kVerified;
}

}  // namespace

std::vector<ObstructionWitness> check_case1(const Word& h1, const Word& h2, const NumberField& K) {
  FieldCache fc(K, 3);
  return case1(h1, classify(h1.poly), h2, fc);
}

std::vector<ObstructionWitness> check_case2(const Word& h1, const Word& h2, const NumberField& K) {
  FieldCache fc(K, 3);
  return case2(h1, classify(h1.poly), h2, fc);
}

std::vector<ObstructionWitness> check_case3(const Word& h1, const Word& h2, const NumberField& K, long height_bound) {
  FieldCache fc(K, height_bound);
  return case3(h1, classify(h1.poly), h2, fc);
}

std::optional<AbsenceProof> prove_absence(const GeneratorSet& S) {
  const NumberField& K = S.field();
  const int n = K.degree();
  AbsenceProof proof;
  // phi(d) >= sqrt(d / 2), so phi(d) <= 2n forces d <= 8 n^2.
  const int bound = 8 * n * n + 6;
  for (int d = 2; d <= bound; ++d) {
    if (euler_phi(d) > 2 * n) continue;
    std::vector<std::string> why;
    if (d == 2) why.push_back("d = 2 is always available (case 3a)");
    if (d > 2 && contains_primitive_root(K, d)) why.push_back("K contains a primitive d-th root of unity");
    if (d > 2 && !real_cyclotomic_roots(K, d).empty()) why.push_back("Psi_d has a root in K");
    if (why.empty()) continue;
    std::string s = why.front();
    for (std::size_t i = 1; i < why.size(); ++i) s += "; " + why[i];
    proof.candidate_d.emplace(d, s);
  }
  for (const auto& g : S.generators())
    for (int p : prime_divisors(g.degree())) proof.degree_primes.insert(p);

  std::ostringstream trace;
  trace << "every case needs d | deg h2, and deg h2 is a product of generator degrees;";
  trace << " generator degree primes {";
  bool first = true;
  for (int p : proof.degree_primes) {
    trace << (first ? "" : ", ") << p;
    first = false;
  }
  trace << "}";
  for (const auto& [d, why] : proof.candidate_d) {
    std::optional<int> missing;
    for (int p : prime_divisors(d))
      if (!proof.degree_primes.count(p)) {
        missing = p;
        break;
      }
    if (!missing) return std::nullopt;
    trace << "; d = " << d << ": prime " << *missing << " divides no generator degree";
  }
  proof.rule_trace = trace.str();
  return proof;
}

DecisionReport decide(const GeneratorSet& S, const DecideOptions& opt) {
  if (opt.depth < 1) throw Error(ErrorCode::kInvalidArgument, "decide: depth must be >= 1");
  DecisionReport rep;
  rep.depth = opt.depth;
  rep.notes.push_back("case 2 condition checked: l^{-1} o h1 o l = P_r (not l o h1^{-1} o l = P_r)");
  if (opt.use_prover) {
    if (auto proof = prove_absence(S)) {
      rep.verdict = Verdict::kProvenCancellation;
      rep.absence_proof = std::move(proof);
      return rep;
    }
  }

  const MonoidSlice slice = enumerate_monoid(S, opt.depth, opt.monoid);
  const auto& words = slice.words;
  rep.stats.words = words.size();
  rep.stats.exploded = slice.exploded;
  if (slice.exploded) rep.notes.push_back("word cap reached; the search below is partial");

  FieldCache fc(S.field(), opt.height_bound);
  std::vector<std::optional<NormalFormReport>> nf(words.size());
  std::vector<std::vector<ObstructionWitness>> found(words.size());

  auto work = [&](std::size_t i) {
    nf[i] = classify(words[i].poly);
    for (const auto& h2 : words) {
      auto ws = check_pair(words[i], *nf[i], h2, fc);
      for (auto& w : ws) verify(w);
      for (auto& w : ws) found[i].push_back(std::move(w));
    }
  };

  const unsigned threads = std::max(1u, opt.threads);
  if (threads == 1) {
    for (std::size_t i = 0; i < words.size(); ++i) work(i);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(threads);
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&, t] {
        try {
          for (std::size_t i = t; i < words.size(); i += threads) work(i);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    for (auto& th : pool) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  rep.stats.pairs = words.size() * words.size();
  for (auto& ws : found)
    for (auto& w : ws) rep.witnesses.push_back(std::move(w));
  std::stable_sort(rep.witnesses.begin(), rep.witnesses.end(), witness_less);
  std::set<std::pair<std::vector<int>, std::vector<int>>> pairs;
  for (const auto& w : rep.witnesses) pairs.emplace(w.h1.indices, w.h2.indices);
  rep.stats.candidate_pairs = pairs.size();

  if (rep.witnesses.empty()) {
    rep.verdict = Verdict::kNoObstructionUpToDepth;
    return rep;
  }
  rep.verdict = Verdict::kObstructed;
  rep.conditional = std::none_of(rep.witnesses.begin(), rep.witnesses.end(),
                                 [](const ObstructionWitness& w) { return w.status == WitnessStatus::kVerified; });
  if (rep.conditional) rep.notes.push_back("obstruction modulo conic solvability: no case 3b conic point was found");
  for (const auto& w : rep.witnesses)
    if (w.status == WitnessStatus::kConditional) {
      rep.notes.push_back("some case 3b conics over K were only searched to the height bound");
      break;
    }
  return rep;
}

}  // namespace cancelkit
