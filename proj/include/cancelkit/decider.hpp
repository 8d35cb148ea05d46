#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cancelkit/bivariate.hpp"
#include "cancelkit/conics.hpp"
#include "cancelkit/conjugacy.hpp"
#include "cancelkit/numberfield.hpp"

namespace cancelkit {

/// Generators of degree >= 2 over one field, duplicates dropped, order kept.
class GeneratorSet {
 public:
  /// Throws Error(kDegreeLessThanTwo) or Error(kFieldMismatch).
  GeneratorSet(NumberField field, std::vector<KPoly> generators);

  const NumberField& field() const { return field_; }
  const std::vector<KPoly>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  const KPoly& operator[](std::size_t i) const { return gens_[i]; }

 private:
  NumberField field_;
  std::vector<KPoly> gens_;
};

/// indices = [i1, ..., ik] denotes phi_ik o ... o phi_i1 (i1 applied first).
struct Word {
  std::vector<int> indices;
  KPoly poly;

  int length() const { return static_cast<int>(indices.size()); }
};

/// Length first, then lexicographic.
bool shortlex_less(const std::vector<int>& a, const std::vector<int>& b);
KPoly materialize(const GeneratorSet& S, const std::vector<int>& indices);
/// "[0,1]" style text of a word.
std::string to_string(const std::vector<int>& indices);

struct MonoidOptions {
  long degree_cap = 10000;
  std::size_t word_cap = 100000;
};

struct MonoidSlice {
  std::vector<Word> words;  // sorted by (degree, shortlex word)
  std::size_t words_generated = 0;
  /// The word cap was hit; `words` is the partial result.
  bool exploded = false;
};

/// Distinct polynomials of words of length 1..L, each under its shortlex-least word.
MonoidSlice enumerate_monoid(const GeneratorSet& S, int L, const MonoidOptions& opt = {});

enum class CaseTag { kCase1, kCase2, kCase3A, kCase3B };
enum class WitnessStatus { kUnchecked, kVerified, kConditional };

const char* to_string(CaseTag t);
const char* to_string(WitnessStatus s);

struct ObstructionWitness {
  CaseTag tag = CaseTag::kCase1;
  Word h1, h2;
  int d = 0;
  int r = 0;
  LinearConjugator conjugator;
  /// +1 / -1 for l^{-1} h1 l = +-T_r, when known.
  std::optional<int> sign{};
  /// Primitive d-th root of unity (cases 1 and 2).
  std::optional<FieldElement> epsilon{};
  /// c = epsilon + 1/epsilon (case 3; -2 for d = 2).
  std::optional<FieldElement> trace{};
  /// P in h2 o l = P o P_d or P o T_d, printed in the variable y.
  std::string outer{};
  /// Q in l^{-1} h1 l = x Q(x^d), case 1.
  std::optional<std::string> inner_Q{};
  std::optional<Conic> conic{};
  std::optional<ConicVerdict> conic_verdict{};
  /// (2u + v, u c + v) when u lies in K (case 3b).
  std::optional<Point> explicit_point{};
  std::optional<BivariatePolynomial> curve{};
  WitnessStatus status = WitnessStatus::kUnchecked;
};

/// Throws Error(kCertificateFailure) when the case divisibility conditions fail.
void check_divisibility(const ObstructionWitness& w);

/// Sort key (|h1| + |h2|, h1, h2, d, tag, trace).
bool witness_less(const ObstructionWitness& a, const ObstructionWitness& b);

/// Per-case searches for one ordered pair. Results are unverified (status kUnchecked).
std::vector<ObstructionWitness> check_case1(const Word& h1, const Word& h2, const NumberField& K);
std::vector<ObstructionWitness> check_case2(const Word& h1, const Word& h2, const NumberField& K);
std::vector<ObstructionWitness> check_case3(const Word& h1, const Word& h2, const NumberField& K,
                                            long height_bound = 3);

struct AbsenceProof {
  /// Every d that some case could use, with the reason it is a candidate.
  std::map<int, std::string> candidate_d;
  std::set<int> degree_primes;
  std::string rule_trace;
};

/// Sound but incomplete: succeeds when no candidate d has all its primes among
/// the primes dividing generator degrees (every case needs d | deg h2).
std::optional<AbsenceProof> prove_absence(const GeneratorSet& S);

enum class Verdict { kObstructed, kNoObstructionUpToDepth, kProvenCancellation };
const char* to_string(Verdict v);

struct DecideOptions {
  int depth = 3;
  MonoidOptions monoid;
  bool use_prover = true;
  long height_bound = 3;
  unsigned threads = 1;
};

struct DecisionStats {
  std::size_t words = 0;
  std::size_t pairs = 0;
  std::size_t candidate_pairs = 0;
  bool exploded = false;
};

struct DecisionReport {
  Verdict verdict = Verdict::kNoObstructionUpToDepth;
  int depth = 0;
  std::vector<ObstructionWitness> witnesses;
  std::optional<AbsenceProof> absence_proof;
  DecisionStats stats;
  /// Witnesses exist but none is VERIFIED (case 3b conics left UNKNOWN over K != Q).
  bool conditional = false;
  std::vector<std::string> notes;
};

DecisionReport decide(const GeneratorSet& S, const DecideOptions& opt = {});

}  // namespace cancelkit
