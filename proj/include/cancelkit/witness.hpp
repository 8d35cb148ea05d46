#pragma once

#include <optional>
#include <vector>

#include "cancelkit/bivariate.hpp"
#include "cancelkit/conics.hpp"
#include "cancelkit/decider.hpp"

namespace cancelkit {

struct InvariantCurve {
  BivariatePolynomial equation;
  CaseTag tag;
  /// Y = slope X + intercept (cases 1, 2, 3a).
  std::optional<std::pair<FieldElement, FieldElement>> line;
  /// Lines through a known point (case 3b with a point).
  std::optional<ConicParametrization> conic;
};

/// The curve attached to a witness. Both certificates, F | F(h1(X), h1(Y)) and
/// F | h2(X) - h2(Y), are checked by exact division; a failure throws
/// Error(kCertificateFailure).
InvariantCurve invariant_curve(const ObstructionWitness& w);

/// F | F(f(X), f(Y)). Irreducibility of F is the caller's business.
bool verify_invariance(const BivariatePolynomial& F, const KPoly& f);

/// `count` distinct points: X runs through height order for a line, the slope
/// through height order for a conic. Throws Error(kInsufficientPoints).
std::vector<Point> curve_points(const InvariantCurve& C, std::size_t count, long height_bound);

struct PairSample {
  FieldElement a, b;
  int j = 0;
  /// h1^j(a), h1^j(b) and h2 of those.
  FieldElement orbit_a, orbit_b, image_a, image_b;
};

/// Pairs (a, b) on the invariant curve with h2(h1^j(a)) = h2(h1^j(b)) and
/// h1^j(a) != h1^j(b). Throws Error(kInsufficientPoints) after 10*count candidates.
std::vector<PairSample> generate_pairs(const ObstructionWitness& w, int j, std::size_t count);

/// Recomputes both sample equations applying the generators of h1 and h2 one at a time.
bool verify_pair_stepwise(const GeneratorSet& S, const ObstructionWitness& w, const PairSample& p);

struct Collision {
  std::vector<int> word;
  int depth = 0;
};

/// First word in shortlex order with equal images of a and b, or nothing up to max_depth.
std::optional<Collision> collision_oracle(const GeneratorSet& S, const FieldElement& a, const FieldElement& b,
                                          int max_depth);

}  // namespace cancelkit
