#include "cancelkit/witness.hpp"

#include <algorithm>

namespace cancelkit {

namespace {

BivariatePolynomial line_equation(const FieldElement& slope, const FieldElement& intercept) {
  const NumberField& K = slope.field();
  BivariatePolynomial F = BivariatePolynomial::term(K.one(), 0, 1);
  F.add_term({1, 0}, -slope);
  F.add_term({0, 0}, -intercept);
  return F;
}

BivariatePolynomial conic_equation(const Conic& c) {
  BivariatePolynomial F(c.cXX.field().zero());
  F.add_term({2, 0}, c.cXX);
  F.add_term({1, 1}, c.cXY);
  F.add_term({0, 2}, c.cYY);
  F.add_term({1, 0}, c.cX);
  F.add_term({0, 1}, c.cY);
  F.add_term({0, 0}, c.c1);
  return F;
}

std::vector<Point> collect_points(const InvariantCurve& C, std::size_t limit, const std::vector<Rational>& xs) {
  std::vector<Point> out;
  auto push = [&](const Point& p) {
    if (out.size() < limit && std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  };
  if (C.line) {
    const auto& [slope, intercept] = *C.line;
    const NumberField& K = slope.field();
    for (const Rational& x : xs) {
      if (out.size() >= limit) break;
      const FieldElement X = K.from_rational(x);
      push({X, slope * X + intercept});
    }
    return out;
  }
  if (C.conic) {
    const NumberField& K = C.conic->conic().field();
    push(C.conic->base_point());
    for (const Rational& t : xs) {
      if (out.size() >= limit) break;
      if (auto p = C.conic->at(K.from_rational(t))) push(*p);
    }
    if (auto p = C.conic->vertical()) push(*p);
  }
  return out;
}

FieldElement iterate(const KPoly& f, FieldElement x, int j) {
  for (int k = 0; k < j; ++k) x = f(x);
  return x;
}

}  // namespace

bool verify_invariance(const BivariatePolynomial& F, const KPoly& f) {
  if (F.is_zero()) throw Error(ErrorCode::kInvalidArgument, "verify_invariance: zero curve");
  return divides(F, F.substitute(f, f));
}

InvariantCurve invariant_curve(const ObstructionWitness& w) {
  const NumberField& K = w.h1.poly.zero().field();
  const FieldElement& v = w.conjugator.v;
  InvariantCurve C{BivariatePolynomial(K.zero()), w.tag, std::nullopt, std::nullopt};
  switch (w.tag) {
    case CaseTag::kCase1:
    case CaseTag::kCase2: {
      if (!w.epsilon) throw Error(ErrorCode::kInvalidArgument, "invariant_curve: witness lacks epsilon");
      const FieldElement& e = *w.epsilon;
      // Y = e X + v (1 - e)
      C.line = std::make_pair(e, v - e * v);
      C.equation = line_equation(C.line->first, C.line->second);
      break;
    }
    case CaseTag::kCase3A:
      C.line = std::make_pair(K.from_rational(Rational(-1)), v * Rational(2));
      C.equation = line_equation(C.line->first, C.line->second);
      break;
    case CaseTag::kCase3B: {
      if (!w.conic) throw Error(ErrorCode::kInvalidArgument, "invariant_curve: witness lacks its conic");
      C.equation = conic_equation(*w.conic);
      if (w.conic_verdict && w.conic_verdict->point && !w.conic->is_degenerate())
        C.conic = conic_parametrize(*w.conic, *w.conic_verdict->point);
      break;
    }
  }
  if (!verify_invariance(C.equation, w.h1.poly))
    throw Error(ErrorCode::kCertificateFailure, "curve " + to_string(C.equation) + " is not invariant under h1");
  const BivariatePolynomial diff = BivariatePolynomial::in_x(w.h2.poly) - BivariatePolynomial::in_y(w.h2.poly);
  if (!divides(C.equation, diff))
    throw Error(ErrorCode::kCertificateFailure, "h2 does not collapse the curve " + to_string(C.equation));
  return C;
}

std::vector<Point> curve_points(const InvariantCurve& C, std::size_t count, long height_bound) {
  auto out = collect_points(C, count, rationals_up_to_height(height_bound));
  if (out.size() < count)
    throw Error(ErrorCode::kInsufficientPoints, "only " + std::to_string(out.size()) + " points up to height " +
                                                    std::to_string(height_bound));
  return out;
}

std::vector<PairSample> generate_pairs(const ObstructionWitness& w, int j, std::size_t count) {
  if (j < 0) throw Error(ErrorCode::kInvalidArgument, "generate_pairs: j must be >= 0");
  const InvariantCurve C = invariant_curve(w);
  const std::size_t want = 10 * count;
  const auto candidates = collect_points(C, want, height_ordered_rationals(want + 8));
  std::vector<PairSample> out;
  for (const auto& [a, b] : candidates) {
    if (out.size() >= count) break;
    FieldElement oa = iterate(w.h1.poly, a, j), ob = iterate(w.h1.poly, b, j);
    if (oa == ob) continue;
    FieldElement ia = w.h2.poly(oa), ib = w.h2.poly(ob);
    if (ia != ib) continue;
    out.push_back(PairSample{a, b, j, std::move(oa), std::move(ob), std::move(ia), std::move(ib)});
  }
  if (out.size() < count)
    throw Error(ErrorCode::kInsufficientPoints, "found " + std::to_string(out.size()) + " of " +
                                                    std::to_string(count) + " pairs among " +
                                                    std::to_string(candidates.size()) + " candidates");
  return out;
}

bool verify_pair_stepwise(const GeneratorSet& S, const ObstructionWitness& w, const PairSample& p) {
  auto apply = [&](const std::vector<int>& word, FieldElement x) {
    for (int i : word) x = S[static_cast<std::size_t>(i)](x);
    return x;
  };
  FieldElement a = p.a, b = p.b;
  for (int k = 0; k < p.j; ++k) {
    a = apply(w.h1.indices, a);
    b = apply(w.h1.indices, b);
  }
  if (a == b || a != p.orbit_a || b != p.orbit_b) return false;
  a = apply(w.h2.indices, a);
  b = apply(w.h2.indices, b);
  return a == b && a == p.image_a && b == p.image_b;
}

std::optional<Collision> collision_oracle(const GeneratorSet& S, const FieldElement& a, const FieldElement& b,
                                          int max_depth) {
  if (a == b) throw Error(ErrorCode::kInvalidArgument, "collision_oracle: a and b must differ");
  struct Node {
    std::vector<int> word;
    FieldElement x, y;
  };
  std::vector<Node> level{Node{{}, a, b}};
  for (int depth = 1; depth <= max_depth; ++depth) {
    std::vector<Node> next;
    next.reserve(level.size() * S.size());
    for (const Node& n : level)
      for (std::size_t i = 0; i < S.size(); ++i) {
        Node m{n.word, S[i](n.x), S[i](n.y)};
        m.word.push_back(static_cast<int>(i));
        if (m.x == m.y) return Collision{std::move(m.word), depth};
        next.push_back(std::move(m));
      }
    level = std::move(next);
  }
  return std::nullopt;
}

}  // namespace cancelkit
