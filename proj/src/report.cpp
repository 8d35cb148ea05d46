#include "cancelkit/report.hpp"

namespace cancelkit {

Json to_json(const RunConfig& c) {
  Json j;
  j["command"] = c.command;
  j["field"] = c.field;
  j["generators"] = c.generators;
  j["depth"] = c.depth;
  j["degree_cap"] = c.degree_cap;
  j["word_cap"] = c.word_cap;
  j["height_bound"] = c.height_bound;
  j["pairs"] = c.pairs;
  j["iterate_j"] = c.iterate_j;
  j["prover"] = c.prover;
  j["threads"] = c.threads;
  j["version"] = kVersion;
  return j;
}

Json to_json(const FieldElement& a) { return to_string(a); }

Json to_json(const KPoly& f) { return to_string(f); }

Json to_json(const Point& p) { return Json::array({to_json(p.first), to_json(p.second)}); }

Json to_json(const NormalFormReport& r) {
  Json j;
  Json kinds = Json::array();
  for (auto k : r.kinds) kinds.push_back(to_string(k));
  j["kinds"] = kinds;
  j["r"] = r.r;
  j["v"] = to_json(r.conjugator.v);
  j["u_squared"] = r.conjugator.u_squared ? to_json(*r.conjugator.u_squared) : Json();
  j["u_in_K"] = r.conjugator.u_in_K ? to_json(*r.conjugator.u_in_K) : Json();
  j["centered"] = to_json(r.centered);
  j["xqxd_gcd"] = r.xqxd_gcd ? Json(*r.xqxd_gcd) : Json();
  j["sign"] = r.sign_resolved ? Json(*r.sign_resolved > 0 ? "+" : "-") : Json();
  j["scaling_ambiguity"] = r.scaling_ambiguity ? Json(*r.scaling_ambiguity) : Json();
  return j;
}

Json to_json(const Conic& c) {
  return Json{{"equation", to_string(c)},
              {"cXX", to_json(c.cXX)},
              {"cXY", to_json(c.cXY)},
              {"cYY", to_json(c.cYY)},
              {"cX", to_json(c.cX)},
              {"cY", to_json(c.cY)},
              {"c1", to_json(c.c1)}};
}

Json to_json(const ConicVerdict& v) {
  Json j;
  j["status"] = to_string(v.status);
  j["point"] = v.point ? to_json(*v.point) : Json();
  j["obstructions"] = v.obstructions;
  j["certificate"] = v.certificate;
  return j;
}

Json to_json(const ObstructionWitness& w) {
  Json j;
  j["case"] = to_string(w.tag);
  j["h1"] = {{"word", w.h1.indices}, {"poly", to_json(w.h1.poly)}};
  j["h2"] = {{"word", w.h2.indices}, {"poly", to_json(w.h2.poly)}};
  j["d"] = w.d;
  j["r"] = w.r;
  j["v"] = to_json(w.conjugator.v);
  j["u_squared"] = w.conjugator.u_squared ? to_json(*w.conjugator.u_squared) : Json();
  j["sign"] = w.sign ? Json(*w.sign > 0 ? "+" : "-") : Json();
  j["epsilon"] = w.epsilon ? to_json(*w.epsilon) : Json();
  j["trace"] = w.trace ? to_json(*w.trace) : Json();
  j["outer"] = w.outer;
  j["inner_Q"] = w.inner_Q ? Json(*w.inner_Q) : Json();
  j["conic"] = w.conic ? to_json(*w.conic) : Json();
  j["conic_verdict"] = w.conic_verdict ? to_json(*w.conic_verdict) : Json();
  j["explicit_point"] = w.explicit_point ? to_json(*w.explicit_point) : Json();
  j["curve"] = w.curve ? Json(to_string(*w.curve)) : Json();
  j["status"] = to_string(w.status);
  return j;
}

Json to_json(const AbsenceProof& p) {
  Json cands = Json::object();
  for (const auto& [d, why] : p.candidate_d) cands[std::to_string(d)] = why;
  return Json{{"candidate_d", cands}, {"degree_primes", p.degree_primes}, {"rule_trace", p.rule_trace}};
}

Json to_json(const DecisionReport& r) {
  Json j;
  j["verdict"] = to_string(r.verdict);
  j["depth"] = r.depth;
  Json ws = Json::array();
  for (const auto& w : r.witnesses) ws.push_back(to_json(w));
  j["witnesses"] = ws;
  j["absence_proof"] = r.absence_proof ? to_json(*r.absence_proof) : Json();
  j["stats"] = {{"words", r.stats.words},
                {"pairs", r.stats.pairs},
                {"obstructed_pairs", r.stats.candidate_pairs},
                {"exploded", r.stats.exploded}};
  j["conditional"] = r.conditional;
  j["notes"] = r.notes;
  return j;
}

Json to_json(const PairSample& p) {
  return Json{{"a", to_json(p.a)},
              {"b", to_json(p.b)},
              {"j", p.j},
              {"orbit_a", to_json(p.orbit_a)},
              {"orbit_b", to_json(p.orbit_b)},
              {"image", to_json(p.image_a)}};
}

Json to_json(const ChebyshevExpansion<FieldElement>& e) {
  Json a = Json::object();
  for (const auto& [i, c] : e.a) a[std::to_string(i)] = to_json(c);
  return Json{{"a0", to_json(e.a0)}, {"a", a}};
}

std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace cancelkit
