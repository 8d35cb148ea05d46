#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "cancelkit/parse.hpp"
#include "cancelkit/polyring.hpp"
#include "cancelkit/report.hpp"

using namespace cancelkit;

namespace {

struct Extra {
  std::string poly;
  std::string conic;
  std::string a, b;
  int max_depth = 6;
  std::size_t index = 0;
};

DecideOptions decide_options(const RunConfig& c) {
  DecideOptions o;
  o.depth = c.depth;
  o.monoid.degree_cap = c.degree_cap;
  o.monoid.word_cap = static_cast<std::size_t>(c.word_cap);
  o.use_prover = c.prover;
  o.height_bound = c.height_bound;
  o.threads = c.threads;
  return o;
}

Json run(const RunConfig& c, const Extra& x) {
  const NumberField K = parse_field(c.field);
  Json out;
  out["config"] = to_json(c);
  if (c.command == "decide") {
    const GeneratorSet S(K, parse_generators(c.generators, K));
    out["report"] = to_json(decide(S, decide_options(c)));
  } else if (c.command == "witness") {
    const GeneratorSet S(K, parse_generators(c.generators, K));
    DecideOptions o = decide_options(c);
    o.use_prover = false;
    const DecisionReport rep = decide(S, o);
    if (x.index >= rep.witnesses.size())
      throw Error(ErrorCode::kInvalidArgument, "witness index " + std::to_string(x.index) + " out of range (" +
                                                   std::to_string(rep.witnesses.size()) + " witnesses)");
    const auto& w = rep.witnesses[x.index];
    Json pairs = Json::array();
    for (const auto& p : generate_pairs(w, c.iterate_j, static_cast<std::size_t>(c.pairs))) {
      if (!verify_pair_stepwise(S, w, p))
        throw Error(ErrorCode::kCertificateFailure, "pair failed stepwise re-evaluation");
      pairs.push_back(to_json(p));
    }
    out["witness"] = to_json(w);
    out["pairs"] = pairs;
  } else if (c.command == "oracle") {
    const GeneratorSet S(K, parse_generators(c.generators, K));
    const auto hit = collision_oracle(S, parse_field_element(x.a, K), parse_field_element(x.b, K), x.max_depth);
    out["collision"] = hit ? Json{{"word", hit->word}, {"depth", hit->depth}} : Json();
    out["max_depth"] = x.max_depth;
  } else if (c.command == "normal-form") {
    out["normal_form"] = to_json(classify(parse_polynomial(x.poly, K)));
  } else if (c.command == "conic") {
    const Conic C = parse_conic(x.conic, K);
    out["conic"] = to_json(C);
    out["verdict"] = to_json(K.is_rational() ? conic_rational_point(C) : conic_point_search(C, c.height_bound));
  } else if (c.command == "cheb") {
    out["expansion"] = to_json(cheb_expand(parse_polynomial(x.poly, K)));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cancelkit: dynamical cancellation obstructions for polynomial sets"};
  app.require_subcommand(1);
  RunConfig cfg;
  Extra x;
  std::string json_path;

  auto common = [&](CLI::App* sub, bool gens) {
    sub->add_option("--field", cfg.field, "minimal polynomial of K in t (default: t, i.e. Q)");
    sub->add_option("--json", json_path, "also write the report to this file");
    if (!gens) return;
    sub->add_option("--gens", cfg.generators, "comma-separated generators, e.g. \"T(2),T(3)\"")->required();
    sub->add_option("--depth", cfg.depth, "composition depth L")->check(CLI::PositiveNumber);
    sub->add_option("--degree-cap", cfg.degree_cap, "largest word degree enumerated");
    sub->add_option("--word-cap", cfg.word_cap, "largest number of words generated");
    sub->add_option("--height-bound", cfg.height_bound, "conic search height over K != Q");
    sub->add_option("--threads", cfg.threads, "worker threads for pair checks");
    sub->add_flag("--no-prover", [&](std::int64_t) { cfg.prover = false; }, "skip the absence prover");
  };

  auto* decide_cmd = app.add_subcommand("decide", "decide the obstruction cases up to depth L");
  common(decide_cmd, true);

  auto* witness_cmd = app.add_subcommand("witness", "counterexample pairs for one witness");
  common(witness_cmd, true);
  witness_cmd->add_option("--index", x.index, "witness index in the decide report");
  witness_cmd->add_option("--pairs", cfg.pairs, "number of pairs");
  witness_cmd->add_option("--iterate-j", cfg.iterate_j, "iteration count j");

  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force collision search");
  common(oracle_cmd, true);
  oracle_cmd->add_option("--a", x.a)->required();
  oracle_cmd->add_option("--b", x.b)->required();
  oracle_cmd->add_option("--max-depth", x.max_depth);

  auto* nf_cmd = app.add_subcommand("normal-form", "classify a polynomial up to linear conjugacy");
  common(nf_cmd, false);
  nf_cmd->add_option("--poly", x.poly)->required();

  auto* conic_cmd = app.add_subcommand("conic", "find a K-point on a conic in X, Y");
  common(conic_cmd, false);
  conic_cmd->add_option("--conic", x.conic)->required();
  conic_cmd->add_option("--height-bound", cfg.height_bound, "search height over K != Q");

  auto* cheb_cmd = app.add_subcommand("cheb", "expand a polynomial in the Chebyshev basis");
  common(cheb_cmd, false);
  cheb_cmd->add_option("--poly", x.poly)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  if (!json_path.empty()) cfg.output_path = json_path;

  try {
    const std::string text = canonical_dump(run(cfg, x));
    std::cout << text;
    if (cfg.output_path) {
      std::ofstream f(*cfg.output_path);
      f << text;
      if (!f) {
        std::cerr << "cannot write " << *cfg.output_path << "\n";
        return 1;
      }
    }
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return e.code() == ErrorCode::kCertificateFailure ? 2 : 1;
  }
  return 0;
}
