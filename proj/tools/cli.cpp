#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <ostream>
#include <random>

#include "hpa/budget.hpp"
#include "hpa/duality.hpp"
#include "hpa/fourier.hpp"
#include "hpa/io.hpp"
#include "hpa/moves.hpp"
#include "hpa/pairing.hpp"
#include "hpa/random_network.hpp"
#include "hpa/tilings.hpp"

namespace hpa {

namespace {

struct Session {
  std::string hopf_path;
  int delta_sign = 1;
  std::uint64_t seed = 1;
  std::string output = "json";
  std::string budget_text;
  std::size_t max_gram_entries = 0;
  std::size_t max_boxes = 0;

  Budget budget() const {
    Budget b = Budget::from_env();
    if (!budget_text.empty()) b = Budget::parse(budget_text, b);
    if (max_gram_entries) b.gram_entries = max_gram_entries;
    if (max_boxes) b.max_boxes = max_boxes;
    return b;
  }

  HopfAlgebra hopf() const {
    if (hopf_path.empty()) throw InputError("--hopf is required");
    return load_hopf(hopf_path, delta_sign);
  }
};

struct Outcome {
  json body;
  bool passed = true;
};

// Text rendering: one "key: value" line per field, checks as PASS/FAIL lines.
void render_text(const json& j, std::ostream& os, const std::string& indent = "") {
  for (const auto& [key, value] : j.items()) {
    if (key == "checks" && value.is_array()) {
      for (const auto& c : value) {
        os << indent << (c.value("passed", false) ? "PASS " : "FAIL ") << c.value("name", "");
        if (c.contains("detail")) os << " (" << c.at("detail").get<std::string>() << ")";
        os << "\n";
      }
    } else if (value.is_object()) {
      os << indent << key << ":\n";
      render_text(value, os, indent + "  ");
    } else if (value.is_string()) {
      os << indent << key << ": " << value.get<std::string>() << "\n";
    } else {
      os << indent << key << ": " << value.dump() << "\n";
    }
  }
}

json scalar_field(const Scalar& s) { return s.to_string(); }

Outcome verify_hopf(const Session& s, const std::string& positional) {
  const std::string path = positional.empty() ? s.hopf_path : positional;
  if (path.empty()) throw InputError("verify-hopf needs a Hopf spec path");
  const json spec = read_json_file(path);
  Outcome o;
  Report axioms;
  std::optional<HopfAlgebra> h;
  try {
    if (spec.is_object() && spec.value("type", "") == "constants") {
      HopfAlgebra assembled = HopfAlgebra::assemble(constants_from_json(spec), s.delta_sign);
      axioms = verify_axioms(assembled);
      if (axioms.passed()) h = std::move(assembled);
    } else {
      h = load_hopf(path, s.delta_sign);
      axioms = verify_axioms(*h);
    }
  } catch (const HopfError& e) {
    axioms.add(e.axiom(), false, e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  o.body["hopf"] = path;
  if (h) {
    o.body["dim"] = h->dim();
    o.body["delta"] = scalar_field(h->delta());
  }
  o.body["axioms"] = report_to_json(axioms);
  if (h) {
    o.body["relations"] = report_to_json(verify_relation_identities(*h));
    o.body["integrals"] = report_to_json(verify_integrals(*h));
  }
  o.passed = axioms.passed() && (!h || (o.body["relations"]["passed"].get<bool>() && o.body["integrals"]["passed"].get<bool>()));
  o.body["passed"] = o.passed;
  return o;
}

Outcome eval_network(const Session& s, const std::string& network_path, const std::string& evaluator) {
  const HopfAlgebra h = s.hopf();
  const LabeledNetwork n = load_network(network_path, h);
  if (n.box_count() > s.budget().max_boxes)
    throw BudgetExceeded("network has " + std::to_string(n.box_count()) + " boxes, cap is " + std::to_string(s.budget().max_boxes));
  const Scalar v = evaluate(n, h, evaluator == "naive" ? Evaluator::naive : Evaluator::contraction);
  Outcome o;
  o.body["value"] = v.to_string();
  o.body["exact"] = scalar_to_json(v);
  o.body["boxes"] = n.box_count();
  o.body["loops"] = n.loops.size();
  return o;
}

Outcome check_moves(const Session& s, const std::string& network_path, std::size_t count, const std::vector<std::string>& which) {
  const HopfAlgebra h = s.hopf();
  std::vector<Move> moves;
  for (const auto& m : which) moves.push_back(parse_move(m));
  if (moves.empty()) moves.assign(std::begin(all_moves), std::end(all_moves));

  Report r;
  if (!network_path.empty()) {
    const LabeledNetwork n = load_network(network_path, h);
    const Scalar before = evaluate(n, h);
    for (Move m : moves) {
      std::size_t applied = 0, failed = 0;
      for (const auto& site : find_sites(n, h, m)) {
        ++applied;
        failed += evaluate(apply_move(n, h, site), h) != before;
      }
      r.add(to_string(m), failed == 0, std::to_string(applied) + " sites, " + std::to_string(failed) + " changed the value");
    }
  } else {
    std::mt19937_64 rng(s.seed);
    for (Move m : moves) {
      const InvarianceTally t = check_move_invariance(h, m, count, rng);
      std::string detail = std::to_string(t.applied) + " applications";
      if (t.failures) detail += ", " + std::to_string(t.failures) + " failed; first: " + t.first_failure;
      r.add(to_string(m), t.failures == 0, detail);
    }
  }
  Outcome o;
  o.body["seed"] = s.seed;
  o.body.update(report_to_json(r));
  o.passed = r.passed();
  return o;
}

Outcome gram_command(const Session& s, int k) {
  const HopfAlgebra h = s.hopf();
  const Matrix g = gram(h, k, s.budget());
  std::size_t expected = 1;
  for (int i = 0; i < k - 1; ++i) expected *= h.dim();
  Outcome o;
  o.body["k"] = k;
  o.body["gram_is_identity"] = g.is_identity();
  o.body["rank"] = rank(g);
  o.body["expected_rank"] = expected;
  o.body["dim_claim"] = "n^{k-1}";
  o.passed = g.is_identity() && rank(g) == expected;
  o.body["passed"] = o.passed;
  return o;
}

Outcome depth_two_command(const Session& s, bool corrupted) {
  const HopfAlgebra h = s.hopf();
  const std::size_t r = rank(depth_two_gram(h, corrupted ? corrupted_w_tangle() : w_tangle(), s.budget()));
  Outcome o;
  o.body["wiring"] = corrupted ? "corrupted" : "W";
  o.body["rank"] = r;
  o.body["expected_rank"] = h.dim() * h.dim();
  o.passed = r == h.dim() * h.dim();
  if (!o.passed) o.body["diagnostic"] = "depth-two Gram matrix is rank deficient";
  o.body["passed"] = o.passed;
  return o;
}

Outcome reconstruct_command(const Session& s) {
  const Report r = reconstruct_structure(s.hopf(), s.budget());
  return {report_to_json(r), r.passed()};
}

Outcome fourier_command(const Session& s, int dual_sign) {
  const HopfAlgebra h = s.hopf();
  Report laws = dual_sign == s.delta_sign ? verify_fourier_laws(h) : verify_fourier_laws(h, build_dual(h, dual_sign));
  const Report gen = verify_generator_map(h);
  Outcome o;
  o.body["laws"] = report_to_json(laws);
  o.body["generator_map"] = report_to_json(gen);
  o.passed = laws.passed() && gen.passed();
  o.body["passed"] = o.passed;
  return o;
}

Outcome duality_command(const Session& s, const std::string& network_path) {
  const HopfAlgebra h = s.hopf();
  const LabeledNetwork n = load_network(network_path, h);
  if (n.box_count() > s.budget().max_boxes)
    throw BudgetExceeded("network has " + std::to_string(n.box_count()) + " boxes, cap is " + std::to_string(s.budget().max_boxes));
  const DualityResult d = verify_duality_on_network(h, build_dual(h), n);
  Outcome o;
  o.body["lhs"] = d.lhs.to_string();
  o.body["rhs"] = d.rhs.to_string();
  o.body["equal"] = d.equal();
  o.passed = d.equal();
  return o;
}

Outcome tilings_command(const Session& s, int k, bool with_graph, const std::string& dot_path) {
  const Budget budget = s.budget();
  Outcome o;
  o.body["k"] = k;
  const auto all = enumerate_tilings(k, budget);
  o.body["count"] = all.size();
  json list = json::array();
  for (const auto& t : all) {
    json d = json::array();
    for (const auto& [a, b] : t.diagonals) d.push_back({a, b});
    list.push_back(d);
  }
  o.body["tilings"] = list;
  if (with_graph || !dot_path.empty()) {
    const FlipGraph g = flip_graph(k, budget);
    json tree = json::array();
    for (const auto& [a, b] : g.spanning_tree) tree.push_back({a, b});
    o.body["flip_graph"] = {{"vertices", g.vertices.size()}, {"edges", g.edges.size()},
                            {"components", g.components}, {"connected", g.connected()}, {"spanning_tree", tree}};
    o.passed = g.connected();
    if (!dot_path.empty()) {
      std::ofstream dot(dot_path);
      if (!dot) throw InputError("cannot write " + dot_path);
      dot << to_dot(g);
    }
  }
  if (!s.hopf_path.empty()) {
    const HopfAlgebra h = s.hopf();
    json ranks = json::array();
    for (const auto& t : all) {
      const SurjectivityResult r = surjectivity_gram(h, tiling_to_tangle(t), budget);
      ranks.push_back({{"tiling", to_string(t)}, {"rank", r.rank}, {"expected", r.expected}});
      o.passed = o.passed && r.full_rank();
    }
    o.body["surjectivity"] = ranks;
  }
  o.body["passed"] = o.passed;
  return o;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact planar algebra engine for semisimple, cosemisimple Hopf algebras", "hpa"};
  app.require_subcommand(1);
  Session s;
  app.add_option("--hopf", s.hopf_path, "Hopf spec (JSON)");
  app.add_option("--delta-sign", s.delta_sign, "Sign of δ")->check(CLI::IsMember({1, -1}));
  app.add_option("--seed", s.seed, "Seed for randomized suites");
  app.add_option("--output", s.output, "Report format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--budget", s.budget_text, "Caps as key=value,... (overrides HPA_BUDGET)");
  app.add_option("--max-gram-entries", s.max_gram_entries, "Cap on Gram matrix entries")->check(CLI::PositiveNumber);
  app.add_option("--max-boxes", s.max_boxes, "Cap on boxes per network")->check(CLI::PositiveNumber);

  std::string positional, network, evaluator = "contraction", dot;
  std::size_t count = 200;
  std::vector<std::string> which;
  int k = 0, dual_sign = 0;
  bool check = false, verify = false, with_graph = false, corrupted = false;

  auto* verify_cmd = app.add_subcommand("verify-hopf", "Check Hopf axioms, relation identities and integrals");
  verify_cmd->add_option("spec", positional, "Hopf spec (JSON)");
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a closed network");
  eval_cmd->add_option("--network", network, "Network (JSON)")->required();
  eval_cmd->add_option("--evaluator", evaluator, "Evaluation path")->check(CLI::IsMember({"contraction", "naive"}));
  auto* moves_cmd = app.add_subcommand("moves", "Check that local relations preserve the value");
  moves_cmd->add_flag("--check", check, "Run the invariance check");
  moves_cmd->add_option("--network", network, "Check every site of this network instead of random ones");
  moves_cmd->add_option("--count", count, "Applications per move")->check(CLI::PositiveNumber);
  moves_cmd->add_option("--move", which, "Restrict to these moves (M U I C T E A)");
  auto* gram_cmd = app.add_subcommand("gram", "Gram matrix of the X_k family against its dual");
  gram_cmd->add_option("--k", k, "Colour")->required()->check(CLI::Range(2, 64));
  auto* depth_cmd = app.add_subcommand("depth-two", "Rank of the W-tangle image");
  depth_cmd->add_flag("--corrupted", corrupted, "Use the corrupted wiring");
  auto* rec_cmd = app.add_subcommand("reconstruct", "Recover Δ, ε and S from tangles");
  auto* fourier_cmd = app.add_subcommand("fourier", "Fourier transform laws");
  fourier_cmd->add_flag("--verify", verify, "Run the checks");
  fourier_cmd->add_option("--dual-delta-sign", dual_sign, "δ sign used for H*")->check(CLI::IsMember({1, -1}));
  auto* duality_cmd = app.add_subcommand("duality", "Compare Z_N with Z_{N⁻} after Fourier relabelling");
  duality_cmd->add_option("--network", network, "Network (JSON)")->required();
  auto* tilings_cmd = app.add_subcommand("tilings", "Quadrilateral tilings of the 2k-gon");
  tilings_cmd->add_option("--k", k, "Half the number of polygon vertices")->required();
  tilings_cmd->add_flag("--flip-graph", with_graph, "Build the hexagon-move graph");
  tilings_cmd->add_option("--dot", dot, "Write the flip graph in DOT format");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_code::ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::input_error;
  }

  Outcome o;
  try {
    if (verify_cmd->parsed()) o = verify_hopf(s, positional);
    else if (eval_cmd->parsed()) o = eval_network(s, network, evaluator);
    else if (moves_cmd->parsed()) {
      if (!check) throw InputError("moves: nothing to do without --check");
      o = check_moves(s, network, count, which);
    } else if (gram_cmd->parsed()) o = gram_command(s, k);
    else if (depth_cmd->parsed()) o = depth_two_command(s, corrupted);
    else if (rec_cmd->parsed()) o = reconstruct_command(s);
    else if (fourier_cmd->parsed()) {
      if (!verify) throw InputError("fourier: nothing to do without --verify");
      o = fourier_command(s, dual_sign == 0 ? s.delta_sign : dual_sign);
    } else if (duality_cmd->parsed()) o = duality_command(s, network);
    else if (tilings_cmd->parsed()) o = tilings_command(s, k, with_graph, dot);
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return exit_code::budget_exceeded;
  } catch (const HopfError& e) {
    err << "axiom failure: " << e.what() << "\n";
    return exit_code::verification_failed;
  } catch (const SingularMatrix& e) {
    err << "verification failure: " << e.what() << "\n";
    return exit_code::verification_failed;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return exit_code::input_error;
  } catch (const std::invalid_argument& e) {
    err << "input error: " << e.what() << "\n";
    return exit_code::input_error;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::input_error;
  }

  if (s.output == "text") render_text(o.body, out);
  else out << o.body.dump(2) << "\n";
  return o.passed ? exit_code::ok : exit_code::verification_failed;
}

}  // namespace hpa
