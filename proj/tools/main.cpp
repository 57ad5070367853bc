// witnesskit command line front end.
//
// Subcommands: analyze | witness | bell | catalog. Inputs are StateFile JSON
// documents or `catalog:` pseudo-paths such as catalog:shifts or
// catalog:isotropic(2,0.5). Reports are canonical JSON (sorted keys, shortest
// round-trip floats), so identical input + flags + seed gives byte-identical
// output.
//
// Exit codes: 0 success, 2 parse error, 3 state-invariant violation,
// 4 inapplicable method.

#include <Eigen/Core>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "witnesskit/bell.hpp"
#include "witnesskit/criteria.hpp"
#include "witnesskit/io.hpp"
#include "witnesskit/multiparty.hpp"
#include "witnesskit/states.hpp"
#include "witnesskit/tensor.hpp"
#include "witnesskit/witness.hpp"

using namespace witnesskit;
using nlohmann::json;

namespace {

constexpr const char* kVersion = "0.1.0";

/// A method was asked of an input it cannot serve -> exit 4.
struct MethodError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> positional_params(const std::string& name) {
  static const std::map<std::string, std::vector<std::string>> table = {
      {"singlet", {}},
      {"max-entangled", {"n"}},
      {"ghz", {"n", "sign"}},
      {"w", {}},
      {"werner", {"n", "lambda"}},
      {"isotropic", {"n", "p"}},
      {"shifts", {}},
      {"bell-mixture-acbd", {}},
      {"padded-counterexample", {"n", "d"}},
      {"bell-theta", {"theta"}},
      {"product", {}},
  };
  auto it = table.find(name);
  if (it == table.end()) return {};
  return it->second;
}

StateFile catalog_state_file(const std::string& name,
                             const std::map<std::string, double>& params) {
  CatalogEntry e;
  try {
    e = catalog_state(name, params);
  } catch (const std::invalid_argument& err) {
    throw ParseError(err.what());
  }
  if (e.pure) return state_file_of(*e.pure, e.name, e.parameters);
  return state_file_of(*e.mixed, e.name, e.parameters);
}

/// `catalog:name` or `catalog:name(a,b,...)` with positional parameters.
StateFile parse_pseudo_path(const std::string& spec) {
  std::string body = spec.substr(8);  // past "catalog:"
  std::string name = body;
  std::map<std::string, double> params;
  auto open = body.find('(');
  if (open != std::string::npos) {
    if (body.back() != ')')
      throw ParseError("catalog pseudo-path '" + spec + "': missing closing ')'");
    name = body.substr(0, open);
    std::string args = body.substr(open + 1, body.size() - open - 2);
    std::vector<std::string> keys = positional_params(name);
    std::stringstream ss(args);
    std::string tok;
    std::size_t i = 0;
    while (std::getline(ss, tok, ',')) {
      if (i >= keys.size())
        throw ParseError("catalog pseudo-path '" + spec + "': too many parameters");
      try {
        params[keys[i]] = std::stod(tok);
      } catch (const std::exception&) {
        throw ParseError("catalog pseudo-path '" + spec + "': bad number '" + tok + "'");
      }
      ++i;
    }
  }
  return catalog_state_file(name, params);
}

StateFile load_input(const std::string& path) {
  if (path.rfind("catalog:", 0) == 0) return parse_pseudo_path(path);
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open input file '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError("'" + path + "': " + e.what());
  }
  return parse_state_file(doc);
}

Bipartition parse_cut(const std::string& label, int parties) {
  auto bar = label.find('|');
  if (bar == std::string::npos)
    throw ParseError("cut '" + label + "': expected a label such as A|BC");
  std::vector<int> side_a;
  for (char c : label.substr(0, bar)) {
    int p = c - 'A';
    if (p < 0 || p >= parties)
      throw ParseError("cut '" + label + "': party '" + std::string(1, c) +
                       "' outside the layout");
    side_a.push_back(p);
  }
  try {
    return Bipartition::make(side_a, parties);
  } catch (const std::invalid_argument& e) {
    throw ParseError("cut '" + label + "': " + e.what());
  }
}

json tolerances_json() {
  return json{{"hermiticity", tol::herm},
              {"trace", tol::trace},
              {"psd", tol::psd},
              {"eigenvector", tol::eig},
              {"positivity", tol::pd}};
}

json input_json(const StateFile& s) {
  json j{{"digest", state_digest(s)}, {"dims", s.layout.dims}};
  if (!s.name.empty()) j["name"] = s.name;
  if (!s.parameters.empty()) j["parameters"] = s.parameters;
  return j;
}

json report_shell(const std::string& command, const StateFile& s) {
  return json{{"schema", 1},
              {"tool", "witnesskit"},
              {"version", kVersion},
              {"command", command},
              {"input", input_json(s)},
              {"tolerances", tolerances_json()}};
}

void emit(const json& report, const std::string& out_path) {
  std::string body = canonical_dump(report) + "\n";
  if (out_path.empty()) {
    std::cout << body;
  } else {
    std::ofstream out(out_path);
    if (!out) throw ParseError("cannot write to '" + out_path + "'");
    out << body;
  }
}

json witness_json(const Witness& w) {
  json j{{"matrix", matrix_json(w.observable)},
         {"dims", w.layout.dims},
         {"cut", w.cut.label()},
         {"kind", w.kind == WitnessKind::Indecomposable ? "indecomposable" : "decomposable"},
         {"provenance", w.provenance}};
  bool qubits = true;
  for (int d : w.layout.dims) qubits = qubits && d == 2;
  if (qubits) j["measurement_plan"] = to_json(pauli_decompose(w));
  return j;
}

Verdict run_criterion(const std::string& name, const DensityMatrix& rho,
                      const Bipartition& cut) {
  if (name == "ppt") return ppt_check(rho, cut);
  if (name == "reduction") return reduction_check(rho, cut);
  if (name == "entropy") return entropic_check(rho, cut);
  if (name == "majorization") return majorization_check(rho, cut);
  if (name == "rank") return rank_separability(rho, cut);
  throw ParseError("unknown criterion '" + name +
                   "'; expected ppt,reduction,entropy,majorization,rank");
}

int cmd_analyze(const std::string& input, const std::string& cut_label,
                const std::vector<std::string>& criteria, std::uint64_t seed,
                const std::string& out_path) {
  StateFile s = load_input(input);
  DensityMatrix rho = s.to_density();
  json report = report_shell("analyze", s);
  report["seed"] = seed;

  std::vector<Bipartition> cuts;
  if (!cut_label.empty()) {
    cuts.push_back(parse_cut(cut_label, rho.layout.parties()));
  } else if (rho.layout.parties() >= 2) {
    cuts = enumerate_cuts(rho.layout.parties());
  } else {
    throw MethodError("analyze needs at least two parties in the layout");
  }

  bool ppt_everywhere = true;
  bool entangled = false;
  json cut_list = json::array();
  for (const auto& cut : cuts) {
    json verdicts = json::array();
    for (const auto& name : criteria) {
      Verdict v = run_criterion(name, rho, cut);
      if (v.status == Status::EntangledCertified) entangled = true;
      if (name == "ppt" && v.status == Status::EntangledCertified) ppt_everywhere = false;
      verdicts.push_back(to_json(v));
    }
    cut_list.push_back(json{{"cut", cut.label()}, {"verdicts", verdicts}});
  }
  report["cuts"] = cut_list;
  report["summary"] = json{{"ppt_on_all_cuts", ppt_everywhere},
                           {"entangled_somewhere", entangled}};

  if (cut_label.empty() && rho.layout.parties() >= 3) {
    auto cert = certify_nondistillable(rho);
    report["nondistillability"] = json{{"certified", cert.certified},
                                       {"basis", cert.basis},
                                       {"bound_entangled", cert.bound_entangled},
                                       {"pair_cover", cert.pair_cover},
                                       {"uncovered_pairs", cert.uncovered_pairs}};
  }
  emit(report, out_path);
  return 0;
}

int cmd_witness(const std::string& input, const std::string& cut_label,
                std::string method, const std::string& seed_witness_path,
                int restarts, std::uint64_t seed, const std::string& out_path) {
  StateFile s = load_input(input);
  DensityMatrix rho = s.to_density();
  std::optional<PureState> psi = s.to_pure();
  const int parties = rho.layout.parties();
  Bipartition cut = cut_label.empty() ? Bipartition::make({0}, parties < 2 ? 2 : parties)
                                      : parse_cut(cut_label, parties);

  if (method == "auto") {
    if (psi) {
      method = "pure";
    } else if (parties == 2 && rho.dim() <= 6) {
      method = "lowdim";
    } else {
      throw MethodError("no default witness method for this input; pass --method");
    }
  }

  json report = report_shell("witness", s);
  report["seed"] = seed;
  report["method"] = method;

  Witness w;
  if (method == "pure") {
    if (!psi) throw MethodError("method 'pure' needs a vector input");
    try {
      auto r = pure_state_witness(*psi, cut);
      w = r.witness;
      report["mu_min"] = r.mu_min;
    } catch (const std::invalid_argument& e) {
      throw MethodError(e.what());
    }
  } else if (method == "lowdim") {
    if (parties != 2 || rho.dim() > 6)
      throw MethodError("method 'lowdim' needs a 2x2 or 2x3 layout");
    try {
      auto r = low_dim_optimal_witness(rho);
      w = r.witness;
      report["mu_min"] = r.mu_min;
    } catch (const std::invalid_argument& e) {
      throw MethodError(e.what());
    }
  } else if (method == "indecomposable") {
    Witness seed_w;
    seed_w.layout = rho.layout;
    seed_w.cut = cut;
    seed_w.kind = WitnessKind::Decomposable;
    if (!seed_witness_path.empty()) {
      std::ifstream in(seed_witness_path);
      if (!in) throw ParseError("cannot open seed witness '" + seed_witness_path + "'");
      json doc;
      try {
        doc = json::parse(in);
      } catch (const json::parse_error& e) {
        throw ParseError(std::string("seed witness: ") + e.what());
      }
      seed_w.observable = matrix_from_json(doc.at("matrix"));
      seed_w.provenance = "file:" + seed_witness_path;
    } else if (s.name == "shifts") {
      Mat proj = Mat::Zero(8, 8);
      for (const auto& v : shifts_upb()) proj += v.amplitudes * v.amplitudes.adjoint();
      seed_w.observable = proj / 4.0;
      seed_w.provenance = "kernel-product-basis-projector";
    } else {
      throw MethodError("method 'indecomposable' needs --seed-witness for this input");
    }
    try {
      w = indecomposable_witness(rho, seed_w, restarts, seed);
    } catch (const std::invalid_argument& e) {
      throw MethodError(e.what());
    }
  } else {
    throw ParseError("unknown method '" + method +
                     "'; expected pure, lowdim or indecomposable");
  }

  double value = evaluate(w, rho);
  report["witness"] = witness_json(w);
  report["value"] = value;
  if (value < 0.0) report["robustness_radius"] = robustness_radius(w, rho);
  emit(report, out_path);
  return 0;
}

int cmd_bell(const std::string& input, int restarts, std::uint64_t seed,
             const std::string& out_path) {
  StateFile s = load_input(input);
  DensityMatrix rho = s.to_density();
  for (int d : rho.layout.dims)
    if (d != 2) throw MethodError("bell optimization needs an all-qubit layout");

  BellOptimum best = bell_optimize(rho, restarts, seed);
  const int n = rho.layout.parties();
  json dirs = json::array();
  for (const auto& [a, ap] : best.directions.parties) {
    dirs.push_back(json{{"a", {a.x(), a.y(), a.z()}}, {"a_prime", {ap.x(), ap.y(), ap.z()}}});
  }
  json report = report_shell("bell", s);
  report["seed"] = seed;
  report["restarts"] = best.restarts;
  report["value"] = best.value;
  report["directions"] = dirs;
  report["separable_bound"] = 2.0;
  report["quantum_bound"] = std::pow(2.0, (n + 1) / 2.0);
  report["violates_separable_bound"] = best.value > 2.0 + 1e-9;
  emit(report, out_path);
  return 0;
}

int cmd_catalog(const std::string& name, const std::map<std::string, double>& params,
                const std::string& out_path) {
  StateFile s = catalog_state_file(name, params);
  emit(state_file_json(s), out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* threads = std::getenv("WITNESSKIT_THREADS")) {
    int n = std::atoi(threads);
    if (n > 0) Eigen::setNbThreads(n);
  }

  CLI::App app{"entanglement detection toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  std::string input, cut_label, out_path, method = "auto", seed_witness_path;
  std::uint64_t seed = 0;
  int restarts = 20;
  std::vector<std::string> criteria = {"ppt", "reduction", "entropy", "majorization", "rank"};

  auto* analyze = app.add_subcommand("analyze", "run the separability criteria battery");
  analyze->add_option("input", input, "StateFile path or catalog: pseudo-path")->required();
  analyze->add_option("--cut", cut_label, "restrict to one cut, e.g. A|BC");
  analyze->add_option("--criteria", criteria, "subset of ppt,reduction,entropy,majorization,rank")
      ->delimiter(',');
  analyze->add_option("--seed", seed, "random seed");
  analyze->add_option("--out", out_path, "write the report here instead of stdout");

  auto* witness = app.add_subcommand("witness", "construct an entanglement witness");
  witness->add_option("input", input, "StateFile path or catalog: pseudo-path")->required();
  witness->add_option("--cut", cut_label, "cut, e.g. A|BC");
  witness->add_option("--method", method, "pure | lowdim | indecomposable");
  witness->add_option("--seed-witness", seed_witness_path,
                      "JSON file with a decomposable seed observable");
  witness->add_option("--restarts", restarts, "optimizer restarts");
  witness->add_option("--seed", seed, "random seed");
  witness->add_option("--out", out_path, "write the report here instead of stdout");

  auto* bell = app.add_subcommand("bell", "optimize the recursive Bell operator");
  bell->add_option("input", input, "StateFile path or catalog: pseudo-path")->required();
  bell->add_option("--restarts", restarts, "optimizer restarts");
  bell->add_option("--seed", seed, "random seed");
  bell->add_option("--out", out_path, "write the report here instead of stdout");

  std::string name;
  double p_n = 0, p_lambda = 0, p_p = 0, p_d = 0, p_theta = 0, p_sign = 0;
  auto* catalog = app.add_subcommand("catalog", "emit a named state as a StateFile");
  catalog->add_option("name", name, "state name")->required();
  auto* on = catalog->add_option("--n", p_n, "local dimension / party count");
  auto* olambda = catalog->add_option("--lambda", p_lambda, "family parameter");
  auto* op = catalog->add_option("--p", p_p, "mixing probability");
  auto* od = catalog->add_option("--d", p_d, "register dimension");
  auto* otheta = catalog->add_option("--theta", p_theta, "amplitude angle");
  auto* osign = catalog->add_option("--sign", p_sign, "relative phase, +1 or -1");
  catalog->add_option("--out", out_path, "write the StateFile here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(input, cut_label, criteria, seed, out_path);
    if (witness->parsed())
      return cmd_witness(input, cut_label, method, seed_witness_path, restarts, seed, out_path);
    if (bell->parsed()) return cmd_bell(input, restarts, seed, out_path);
    std::map<std::string, double> params;
    if (on->count()) params["n"] = p_n;
    if (olambda->count()) params["lambda"] = p_lambda;
    if (op->count()) params["p"] = p_p;
    if (od->count()) params["d"] = p_d;
    if (otheta->count()) params["theta"] = p_theta;
    if (osign->count()) params["sign"] = p_sign;
    return cmd_catalog(name, params, out_path);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InvariantError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const MethodError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
