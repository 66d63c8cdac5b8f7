// Command-line front end: verify ray files, compute noncontextual and
// quantum bounds, run the witness test on states, report eta.
//
// Exit codes: 0 ok, 2 parse error, 3 invalid mathematical object,
// 4 dimension mismatch, 5 exact-search limit exceeded.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ctx/hiddenvars.hpp"
#include "ctx/io.hpp"
#include "ctx/linalg.hpp"
#include "ctx/scenario.hpp"
#include "ctx/version.hpp"
#include "ctx/witness.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitInvalid = 3;
constexpr int kExitDimension = 4;
constexpr int kExitLimit = 5;

double r12(double x) { return ctx::round_sig12(x); }

json tolerances_json(const ctx::Tolerances& tol, double graph_tol) {
  return json{{"norm", tol.norm},
              {"hermiticity", tol.hermiticity},
              {"trace", tol.trace},
              {"psd", tol.psd},
              {"eig", tol.eig},
              {"unitary", tol.unitary},
              {"entropy_zero", tol.entropy_zero},
              {"orthogonality", graph_tol},
              {"violation_slack", ctx::kViolationSlack},
              {"entropy_log_base", 2}};
}

std::vector<std::string> set_labels(const ctx::OrthogonalityGraph& g,
                                    const std::vector<std::size_t>& indices) {
  std::vector<std::string> out;
  out.reserve(indices.size());
  for (std::size_t i : indices) out.push_back(g.labels()[i]);
  return out;
}

json scenario_json(const std::string& file, const ctx::RaySet& rays,
                   const ctx::OrthogonalityGraph& g, const ctx::GraphStats& stats,
                   const std::vector<std::array<std::size_t, 5>>& pentagons) {
  json edges = json::array();
  for (auto [i, j] : g.edges()) edges.push_back({g.labels()[i], g.labels()[j]});
  json degrees = json::object();
  const std::vector<int> deg = g.degrees();
  for (std::size_t i = 0; i < g.size(); ++i) degrees[g.labels()[i]] = deg[i];
  json mis = json::array();
  for (const auto& s : stats.maximum_independent_sets) mis.push_back(set_labels(g, s));
  json cycles = json::array();
  for (const auto& c : pentagons) {
    cycles.push_back(set_labels(g, std::vector<std::size_t>(c.begin(), c.end())));
  }
  return json{{"file", file},
              {"dimension", rays.dimension()},
              {"ray_count", rays.size()},
              {"edge_count", stats.edge_count},
              {"edges", edges},
              {"degrees", degrees},
              {"independence_number", stats.independence_number},
              {"maximum_independent_sets", mis},
              {"induced_five_cycles", cycles}};
}

json bounds_json(const ctx::NCBoundReport& nc, const ctx::WitnessOperator& witness) {
  json eigs = json::array();
  for (double l : witness.spectrum.eigenvalues) eigs.push_back(r12(l));
  return json{{"nc_projector", nc.projector_bound},
              {"nc_correlation_exclusive", r12(nc.correlation_bound_exclusive)},
              {"nc_correlation_unconstrained", r12(nc.correlation_bound_unconstrained)},
              {"witness_eigenvalues", eigs},
              {"quantum_max", r12(witness.spectrum.eigenvalues.front())}};
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

void print_header(const std::string& command) {
  std::cout << "ctxtest " << ctx::kVersion << "\n";
  std::cout << "command: " << command << "\n";
}

void print_scenario_text(const json& sc) {
  std::cout << "file: " << sc["file"].get<std::string>() << "\n";
  std::cout << "dimension: " << sc["dimension"] << "\n";
  std::cout << "ray_count: " << sc["ray_count"] << "\n";
  std::cout << "edge_count: " << sc["edge_count"] << "\n";
  std::vector<std::string> edge_strs;
  for (const auto& e : sc["edges"]) {
    edge_strs.push_back(e[0].get<std::string>() + "-" + e[1].get<std::string>());
  }
  std::cout << "edges: " << join(edge_strs, " ") << "\n";
  std::cout << "degrees:";
  for (const auto& [label, d] : sc["degrees"].items()) std::cout << ' ' << label << ':' << d;
  std::cout << "\n";
  std::cout << "independence_number: " << sc["independence_number"] << "\n";
  std::vector<std::string> sets;
  for (const auto& s : sc["maximum_independent_sets"]) {
    std::vector<std::string> labels = s.get<std::vector<std::string>>();
    sets.push_back("{" + join(labels, ",") + "}");
  }
  std::cout << "maximum_independent_sets: " << join(sets, " ") << "\n";
  std::vector<std::string> cycles;
  for (const auto& c : sc["induced_five_cycles"]) {
    std::vector<std::string> labels = c.get<std::vector<std::string>>();
    cycles.push_back("(" + join(labels, ",") + ")");
  }
  std::cout << "induced_five_cycles: " << join(cycles, " ") << "\n";
}

void print_bounds_text(const json& b) {
  std::cout << "nc_projector_bound: " << b["nc_projector"] << "\n";
  std::cout << "nc_correlation_bound_exclusive: "
            << ctx::format_sig12(b["nc_correlation_exclusive"].get<double>()) << "\n";
  std::cout << "nc_correlation_bound_unconstrained: "
            << ctx::format_sig12(b["nc_correlation_unconstrained"].get<double>()) << "\n";
  std::vector<std::string> eigs;
  for (const auto& l : b["witness_eigenvalues"]) eigs.push_back(ctx::format_sig12(l.get<double>()));
  std::cout << "witness_eigenvalues: " << join(eigs, " ") << "\n";
  std::cout << "quantum_max: " << ctx::format_sig12(b["quantum_max"].get<double>()) << "\n";
}

struct VerifyOpts {
  std::string rayfile;
  std::string reference;
  double tol = ctx::kDefaultOrthogonalityTol;
  bool auto_normalize = false;
  std::string format = "text";
};

int cmd_verify(const VerifyOpts& opt) {
  const ctx::RaySet rays =
      ctx::load_ray_file(opt.rayfile, {ctx::Tolerances{}, opt.auto_normalize});
  if (rays.was_rescaled()) {
    std::cerr << "warning: some rays were rescaled to unit norm\n";
  }
  const ctx::OrthogonalityGraph graph = ctx::build_graph(rays, opt.tol);
  const ctx::GraphStats stats = ctx::analyze(graph);
  const auto pentagons = ctx::induced_five_cycles(graph);

  json doc{{"command", "verify"},
           {"version", ctx::kVersion},
           {"normalization", "ok"},
           {"rescaled", rays.was_rescaled()},
           {"scenario", scenario_json(opt.rayfile, rays, graph, stats, pentagons)},
           {"tolerances", tolerances_json(ctx::Tolerances{}, opt.tol)}};
  if (!opt.reference.empty()) {
    doc["reference_match"] = ctx::graph_equal(graph, ctx::load_edge_list(opt.reference));
  }

  if (opt.format == "machine") {
    std::cout << doc.dump(2) << "\n";
  } else {
    print_header("verify");
    std::cout << "normalization: ok\n";
    std::cout << "rescaled: " << (rays.was_rescaled() ? "yes" : "no") << "\n";
    std::cout << "orthogonality_tol: " << ctx::format_sig12(opt.tol) << "\n";
    print_scenario_text(doc["scenario"]);
    if (doc.contains("reference_match")) {
      std::cout << "reference_match: " << (doc["reference_match"].get<bool>() ? "yes" : "no")
                << "\n";
    }
  }
  return kExitOk;
}

struct BoundsOpts {
  std::string rayfile;
  double tol = ctx::kDefaultOrthogonalityTol;
  std::string format = "text";
};

int cmd_bounds(const BoundsOpts& opt) {
  const ctx::RaySet rays = ctx::load_ray_file(opt.rayfile);
  const ctx::OrthogonalityGraph graph = ctx::build_graph(rays, opt.tol);
  const ctx::GraphStats stats = ctx::analyze(graph);
  const auto pentagons = ctx::induced_five_cycles(graph);
  const ctx::NCBoundReport nc = ctx::nc_bounds(graph);
  const ctx::WitnessOperator witness = ctx::assemble_witness(rays);

  json doc{{"command", "bounds"},
           {"version", ctx::kVersion},
           {"scenario", scenario_json(opt.rayfile, rays, graph, stats, pentagons)},
           {"bounds", bounds_json(nc, witness)},
           {"tolerances", tolerances_json(ctx::Tolerances{}, opt.tol)}};

  if (opt.format == "machine") {
    std::cout << doc.dump(2) << "\n";
  } else {
    print_header("bounds");
    print_scenario_text(doc["scenario"]);
    print_bounds_text(doc["bounds"]);
  }
  return kExitOk;
}

struct TestOpts {
  std::string rayfile;
  std::vector<std::string> statefiles;
  bool align = false;
  double tol = ctx::kDefaultOrthogonalityTol;
  bool auto_normalize = false;
  std::string format = "text";
};

int cmd_test(const TestOpts& opt) {
  const ctx::RaySet rays =
      ctx::load_ray_file(opt.rayfile, {ctx::Tolerances{}, opt.auto_normalize});
  std::vector<ctx::DensityMatrix> states;
  states.reserve(opt.statefiles.size());
  for (const std::string& path : opt.statefiles) states.push_back(ctx::load_state_file(path));

  const ctx::OrthogonalityGraph graph = ctx::build_graph(rays, opt.tol);
  const ctx::GraphStats stats = ctx::analyze(graph);
  const auto pentagons = ctx::induced_five_cycles(graph);
  const ctx::NCBoundReport nc = ctx::nc_bounds(graph);
  const ctx::WitnessOperator witness = ctx::assemble_witness(rays);

  json doc{{"command", "test"},
           {"version", ctx::kVersion},
           {"aligned", opt.align},
           {"scenario", scenario_json(opt.rayfile, rays, graph, stats, pentagons)},
           {"bounds", bounds_json(nc, witness)},
           {"tolerances", tolerances_json(ctx::Tolerances{}, opt.tol)}};

  json jstates = json::array();
  for (std::size_t k = 0; k < states.size(); ++k) {
    const ctx::TestOutcome outcome = ctx::run_test(states[k], rays, opt.align, opt.tol);
    const ctx::TestReport& rep = outcome.report;
    json js{{"file", opt.statefiles[k]},
            {"s_pi", r12(rep.s_pi)},
            {"s_a", r12(rep.s_a)},
            {"nc_projector_bound", rep.nc_projector_bound},
            {"nc_correlation_bound", r12(rep.nc_correlation_bound)},
            {"margin", r12(rep.margin)},
            {"violated", rep.violated},
            {"saturating", rep.saturating},
            {"eta_bits", r12(rep.eta_bits)}};
    if (outcome.alignment) {
      js["predicted_value"] = r12(outcome.alignment->predicted_value);
      js["aligned_rayfile"] = ctx::emit_ray_file(outcome.alignment->rotated_rays);
    }
    jstates.push_back(std::move(js));
  }
  doc["states"] = jstates;

  if (opt.format == "machine") {
    std::cout << doc.dump(2) << "\n";
  } else if (opt.format == "csv") {
    std::cout << "state,s_pi,s_a,nc_projector_bound,nc_correlation_bound_exclusive,"
                 "margin,violated,saturating,eta_bits\n";
    for (const auto& js : doc["states"]) {
      std::cout << js["file"].get<std::string>() << ','
                << ctx::format_sig12(js["s_pi"].get<double>()) << ','
                << ctx::format_sig12(js["s_a"].get<double>()) << ','
                << js["nc_projector_bound"] << ','
                << ctx::format_sig12(js["nc_correlation_bound"].get<double>()) << ','
                << ctx::format_sig12(js["margin"].get<double>()) << ','
                << (js["violated"].get<bool>() ? 1 : 0) << ','
                << (js["saturating"].get<bool>() ? 1 : 0) << ','
                << ctx::format_sig12(js["eta_bits"].get<double>()) << "\n";
    }
  } else {
    print_header("test");
    std::cout << "aligned: " << (opt.align ? "yes" : "no") << "\n";
    std::cout << "entropy_log_base: 2\n";
    print_scenario_text(doc["scenario"]);
    print_bounds_text(doc["bounds"]);
    for (const auto& js : doc["states"]) {
      std::cout << "state: " << js["file"].get<std::string>() << "\n";
      std::cout << "  s_pi: " << ctx::format_sig12(js["s_pi"].get<double>()) << "\n";
      std::cout << "  s_a: " << ctx::format_sig12(js["s_a"].get<double>()) << "\n";
      std::cout << "  nc_projector_bound: " << js["nc_projector_bound"] << "\n";
      std::cout << "  nc_correlation_bound: "
                << ctx::format_sig12(js["nc_correlation_bound"].get<double>()) << "\n";
      std::cout << "  margin: " << ctx::format_sig12(js["margin"].get<double>()) << "\n";
      std::cout << "  violated: " << (js["violated"].get<bool>() ? "yes" : "no") << "\n";
      std::cout << "  saturating: " << (js["saturating"].get<bool>() ? "yes" : "no") << "\n";
      std::cout << "  eta_bits: " << ctx::format_sig12(js["eta_bits"].get<double>()) << "\n";
      if (js.contains("predicted_value")) {
        std::cout << "  predicted_value: "
                  << ctx::format_sig12(js["predicted_value"].get<double>()) << "\n";
      }
      if (js.contains("aligned_rayfile")) {
        std::cout << "aligned_rays_begin\n"
                  << js["aligned_rayfile"].get<std::string>() << "aligned_rays_end\n";
      }
    }
  }
  return kExitOk;
}

struct EtaOpts {
  std::string statefile;
  std::string format = "text";
};

int cmd_eta(const EtaOpts& opt) {
  const ctx::DensityMatrix rho = ctx::load_state_file(opt.statefile);
  const double eta = ctx::prior_information(rho);
  json doc{{"command", "eta"},
           {"version", ctx::kVersion},
           {"file", opt.statefile},
           {"entropy_log_base", 2},
           {"eta_bits", r12(eta)}};
  if (opt.format == "machine") {
    std::cout << doc.dump(2) << "\n";
  } else {
    print_header("eta");
    std::cout << "file: " << opt.statefile << "\n";
    std::cout << "entropy_log_base: 2\n";
    std::cout << "eta_bits: " << ctx::format_sig12(r12(eta)) << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Contextuality test toolkit: orthogonality graphs, noncontextual bounds "
               "and witness values for small ray sets"};
  app.set_version_flag("--version", ctx::kVersion);
  app.require_subcommand(1);

  VerifyOpts vopt;
  CLI::App* verify = app.add_subcommand(
      "verify", "Validate a ray file and report its orthogonality graph");
  verify->add_option("rayfile", vopt.rayfile, "ray file")->required();
  verify->add_option("--tol", vopt.tol, "orthogonality tolerance (default 1e-9)");
  verify->add_flag("--auto-normalize", vopt.auto_normalize,
                   "rescale rays whose norm is off by at most 1e-3");
  verify->add_option("--format", vopt.format, "output format")
      ->check(CLI::IsMember({"text", "machine"}));
  verify->add_option("--reference", vopt.reference, "edge-list file to compare against");

  BoundsOpts bopt;
  CLI::App* bounds = app.add_subcommand(
      "bounds", "Noncontextual bounds and witness spectrum of a ray file");
  bounds->add_option("rayfile", bopt.rayfile, "ray file")->required();
  bounds->add_option("--tol", bopt.tol, "orthogonality tolerance (default 1e-9)");
  bounds->add_option("--format", bopt.format, "output format")
      ->check(CLI::IsMember({"text", "machine"}));

  TestOpts topt;
  CLI::App* test = app.add_subcommand(
      "test",
      "Run the contextuality test on one or more states. CSV columns: state, s_pi, s_a, "
      "nc_projector_bound, nc_correlation_bound_exclusive, margin, violated, saturating, "
      "eta_bits");
  test->add_option("rayfile", topt.rayfile, "ray file")->required();
  test->add_option("statefiles", topt.statefiles, "state files")->required()->expected(-1);
  test->add_flag("--align", topt.align, "rotate the rays onto the state eigenbasis first");
  test->add_option("--tol", topt.tol, "orthogonality tolerance (default 1e-9)");
  test->add_flag("--auto-normalize", topt.auto_normalize,
                 "rescale rays whose norm is off by at most 1e-3");
  test->add_option("--format", topt.format, "output format")
      ->check(CLI::IsMember({"text", "machine", "csv"}));

  EtaOpts eopt;
  CLI::App* eta = app.add_subcommand(
      "eta", "Prior information log2(d) - S(rho) of a state, in bits");
  eta->add_option("statefile", eopt.statefile, "state file")->required();
  eta->add_option("--format", eopt.format, "output format")
      ->check(CLI::IsMember({"text", "machine"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) return cmd_verify(vopt);
    if (bounds->parsed()) return cmd_bounds(bopt);
    if (test->parsed()) return cmd_test(topt);
    if (eta->parsed()) return cmd_eta(eopt);
  } catch (const ctx::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const ctx::DimensionMismatch& e) {
    std::cerr << "dimension mismatch: " << e.what() << "\n";
    return kExitDimension;
  } catch (const ctx::LimitExceeded& e) {
    std::cerr << "limit exceeded: " << e.what() << "\n";
    return kExitLimit;
  } catch (const ctx::InvalidObject& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitOk;
}
