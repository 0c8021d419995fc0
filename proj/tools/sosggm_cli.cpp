// Command-line front end: solve / verify / marginal / sample / sweep / tauc.
// Exit codes: 0 success, 1 verification reported failures, 2 invalid input,
// 3 internal invariant violation, 4 resource-budget refusal.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sosggm/boundary_law.hpp"
#include "sosggm/cayley_tree.hpp"
#include "sosggm/errors.hpp"
#include "sosggm/ggm.hpp"
#include "sosggm/io.hpp"
#include "sosggm/params.hpp"
#include "sosggm/phase_sweep.hpp"
#include "sosggm/version.hpp"

namespace {

using nlohmann::json;

struct CommonOpts {
  int k = 2;
  double theta = -1.0;
  double tau = -1.0;
  sosggm::Tolerances tol;
};

void add_tolerance_flags(CLI::App* cmd, sosggm::Tolerances& tol) {
  cmd->add_option("--tol-root", tol.root_residual,
                  "monic-polynomial residual for root refinement");
  cmd->add_option("--tol-asym", tol.asym_residual,
                  "residual bound for the asymmetric pair system");
  cmd->add_option("--tol-recursion", tol.recursion,
                  "recursion oracle tolerance");
  cmd->add_option("--tol-fixed-point", tol.fixed_point,
                  "fixed-point oracle tolerance");
  cmd->add_option("--tol-norm-identity", tol.norm_identity,
                  "normalization identity tolerance");
  cmd->add_option("--tol-tauc", tol.tauc_crosscheck,
                  "critical-tau closed-form cross-check tolerance");
}

void add_param_flags(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--k", opts.k, "branching order (>= 2)")->required();
  auto* th = cmd->add_option("--theta", opts.theta, "transfer parameter in (0,1)");
  auto* ta = cmd->add_option("--tau", opts.tau, "theta + 1/theta (> 2)");
  th->excludes(ta);
  ta->excludes(th);
  add_tolerance_flags(cmd, opts.tol);
}

sosggm::Params make_params(const CommonOpts& opts, const CLI::App* cmd) {
  const bool have_theta = cmd->count("--theta") > 0;
  const bool have_tau = cmd->count("--tau") > 0;
  if (have_theta == have_tau) {
    throw std::invalid_argument("exactly one of --theta or --tau is required");
  }
  return have_theta ? sosggm::Params::from_theta(opts.k, opts.theta)
                    : sosggm::Params::from_tau(opts.k, opts.tau);
}

std::pair<int, int> parse_int_range(const std::string& s) {
  const auto pos = s.find("..");
  if (pos == std::string::npos) {
    const int v = std::stoi(s);
    return {v, v};
  }
  return {std::stoi(s.substr(0, pos)), std::stoi(s.substr(pos + 2))};
}

std::pair<double, double> parse_real_range(const std::string& s) {
  const auto pos = s.find("..");
  if (pos == std::string::npos) {
    throw std::invalid_argument("expected a range lo..hi, got: " + s);
  }
  return {std::stod(s.substr(0, pos)), std::stod(s.substr(pos + 2))};
}

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
  } else {
    sosggm::write_text_file(out_path, content);
  }
}

void write_manifest_sidecar(const std::string& out_path,
                            const sosggm::RunManifest& manifest) {
  if (out_path.empty()) return;
  sosggm::write_text_file(out_path + ".manifest.json",
                          manifest.to_json().dump(2) + "\n");
}

int run_solve(const CommonOpts& opts, const CLI::App* cmd,
              const std::string& out_path) {
  const sosggm::Params params = make_params(opts, cmd);
  const auto laws = sosggm::enumerate_laws(params, opts.tol);

  sosggm::RunManifest manifest = sosggm::RunManifest::create("solve", opts.tol);
  manifest.parameters = {
      {"k", params.k}, {"theta", params.theta}, {"tau", params.tau}};
  emit(out_path, sosggm::law_list_to_json(laws, manifest).dump(2) + "\n");
  return 0;
}

int run_verify(const std::string& law_file, const sosggm::Tolerances& tol) {
  const json doc = json::parse(sosggm::read_text_file(law_file));
  const auto laws = sosggm::law_list_from_json(doc);
  if (laws.empty()) {
    std::cout << "0 laws\n";
    return 0;
  }

  int failures = 0;
  for (std::size_t i = 0; i < laws.size(); ++i) {
    const sosggm::LawRecord& rec = laws[i];
    const sosggm::Params params =
        sosggm::Params::from_theta(rec.k, rec.theta);
    const sosggm::PeriodicBoundaryLaw law =
        sosggm::extend_periodic(rec.a, rec.b, params);

    const double recursion = sosggm::recursion_residual(
        law, params, sosggm::kRecordRecursionSteps);
    const double fixed_point = sosggm::fixed_point_residual(law, params);
    const sosggm::NormIdentityReport norm =
        sosggm::norm_identity_residual(law, params);

    bool pass = recursion <= tol.recursion && fixed_point <= tol.fixed_point;
    std::string norm_text;
    switch (norm.status) {
      case sosggm::NormIdentityStatus::ok:
        pass = pass && norm.residual <= tol.norm_identity;
        norm_text = sosggm::format_g9(norm.residual);
        break;
      case sosggm::NormIdentityStatus::sign_contradiction:
        pass = false;
        norm_text = "sign_contradiction";
        break;
      case sosggm::NormIdentityStatus::singular:
        pass = false;
        norm_text = "singular";
        break;
    }

    std::cout << "law " << i << ": a=" << sosggm::format_g9(rec.a)
              << " b=" << sosggm::format_g9(rec.b)
              << " family=" << to_string(rec.family)
              << " recursion=" << sosggm::format_g9(recursion)
              << " fixed_point=" << sosggm::format_g9(fixed_point)
              << " norm_identity=" << norm_text << (pass ? " PASS" : " FAIL")
              << "\n";
    if (!pass) ++failures;
  }
  std::cout << laws.size() << " laws, " << (laws.size() - failures)
            << " pass, " << failures << " fail\n";
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Boundary-law solver and gradient Gibbs measure laboratory for the "
      "SOS model on Cayley trees"};
  app.set_version_flag("--version", sosggm::kVersion);
  app.require_subcommand(1);

  // solve
  CommonOpts solve_opts;
  std::string solve_out;
  auto* solve_cmd =
      app.add_subcommand("solve", "enumerate boundary laws as JSON");
  add_param_flags(solve_cmd, solve_opts);
  solve_cmd->add_option("--out", solve_out, "output path (default: stdout)");

  // verify
  std::string verify_file;
  sosggm::Tolerances verify_tol;
  auto* verify_cmd =
      app.add_subcommand("verify", "re-run the oracles on a law-list file");
  verify_cmd->add_option("law_file", verify_file, "JSON law list")->required();
  add_tolerance_flags(verify_cmd, verify_tol);

  // marginal
  CommonOpts marg_opts;
  double marg_a = 1.0, marg_b = 1.0;
  int marg_radius = 1, marg_truncation = 10;
  std::size_t marg_budget = sosggm::kDefaultEntryBudget;
  std::string marg_out;
  auto* marg_cmd = app.add_subcommand(
      "marginal", "finite-ball marginal table of the measure as JSON");
  add_param_flags(marg_cmd, marg_opts);
  marg_cmd->add_option("--a", marg_a, "law value a (default 1)");
  marg_cmd->add_option("--b", marg_b, "law value b (default 1)");
  marg_cmd->add_option("--radius", marg_radius, "ball radius (>= 1)");
  marg_cmd->add_option("--truncation", marg_truncation,
                       "increment truncation M (>= 1)");
  marg_cmd->add_option("--budget", marg_budget, "max table entries");
  marg_cmd->add_option("--out", marg_out, "output path (default: stdout)");

  // sample
  CommonOpts sample_opts;
  double sample_a = 1.0, sample_b = 1.0;
  int sample_radius = 1, sample_n = 1;
  std::uint64_t sample_seed = 0;
  std::string sample_out;
  auto* sample_cmd =
      app.add_subcommand("sample", "exact gradient samples as CSV");
  add_param_flags(sample_cmd, sample_opts);
  sample_cmd->add_option("--a", sample_a, "law value a (default 1)");
  sample_cmd->add_option("--b", sample_b, "law value b (default 1)");
  sample_cmd->add_option("--radius", sample_radius, "ball radius (>= 1)");
  sample_cmd->add_option("--n", sample_n, "number of samples")->required();
  sample_cmd->add_option("--seed", sample_seed, "RNG seed (default 0)");
  sample_cmd->add_option("--out", sample_out, "output path (default: stdout)");

  // sweep
  std::string sweep_k = "2", sweep_tau, sweep_out;
  int sweep_steps = 2;
  sosggm::Tolerances sweep_tol;
  auto* sweep_cmd =
      app.add_subcommand("sweep", "phase-diagram grid over (k, tau) as CSV");
  sweep_cmd->add_option("--k", sweep_k, "k or range k_min..k_max")->required();
  sweep_cmd->add_option("--tau", sweep_tau, "range tau_lo..tau_hi")->required();
  sweep_cmd->add_option("--steps", sweep_steps, "tau grid points (>= 2)")
      ->required();
  sweep_cmd->add_option("--out", sweep_out, "output path (default: stdout)");
  add_tolerance_flags(sweep_cmd, sweep_tol);

  // tauc
  std::string tauc_k, tauc_out;
  sosggm::Tolerances tauc_tol;
  auto* tauc_cmd =
      app.add_subcommand("tauc", "critical curve tau_c(k) as CSV");
  tauc_cmd->add_option("--k", tauc_k, "k or range k_min..k_max")->required();
  tauc_cmd->add_option("--out", tauc_out, "output path (default: stdout)");
  add_tolerance_flags(tauc_cmd, tauc_tol);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (solve_cmd->parsed()) {
      return run_solve(solve_opts, solve_cmd, solve_out);
    }
    if (verify_cmd->parsed()) {
      return run_verify(verify_file, verify_tol);
    }
    if (marg_cmd->parsed()) {
      const sosggm::Params params = make_params(marg_opts, marg_cmd);
      const auto law = sosggm::extend_periodic(marg_a, marg_b, params);
      const auto ball = sosggm::build_ball(params.k, marg_radius);
      const auto table = sosggm::marginal_table(ball, law, params,
                                                marg_truncation, marg_budget);
      sosggm::RunManifest manifest =
          sosggm::RunManifest::create("marginal", marg_opts.tol);
      manifest.parameters = {{"k", params.k},       {"theta", params.theta},
                             {"tau", params.tau},   {"a", marg_a},
                             {"b", marg_b},         {"radius", marg_radius},
                             {"truncation", marg_truncation},
                             {"budget", marg_budget}};
      emit(marg_out,
           sosggm::marginal_table_to_json(table, manifest).dump(2) + "\n");
      return 0;
    }
    if (sample_cmd->parsed()) {
      const sosggm::Params params = make_params(sample_opts, sample_cmd);
      const auto law = sosggm::extend_periodic(sample_a, sample_b, params);
      const auto ball = sosggm::build_ball(params.k, sample_radius);
      const auto run =
          sosggm::sample(ball, law, params, sample_n, sample_seed);
      sosggm::RunManifest manifest =
          sosggm::RunManifest::create("sample", sample_opts.tol);
      manifest.parameters = {{"k", params.k},       {"theta", params.theta},
                             {"tau", params.tau},   {"a", sample_a},
                             {"b", sample_b},       {"radius", sample_radius},
                             {"n", sample_n}};
      manifest.seed = sample_seed;
      emit(sample_out, sosggm::samples_csv(run, ball.num_edges()));
      write_manifest_sidecar(sample_out, manifest);
      return 0;
    }
    if (sweep_cmd->parsed()) {
      const auto [k_lo, k_hi] = parse_int_range(sweep_k);
      const auto [tau_lo, tau_hi] = parse_real_range(sweep_tau);
      if (k_lo > k_hi) {
        throw std::invalid_argument("empty k range: " + sweep_k);
      }
      std::vector<int> ks;
      for (int k = k_lo; k <= k_hi; ++k) ks.push_back(k);
      const auto rows = sosggm::sweep(ks, tau_lo, tau_hi, sweep_steps, sweep_tol);
      sosggm::RunManifest manifest =
          sosggm::RunManifest::create("sweep", sweep_tol);
      manifest.parameters = {{"k", sweep_k},
                             {"tau", sweep_tau},
                             {"steps", sweep_steps}};
      emit(sweep_out, sosggm::sweep_csv(rows));
      write_manifest_sidecar(sweep_out, manifest);
      return 0;
    }
    if (tauc_cmd->parsed()) {
      const auto [k_lo, k_hi] = parse_int_range(tauc_k);
      const auto rows = sosggm::tauc_curve(k_lo, k_hi, tauc_tol);
      sosggm::RunManifest manifest =
          sosggm::RunManifest::create("tauc", tauc_tol);
      manifest.parameters = {{"k", tauc_k}};
      emit(tauc_out, sosggm::tauc_csv(rows));
      write_manifest_sidecar(tauc_out, manifest);
      return 0;
    }
  } catch (const sosggm::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const sosggm::OracleFailure& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed input: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
