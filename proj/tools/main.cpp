// Command-line front end: DPSS construction, dictionary diagnostics,
// measurement-operator probes, signal synthesis, recovery, and the
// experiment sweeps.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "dpssband/dictionary.hpp"
#include "dpssband/harness.hpp"
#include "dpssband/io.hpp"
#include "dpssband/recovery.hpp"
#include "dpssband/rng.hpp"
#include "dpssband/sensing.hpp"
#include "dpssband/signals.hpp"
#include "dpssband/slepian.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace dpssband;

namespace {

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("io-failure: " + path.string());
  out << text;
}

void write_sweep_csv(const fs::path& path, const SweepResult& result) {
  std::ostringstream out;
  out << std::setprecision(17) << "x,snr_p5,snr_median\n";
  for (std::size_t i = 0; i < result.grid.size(); ++i)
    out << result.grid[i] << ',' << result.snr_p5[i] << ','
        << result.snr_median[i] << '\n';
  write_text(path, out.str());
}

void write_trials_csv(const fs::path& path, const SweepResult& result) {
  std::ostringstream out;
  out << std::setprecision(17)
      << "point,trial,seed,snr,iterations,converged\n";
  for (const TrialRecord& rec : result.raw)
    out << rec.point << ',' << rec.trial << ',' << rec.seed << ',' << rec.snr
        << ',' << rec.iterations << ',' << (rec.converged ? 1 : 0) << '\n';
  write_text(path, out.str());
}

json config_json(const ExperimentConfig& config, SweepAxis axis) {
  return json{{"n", config.n},
              {"j", config.j},
              {"k_bands", config.k_bands},
              {"k", config.k},
              {"m", config.m},
              {"operator", to_string(config.kind)},
              {"algorithm", to_string(config.algorithm)},
              {"mode", config.mode == SolveMode::signal ? "signal" : "coeff"},
              {"msnr_db", std::isfinite(config.msnr_db)
                              ? json(config.msnr_db)
                              : json(nullptr)},
              {"tones_per_band", config.tones_per_band},
              {"trials", config.trials},
              {"base_seed", config.base_seed},
              {"axis", to_string(axis)},
              {"grid", config.grid}};
}

void run_experiment(const std::string& fig, const std::string& scale,
                    int trials, std::uint64_t seed, const fs::path& dir) {
  fs::create_directories(dir);
  bool paper = scale == "paper";

  ExperimentConfig config;
  config.n = paper ? 4096 : 1024;
  config.j = paper ? 256 : 64;
  config.k_bands = 5;
  config.trials = trials;
  config.base_seed = seed;
  double two_nw = config.n / static_cast<double>(config.j);  // 2NW

  auto finish = [&](const SweepResult& result, SweepAxis axis) {
    write_sweep_csv(dir / "sweep.csv", result);
    write_trials_csv(dir / "trials.csv", result);
    write_text(dir / "config.json", config_json(config, axis).dump(2) + "\n");
  };

  if (fig == "exp1") {
    config.m = paper ? 2048 : 512;
    for (int k = 4; k <= 44; k += 4) config.grid.push_back(k);
    config.mode = SolveMode::signal;
    SweepResult signal_mode = run_sweep(config, SweepAxis::k);
    config.mode = SolveMode::coefficient;
    SweepResult coeff_mode = run_sweep(config, SweepAxis::k);
    config.mode = SolveMode::signal;
    finish(signal_mode, SweepAxis::k);
    write_sweep_csv(dir / "sweep_coeff.csv", coeff_mode);
    write_trials_csv(dir / "trials_coeff.csv", coeff_mode);
  } else if (fig == "exp2") {
    config.m = static_cast<int>(6 * two_nw * config.k_bands);
    config.grid = {20.0, 40.0, 60.0};
    finish(run_sweep(config, SweepAxis::msnr), SweepAxis::msnr);
  } else if (fig == "exp4") {
    config.grid = {1, 2, 3, 4, 5, 6, 7};
    finish(run_sweep(config, SweepAxis::m), SweepAxis::m);
  } else if (fig == "exp5") {
    // demodulator needs M | N: use N = 960, J = 60, K = 4, rho = 5
    config.n = paper ? 3840 : 960;
    config.j = paper ? 240 : 60;
    config.k_bands = 4;
    two_nw = config.n / static_cast<double>(config.j);
    config.m = static_cast<int>(5 * two_nw * config.k_bands);
    config.grid = {0, 1, 2};  // gaussian, demodulator, sampler
    finish(run_sweep(config, SweepAxis::architecture),
           SweepAxis::architecture);
  } else if (fig == "exp6") {
    config.m = static_cast<int>(6 * two_nw * config.k_bands);
    int k = rule_of_thumb_k(config.m, config.n, 1.0 / (2 * config.j),
                            config.k_bands, static_cast<int>(two_nw), 38);
    MultibandDictionary dict = build_dictionary(config.n, config.j, k);
    std::vector<int> s_grid;
    for (int s = 25; 3 * s <= config.m; s += 25) s_grid.push_back(s);
    std::ostringstream out;
    out << std::setprecision(17) << "trial,dft_best_s,dft_snr,dpss_snr\n";
    for (int t = 0; t < trials; ++t) {
      std::uint64_t trial_seed = derive_seed(seed, 0, t);
      MultibandSpec spec;
      spec.j = config.j;
      spec.k_bands = config.k_bands;
      spec.seed = derive_seed(trial_seed, 1, 0);
      auto [x, support] = synth_multiband(config.n, spec);
      MeasurementOperator a =
          make_operator(OperatorKind::dense_gaussian, config.m, config.n,
                        derive_seed(trial_seed, 2, 0));
      Eigen::VectorXcd y = op_apply(a, x);
      RecoverySettings settings;
      settings.gamma = 1.1 * x.norm();
      auto [best_s, dft_snr] = oracle_dft_baseline(a, y, x, s_grid, settings);
      RecoveryReport rep = bbcosamp(a, dict, y, config.k_bands,
                                    SolveMode::signal, settings);
      out << t << ',' << best_s << ',' << dft_snr << ','
          << snr_db(x, rep.estimate_x) << '\n';
    }
    write_text(dir / "trials.csv", out.str());
    config.k = k;
    write_text(dir / "config.json",
               config_json(config, SweepAxis::m).dump(2) + "\n");
  } else if (fig == "kl") {
    KlScaleParams params;
    params.seed = seed;
    std::vector<KlCheck> checks = kl_verification_suite(params);
    std::ostringstream out;
    out << std::setprecision(17) << "name,measured,bound,tolerance,pass\n";
    for (const KlCheck& c : checks)
      out << c.name << ',' << c.measured << ',' << c.bound << ','
          << c.tolerance << ',' << (c.pass ? 1 : 0) << '\n';
    write_text(dir / "kl.csv", out.str());
  } else if (fig == "rip") {
    int k = static_cast<int>(two_nw);
    MultibandDictionary dict = build_dictionary(config.n, config.j, k);
    config.m = static_cast<int>(4 * two_nw * config.k_bands);
    MeasurementOperator a = make_operator(OperatorKind::dense_gaussian,
                                          config.m, config.n, seed);
    RipEstimate est =
        estimate_block_rip(a, dict, config.k_bands, trials, seed);
    std::ostringstream out;
    out << std::setprecision(17) << "delta_lower,supports_tested\n"
        << est.delta_lower << ',' << est.supports_tested << '\n';
    write_text(dir / "rip.csv", out.str());
  } else {
    throw CLI::ValidationError("--fig", "unknown figure: " + fig);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"multiband DPSS dictionary and recovery toolkit"};
  app.require_subcommand(1);

  // dpss
  auto* dpss_cmd = app.add_subcommand("dpss", "build a DPSS basis");
  int dpss_n = 0, dpss_k = 0;
  double dpss_w = 0.0;
  std::string dpss_out;
  dpss_cmd->add_option("--n", dpss_n)->required();
  dpss_cmd->add_option("--w", dpss_w)->required();
  dpss_cmd->add_option("--k", dpss_k)->required();
  dpss_cmd->add_option("--out", dpss_out)->required();

  // dict
  auto* dict_cmd = app.add_subcommand("dict", "dictionary diagnostics");
  int dict_n = 0, dict_j = 0, dict_k = 0;
  bool dict_diag = false;
  dict_cmd->add_option("--n", dict_n)->required();
  dict_cmd->add_option("--j", dict_j)->required();
  dict_cmd->add_option("--k", dict_k)->required();
  dict_cmd->add_flag("--diagnostics", dict_diag);

  // sense
  auto* sense_cmd = app.add_subcommand("sense", "concentration probe");
  std::string sense_kind = "gaussian", sense_probe;
  int sense_m = 0, sense_n = 0;
  std::uint64_t sense_seed = 1;
  sense_cmd->add_option("--kind", sense_kind);
  sense_cmd->add_option("--m", sense_m)->required();
  sense_cmd->add_option("--n", sense_n)->required();
  sense_cmd->add_option("--seed", sense_seed);
  sense_cmd->add_option("--probe", sense_probe, "eta,trials")->required();

  // synth
  auto* synth_cmd = app.add_subcommand("synth", "synthesize a multiband signal");
  int synth_n = 0, synth_j = 0, synth_kb = 0;
  std::uint64_t synth_seed = 1;
  std::string synth_out;
  synth_cmd->add_option("--n", synth_n)->required();
  synth_cmd->add_option("--j", synth_j)->required();
  synth_cmd->add_option("--k-bands", synth_kb)->required();
  synth_cmd->add_option("--seed", synth_seed);
  synth_cmd->add_option("--out", synth_out)->required();

  // recover
  auto* rec_cmd = app.add_subcommand("recover", "run a recovery solver");
  std::string rec_algo = "bbcosamp", rec_mode = "signal";
  int rec_k = 0, rec_blocks = 0, rec_j = 0;
  std::string rec_input, rec_op, rec_out, rec_truth;
  rec_cmd->add_option("--algo", rec_algo)
      ->check(CLI::IsMember({"cosamp", "bbcosamp", "iht", "block-iht"}));
  rec_cmd->add_option("--mode", rec_mode)
      ->check(CLI::IsMember({"signal", "coeff"}));
  rec_cmd->add_option("--k-per-band", rec_k)->required();
  rec_cmd->add_option("--blocks", rec_blocks)->required();
  rec_cmd->add_option("--j", rec_j)->required();
  rec_cmd->add_option("--input", rec_input)->required();
  rec_cmd->add_option("--op", rec_op)->required();
  rec_cmd->add_option("--out", rec_out)->required();
  rec_cmd->add_option("--truth", rec_truth, "optional ground-truth CSV");

  // experiment
  auto* exp_cmd = app.add_subcommand("experiment", "run an experiment sweep");
  std::string exp_fig, exp_scale = "desk", exp_out;
  int exp_trials = 50;
  std::uint64_t exp_seed = 1;
  exp_cmd->add_option("--fig", exp_fig)
      ->check(CLI::IsMember({"exp1", "exp2", "exp4", "exp5", "exp6", "kl",
                             "rip"}))
      ->required();
  exp_cmd->add_option("--scale", exp_scale)
      ->check(CLI::IsMember({"desk", "paper"}));
  exp_cmd->add_option("--trials", exp_trials);
  exp_cmd->add_option("--seed", exp_seed);
  exp_cmd->add_option("--out", exp_out)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*dpss_cmd) {
      DpssBasis basis = build_dpss({dpss_n, dpss_w}, dpss_k);
      io::write_slep_matrix(dpss_out + ".slep", basis.vectors);
      io::write_eigenvalues_csv(dpss_out + ".csv", basis.eigenvalues);
      std::cout << "wrote " << dpss_out << ".slep and " << dpss_out
                << ".csv\n";
    } else if (*dict_cmd) {
      MultibandDictionary dict = build_dictionary(dict_n, dict_j, dict_k);
      double unit_dev = 0.0;
      for (int b = 0; b < dict.j; ++b) {
        Eigen::MatrixXcd block = dict.block(b);
        unit_dev = std::max(
            unit_dev, (block.adjoint() * block -
                       Eigen::MatrixXcd::Identity(dict.k, dict.k))
                          .cwiseAbs()
                          .maxCoeff());
      }
      json out{{"unit_norm_max_dev", unit_dev},
               {"cross_band_coherence", max_cross_band_coherence(dict)}};
      if (dict_diag) {
        auto [lo, hi] = gram_singular_extremes(dict);
        out["sigma_min"] = lo;
        out["sigma_max"] = hi;
      }
      std::cout << out.dump(2) << "\n";
    } else if (*sense_cmd) {
      auto comma = sense_probe.find(',');
      if (comma == std::string::npos)
        throw CLI::ValidationError("--probe", "expected eta,trials");
      double eta = std::stod(sense_probe.substr(0, comma));
      int trials = std::stoi(sense_probe.substr(comma + 1));
      Rng rng(sense_seed);
      Eigen::VectorXcd x(sense_n);
      for (int i = 0; i < sense_n; ++i) x[i] = rng.cgaussian();
      double rate =
          concentration_probe(operator_kind_from_string(sense_kind), sense_m,
                              sense_n, x, trials, eta, sense_seed + 1);
      json out{{"kind", sense_kind}, {"m", sense_m},     {"n", sense_n},
               {"eta", eta},         {"trials", trials}, {"failure_rate", rate}};
      std::cout << out.dump(2) << "\n";
    } else if (*synth_cmd) {
      MultibandSpec spec;
      spec.j = synth_j;
      spec.k_bands = synth_kb;
      spec.seed = synth_seed;
      auto [x, support] = synth_multiband(synth_n, spec);
      io::write_complex_csv(synth_out + ".csv", x);
      io::write_support_json(synth_out + ".json", support);
      std::cout << "wrote " << synth_out << ".csv and " << synth_out
                << ".json\n";
    } else if (*rec_cmd) {
      std::ifstream op_file(rec_op);
      if (!op_file) throw std::runtime_error("io-failure: " + rec_op);
      json op_desc = json::parse(op_file);
      MeasurementOperator a = make_operator(
          operator_kind_from_string(op_desc.at("kind").get<std::string>()),
          op_desc.at("m").get<int>(), op_desc.at("n").get<int>(),
          op_desc.at("seed").get<std::uint64_t>());
      Eigen::VectorXcd y = io::read_complex_csv(rec_input);
      MultibandDictionary dict = build_dictionary(a.n, rec_j, rec_k);
      SolveMode mode =
          rec_mode == "coeff" ? SolveMode::coefficient : SolveMode::signal;
      RecoverySettings settings;
      RecoveryReport rep;
      Algorithm algo = algorithm_from_string(rec_algo);
      switch (algo) {
        case Algorithm::bbcosamp:
          rep = bbcosamp(a, dict, y, rec_blocks, mode, settings);
          break;
        case Algorithm::block_iht:
          rep = block_iht(a, dict, y, rec_blocks, settings);
          break;
        case Algorithm::iht:
          rep = iht(a, &dict, y, rec_blocks * rec_k, mode, settings);
          break;
        case Algorithm::cosamp: {
          Eigen::MatrixXcd psi = build_dft_dictionary(a.n);
          rep = cosamp(a, &psi, y, rec_blocks * rec_k, settings);
          break;
        }
      }
      std::string estimate_path = rec_out + ".estimate.csv";
      io::write_complex_csv(estimate_path, rep.estimate_x);
      json out{{"estimate", estimate_path},
               {"support", rep.support},
               {"iterations", rep.iterations},
               {"residuals", rep.residual_history},
               {"converged", rep.converged}};
      if (!rec_truth.empty())
        out["snr_db"] = snr_db(io::read_complex_csv(rec_truth), rep.estimate_x);
      write_text(rec_out, out.dump(2) + "\n");
      std::cout << "wrote " << rec_out << "\n";
    } else if (*exp_cmd) {
      run_experiment(exp_fig, exp_scale, exp_trials, exp_seed, exp_out);
      std::cout << "wrote results to " << exp_out << "\n";
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
