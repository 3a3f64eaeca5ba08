// ordreg: ordered-l2 / ordered-elastic-net / lasso regression experiments.
//
// Subcommands: synth, lambda, fit, eval, sweep. Every run writes a manifest
// holding the command line, resolved configuration, seeds, and a dataset
// fingerprint, which is enough to reproduce the outputs bit-for-bit within
// this implementation.

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ordreg/data.hpp"
#include "ordreg/io.hpp"
#include "ordreg/lambda_seq.hpp"
#include "ordreg/solver.hpp"
#include "ordreg/version.hpp"

namespace {

using json = nlohmann::json;
using ordreg::Dataset;
using ordreg::Index;
using ordreg::Vector;

constexpr const char* kLibsvmRepoUrl = "https://www.csie.ntu.edu.tw/~cjlin/libsvmtools/datasets/";

// Relative output paths resolve against ORDREG_OUT_DIR when it is set.
std::string resolve_out(const std::string& path) {
  const char* base = std::getenv("ORDREG_OUT_DIR");
  if (base == nullptr || path.empty() || std::filesystem::path(path).is_absolute()) {
    return path;
  }
  return (std::filesystem::path(base) / path).string();
}

Dataset<double> load_dataset(const std::string& path, const std::string& format, Index p_override) {
  std::string effective = format;
  if (effective == "auto") {
    std::ifstream probe(path);
    if (!probe) {
      throw ordreg::IoError("cannot open dataset '" + path + "' (public LIBSVM-format sets live at " +
                            std::string(kLibsvmRepoUrl) + ")");
    }
    std::string first_line;
    std::getline(probe, first_line);
    effective = first_line.rfind("b,", 0) == 0 ? "csv" : "libsvm";
  }
  if (effective == "csv") {
    return ordreg::load_dataset_csv<double>(path);
  }
  if (effective == "libsvm") {
    return ordreg::load_libsvm<double>(path, p_override);
  }
  throw ordreg::OutOfDomain("unknown dataset format '" + format + "'");
}

struct DataFlags {
  std::string path;
  std::string format = "auto";
  Index p_override = 0;
  Index expect_n = 0;
  Index expect_p = 0;
  bool normalize = true;
  double label_neg = 0.0;
  double label_pos = 0.0;
  bool map_labels = false;

  void attach(CLI::App* cmd, bool with_normalize) {
    cmd->add_option("--data", path, "dataset file (CSV with b,a_1..a_p header, or LIBSVM rows)")->required();
    cmd->add_option("--format", format, "data format: auto|csv|libsvm")
        ->check(CLI::IsMember({"auto", "csv", "libsvm"}))
        ->capture_default_str();
    cmd->add_option("--p-override", p_override, "declare the feature count of a LIBSVM file");
    cmd->add_option("--expect-n", expect_n, "fail unless the loaded dataset has this many rows");
    cmd->add_option("--expect-p", expect_p, "fail unless the loaded dataset has this many features");
    auto* neg = cmd->add_option("--label-neg", label_neg, "raw label to map onto -1");
    auto* pos = cmd->add_option("--label-pos", label_pos, "raw label to map onto +1");
    neg->needs(pos);
    pos->needs(neg);
    if (with_normalize) {
      cmd->add_flag("--normalize,!--no-normalize", normalize, "rescale columns to unit l2 norm")
          ->capture_default_str();
    }
  }

  Dataset<double> load(CLI::App* cmd) {
    Dataset<double> d = load_dataset(path, format, p_override);
    if (expect_n > 0 && d.n() != expect_n) {
      throw ordreg::DimensionMismatch("dataset has n=" + std::to_string(d.n()) + ", expected " +
                                      std::to_string(expect_n));
    }
    if (expect_p > 0 && d.p() != expect_p) {
      throw ordreg::DimensionMismatch("dataset has p=" + std::to_string(d.p()) + ", expected " +
                                      std::to_string(expect_p));
    }
    if (cmd->count("--label-neg") > 0) {
      map_labels = true;
      d.b = ordreg::map_labels_binary(d.b, label_neg, label_pos);
    }
    return d;
  }
};

ordreg::NMode parse_lambda_mode(const std::string& mode, Index* n_explicit) {
  if (mode == "n=p") {
    return ordreg::NMode::NEqualsP;
  }
  if (mode == "n=2p") {
    return ordreg::NMode::NEquals2P;
  }
  try {
    *n_explicit = std::stoll(mode);
  } catch (const std::exception&) {
    throw ordreg::OutOfDomain("lambda mode must be 'n=p', 'n=2p', or an integer n, got '" + mode + "'");
  }
  return ordreg::NMode::Explicit;
}

struct SolverFlags {
  double rho = 1.0;
  double alpha = 1.0;
  double eps_abs = 1e-4;
  double eps_rel = 1e-2;
  Index max_iter = 10000;
  Index trace_every = 1;

  void attach(CLI::App* cmd) {
    cmd->add_option("--rho", rho, "augmented-Lagrangian penalty parameter")->capture_default_str();
    cmd->add_option("--alpha", alpha, "over-relaxation factor in [1.0, 1.8]")->capture_default_str();
    cmd->add_option("--eps-abs", eps_abs, "absolute stopping tolerance")->capture_default_str();
    cmd->add_option("--eps-rel", eps_rel, "relative stopping tolerance")->capture_default_str();
    cmd->add_option("--max-iter", max_iter, "iteration cap")->capture_default_str();
    cmd->add_option("--trace-every", trace_every, "record every k-th iteration in the trace")
        ->capture_default_str();
  }

  ordreg::SolverConfig<double> config() const {
    ordreg::SolverConfig<double> cfg;
    cfg.rho = rho;
    cfg.alpha = alpha;
    cfg.eps_abs = eps_abs;
    cfg.eps_rel = eps_rel;
    cfg.max_iter = max_iter;
    cfg.trace_every = trace_every;
    return cfg;
  }

  void echo(ordreg::ManifestBuilder& manifest) const {
    manifest.config("rho", rho)
        .config("alpha", alpha)
        .config("eps_abs", eps_abs)
        .config("eps_rel", eps_rel)
        .config("max_iter", max_iter)
        .config("trace_every", trace_every);
  }
};

struct FitOutcome {
  ordreg::FitResult<double> result;
  std::string lambda_spec;
};

// One fit dispatched by penalty name; the lambda sequence (or scalar) is
// derived from the training data and echoed through lambda_spec.
FitOutcome run_fit(const Dataset<double>& train, const std::string& penalty, double q, double alpha_en,
                   const std::string& lambda_mode, double lasso_lambda_override,
                   const ordreg::SolverConfig<double>& cfg) {
  FitOutcome out;
  if (penalty == "lasso") {
    double lambda = lasso_lambda_override;
    if (lambda <= 0.0) {
      lambda = 0.1 * ordreg::compute_lambda_max(train.a, train.b);
    }
    out.lambda_spec = "lasso lambda=" + ordreg::format_g17(lambda) +
                      (lasso_lambda_override > 0.0 ? " (explicit)" : " (0.1*lambda_max)");
    out.result = ordreg::fit_lasso(train.a, train.b, lambda, cfg);
    return out;
  }
  ordreg::BhqConfig bhq;
  bhq.q = q;
  bhq.p = train.p();
  bhq.length = train.p();
  bhq.n_mode = parse_lambda_mode(lambda_mode, &bhq.n_explicit);
  bhq.monotone_clip = true;
  auto lam = ordreg::sorted_lambda_sequence(bhq);
  if (penalty == "ol2") {
    out.lambda_spec = "bhq q=" + ordreg::format_g17(q) + " mode=" + lambda_mode + " K=p clip=on";
    out.result = ordreg::fit_ordered_ridge(train.a, train.b, lam, cfg);
    return out;
  }
  if (penalty == "oenet") {
    out.lambda_spec = "bhq q=" + ordreg::format_g17(q) + " mode=" + lambda_mode + " K=p clip=on mix=" +
                      ordreg::format_g17(alpha_en);
    out.result = ordreg::fit_ordered_elastic_net(train.a, train.b, lam, alpha_en, cfg);
    return out;
  }
  throw ordreg::OutOfDomain("unknown penalty '" + penalty + "'");
}

int cmd_synth(int argc, char** argv, Index n, Index p, double coef_var, double noise_var,
              std::uint64_t seed, const std::string& out_prefix) {
  ordreg::SynthSpec<double> spec;
  spec.n = n;
  spec.p = p;
  spec.coef_variance = coef_var;
  spec.noise_variance = noise_var;
  spec.seed = seed;
  auto synth = ordreg::generate_synthetic(spec);

  const std::string prefix = resolve_out(out_prefix);
  const std::string data_path = prefix + ".data.csv";
  const std::string coef_path = prefix + ".coef.csv";
  ordreg::write_dataset_csv(data_path, synth.data);
  ordreg::write_coefficients_csv(coef_path, synth.true_coefficients);

  ordreg::ManifestBuilder manifest(argc, argv);
  manifest.config("n", n)
      .config("p", p)
      .config("coef_var", coef_var)
      .config("noise_var", noise_var)
      .seed("synth", seed)
      .dataset(synth.data)
      .output("data", data_path)
      .output("coefficients", coef_path);
  manifest.write(prefix + ".manifest.json");
  std::cout << "wrote " << data_path << " (n=" << n << ", p=" << p << ")\n";
  return 0;
}

int cmd_lambda(int argc, char** argv, Index p, double q, const std::string& mode, Index length, bool clip,
               const std::string& out_path) {
  ordreg::BhqConfig cfg;
  cfg.q = q;
  cfg.p = p;
  cfg.n_mode = parse_lambda_mode(mode, &cfg.n_explicit);
  if (length > 0) {
    cfg.length = length;
  } else {
    // Longest K the correction denominator admits for the chosen mode.
    switch (cfg.n_mode) {
      case ordreg::NMode::NEqualsP:
        cfg.length = std::max<Index>(1, p - 2);
        break;
      case ordreg::NMode::Explicit:
        cfg.length = std::max<Index>(1, std::min(p, cfg.n_explicit - 1));
        break;
      default:
        cfg.length = p;
        break;
    }
  }
  cfg.monotone_clip = clip;

  auto raw = ordreg::bhq_raw_sequence(cfg);
  Vector<double> lambda = raw.lambda;
  const bool monotone = ordreg::is_non_increasing(lambda);
  if (clip) {
    for (Index i = 1; i < lambda.size(); ++i) {
      lambda[i] = std::min(lambda[i], lambda[i - 1]);
    }
  } else if (!monotone) {
    std::cerr << "warning: raw sequence is non-monotone (clip disabled); "
                 "a solver run would reject it\n";
  }

  const std::string path = resolve_out(out_path);
  ordreg::write_lambda_csv(path, raw.lambda_bh, lambda);

  ordreg::ManifestBuilder manifest(argc, argv);
  manifest.config("p", p)
      .config("q", q)
      .config("mode", mode)
      .config("length", cfg.length)
      .config("clip", clip)
      .config("raw_monotone", monotone)
      .output("sequence", path);
  manifest.write(path + ".manifest.json");
  std::cout << "wrote " << path << " (K=" << cfg.length << ", raw sequence "
            << (monotone ? "non-increasing" : "NON-MONOTONE") << ")\n";
  return 0;
}

int cmd_fit(int argc, char** argv, CLI::App* cmd, DataFlags& data_flags, const SolverFlags& solver_flags,
            const std::string& penalty, double q, double alpha_en, const std::string& lambda_mode,
            double lasso_lambda, const std::string& trace_out, const std::string& result_out) {
  Dataset<double> d = data_flags.load(cmd);
  ordreg::ManifestBuilder manifest(argc, argv);
  manifest.dataset(d);  // fingerprint of the data as loaded, before scaling
  if (data_flags.normalize) {
    d = ordreg::normalize_columns(std::move(d));
  }

  auto cfg = solver_flags.config();
  cfg.penalty = penalty == "lasso"  ? ordreg::PenaltyKind::Lasso
                : penalty == "ol2" ? ordreg::PenaltyKind::OrderedL2
                                   : ordreg::PenaltyKind::OrderedElasticNet;
  cfg.mix_alpha = alpha_en;
  FitOutcome fit = run_fit(d, penalty, q, alpha_en, lambda_mode, lasso_lambda, cfg);

  const std::string trace_path = resolve_out(trace_out);
  const std::string result_path = resolve_out(result_out);
  const std::string coef_path = result_path + ".coef.csv";
  ordreg::write_trace_csv(trace_path, fit.result.trace);
  ordreg::write_coefficients_csv(coef_path, fit.result.coefficients);
  ordreg::write_json(result_path, ordreg::result_to_json(fit.result, fit.lambda_spec, coef_path));

  solver_flags.echo(manifest);
  manifest.config("penalty", penalty)
      .config("q", q)
      .config("alpha_en", alpha_en)
      .config("lambda_mode", lambda_mode)
      .config("lambda_spec", fit.lambda_spec)
      .config("normalize", data_flags.normalize)
      .output("trace", trace_path)
      .output("result", result_path)
      .output("coefficients", coef_path);
  manifest.write(result_path + ".manifest.json");

  std::cout << "penalty=" << penalty << " converged=" << (fit.result.converged ? "true" : "false")
            << " iterations=" << fit.result.iterations << " nonzero=" << fit.result.nonzero_count << "\n";
  return 0;  // convergence failure is data, not an error
}

int cmd_eval(int argc, char** argv, CLI::App* cmd, DataFlags& data_flags, const std::string& result_path,
             const std::string& metrics_out) {
  Dataset<double> test = data_flags.load(cmd);
  json result = ordreg::read_json(result_path);
  const std::string coef_path = result.at("coefficients_path").get<std::string>();
  Vector<double> coefficients = ordreg::read_coefficients_csv<double>(coef_path);
  auto metrics = ordreg::evaluate(coefficients, test);

  json out;
  out["mse"] = metrics.mse;
  out["misclassified"] = metrics.misclassified;
  out["n_test"] = test.n();
  const std::string metrics_path = resolve_out(metrics_out);
  ordreg::write_json(metrics_path, out);

  ordreg::ManifestBuilder manifest(argc, argv);
  manifest.dataset(test)
      .config("result", result_path)
      .config("coefficients", coef_path)
      .output("metrics", metrics_path);
  manifest.write(metrics_path + ".manifest.json");
  std::cout << "mse=" << metrics.mse << " misclassified=" << metrics.misclassified << "/" << test.n()
            << "\n";
  return 0;
}

struct SweepRow {
  double q;
  std::string method;
  Index misclassified;
  double mse;
  Index genes;
  double time_s;
  Index iterations;
  bool converged;
};

int cmd_sweep(int argc, char** argv, CLI::App* cmd, DataFlags& data_flags, const SolverFlags& solver_flags,
              std::vector<double> q_grid, std::vector<std::string> penalties, double alpha_en,
              const std::string& lambda_mode, Index train_n, std::uint64_t split_seed, bool stratified,
              Index parallel, const std::string& out_path) {
  Dataset<double> d = data_flags.load(cmd);
  ordreg::ManifestBuilder manifest(argc, argv);
  manifest.dataset(d);

  ordreg::SplitSpec split_spec{train_n, split_seed, stratified};
  auto [train, test] = ordreg::split_train_test(d, split_spec);

  struct Task {
    double q;
    std::string method;
  };
  std::vector<Task> tasks;
  for (double q : q_grid) {
    for (const auto& method : penalties) {
      tasks.push_back({q, method});
    }
  }
  std::vector<SweepRow> rows(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) {
        return;
      }
      auto cfg = solver_flags.config();
      cfg.mix_alpha = alpha_en;
      FitOutcome fit = run_fit(train, tasks[i].method, tasks[i].q, alpha_en, lambda_mode, 0.0, cfg);
      auto metrics = ordreg::evaluate(fit.result.coefficients, test);
      rows[i] = {tasks[i].q,        tasks[i].method,      metrics.misclassified,
                 metrics.mse,       fit.result.nonzero_count, fit.result.wall_time_s,
                 fit.result.iterations, fit.result.converged};
    }
  };
  const Index thread_count = std::max<Index>(1, std::min<Index>(parallel, static_cast<Index>(tasks.size())));
  if (thread_count == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(thread_count));
    for (Index t = 0; t < thread_count; ++t) {
      pool.emplace_back(worker);
    }
    for (auto& thread : pool) {
      thread.join();
    }
  }

  const std::string path = resolve_out(out_path);
  std::ofstream out(path);
  if (!out) {
    throw ordreg::IoError("cmd_sweep: cannot open '" + path + "' for writing");
  }
  out << "q,method,misclassified,mse,genes,time_s,iterations,converged\n";
  for (const auto& row : rows) {
    out << ordreg::format_g17(row.q) << ',' << row.method << ',' << row.misclassified << ','
        << ordreg::format_g17(row.mse) << ',' << row.genes << ',' << ordreg::format_g17(row.time_s) << ','
        << row.iterations << ',' << (row.converged ? "true" : "false") << '\n';
  }
  // Per-method average row across the q grid, Table-style.
  for (const auto& method : penalties) {
    double mis = 0.0;
    double mse = 0.0;
    double genes = 0.0;
    double time_s = 0.0;
    double iters = 0.0;
    Index count = 0;
    for (const auto& row : rows) {
      if (row.method == method) {
        mis += static_cast<double>(row.misclassified);
        mse += row.mse;
        genes += static_cast<double>(row.genes);
        time_s += row.time_s;
        iters += static_cast<double>(row.iterations);
        ++count;
      }
    }
    const double denom = std::max<double>(1.0, static_cast<double>(count));
    out << "avg," << method << ',' << ordreg::format_g17(mis / denom) << ','
        << ordreg::format_g17(mse / denom) << ',' << ordreg::format_g17(genes / denom) << ','
        << ordreg::format_g17(time_s / denom) << ',' << ordreg::format_g17(iters / denom) << ",-\n";
  }
  out.close();

  solver_flags.echo(manifest);
  manifest.config("q_grid", q_grid)
      .config("penalties", penalties)
      .config("alpha_en", alpha_en)
      .config("lambda_mode", lambda_mode)
      .config("train_n", train_n)
      .config("stratified", stratified)
      .config("parallel", parallel)
      .seed("split", split_seed)
      .output("table", path);
  manifest.write(path + ".manifest.json");
  std::cout << "wrote " << path << " (" << rows.size() << " rows + " << penalties.size()
            << " average rows)\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ordered-l2 / ordered-elastic-net / lasso regression via ADMM"};
  app.set_version_flag("--version", ordreg::kVersion);
  app.set_config("--config", "", "read defaults from an INI/TOML file; flags win over the file");
  app.require_subcommand(1);

  // synth
  auto* synth = app.add_subcommand("synth", "generate a seeded Gaussian regression dataset");
  Index synth_n = 0;
  Index synth_p = 0;
  double coef_var = 0.02;
  double noise_var = 1e-3;
  std::uint64_t synth_seed = 0;
  std::string synth_out;
  synth->add_option("--n", synth_n, "observations")->required();
  synth->add_option("--p", synth_p, "features")->required();
  synth->add_option("--coef-var", coef_var, "variance of the true coefficients")->capture_default_str();
  synth->add_option("--noise-var", noise_var, "variance of the additive noise")->capture_default_str();
  synth->add_option("--seed", synth_seed, "generator seed")->capture_default_str();
  synth->add_option("--out", synth_out, "output prefix (<out>.data.csv, <out>.coef.csv, <out>.manifest.json)")
      ->required();

  // lambda
  auto* lambda = app.add_subcommand("lambda", "emit a BHq regularizing sequence as CSV");
  Index lambda_p = 0;
  double lambda_q = 0.4;
  std::string lambda_mode = "n=p";
  Index lambda_length = 0;
  bool lambda_clip = true;
  std::string lambda_out;
  lambda->add_option("--p", lambda_p, "feature count")->required();
  lambda->add_option("--q", lambda_q, "BHq parameter in (0, 1]")->capture_default_str();
  lambda->add_option("--mode", lambda_mode, "correction denominator: n=p, n=2p, or an explicit integer n")
      ->capture_default_str();
  lambda->add_option("--length", lambda_length,
                     "sequence length K (default: the longest the mode's denominator admits)");
  lambda->add_flag("--clip,!--no-clip", lambda_clip, "clip the output to its running minimum")
      ->capture_default_str();
  lambda->add_option("--out", lambda_out, "output CSV path")->required();

  // fit
  auto* fit = app.add_subcommand("fit", "fit one penalty on a dataset");
  DataFlags fit_data;
  fit_data.attach(fit, true);
  SolverFlags fit_solver;
  fit_solver.attach(fit);
  std::string fit_penalty;
  double fit_q = 0.4;
  double fit_alpha_en = 0.1;
  std::string fit_lambda_mode = "n=2p";
  double fit_lasso_lambda = 0.0;
  std::string trace_out;
  std::string result_out;
  fit->add_option("--penalty", fit_penalty, "ol2|oenet|lasso")
      ->required()
      ->check(CLI::IsMember({"ol2", "oenet", "lasso"}));
  fit->add_option("--q", fit_q, "BHq parameter for the ordered penalties")->capture_default_str();
  fit->add_option("--alpha-en", fit_alpha_en, "elastic-net mix in (0, 1)")->capture_default_str();
  fit->add_option("--lambda-mode", fit_lambda_mode,
                  "sequence correction mode (n=2p keeps the denominator positive for K=p)")
      ->capture_default_str();
  fit->add_option("--lasso-lambda", fit_lasso_lambda, "explicit lasso penalty (default: 0.1*lambda_max)");
  fit->add_option("--trace-out", trace_out, "per-iteration trace CSV")->required();
  fit->add_option("--result-out", result_out, "result JSON (coefficients land next to it)")->required();

  // eval
  auto* eval = app.add_subcommand("eval", "evaluate a fit result on a test dataset");
  DataFlags eval_data;
  eval_data.normalize = false;
  eval_data.attach(eval, false);
  std::string eval_result;
  std::string metrics_out;
  eval->add_option("--result", eval_result, "result JSON produced by fit")->required();
  eval->add_option("--metrics-out", metrics_out, "metrics JSON output")->required();

  // sweep
  auto* sweep = app.add_subcommand("sweep", "q-grid x penalty table on a seeded train/test split");
  DataFlags sweep_data;
  sweep_data.attach(sweep, false);
  SolverFlags sweep_solver;
  sweep_solver.attach(sweep);
  std::vector<double> q_grid = {0.1, 0.2, 0.3, 0.4, 0.5};
  std::vector<std::string> sweep_penalties = {"lasso", "ol2", "oenet"};
  double sweep_alpha_en = 0.1;
  std::string sweep_lambda_mode = "n=2p";
  Index sweep_train_n = 0;
  std::uint64_t split_seed = 0;
  bool stratified = false;
  Index parallel = 1;
  std::string sweep_out;
  sweep->add_option("--q-grid", q_grid, "q values")->capture_default_str();
  sweep->add_option("--penalties", sweep_penalties, "methods: lasso, ol2, oenet")->capture_default_str();
  sweep->add_option("--alpha-en", sweep_alpha_en, "elastic-net mix")->capture_default_str();
  sweep->add_option("--lambda-mode", sweep_lambda_mode, "sequence correction mode")->capture_default_str();
  sweep->add_option("--train-n", sweep_train_n, "training rows")->required();
  sweep->add_option("--split-seed", split_seed, "train/test shuffle seed")->capture_default_str();
  sweep->add_flag("--stratified", stratified, "proportional per-class split");
  sweep->add_option("--parallel", parallel, "concurrent fits")->capture_default_str();
  sweep->add_option("--out", sweep_out, "table CSV path")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (synth->parsed()) {
      return cmd_synth(argc, argv, synth_n, synth_p, coef_var, noise_var, synth_seed, synth_out);
    }
    if (lambda->parsed()) {
      return cmd_lambda(argc, argv, lambda_p, lambda_q, lambda_mode, lambda_length, lambda_clip, lambda_out);
    }
    if (fit->parsed()) {
      return cmd_fit(argc, argv, fit, fit_data, fit_solver, fit_penalty, fit_q, fit_alpha_en,
                     fit_lambda_mode, fit_lasso_lambda, trace_out, result_out);
    }
    if (eval->parsed()) {
      return cmd_eval(argc, argv, eval, eval_data, eval_result, metrics_out);
    }
    if (sweep->parsed()) {
      return cmd_sweep(argc, argv, sweep, sweep_data, sweep_solver, q_grid, sweep_penalties, sweep_alpha_en,
                       sweep_lambda_mode, sweep_train_n, split_seed, stratified, parallel, sweep_out);
    }
  } catch (const ordreg::Error& err) {
    nlohmann::json j{{"error", err.kind()}, {"message", err.what()}};
    std::cerr << j.dump() << "\n";
    return 1;
  } catch (const std::exception& err) {
    nlohmann::json j{{"error", "Exception"}, {"message", err.what()}};
    std::cerr << j.dump() << "\n";
    return 1;
  }
  return 0;
}
