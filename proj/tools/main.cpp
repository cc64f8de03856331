// mcb: model confidence bounds, model uncertainty curves and variable
// selection confidence sets for linear regression, from CSV data or
// simulation campaigns.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "mcb/bootstrap.hpp"
#include "mcb/csv.hpp"
#include "mcb/dataset.hpp"
#include "mcb/errors.hpp"
#include "mcb/mcb.hpp"
#include "mcb/reports.hpp"
#include "mcb/selectors.hpp"
#include "mcb/sim.hpp"
#include "mcb/vscs.hpp"

namespace {

using nlohmann::json;

constexpr int kExitCsv = 2;
constexpr int kExitConfig = 3;
constexpr int kExitNumeric = 4;

struct SelectorFlags {
  std::string kind = "adaptive_lasso";
  double lambda = -1.0;  // < 0 means cross-validated
  int cv_folds = 10;
  std::string ic = "bic";
  double adaptive_gamma = 2.0;
  std::string adaptive_init = "lasso_cv";
  double scad_a = 3.7;
  double mcp_gamma = 3.0;

  mcb::SelectorSpec build(const std::string& kind_name, std::uint64_t seed) const {
    mcb::SelectorSpec spec;
    spec.kind = mcb::selector_kind_from_name(kind_name);
    if (lambda >= 0.0) spec.lambda = lambda;
    spec.cv_folds = cv_folds;
    if (ic == "aic")
      spec.ic = mcb::IcRule::Aic;
    else if (ic == "bic")
      spec.ic = mcb::IcRule::Bic;
    else
      throw mcb::ConfigError("unknown IC rule: " + ic);
    spec.adaptive_gamma = adaptive_gamma;
    if (adaptive_init == "lasso_cv")
      spec.adaptive_init = mcb::AdaptiveInit::LassoCv;
    else if (adaptive_init == "ols")
      spec.adaptive_init = mcb::AdaptiveInit::Ols;
    else
      throw mcb::ConfigError("unknown adaptive init: " + adaptive_init);
    spec.scad_a = scad_a;
    spec.mcp_gamma = mcp_gamma;
    spec.seed = seed;
    return spec;
  }
};

void add_selector_flags(CLI::App* cmd, SelectorFlags& flags) {
  cmd->add_option("--selector", flags.kind,
                  "Selector: lasso, adaptive_lasso, scad, mcp, stepwise");
  cmd->add_option("--lambda", flags.lambda,
                  "Fixed penalty weight (omit to choose by cross-validation)");
  cmd->add_option("--cv-folds", flags.cv_folds, "Cross-validation folds");
  cmd->add_option("--ic", flags.ic, "Information criterion for stepwise: aic or bic");
  cmd->add_option("--adaptive-gamma", flags.adaptive_gamma, "Adaptive lasso weight exponent");
  cmd->add_option("--adaptive-init", flags.adaptive_init,
                  "Adaptive lasso pilot estimate: lasso_cv or ols");
  cmd->add_option("--scad-a", flags.scad_a, "SCAD concavity parameter");
  cmd->add_option("--mcp-gamma", flags.mcp_gamma, "MCP concavity parameter");
}

std::uint64_t resolve_seed(const CLI::Option* opt, std::uint64_t flag_value) {
  if (opt->count() > 0) return flag_value;
  if (const char* env = std::getenv("MCB_SEED")) return std::strtoull(env, nullptr, 10);
  return 1;
}

mcb::McbAlgorithm resolve_algorithm(const std::string& name, int p) {
  if (name == "exhaustive") return mcb::McbAlgorithm::Exhaustive;
  if (name == "ranked") return mcb::McbAlgorithm::Ranked;
  if (name == "auto")
    return p <= mcb::kExhaustiveLimit ? mcb::McbAlgorithm::Exhaustive
                                      : mcb::McbAlgorithm::Ranked;
  throw mcb::ConfigError("unknown algorithm: " + name + " (use exhaustive, ranked, auto)");
}

mcb::BootstrapMethod resolve_bootstrap(const std::string& name, mcb::SelectorKind kind) {
  if (name == "auto") return mcb::default_bootstrap_method(kind);
  return mcb::bootstrap_method_from_name(name);
}

std::string join_names(const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += ", ";
    out += names[i];
  }
  return out.empty() ? "(empty)" : out;
}

json selector_to_json(const mcb::SelectorSpec& spec) {
  json doc = {{"kind", mcb::selector_kind_name(spec.kind)},
              {"cv_folds", spec.cv_folds},
              {"adaptive_gamma", spec.adaptive_gamma},
              {"adaptive_init",
               spec.adaptive_init == mcb::AdaptiveInit::Ols ? "ols" : "lasso_cv"},
              {"scad_a", spec.scad_a},
              {"mcp_gamma", spec.mcp_gamma},
              {"seed", spec.seed}};
  if (spec.lambda.has_value()) doc["lambda"] = *spec.lambda;
  if (spec.kind == mcb::SelectorKind::StepwiseIC)
    doc["ic"] = spec.ic == mcb::IcRule::Aic ? "aic" : "bic";
  return doc;
}

mcb::SelectorSpec selector_from_json(const json& doc, std::uint64_t seed) {
  mcb::SelectorSpec spec;
  spec.kind = mcb::selector_kind_from_name(doc.value("kind", "adaptive_lasso"));
  if (doc.contains("lambda")) spec.lambda = doc["lambda"].get<double>();
  spec.cv_folds = doc.value("cv_folds", 10);
  const std::string ic = doc.value("ic", "bic");
  spec.ic = ic == "aic" ? mcb::IcRule::Aic : mcb::IcRule::Bic;
  spec.adaptive_gamma = doc.value("adaptive_gamma", 2.0);
  spec.adaptive_init = doc.value("adaptive_init", std::string("lasso_cv")) == "ols"
                           ? mcb::AdaptiveInit::Ols
                           : mcb::AdaptiveInit::LassoCv;
  spec.scad_a = doc.value("scad_a", 3.7);
  spec.mcp_gamma = doc.value("mcp_gamma", 3.0);
  spec.seed = doc.value("seed", seed);
  return spec;
}

mcb::SimConfig design_from_json(const json& doc, std::uint64_t default_seed) {
  mcb::SimConfig cfg;
  cfg.n = doc.value("n", cfg.n);
  cfg.p = doc.value("p", cfg.p);
  cfg.p_star = doc.value("p_star", cfg.p_star);
  cfg.rho = doc.value("rho", cfg.rho);
  cfg.gamma = doc.value("gamma", cfg.gamma);
  cfg.sigma = doc.value("sigma", cfg.sigma);
  cfg.error_dist = mcb::error_dist_from_name(doc.value("error_dist", "normal"));
  cfg.B = doc.value("B", cfg.B);
  cfg.reps = doc.value("reps", cfg.reps);
  if (doc.contains("alpha_grid")) cfg.alpha_grid = doc["alpha_grid"].get<std::vector<double>>();
  cfg.seed = doc.value("seed", default_seed);
  if (doc.contains("selector")) cfg.selector = selector_from_json(doc["selector"], cfg.seed);
  const std::string algorithm = doc.value("algorithm", "ranked");
  cfg.algorithm = resolve_algorithm(algorithm, cfg.p);
  cfg.run_vscs = doc.value("vscs", false);
  return cfg;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw mcb::ConfigError("cannot open " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw mcb::ConfigError(path + " is not valid JSON: " + e.what());
  }
  return doc;
}

void write_muc_csv(const std::string& path, const std::vector<double>& cr) {
  std::ofstream out(path);
  if (!out) throw mcb::ConfigError("cannot write " + path);
  const int p = static_cast<int>(cr.size()) - 1;
  out << "w,w_over_p,cr\n";
  char buf[64];
  for (int w = 0; w <= p; ++w) {
    std::snprintf(buf, sizeof(buf), "%d,%.10g,%.10g\n", w, static_cast<double>(w) / p, cr[w]);
    out << buf;
  }
}

// ---------------------------------------------------------------------------
// fit-mcb
// ---------------------------------------------------------------------------

struct FitMcbOpts {
  std::string data_path, response;
  SelectorFlags selector;
  double alpha = 0.05;
  int B = 1000;
  std::string algorithm = "auto";
  std::string bootstrap = "auto";
  std::uint64_t seed = 1;
  std::string out = "mcb_report.json";
  std::string format = "json";
  int threads = 0;
  CLI::Option* seed_opt = nullptr;
};

int run_fit_mcb(const FitMcbOpts& opt) {
  if (!(opt.alpha > 0.0 && opt.alpha < 1.0))
    throw mcb::ConfigError("alpha must lie in (0, 1)");
  if (opt.B < 1) throw mcb::ConfigError("B must be at least 1");
  const std::uint64_t seed = resolve_seed(opt.seed_opt, opt.seed);

  const mcb::Dataset raw = mcb::read_dataset_csv(opt.data_path, opt.response);
  auto [data, record] = mcb::standardize(raw);
  const mcb::SelectorSpec spec = opt.selector.build(opt.selector.kind, seed);
  const mcb::BootstrapMethod method = resolve_bootstrap(opt.bootstrap, spec.kind);
  const mcb::McbAlgorithm algorithm = resolve_algorithm(opt.algorithm, data.p());

  const auto ens = mcb::build_ensemble(data, spec, opt.B, method, seed, opt.threads);
  const mcb::Muc muc = algorithm == mcb::McbAlgorithm::Exhaustive ? mcb::mcb_exhaustive(ens)
                                                                  : mcb::mcb_ranked(ens);
  const mcb::McbPair pair = mcb::select_final_mcb(muc, opt.alpha);

  json report = mcb::mcb_report(muc, pair, opt.alpha, data.names);
  report["config"] = {{"data", opt.data_path},      {"response", opt.response},
                      {"selector", selector_to_json(spec)},
                      {"B", opt.B},                 {"seed", seed},
                      {"bootstrap", mcb::bootstrap_method_name(method)},
                      {"algorithm", mcb::mcb_algorithm_name(muc.algorithm)},
                      {"threads", opt.threads}};
  if (opt.format == "csv") {
    std::ofstream out(opt.out);
    if (!out) throw mcb::ConfigError("cannot write " + opt.out);
    out << "alpha,algorithm,width,bcr,cardinality,amuc,lbm,ubm\n";
    out << opt.alpha << ',' << mcb::mcb_algorithm_name(muc.algorithm) << ',' << pair.width
        << ',' << pair.bcr << ',' << (1ll << pair.width) << ',' << mcb::amuc(muc) << ",\"";
    out << join_names(mcb::index_names(pair.lbm, data.names)) << "\",\""
        << join_names(mcb::index_names(pair.ubm, data.names)) << "\"\n";
  } else if (opt.format == "json") {
    mcb::write_json_file(report, opt.out);
  } else {
    throw mcb::ConfigError("unknown output format: " + opt.format);
  }

  std::printf("%d%%-MCB via %s (%s bootstrap, B=%d, seed=%llu)\n",
              static_cast<int>(std::lround(100.0 * (1.0 - opt.alpha))),
              mcb::selector_kind_name(spec.kind).c_str(),
              mcb::bootstrap_method_name(method).c_str(), opt.B,
              static_cast<unsigned long long>(seed));
  std::printf("  LBM (%d): %s\n", pair.lbm.size(),
              join_names(mcb::index_names(pair.lbm, data.names)).c_str());
  std::printf("  UBM (%d): %s\n", pair.ubm.size(),
              join_names(mcb::index_names(pair.ubm, data.names)).c_str());
  std::printf("  width %d, BCR %.4f, cardinality %lld\n", pair.width, pair.bcr,
              1ll << pair.width);
  std::printf("  report written to %s\n", opt.out.c_str());
  return 0;
}

// ---------------------------------------------------------------------------
// muc
// ---------------------------------------------------------------------------

struct MucOpts {
  std::string data_path, response;
  std::vector<std::string> selectors = {"adaptive_lasso", "lasso", "stepwise"};
  SelectorFlags selector;
  int B = 1000;
  std::string algorithm = "auto";
  std::string bootstrap = "auto";
  std::uint64_t seed = 1;
  std::string out_dir = ".";
  int threads = 0;
  CLI::Option* seed_opt = nullptr;
};

int run_muc(const MucOpts& opt) {
  if (opt.B < 1) throw mcb::ConfigError("B must be at least 1");
  const std::uint64_t seed = resolve_seed(opt.seed_opt, opt.seed);
  const mcb::Dataset raw = mcb::read_dataset_csv(opt.data_path, opt.response);
  auto [data, record] = mcb::standardize(raw);
  const mcb::McbAlgorithm algorithm = resolve_algorithm(opt.algorithm, data.p());
  std::filesystem::create_directories(opt.out_dir);

  for (const std::string& name : opt.selectors) {
    const mcb::SelectorSpec spec = opt.selector.build(name, seed);
    const mcb::BootstrapMethod method = resolve_bootstrap(opt.bootstrap, spec.kind);
    const auto ens = mcb::build_ensemble(data, spec, opt.B, method, seed, opt.threads);
    const mcb::Muc muc = algorithm == mcb::McbAlgorithm::Exhaustive ? mcb::mcb_exhaustive(ens)
                                                                    : mcb::mcb_ranked(ens);
    const std::string path =
        (std::filesystem::path(opt.out_dir) / ("muc_" + mcb::selector_kind_name(spec.kind) + ".csv"))
            .string();
    write_muc_csv(path, muc.cr);
    std::printf("%-16s AMUC %.4f -> %s\n", mcb::selector_kind_name(spec.kind).c_str(),
                mcb::amuc(muc), path.c_str());
  }
  return 0;
}

// ---------------------------------------------------------------------------
// vscs
// ---------------------------------------------------------------------------

struct VscsOpts {
  std::string data_path, response;
  double alpha = 0.05;
  std::string out = "vscs_report.json";
  bool dump_survivors = false;
  std::uint64_t seed = 1;  // unused (deterministic); kept for config echo
  CLI::Option* seed_opt = nullptr;
};

int run_vscs_cmd(const VscsOpts& opt) {
  const mcb::Dataset raw = mcb::read_dataset_csv(opt.data_path, opt.response);
  auto [data, record] = mcb::standardize(raw);
  const auto result = mcb::vscs(data, opt.alpha);
  json report = mcb::vscs_report(result, data.names, opt.dump_survivors);
  report["config"] = {{"data", opt.data_path},
                      {"response", opt.response},
                      {"alpha", opt.alpha},
                      {"dump_survivors", opt.dump_survivors}};
  mcb::write_json_file(report, opt.out);

  std::printf("VSCS at alpha=%.3g: %d surviving models, %zu LBM(s)\n", opt.alpha,
              result.cardinality, result.lbms.size());
  for (std::size_t i = 0; i < result.lbms.size() && i < 10; ++i)
    std::printf("  LBM%zu: %s\n", i + 1,
                join_names(mcb::index_names(result.lbms[i], data.names)).c_str());
  std::printf("  report written to %s\n", opt.out.c_str());
  return 0;
}

// ---------------------------------------------------------------------------
// simulate
// ---------------------------------------------------------------------------

struct SimulateOpts {
  std::string campaign;
  std::string out = "simulation_results.csv";
  std::string muc_dir;
  int threads = 0;
  std::uint64_t seed = 1;
  CLI::Option* seed_opt = nullptr;
};

int run_simulate(const SimulateOpts& opt) {
  const json doc = load_json_file(opt.campaign);
  if (!doc.contains("designs") || !doc["designs"].is_array() || doc["designs"].empty())
    throw mcb::ConfigError("campaign file needs a nonempty 'designs' array");
  const std::uint64_t seed = resolve_seed(opt.seed_opt, opt.seed);

  std::ofstream out(opt.out);
  if (!out) throw mcb::ConfigError("cannot write " + opt.out);
  out << "design,n,p,p_star,rho,gamma,sigma,error_dist,selector,B,reps,seed,"
         "method,level,alpha,coverage_rate,mean_cardinality,mean_width\n";

  int index = 0;
  for (const auto& design : doc["designs"]) {
    const mcb::SimConfig cfg = design_from_json(design, seed);
    std::fprintf(stderr, "design %d/%zu: n=%d p=%d rho=%g gamma=%g reps=%d B=%d\n", index + 1,
                 doc["designs"].size(), cfg.n, cfg.p, cfg.rho, cfg.gamma, cfg.reps, cfg.B);
    const auto report = mcb::run_coverage_experiment(cfg, opt.threads, [](int done, int total) {
      if (done % 10 == 0 || done == total)
        std::fprintf(stderr, "  rep %d/%d\n", done, total);
    });

    char buf[512];
    auto emit = [&](const char* method, const mcb::AlphaRow& row) {
      std::snprintf(buf, sizeof(buf),
                    "%d,%d,%d,%d,%g,%g,%g,%s,%s,%d,%d,%llu,%s,%g,%g,%.6g,%.6g,%.6g\n", index,
                    cfg.n, cfg.p, cfg.p_star, cfg.rho, cfg.gamma, cfg.sigma,
                    mcb::error_dist_name(cfg.error_dist).c_str(),
                    mcb::selector_kind_name(cfg.selector.kind).c_str(), cfg.B, cfg.reps,
                    static_cast<unsigned long long>(cfg.seed), method,
                    100.0 * (1.0 - row.alpha), row.alpha, row.coverage_rate,
                    row.mean_cardinality, row.mean_width);
      out << buf;
    };
    for (const auto& row : report.mcb) emit("MCB", row);
    for (const auto& row : report.vscs) emit("VSCS", row);

    if (!opt.muc_dir.empty()) {
      std::filesystem::create_directories(opt.muc_dir);
      const std::string path =
          (std::filesystem::path(opt.muc_dir) / ("muc_design" + std::to_string(index) + ".csv"))
              .string();
      write_muc_csv(path, report.mean_cr);
    }
    ++index;
  }
  std::printf("results written to %s\n", opt.out.c_str());
  return 0;
}

// ---------------------------------------------------------------------------
// compare
// ---------------------------------------------------------------------------

struct CompareOpts {
  std::string campaign;
  std::string out = "amuc_table.csv";
  std::string muc_dir;
  int threads = 0;
  std::uint64_t seed = 1;
  CLI::Option* seed_opt = nullptr;
};

int run_compare(const CompareOpts& opt) {
  const json doc = load_json_file(opt.campaign);
  if (!doc.contains("design")) throw mcb::ConfigError("campaign file needs a 'design' object");
  if (!doc.contains("selectors") || !doc["selectors"].is_array() || doc["selectors"].empty())
    throw mcb::ConfigError("campaign file needs a nonempty 'selectors' array");
  const std::uint64_t seed = resolve_seed(opt.seed_opt, opt.seed);

  const mcb::SimConfig cfg = design_from_json(doc["design"], seed);
  std::vector<mcb::SelectorSpec> specs;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < doc["selectors"].size(); ++i) {
    specs.push_back(selector_from_json(doc["selectors"][i], cfg.seed));
    if (doc.contains("labels") && i < doc["labels"].size())
      labels.push_back(doc["labels"][i].get<std::string>());
    else
      labels.push_back(mcb::selector_kind_name(specs.back().kind) + "_" + std::to_string(i));
  }

  std::fprintf(stderr, "comparing %zu selectors over %d reps\n", specs.size(), cfg.reps);
  const auto cmp = mcb::compare_selectors(cfg, specs, labels, opt.threads);

  std::ofstream out(opt.out);
  if (!out) throw mcb::ConfigError("cannot write " + opt.out);
  out << "selector,amuc\n";
  for (std::size_t s = 0; s < labels.size(); ++s) {
    out << labels[s] << ',' << cmp.mean_amuc[s] << '\n';
    std::printf("%-20s AMUC %.4f\n", labels[s].c_str(), cmp.mean_amuc[s]);
  }
  if (!opt.muc_dir.empty()) {
    std::filesystem::create_directories(opt.muc_dir);
    for (std::size_t s = 0; s < labels.size(); ++s)
      write_muc_csv(
          (std::filesystem::path(opt.muc_dir) / ("muc_" + labels[s] + ".csv")).string(),
          cmp.mean_cr[s]);
  }
  std::printf("table written to %s\n", opt.out.c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Model confidence bounds for variable selection"};
  app.require_subcommand(1);

  FitMcbOpts fit_opts;
  auto* fit = app.add_subcommand("fit-mcb", "Construct the 100(1-alpha)%-MCB for a CSV dataset");
  fit->add_option("--data", fit_opts.data_path, "Input CSV (header row, numeric fields)")
      ->required();
  fit->add_option("--response", fit_opts.response, "Response column name")->required();
  add_selector_flags(fit, fit_opts.selector);
  fit->add_option("--alpha", fit_opts.alpha, "1 - confidence level");
  fit->add_option("--B", fit_opts.B, "Bootstrap replicates");
  fit->add_option("--algorithm", fit_opts.algorithm, "exhaustive, ranked or auto");
  fit->add_option("--bootstrap", fit_opts.bootstrap, "residual, modified_residual or auto");
  fit_opts.seed_opt = fit->add_option("--seed", fit_opts.seed, "RNG seed (or env MCB_SEED)");
  fit->add_option("--out", fit_opts.out, "Report path");
  fit->add_option("--format", fit_opts.format, "Report format: json or csv");
  fit->add_option("--threads", fit_opts.threads, "Worker threads (0 = auto)");

  MucOpts muc_opts;
  auto* muc = app.add_subcommand("muc", "Write model uncertainty curves for several selectors");
  muc->add_option("--data", muc_opts.data_path, "Input CSV")->required();
  muc->add_option("--response", muc_opts.response, "Response column name")->required();
  muc->add_option("--selectors", muc_opts.selectors, "Selector list")->delimiter(',');
  add_selector_flags(muc, muc_opts.selector);
  muc->add_option("--B", muc_opts.B, "Bootstrap replicates");
  muc->add_option("--algorithm", muc_opts.algorithm, "exhaustive, ranked or auto");
  muc->add_option("--bootstrap", muc_opts.bootstrap, "residual, modified_residual or auto");
  muc_opts.seed_opt = muc->add_option("--seed", muc_opts.seed, "RNG seed (or env MCB_SEED)");
  muc->add_option("--out-dir", muc_opts.out_dir, "Directory for muc_<selector>.csv files");
  muc->add_option("--threads", muc_opts.threads, "Worker threads (0 = auto)");

  VscsOpts vscs_opts;
  auto* vs = app.add_subcommand("vscs", "Variable selection confidence set by F-test survival");
  vs->add_option("--data", vscs_opts.data_path, "Input CSV")->required();
  vs->add_option("--response", vscs_opts.response, "Response column name")->required();
  vs->add_option("--alpha", vscs_opts.alpha, "Test level");
  vs->add_option("--out", vscs_opts.out, "Report path");
  vs->add_flag("--dump-survivors", vscs_opts.dump_survivors, "Include every survivor in the report");

  SimulateOpts sim_opts;
  auto* sim = app.add_subcommand("simulate", "Run a Monte Carlo coverage campaign");
  sim->add_option("--campaign", sim_opts.campaign, "Campaign JSON file")->required();
  sim->add_option("--out", sim_opts.out, "Results CSV path");
  sim->add_option("--muc-dir", sim_opts.muc_dir, "Directory for mean-MUC CSVs");
  sim->add_option("--threads", sim_opts.threads, "Worker threads (0 = auto)");
  sim_opts.seed_opt = sim->add_option("--seed", sim_opts.seed, "Fallback seed for designs");

  CompareOpts cmp_opts;
  auto* cmp = app.add_subcommand("compare", "Compare selector MUCs/AMUCs on shared datasets");
  cmp->add_option("--campaign", cmp_opts.campaign, "Campaign JSON with design + selectors")
      ->required();
  cmp->add_option("--out", cmp_opts.out, "AMUC table CSV path");
  cmp->add_option("--muc-dir", cmp_opts.muc_dir, "Directory for per-selector MUC CSVs");
  cmp->add_option("--threads", cmp_opts.threads, "Worker threads (0 = auto)");
  cmp_opts.seed_opt = cmp->add_option("--seed", cmp_opts.seed, "Fallback seed for the design");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (fit->parsed()) return run_fit_mcb(fit_opts);
    if (muc->parsed()) return run_muc(muc_opts);
    if (vs->parsed()) return run_vscs_cmd(vscs_opts);
    if (sim->parsed()) return run_simulate(sim_opts);
    if (cmp->parsed()) return run_compare(cmp_opts);
  } catch (const mcb::CsvError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitCsv;
  } catch (const mcb::ConfigError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitConfig;
  } catch (const mcb::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitNumeric;
  }
  return 0;
}
