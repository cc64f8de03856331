#include "mcb/sim.hpp"

#include <atomic>
#include <cmath>
#include <random>

#include "mcb/errors.hpp"
#include "mcb/parallel.hpp"
#include "mcb/rng.hpp"
#include "mcb/vscs.hpp"

namespace mcb {

namespace {

constexpr std::uint64_t kDataSalt = 0x64617461;
constexpr std::uint64_t kEnsembleSalt = 0x656e730a;
constexpr std::uint64_t kSelectorSalt = 0x73656c63;

double laplace_draw(std::mt19937_64& rng, double scale) {
  std::uniform_real_distribution<double> unif(-0.5, 0.5);
  double u = unif(rng);
  while (u == -0.5) u = unif(rng);  // keep log(1 - 2|u|) finite
  const double sign = u >= 0.0 ? 1.0 : -1.0;
  return -scale * sign * std::log1p(-2.0 * std::fabs(u));
}

Muc compute_muc(const BootstrapEnsemble& ens, McbAlgorithm algorithm) {
  return algorithm == McbAlgorithm::Exhaustive ? mcb_exhaustive(ens) : mcb_ranked(ens);
}

struct RepOutcome {
  std::vector<char> mcb_cover;
  std::vector<double> mcb_cardinality;
  std::vector<double> mcb_width;
  std::vector<char> vscs_cover;
  std::vector<double> vscs_cardinality;
  std::vector<double> cr;
  double amuc_value = 0.0;
  Diagnostics diag;
};

RepOutcome run_rep(const SimConfig& config, int rep) {
  const ModelIndexSet truth = config.true_model();

  Dataset raw = generate(config, rep);
  auto [data, record] = standardize(raw);

  SelectorSpec spec = config.selector;
  spec.seed = derive_seed(config.seed, static_cast<std::uint64_t>(rep), kSelectorSalt);
  const std::uint64_t ens_seed =
      derive_seed(config.seed, static_cast<std::uint64_t>(rep), kEnsembleSalt);
  const BootstrapEnsemble ens = build_ensemble(
      data, spec, config.B, default_bootstrap_method(spec.kind), ens_seed, /*threads=*/1);
  const Muc muc = compute_muc(ens, config.algorithm);

  RepOutcome out;
  out.cr = muc.cr;
  out.amuc_value = amuc(muc);
  out.diag = selection_diagnostics(ens, truth);
  for (double alpha : config.alpha_grid) {
    const McbPair final_pair = select_final_mcb(muc, alpha);
    const bool covered =
        final_pair.lbm.is_subset_of(truth) && truth.is_subset_of(final_pair.ubm);
    out.mcb_cover.push_back(covered ? 1 : 0);
    out.mcb_cardinality.push_back(std::ldexp(1.0, final_pair.width));
    out.mcb_width.push_back(final_pair.width);
  }
  if (config.run_vscs) {
    const auto results = vscs_sweep(data, config.alpha_grid);
    for (const auto& result : results) {
      bool covered = false;
      for (const auto& m : result.surviving)
        if (m == truth) {
          covered = true;
          break;
        }
      out.vscs_cover.push_back(covered ? 1 : 0);
      out.vscs_cardinality.push_back(result.cardinality);
    }
  }
  return out;
}

}  // namespace

std::string error_dist_name(ErrorDist dist) {
  return dist == ErrorDist::Normal ? "normal" : "laplace";
}

ErrorDist error_dist_from_name(const std::string& name) {
  if (name == "normal" || name == "gaussian") return ErrorDist::Normal;
  if (name == "laplace") return ErrorDist::Laplace;
  throw ConfigError("unknown error distribution: " + name);
}

void SimConfig::validate() const {
  if (n < 2) throw ConfigError("simulation needs n >= 2");
  if (p < 1) throw ConfigError("simulation needs p >= 1");
  if (p_star < 0 || p_star > p) throw ConfigError("p_star must lie in [0, p]");
  if (!(rho >= 0.0 && rho < 1.0)) throw ConfigError("rho must lie in [0, 1)");
  if (!(sigma > 0.0)) throw ConfigError("sigma must be positive");
  if (B < 1) throw ConfigError("B must be at least 1");
  if (reps < 1) throw ConfigError("reps must be at least 1");
  if (alpha_grid.empty()) throw ConfigError("alpha_grid must not be empty");
  for (double alpha : alpha_grid)
    if (!(alpha > 0.0 && alpha < 1.0)) throw ConfigError("alpha must lie in (0, 1)");
}

Eigen::VectorXd SimConfig::true_theta() const {
  Eigen::VectorXd theta = Eigen::VectorXd::Zero(p);
  for (int j = 0; j < p_star; ++j) theta[j] = std::pow(gamma, j + 1);
  return theta;
}

ModelIndexSet SimConfig::true_model() const {
  ModelIndexSet m(p);
  for (int j = 0; j < p_star; ++j) m.insert(j);
  return m;
}

Eigen::MatrixXd SimConfig::covariance() const {
  Eigen::MatrixXd sigma_mat(p, p);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j) sigma_mat(i, j) = std::pow(rho, std::abs(i - j));
  return sigma_mat;
}

Dataset generate(const SimConfig& config, int rep_index) {
  config.validate();
  auto rng = substream(config.seed, static_cast<std::uint64_t>(rep_index), kDataSalt);
  std::normal_distribution<double> normal(0.0, 1.0);

  Eigen::MatrixXd Z(config.n, config.p);
  for (int i = 0; i < config.n; ++i)
    for (int j = 0; j < config.p; ++j) Z(i, j) = normal(rng);

  Dataset data;
  if (config.rho == 0.0) {
    data.X = std::move(Z);
  } else {
    const Eigen::MatrixXd chol = config.covariance().llt().matrixL();
    data.X = Z * chol.transpose();
  }

  const Eigen::VectorXd theta = config.true_theta();
  data.y = data.X * theta;
  if (config.error_dist == ErrorDist::Normal) {
    for (int i = 0; i < config.n; ++i) data.y[i] += config.sigma * normal(rng);
  } else {
    const double scale = config.sigma / std::sqrt(2.0);
    for (int i = 0; i < config.n; ++i) data.y[i] += laplace_draw(rng, scale);
  }

  data.names.reserve(config.p);
  for (int j = 0; j < config.p; ++j) data.names.push_back("x" + std::to_string(j + 1));
  return data;
}

Diagnostics selection_diagnostics(const BootstrapEnsemble& ens, const ModelIndexSet& truth) {
  ens.validate();
  if (truth.ambient() != ens.p())
    throw ConfigError("truth and ensemble have different ambient dimensions");
  int underfit = 0, overfit = 0, exact = 0;
  for (const auto& m : ens.models) {
    if (!truth.is_subset_of(m))
      ++underfit;
    else if (m == truth)
      ++exact;
    else
      ++overfit;
  }
  const double B = ens.B;
  return {underfit / B, overfit / B, exact / B};
}

McReport run_coverage_experiment(const SimConfig& config, int threads,
                                 const ProgressFn& progress) {
  config.validate();
  std::vector<RepOutcome> outcomes(config.reps);
  std::atomic<int> done{0};
  parallel_for(config.reps, threads, [&](int rep) {
    outcomes[rep] = run_rep(config, rep);
    if (progress) progress(done.fetch_add(1) + 1, config.reps);
  });

  McReport report;
  const std::size_t n_alpha = config.alpha_grid.size();
  report.mcb.resize(n_alpha);
  if (config.run_vscs) report.vscs.resize(n_alpha);
  report.mean_cr.assign(config.p + 1, 0.0);

  for (const auto& out : outcomes) {
    for (std::size_t a = 0; a < n_alpha; ++a) {
      report.mcb[a].coverage_rate += out.mcb_cover[a];
      report.mcb[a].mean_cardinality += out.mcb_cardinality[a];
      report.mcb[a].mean_width += out.mcb_width[a];
      if (config.run_vscs) {
        report.vscs[a].coverage_rate += out.vscs_cover[a];
        report.vscs[a].mean_cardinality += out.vscs_cardinality[a];
      }
    }
    for (int w = 0; w <= config.p; ++w) report.mean_cr[w] += out.cr[w];
    report.mean_amuc += out.amuc_value;
    report.underfit_rate += out.diag.underfit_rate;
    report.overfit_rate += out.diag.overfit_rate;
    report.exact_rate += out.diag.exact_rate;
  }

  const double reps = config.reps;
  for (std::size_t a = 0; a < n_alpha; ++a) {
    report.mcb[a].alpha = config.alpha_grid[a];
    report.mcb[a].coverage_rate /= reps;
    report.mcb[a].mean_cardinality /= reps;
    report.mcb[a].mean_width /= reps;
    if (config.run_vscs) {
      report.vscs[a].alpha = config.alpha_grid[a];
      report.vscs[a].coverage_rate /= reps;
      report.vscs[a].mean_cardinality /= reps;
    }
  }
  for (double& cr : report.mean_cr) cr /= reps;
  report.mean_amuc /= reps;
  report.underfit_rate /= reps;
  report.overfit_rate /= reps;
  report.exact_rate /= reps;
  return report;
}

SelectorComparison compare_selectors(const SimConfig& config,
                                     const std::vector<SelectorSpec>& selectors,
                                     const std::vector<std::string>& labels, int threads) {
  config.validate();
  if (selectors.empty()) throw ConfigError("compare_selectors needs at least one selector");
  if (labels.size() != selectors.size())
    throw ConfigError("compare_selectors needs one label per selector");

  const std::size_t n_sel = selectors.size();
  struct RepCurves {
    std::vector<std::vector<double>> cr;
    std::vector<double> amuc_value;
  };
  std::vector<RepCurves> outcomes(config.reps);

  parallel_for(config.reps, threads, [&](int rep) {
    Dataset raw = generate(config, rep);
    auto [data, record] = standardize(raw);
    // Same data and same bootstrap seed for every selector: differences in
    // the curves come from the selectors alone.
    const std::uint64_t ens_seed =
        derive_seed(config.seed, static_cast<std::uint64_t>(rep), kEnsembleSalt);
    RepCurves curves;
    curves.cr.resize(n_sel);
    curves.amuc_value.resize(n_sel);
    for (std::size_t s = 0; s < n_sel; ++s) {
      SelectorSpec spec = selectors[s];
      spec.seed = derive_seed(config.seed, static_cast<std::uint64_t>(rep), kSelectorSalt);
      const BootstrapEnsemble ens = build_ensemble(
          data, spec, config.B, default_bootstrap_method(spec.kind), ens_seed, /*threads=*/1);
      const Muc muc = compute_muc(ens, config.algorithm);
      curves.cr[s] = muc.cr;
      curves.amuc_value[s] = amuc(muc);
    }
    outcomes[rep] = std::move(curves);
  });

  SelectorComparison cmp;
  cmp.labels = labels;
  cmp.p = config.p;
  cmp.mean_cr.assign(n_sel, std::vector<double>(config.p + 1, 0.0));
  cmp.mean_amuc.assign(n_sel, 0.0);
  for (const auto& curves : outcomes)
    for (std::size_t s = 0; s < n_sel; ++s) {
      for (int w = 0; w <= config.p; ++w) cmp.mean_cr[s][w] += curves.cr[s][w];
      cmp.mean_amuc[s] += curves.amuc_value[s];
    }
  for (std::size_t s = 0; s < n_sel; ++s) {
    for (double& v : cmp.mean_cr[s]) v /= config.reps;
    cmp.mean_amuc[s] /= config.reps;
  }
  return cmp;
}

}  // namespace mcb
