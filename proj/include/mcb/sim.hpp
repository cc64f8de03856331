#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "mcb/bootstrap.hpp"
#include "mcb/dataset.hpp"
#include "mcb/mcb.hpp"
#include "mcb/selectors.hpp"

namespace mcb {

enum class ErrorDist { Normal, Laplace };

std::string error_dist_name(ErrorDist dist);
ErrorDist error_dist_from_name(const std::string& name);

/// One simulation design: rows x_i ~ N_p(0, Sigma) with Sigma_ij = rho^|i-j|,
/// true coefficients theta_j = gamma^j on the first p_star predictors, and
/// errors with variance sigma^2 (Laplace scale sigma/sqrt(2)).
struct SimConfig {
  int n = 100;
  int p = 10;
  int p_star = 5;
  double rho = 0.0;
  double gamma = 1.0;
  double sigma = 1.0;
  ErrorDist error_dist = ErrorDist::Normal;
  int B = 200;
  int reps = 200;
  std::vector<double> alpha_grid = {0.05};
  SelectorSpec selector;
  std::uint64_t seed = 0;
  McbAlgorithm algorithm = McbAlgorithm::Ranked;
  bool run_vscs = false;

  void validate() const;
  Eigen::VectorXd true_theta() const;
  ModelIndexSet true_model() const;
  Eigen::MatrixXd covariance() const;
};

/// Draw one dataset; deterministic given (config.seed, rep_index).
Dataset generate(const SimConfig& config, int rep_index);

struct AlphaRow {
  double alpha = 0.0;
  double coverage_rate = 0.0;
  double mean_cardinality = 0.0;
  double mean_width = 0.0;
};

struct McReport {
  std::vector<AlphaRow> mcb;
  std::vector<AlphaRow> vscs;       // empty unless run_vscs; mean_width stays 0
  std::vector<double> mean_cr;      // pointwise mean MUC ordinates, length p+1
  double mean_amuc = 0.0;
  double underfit_rate = 0.0;       // bootstrap models missing a true predictor
  double overfit_rate = 0.0;        // strict supersets of the true model
  double exact_rate = 0.0;
};

/// Called after each repetition completes with (done, total); may fire from
/// worker threads.
using ProgressFn = std::function<void(int, int)>;

/// Full Monte Carlo campaign for one design: per repetition, generate data,
/// build the bootstrap ensemble, compute the MUC, select the final MCB at
/// every alpha and record true-model coverage and 2^width cardinality (plus
/// the VSCS counterparts when enabled). Deterministic given the config.
McReport run_coverage_experiment(const SimConfig& config, int threads = 0,
                                 const ProgressFn& progress = {});

struct Diagnostics {
  double underfit_rate = 0.0;
  double overfit_rate = 0.0;
  double exact_rate = 0.0;
};

/// Rates of underfit / strict-overfit / exact-match events over the ensemble.
Diagnostics selection_diagnostics(const BootstrapEnsemble& ens, const ModelIndexSet& truth);

struct SelectorComparison {
  std::vector<std::string> labels;
  std::vector<std::vector<double>> mean_cr;  // one mean MUC per selector
  std::vector<double> mean_amuc;
  int p = 0;
};

/// MUC comparison across selectors on shared datasets: every selector sees
/// the same simulated data and the same per-repetition bootstrap seeds.
SelectorComparison compare_selectors(const SimConfig& config,
                                     const std::vector<SelectorSpec>& selectors,
                                     const std::vector<std::string>& labels, int threads = 0);

}  // namespace mcb
