#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mcb/dataset.hpp"
#include "mcb/model_set.hpp"
#include "mcb/ols.hpp"

namespace mcb {

enum class SelectorKind { Lasso, AdaptiveLasso, Scad, Mcp, StepwiseIC };

enum class IcRule { Aic, Bic, Custom };

/// Source of the adaptive-lasso weights 1/|theta_init|^gamma: a
/// cross-validated lasso pilot (zeros drop out of the adaptive stage) or the
/// full-model OLS fit.
enum class AdaptiveInit { LassoCv, Ols };

/// How a model is selected from a dataset. For the penalized kinds either a
/// fixed `lambda` is given or (when absent) lambda is chosen by k-fold
/// cross-validation seeded from `seed`. `ic` applies to StepwiseIC only.
struct SelectorSpec {
  SelectorKind kind = SelectorKind::Lasso;
  std::optional<double> lambda;
  std::optional<double> pilot_lambda;  // adaptive-lasso pilot penalty; CV when absent
  int cv_folds = 10;
  IcRule ic = IcRule::Bic;
  double ic_custom_cn = 0.0;
  double adaptive_gamma = 2.0;
  AdaptiveInit adaptive_init = AdaptiveInit::LassoCv;
  double scad_a = 3.7;
  double mcp_gamma = 3.0;
  std::uint64_t seed = 0;
  int max_sweeps = 10000;

  bool penalized() const { return kind != SelectorKind::StepwiseIC; }
  void validate(int n) const;
};

std::string selector_kind_name(SelectorKind kind);
SelectorKind selector_kind_from_name(const std::string& name);

struct Selection {
  ModelIndexSet support;
  /// Penalized estimate for the coordinate-descent kinds; OLS refit on the
  /// selected support for StepwiseIC.
  FitResult fit;
  double lambda = 0.0;        // resolved penalty weight; 0 for StepwiseIC
  double pilot_lambda = 0.0;  // resolved pilot penalty (adaptive lasso only)
};

/// Run the selector on standardized data. The returned support is exactly
/// {j : coefficient_j != 0}.
Selection select(const Dataset& data, const SelectorSpec& spec);

/// Bidirectional stepwise search under IC(m) = log(RSS_m/n) + |m| Cn/n,
/// started from the empty model. Requires standardized data and n > p.
ModelIndexSet stepwise_ic(const Dataset& data, double penalty_cn);

/// Penalty constant Cn: 2 for AIC, log(n) for BIC.
double ic_penalty_value(IcRule rule, double custom_cn, int n);
double information_criterion(double rss, int n, int model_size, double cn);

/// Descending log-spaced path from lambda_max = max_j |x_j'y| / (n w_j) down
/// to 1e-3 * lambda_max, 100 points.
std::vector<double> lambda_grid(const Dataset& data, const SelectorSpec& spec);

/// Choose lambda over the default grid (or an explicit one) by k-fold
/// cross-validated out-of-fold squared error; ties resolve to the largest
/// lambda. Deterministic given spec.seed.
double cross_validate_lambda(const Dataset& data, const SelectorSpec& spec);
double cross_validate_lambda(const Dataset& data, const SelectorSpec& spec,
                             const std::vector<double>& grid);

/// Fold labels used by cross_validate_lambda: a seeded shuffle dealt
/// round-robin into `folds` groups.
std::vector<int> cv_fold_assignment(int n, int folds, std::uint64_t seed);

// Single-coordinate minimizers of (v/2) t^2 - z t + penalty(|t|); exposed for
// the thresholding-rule tests.
double soft_threshold(double z, double t);
double lasso_coordinate(double z, double v, double lambda);
double scad_coordinate(double z, double v, double lambda, double a);
double mcp_coordinate(double z, double v, double lambda, double gamma);

}  // namespace mcb
