#pragma once

#include <Eigen/Dense>

#include "mcb/dataset.hpp"
#include "mcb/model_set.hpp"

namespace mcb {

/// Result of fitting a (sub)model. `coefficients` has length p with zeros off
/// the support. `degenerate` is set when n == |support| (no residual degrees
/// of freedom; sigma_hat is 0 in that case).
struct FitResult {
  Eigen::VectorXd coefficients;
  ModelIndexSet support;
  Eigen::VectorXd residuals;
  double rss = 0.0;
  double sigma_hat = 0.0;
  bool degenerate = false;
};

/// Least squares on the columns in `support` via QR of the submatrix.
/// Empty support yields zero coefficients and rss = ||y||^2. Throws
/// RankDeficient when a diagonal entry of R drops below 1e-10 times the
/// largest diagonal entry.
FitResult fit_ols(const Dataset& data, const ModelIndexSet& support);

}  // namespace mcb
