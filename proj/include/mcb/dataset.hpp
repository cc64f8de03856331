#pragma once

#include <Eigen/Dense>
#include <string>
#include <utility>
#include <vector>

namespace mcb {

/// Regression data: an n x p predictor matrix, response vector and predictor
/// labels. `standardized` means every X column has sample mean 0 and sample
/// standard deviation 1 (n-1 denominator) and y has sample mean 0.
struct Dataset {
  Eigen::MatrixXd X;
  Eigen::VectorXd y;
  std::vector<std::string> names;
  bool standardized = false;

  int n() const { return static_cast<int>(X.rows()); }
  int p() const { return static_cast<int>(X.cols()); }

  /// Throws ConfigError on dimension/finiteness/name violations.
  void validate() const;
};

/// Centering and scaling applied by standardize(); enough to map coefficients
/// fitted on the standardized data back to the original units.
struct StandardizeRecord {
  Eigen::VectorXd x_center;
  Eigen::VectorXd x_scale;
  double y_center = 0.0;

  /// Returns (coefficients in original units, intercept).
  std::pair<Eigen::VectorXd, double> to_original(const Eigen::VectorXd& std_coef) const;
};

/// Center and scale every X column to mean 0 / sd 1 and center y.
/// Throws ConstantColumn(j) when column j has zero variance.
std::pair<Dataset, StandardizeRecord> standardize(const Dataset& data);

}  // namespace mcb
