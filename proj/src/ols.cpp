#include "mcb/ols.hpp"

#include <cmath>
#include <string>

#include "mcb/errors.hpp"

namespace mcb {

FitResult fit_ols(const Dataset& data, const ModelIndexSet& support) {
  const int n = data.n();
  const int p = data.p();
  if (support.ambient() != p)
    throw ConfigError("support ambient dimension " + std::to_string(support.ambient()) +
                      " does not match p = " + std::to_string(p));
  const auto idx = support.indices();
  const int k = static_cast<int>(idx.size());
  if (k > n)
    throw ConfigError("support size " + std::to_string(k) + " exceeds n = " + std::to_string(n));

  FitResult fit;
  fit.support = support;
  fit.coefficients = Eigen::VectorXd::Zero(p);

  if (k == 0) {
    fit.residuals = data.y;
  } else {
    Eigen::MatrixXd Xs(n, k);
    for (int c = 0; c < k; ++c) Xs.col(c) = data.X.col(idx[c]);

    Eigen::HouseholderQR<Eigen::MatrixXd> qr(Xs);
    const Eigen::VectorXd rdiag = qr.matrixQR().diagonal().head(k).cwiseAbs();
    const double rmax = rdiag.maxCoeff();
    if (rmax <= 0.0 || rdiag.minCoeff() < 1e-10 * rmax)
      throw RankDeficient("submatrix for support " + support.to_string() +
                          " is numerically singular");

    const Eigen::VectorXd beta = qr.solve(data.y);
    for (int c = 0; c < k; ++c) fit.coefficients[idx[c]] = beta[c];
    fit.residuals = data.y - Xs * beta;
  }

  fit.rss = fit.residuals.squaredNorm();
  if (n > k) {
    fit.sigma_hat = std::sqrt(fit.rss / (n - k));
  } else {
    fit.sigma_hat = 0.0;
    fit.degenerate = true;
  }
  return fit;
}

}  // namespace mcb
