#include "mcb/selectors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include "mcb/errors.hpp"

namespace mcb {

namespace {

constexpr double kCoefTol = 1e-7;      // coordinate-descent convergence
constexpr double kWeightFloor = 1e-8;  // OLS magnitude below which adaptive weights blow up
constexpr int kGridSize = 100;
constexpr double kGridRatio = 1e-3;

struct PenaltyWeights {
  Eigen::VectorXd w;            // per-coordinate multiplier on lambda
  std::vector<char> excluded;   // coordinates pinned at zero
  double pilot_lambda = 0.0;    // penalty the pilot estimate was fit at
};

PenaltyWeights penalty_weights(const Dataset& data, const SelectorSpec& spec) {
  const int p = data.p();
  PenaltyWeights pw{Eigen::VectorXd::Ones(p), std::vector<char>(p, 0), 0.0};
  if (spec.kind == SelectorKind::AdaptiveLasso) {
    Eigen::VectorXd init;
    if (spec.adaptive_init == AdaptiveInit::Ols) {
      init = fit_ols(data, ModelIndexSet::full(p)).coefficients;
    } else {
      // Lasso pilot; its exact zeros leave the adaptive stage entirely,
      // which is what makes the adaptive fit sparse.
      SelectorSpec pilot = spec;
      pilot.kind = SelectorKind::Lasso;
      pilot.lambda = spec.pilot_lambda;
      const Selection pilot_sel = select(data, pilot);
      init = pilot_sel.fit.coefficients;
      pw.pilot_lambda = pilot_sel.lambda;
    }
    for (int j = 0; j < p; ++j) {
      const double a = std::fabs(init[j]);
      if (a < kWeightFloor)
        pw.excluded[j] = 1;
      else
        pw.w[j] = 1.0 / std::pow(a, spec.adaptive_gamma);
    }
  }
  return pw;
}

// Covariance-mode data for coordinate descent: only X'X and X'y are needed,
// which makes sweeps O(p^2) instead of O(n p).
struct CdProblem {
  Eigen::MatrixXd gram;  // X'X
  Eigen::VectorXd xty;   // X'y
  int n = 0;
};

CdProblem make_problem(const Eigen::MatrixXd& X, const Eigen::VectorXd& y) {
  CdProblem prob;
  prob.gram.noalias() = X.transpose() * X;
  prob.xty.noalias() = X.transpose() * y;
  prob.n = static_cast<int>(X.rows());
  return prob;
}

double coordinate_update(SelectorKind kind, const SelectorSpec& spec, double z, double v,
                         double lambda_j) {
  switch (kind) {
    case SelectorKind::Lasso:
    case SelectorKind::AdaptiveLasso:
      return lasso_coordinate(z, v, lambda_j);
    case SelectorKind::Scad:
      return scad_coordinate(z, v, lambda_j, spec.scad_a);
    case SelectorKind::Mcp:
      return mcp_coordinate(z, v, lambda_j, spec.mcp_gamma);
    case SelectorKind::StepwiseIC:
      break;
  }
  throw ConfigError("coordinate update is undefined for this selector kind");
}

// One penalty level, warm-started from theta. Maintains s = G theta across
// coordinate moves; s is refreshed periodically to stop drift on long runs.
void cd_solve(const CdProblem& prob, SelectorKind kind, const SelectorSpec& spec,
              const PenaltyWeights& pw, double lambda, Eigen::VectorXd& theta) {
  const int p = static_cast<int>(prob.xty.size());
  Eigen::VectorXd s = prob.gram * theta;
  for (int sweep = 0; sweep < spec.max_sweeps; ++sweep) {
    if (sweep > 0 && sweep % 64 == 0) s = prob.gram * theta;
    double max_delta = 0.0;
    for (int j = 0; j < p; ++j) {
      if (pw.excluded[j]) continue;
      const double gjj = prob.gram(j, j);
      if (gjj <= 0.0) continue;
      const double v = gjj / prob.n;
      const double z = (prob.xty[j] - s[j] + gjj * theta[j]) / prob.n;
      const double t = coordinate_update(kind, spec, z, v, lambda * pw.w[j]);
      const double delta = t - theta[j];
      if (delta != 0.0) {
        s.noalias() += prob.gram.col(j) * delta;
        theta[j] = t;
        max_delta = std::max(max_delta, std::fabs(delta));
      }
    }
    if (max_delta < kCoefTol) return;
  }
  throw NoConvergence("coordinate descent exceeded " + std::to_string(spec.max_sweeps) +
                      " sweeps at lambda = " + std::to_string(lambda));
}

double grid_lambda_max(const CdProblem& prob, const PenaltyWeights& pw) {
  double lmax = 0.0;
  for (int j = 0; j < static_cast<int>(prob.xty.size()); ++j) {
    if (pw.excluded[j]) continue;
    lmax = std::max(lmax, std::fabs(prob.xty[j]) / (prob.n * pw.w[j]));
  }
  return lmax;
}

std::vector<double> grid_from_lambda_max(double lmax) {
  if (lmax <= 0.0) return {0.0};
  std::vector<double> grid(kGridSize);
  const double ratio = std::pow(kGridRatio, 1.0 / (kGridSize - 1));
  double value = lmax;
  for (int i = 0; i < kGridSize; ++i, value *= ratio) grid[i] = value;
  return grid;
}

// Solve down the descending path, warm-starting each level, stopping at
// `lambda` (appended if below the grid floor).
void path_solve(const CdProblem& prob, SelectorKind kind, const SelectorSpec& spec,
                const PenaltyWeights& pw, const std::vector<double>& grid, double lambda,
                Eigen::VectorXd& theta) {
  for (double level : grid) {
    if (level <= lambda) break;
    cd_solve(prob, kind, spec, pw, level, theta);
  }
  cd_solve(prob, kind, spec, pw, lambda, theta);
}

}  // namespace

void SelectorSpec::validate(int n) const {
  if (kind == SelectorKind::StepwiseIC) {
    if (lambda.has_value())
      throw ConfigError("a penalty weight does not apply to the stepwise-IC selector");
    if (ic == IcRule::Custom && !(ic_custom_cn > 0.0))
      throw ConfigError("custom IC penalty must be positive");
  } else {
    if (lambda.has_value() && !(*lambda >= 0.0))
      throw ConfigError("lambda must be nonnegative");
    if (!lambda.has_value()) {
      if (cv_folds < 2) throw ConfigError("cv_folds must be at least 2");
      if (cv_folds > n)
        throw ConfigError("cv_folds = " + std::to_string(cv_folds) + " exceeds n = " +
                          std::to_string(n));
    }
  }
  if (!(scad_a > 2.0)) throw ConfigError("scad_a must exceed 2");
  if (!(mcp_gamma > 1.0)) throw ConfigError("mcp_gamma must exceed 1");
  if (!(adaptive_gamma >= 0.0)) throw ConfigError("adaptive_gamma must be nonnegative");
  if (max_sweeps < 1) throw ConfigError("max_sweeps must be positive");
}

std::string selector_kind_name(SelectorKind kind) {
  switch (kind) {
    case SelectorKind::Lasso: return "lasso";
    case SelectorKind::AdaptiveLasso: return "adaptive_lasso";
    case SelectorKind::Scad: return "scad";
    case SelectorKind::Mcp: return "mcp";
    case SelectorKind::StepwiseIC: return "stepwise";
  }
  return "unknown";
}

SelectorKind selector_kind_from_name(const std::string& name) {
  if (name == "lasso") return SelectorKind::Lasso;
  if (name == "adaptive_lasso" || name == "alasso") return SelectorKind::AdaptiveLasso;
  if (name == "scad") return SelectorKind::Scad;
  if (name == "mcp") return SelectorKind::Mcp;
  if (name == "stepwise" || name == "stepwise_bic") return SelectorKind::StepwiseIC;
  throw ConfigError("unknown selector kind: " + name);
}

double soft_threshold(double z, double t) {
  if (z > t) return z - t;
  if (z < -t) return z + t;
  return 0.0;
}

double lasso_coordinate(double z, double v, double lambda) {
  return soft_threshold(z, lambda) / v;
}

double scad_coordinate(double z, double v, double lambda, double a) {
  const double az = std::fabs(z);
  if (az <= lambda * (v + 1.0)) return soft_threshold(z, lambda) / v;
  if (az <= v * a * lambda) {
    const double denom = v - 1.0 / (a - 1.0);
    if (denom <= 0.0)
      throw NumericError("scad_a too small for the column scale (a = " + std::to_string(a) + ")");
    return soft_threshold(z, a * lambda / (a - 1.0)) / denom;
  }
  return z / v;
}

double mcp_coordinate(double z, double v, double lambda, double gamma) {
  const double az = std::fabs(z);
  if (az <= v * gamma * lambda) {
    const double denom = v - 1.0 / gamma;
    if (denom <= 0.0)
      throw NumericError("mcp_gamma too small for the column scale (gamma = " +
                         std::to_string(gamma) + ")");
    return soft_threshold(z, lambda) / denom;
  }
  return z / v;
}

double ic_penalty_value(IcRule rule, double custom_cn, int n) {
  switch (rule) {
    case IcRule::Aic: return 2.0;
    case IcRule::Bic: return std::log(static_cast<double>(n));
    case IcRule::Custom: return custom_cn;
  }
  return custom_cn;
}

double information_criterion(double rss, int n, int model_size, double cn) {
  rss = std::max(rss, 0.0);
  return std::log(rss / n) + model_size * cn / n;
}

ModelIndexSet stepwise_ic(const Dataset& data, double penalty_cn) {
  data.validate();
  if (!data.standardized) throw ConfigError("stepwise_ic requires standardized data");
  const int n = data.n();
  const int p = data.p();
  if (n <= p)
    throw ConfigError("stepwise_ic requires n > p (n = " + std::to_string(n) + ", p = " +
                      std::to_string(p) + ")");

  ModelIndexSet current(p);
  double ic_current = information_criterion(data.y.squaredNorm(), n, 0, penalty_cn);
  while (true) {
    int best_j = -1;
    double best_ic = ic_current;
    for (int j = 0; j < p; ++j) {
      const ModelIndexSet cand = current.contains(j) ? current.without(j) : current.with(j);
      const double rss = fit_ols(data, cand).rss;
      const double ic = information_criterion(rss, n, cand.size(), penalty_cn);
      if (ic < best_ic) {  // strict: ties resolve to the smallest index
        best_ic = ic;
        best_j = j;
      }
    }
    if (best_j < 0) break;
    if (current.contains(best_j))
      current.erase(best_j);
    else
      current.insert(best_j);
    ic_current = best_ic;
  }
  return current;
}

std::vector<double> lambda_grid(const Dataset& data, const SelectorSpec& spec) {
  data.validate();
  if (!data.standardized) throw ConfigError("lambda_grid requires standardized data");
  if (!spec.penalized()) throw ConfigError("lambda_grid applies to penalized selectors only");
  const PenaltyWeights pw = penalty_weights(data, spec);
  const CdProblem prob = make_problem(data.X, data.y);
  return grid_from_lambda_max(grid_lambda_max(prob, pw));
}

std::vector<int> cv_fold_assignment(int n, int folds, std::uint64_t seed) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<int> fold_of(n);
  for (int pos = 0; pos < n; ++pos) fold_of[perm[pos]] = pos % folds;
  return fold_of;
}

double cross_validate_lambda(const Dataset& data, const SelectorSpec& spec) {
  return cross_validate_lambda(data, spec, lambda_grid(data, spec));
}

double cross_validate_lambda(const Dataset& data, const SelectorSpec& spec,
                             const std::vector<double>& grid) {
  data.validate();
  if (!data.standardized) throw ConfigError("cross_validate_lambda requires standardized data");
  if (!spec.penalized())
    throw ConfigError("cross_validate_lambda applies to penalized selectors only");
  if (grid.empty()) throw ConfigError("lambda grid is empty");
  const int n = data.n();
  const int folds = spec.cv_folds;
  if (folds < 2) throw ConfigError("cv_folds must be at least 2");
  if (n / folds < 2)
    throw FoldTooSmall("cross-validation fold would hold fewer than 2 observations (n = " +
                       std::to_string(n) + ", folds = " + std::to_string(folds) + ")");

  std::vector<double> path(grid);
  std::sort(path.begin(), path.end(), std::greater<double>());

  const PenaltyWeights pw = penalty_weights(data, spec);
  const std::vector<int> fold_of = cv_fold_assignment(n, folds, spec.seed);

  std::vector<double> sse(path.size(), 0.0);
  for (int f = 0; f < folds; ++f) {
    std::vector<int> train, test;
    train.reserve(n);
    for (int i = 0; i < n; ++i) (fold_of[i] == f ? test : train).push_back(i);

    Eigen::MatrixXd Xtr(train.size(), data.p());
    Eigen::VectorXd ytr(train.size());
    for (std::size_t r = 0; r < train.size(); ++r) {
      Xtr.row(r) = data.X.row(train[r]);
      ytr[r] = data.y[train[r]];
    }
    const CdProblem prob = make_problem(Xtr, ytr);

    Eigen::VectorXd theta = Eigen::VectorXd::Zero(data.p());
    for (std::size_t g = 0; g < path.size(); ++g) {
      cd_solve(prob, spec.kind, spec, pw, path[g], theta);
      for (int i : test) {
        const double err = data.y[i] - data.X.row(i).dot(theta);
        sse[g] += err * err;
      }
    }
  }

  // Mean out-of-fold squared error; ties resolve to the largest lambda.
  std::size_t best = 0;
  for (std::size_t g = 1; g < path.size(); ++g)
    if (sse[g] < sse[best]) best = g;
  return path[best];
}

Selection select(const Dataset& data, const SelectorSpec& spec) {
  data.validate();
  if (!data.standardized) throw ConfigError("select requires standardized data");
  const int n = data.n();
  const int p = data.p();
  spec.validate(n);

  if (spec.kind == SelectorKind::StepwiseIC) {
    const double cn = ic_penalty_value(spec.ic, spec.ic_custom_cn, n);
    ModelIndexSet support = stepwise_ic(data, cn);
    FitResult fit = fit_ols(data, support);
    return {std::move(support), std::move(fit), 0.0};
  }

  const PenaltyWeights pw = penalty_weights(data, spec);
  const CdProblem prob = make_problem(data.X, data.y);
  const std::vector<double> grid = grid_from_lambda_max(grid_lambda_max(prob, pw));
  const double lambda =
      spec.lambda.has_value() ? *spec.lambda : cross_validate_lambda(data, spec, grid);

  Eigen::VectorXd theta = Eigen::VectorXd::Zero(p);
  path_solve(prob, spec.kind, spec, pw, grid, lambda, theta);

  Selection sel;
  sel.lambda = lambda;
  sel.pilot_lambda = pw.pilot_lambda;
  sel.support = ModelIndexSet(p);
  for (int j = 0; j < p; ++j)
    if (theta[j] != 0.0) sel.support.insert(j);

  sel.fit.coefficients = theta;
  sel.fit.support = sel.support;
  sel.fit.residuals = data.y - data.X * theta;
  sel.fit.rss = sel.fit.residuals.squaredNorm();
  const int k = sel.support.size();
  if (n > k) {
    sel.fit.sigma_hat = std::sqrt(sel.fit.rss / (n - k));
  } else {
    sel.fit.sigma_hat = 0.0;
    sel.fit.degenerate = true;
  }
  return sel;
}

}  // namespace mcb
