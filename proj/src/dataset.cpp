#include "mcb/dataset.hpp"

#include <cmath>
#include <unordered_set>

#include "mcb/errors.hpp"

namespace mcb {

void Dataset::validate() const {
  if (n() < 2) throw ConfigError("need at least 2 observations, got " + std::to_string(n()));
  if (p() < 1) throw ConfigError("need at least 1 predictor");
  if (y.size() != X.rows())
    throw ConfigError("response length " + std::to_string(y.size()) +
                      " does not match row count " + std::to_string(X.rows()));
  if (static_cast<int>(names.size()) != p())
    throw ConfigError("have " + std::to_string(names.size()) + " names for " +
                      std::to_string(p()) + " predictors");
  if (!X.allFinite()) throw ConfigError("predictor matrix contains non-finite entries");
  if (!y.allFinite()) throw ConfigError("response contains non-finite entries");
  std::unordered_set<std::string> seen;
  for (const auto& name : names)
    if (!seen.insert(name).second) throw ConfigError("duplicate predictor name: " + name);
}

std::pair<Eigen::VectorXd, double> StandardizeRecord::to_original(
    const Eigen::VectorXd& std_coef) const {
  if (std_coef.size() != x_scale.size())
    throw ConfigError("coefficient length does not match standardization record");
  Eigen::VectorXd coef = std_coef.array() / x_scale.array();
  double intercept = y_center - coef.dot(x_center);
  return {coef, intercept};
}

std::pair<Dataset, StandardizeRecord> standardize(const Dataset& data) {
  data.validate();
  const int n = data.n();
  const int p = data.p();

  StandardizeRecord rec;
  rec.x_center.resize(p);
  rec.x_scale.resize(p);
  rec.y_center = data.y.mean();

  Dataset out = data;
  out.y.array() -= rec.y_center;
  for (int j = 0; j < p; ++j) {
    const double mean = data.X.col(j).mean();
    const Eigen::VectorXd centered = data.X.col(j).array() - mean;
    const double sd = std::sqrt(centered.squaredNorm() / (n - 1));
    if (sd <= 0.0) throw ConstantColumn(j, data.names[j]);
    rec.x_center[j] = mean;
    rec.x_scale[j] = sd;
    out.X.col(j) = centered / sd;
  }
  out.standardized = true;
  return {std::move(out), std::move(rec)};
}

}  // namespace mcb
