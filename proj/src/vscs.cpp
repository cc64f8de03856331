#include "mcb/vscs.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mcb/errors.hpp"
#include "mcb/ols.hpp"
#include "mcb/special.hpp"

namespace mcb {

namespace {

// All models of one cardinality in lexicographic order of their sorted index
// vectors, e.g. {0,1}, {0,2}, ..., {p-2,p-1}.
void for_each_combination(int p, int k, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> comb(k);
  for (int i = 0; i < k; ++i) comb[i] = i;
  while (true) {
    fn(comb);
    int i = k - 1;
    while (i >= 0 && comb[i] == p - k + i) --i;
    if (i < 0) return;
    ++comb[i];
    for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
  }
}

struct SurvivalTest {
  double rss_full;
  double zero_tol;  // treats RSS differences below this as exact ties
  int n, p;

  // P-value of the F-test of model m against the full model; the full model
  // itself survives by convention.
  double p_value(double rss_m, int size_m) const {
    if (size_m == p) return 1.0;
    const double numerator = std::max(rss_m - rss_full, 0.0);
    const double denom_scale = rss_full / (n - p);
    if (denom_scale <= zero_tol) return numerator <= zero_tol ? 1.0 : 0.0;
    const double d1 = p - size_m;
    const double f = (numerator / d1) / denom_scale;
    return f_survival(d1, static_cast<double>(n - p), f);
  }
};

}  // namespace

std::vector<VscsResult> vscs_sweep(const Dataset& data, const std::vector<double>& alphas) {
  data.validate();
  const int n = data.n();
  const int p = data.p();
  if (p > kVscsPredictorLimit)
    throw TooManyPredictors("vscs enumerates 2^p candidates; p = " + std::to_string(p) +
                            " exceeds the limit of " + std::to_string(kVscsPredictorLimit));
  if (n <= p)
    throw ConfigError("vscs requires n > p (n = " + std::to_string(n) + ", p = " +
                      std::to_string(p) + ")");
  for (double alpha : alphas)
    if (!(alpha > 0.0 && alpha < 1.0)) throw ConfigError("alpha must lie in (0, 1)");

  const FitResult full_fit = fit_ols(data, ModelIndexSet::full(p));  // throws RankDeficient
  SurvivalTest test{full_fit.rss, 1e-12 * (data.y.squaredNorm() + 1.0), n, p};

  std::vector<VscsResult> results(alphas.size());
  for (std::size_t a = 0; a < alphas.size(); ++a) results[a].alpha = alphas[a];

  // Candidates by cardinality then lexicographic order, so survivor lists are
  // stable across runs.
  for (int k = 0; k <= p; ++k) {
    for_each_combination(p, k, [&](const std::vector<int>& comb) {
      const ModelIndexSet m = ModelIndexSet::from_indices(comb, p);
      const double rss = (k == p) ? full_fit.rss : fit_ols(data, m).rss;
      const double pv = test.p_value(rss, k);
      for (std::size_t a = 0; a < alphas.size(); ++a)
        if (pv >= alphas[a]) results[a].surviving.push_back(m);
    });
  }

  for (auto& result : results) {
    result.cardinality = static_cast<int>(result.surviving.size());
    result.lbms = minimal_models(result.surviving);
  }
  return results;
}

VscsResult vscs(const Dataset& data, double alpha) {
  return vscs_sweep(data, {alpha}).front();
}

std::vector<ModelIndexSet> minimal_models(const std::vector<ModelIndexSet>& surviving) {
  if (surviving.empty()) throw ConfigError("minimal_models requires a nonempty survivor list");
  std::vector<ModelIndexSet> sorted = surviving;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const ModelIndexSet& a, const ModelIndexSet& b) {
                     if (a.size() != b.size()) return a.size() < b.size();
                     return lex_less(a, b);
                   });
  std::vector<ModelIndexSet> minimal;
  for (const auto& m : sorted) {
    bool dominated = false;
    for (const auto& keep : minimal)
      if (keep.is_subset_of(m)) {
        dominated = true;
        break;
      }
    if (!dominated) minimal.push_back(m);
  }
  return minimal;
}

}  // namespace mcb
