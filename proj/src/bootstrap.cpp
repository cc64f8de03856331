#include "mcb/bootstrap.hpp"

#include <cmath>
#include <utility>

#include "mcb/errors.hpp"
#include "mcb/parallel.hpp"
#include "mcb/rng.hpp"

namespace mcb {

namespace {

// Salts for the per-replicate substreams (resampling vs CV fold assignment).
constexpr std::uint64_t kResampleSalt = 0x7265736d;
constexpr std::uint64_t kCvSalt = 0x63766c64;

Dataset resample_around(const Dataset& data, const Eigen::VectorXd& center,
                        const Eigen::VectorXd& residuals, std::mt19937_64& rng) {
  const int n = data.n();
  Eigen::VectorXd pool = residuals.array() - residuals.mean();
  Dataset out = data;
  out.standardized = false;
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int i = 0; i < n; ++i) out.y[i] = center[i] + pool[pick(rng)];
  return out;
}

}  // namespace

std::string bootstrap_method_name(BootstrapMethod method) {
  return method == BootstrapMethod::Residual ? "residual" : "modified_residual";
}

BootstrapMethod bootstrap_method_from_name(const std::string& name) {
  if (name == "residual") return BootstrapMethod::Residual;
  if (name == "modified_residual") return BootstrapMethod::ModifiedResidual;
  throw ConfigError("unknown bootstrap method: " + name);
}

BootstrapMethod default_bootstrap_method(SelectorKind kind) {
  return kind == SelectorKind::Lasso ? BootstrapMethod::ModifiedResidual
                                     : BootstrapMethod::Residual;
}

Eigen::VectorXd BootstrapEnsemble::compute_frequencies(const std::vector<ModelIndexSet>& models,
                                                       int p) {
  Eigen::VectorXd freq = Eigen::VectorXd::Zero(p);
  for (const auto& m : models)
    for (int j : m.indices()) freq[j] += 1.0;
  if (!models.empty()) freq /= static_cast<double>(models.size());
  return freq;
}

void BootstrapEnsemble::validate() const {
  if (B < 1 || static_cast<int>(models.size()) != B)
    throw ConfigError("ensemble must hold exactly B >= 1 models");
  const int dim = models.front().ambient();
  for (const auto& m : models)
    if (m.ambient() != dim) throw ConfigError("ensemble models have mixed ambient dimensions");
  if (frequencies.size() != dim) throw ConfigError("frequency vector length does not match p");
  const Eigen::VectorXd expect = compute_frequencies(models, dim);
  if ((frequencies - expect).cwiseAbs().maxCoeff() != 0.0)
    throw ConfigError("frequencies are inconsistent with the stored models");
}

double hard_threshold_level(int n) {
  if (n < 1) throw ConfigError("hard_threshold_level requires n >= 1");
  return std::pow(static_cast<double>(n), -1.0 / 3.0);
}

Dataset residual_resample(const Dataset& data, const FitResult& fit, std::mt19937_64& rng) {
  data.validate();
  if (fit.residuals.size() != data.n())
    throw ConfigError("fit was not computed on this dataset (residual length mismatch)");
  const Eigen::VectorXd center = data.X * fit.coefficients;
  return resample_around(data, center, fit.residuals, rng);
}

Dataset modified_residual_resample(const Dataset& data, const FitResult& lasso_fit,
                                   std::mt19937_64& rng, std::optional<double> threshold) {
  data.validate();
  if (lasso_fit.coefficients.size() != data.p())
    throw ConfigError("fit was not computed on this dataset (coefficient length mismatch)");
  const double a_n = threshold.value_or(hard_threshold_level(data.n()));
  Eigen::VectorXd thresholded = lasso_fit.coefficients;
  for (int j = 0; j < data.p(); ++j)
    if (std::fabs(thresholded[j]) < a_n) thresholded[j] = 0.0;
  const Eigen::VectorXd center = data.X * thresholded;
  const Eigen::VectorXd residuals = data.y - center;
  return resample_around(data, center, residuals, rng);
}

BootstrapEnsemble build_ensemble(const Dataset& data, const SelectorSpec& selector, int B,
                                 BootstrapMethod method, std::uint64_t seed, int threads,
                                 bool freeze_tuning) {
  data.validate();
  if (!data.standardized) throw ConfigError("build_ensemble requires standardized data");
  if (B < 1) throw ConfigError("B must be at least 1");
  if (method == BootstrapMethod::ModifiedResidual && selector.kind != SelectorKind::Lasso)
    throw ConfigError("the modified residual bootstrap applies to the Lasso selector");

  // Selection on the original data fixes the resampling center. The residual
  // pool comes from the OLS refit on the selected support, except for the
  // modified method where it is taken around the thresholded Lasso fit.
  const Selection initial = select(data, selector);
  FitResult center_fit;
  if (method == BootstrapMethod::Residual)
    center_fit = fit_ols(data, initial.support);
  else
    center_fit = initial.fit;

  // Replicates reuse the penalty levels resolved on the observed data: the
  // bootstrap validity results behind this construction hold for a fixed
  // lambda_n sequence, so only the data are re-randomized, not the tuning.
  SelectorSpec replicate_spec = selector;
  if (freeze_tuning && replicate_spec.penalized()) {
    replicate_spec.lambda = initial.lambda;
    if (replicate_spec.kind == SelectorKind::AdaptiveLasso &&
        replicate_spec.adaptive_init == AdaptiveInit::LassoCv)
      replicate_spec.pilot_lambda = initial.pilot_lambda;
  }

  const int p = data.p();
  std::vector<ModelIndexSet> models(B, ModelIndexSet(p));
  parallel_for(B, threads, [&](int b) {
    std::string last_error;
    for (int attempt = 0; attempt <= 3; ++attempt) {
      try {
        auto rng = substream(seed, static_cast<std::uint64_t>(b),
                             kResampleSalt + static_cast<std::uint64_t>(attempt));
        Dataset boot = method == BootstrapMethod::Residual
                           ? residual_resample(data, center_fit, rng)
                           : modified_residual_resample(data, center_fit, rng);
        // Selection assumes centered responses; X columns are untouched by
        // residual resampling so the rest of the invariant carries over.
        boot.y.array() -= boot.y.mean();
        boot.standardized = true;

        SelectorSpec spec_b = replicate_spec;
        spec_b.seed = derive_seed(seed, static_cast<std::uint64_t>(b),
                                  kCvSalt + static_cast<std::uint64_t>(attempt));
        models[b] = select(boot, spec_b).support;
        return;
      } catch (const Error& e) {
        last_error = e.what();
      }
    }
    throw ReplicateFailed(b, last_error);
  });

  BootstrapEnsemble ens;
  ens.models = std::move(models);
  ens.B = B;
  ens.frequencies = BootstrapEnsemble::compute_frequencies(ens.models, p);
  ens.method = method;
  ens.selector = selector;
  ens.seed = seed;
  return ens;
}

}  // namespace mcb
