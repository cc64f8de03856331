#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "mcb/dataset.hpp"
#include "mcb/model_set.hpp"
#include "mcb/ols.hpp"
#include "mcb/selectors.hpp"

namespace mcb {

enum class BootstrapMethod { Residual, ModifiedResidual };

std::string bootstrap_method_name(BootstrapMethod method);
BootstrapMethod bootstrap_method_from_name(const std::string& name);

/// Residual bootstrap is valid for the consistent selectors; Lasso needs the
/// hard-thresholded variant.
BootstrapMethod default_bootstrap_method(SelectorKind kind);

/// B bootstrap-selected models plus per-predictor selection frequencies.
struct BootstrapEnsemble {
  std::vector<ModelIndexSet> models;
  int B = 0;
  Eigen::VectorXd frequencies;
  BootstrapMethod method = BootstrapMethod::Residual;
  SelectorSpec selector;
  std::uint64_t seed = 0;

  int p() const { return models.empty() ? 0 : models.front().ambient(); }
  static Eigen::VectorXd compute_frequencies(const std::vector<ModelIndexSet>& models, int p);
  void validate() const;
};

/// Hard-threshold level a_n = n^{-1/3} for the modified residual bootstrap.
double hard_threshold_level(int n);

/// y* = X theta_hat + e*, with e* resampled from the centered residuals of
/// `fit`. X is unchanged. The returned dataset is not marked standardized
/// (y* generally has nonzero mean).
Dataset residual_resample(const Dataset& data, const FitResult& fit, std::mt19937_64& rng);

/// Residual bootstrap around the hard-thresholded Lasso fit: coefficients
/// with |theta_j| < a_n are zeroed before forming the resampling center, and
/// residuals are recomputed around that center. a_n defaults to n^{-1/3}.
Dataset modified_residual_resample(const Dataset& data, const FitResult& lasso_fit,
                                   std::mt19937_64& rng,
                                   std::optional<double> threshold = std::nullopt);

/// Run the selector on B bootstrap datasets. Replicate b draws from a
/// substream derived from (seed, b), so results are reproducible and
/// independent of the thread count. A failing replicate is retried on fresh
/// substreams up to 3 times before ReplicateFailed(b) is thrown.
///
/// With freeze_tuning (the default), penalty levels left to cross-validation
/// are resolved once on the observed data and reused by every replicate; the
/// bootstrap validity theory behind this construction treats lambda_n as a
/// deterministic sequence. Pass false to re-tune inside each replicate.
BootstrapEnsemble build_ensemble(const Dataset& data, const SelectorSpec& selector, int B,
                                 BootstrapMethod method, std::uint64_t seed, int threads = 0,
                                 bool freeze_tuning = true);

}  // namespace mcb
