#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "mcb/bootstrap.hpp"
#include "mcb/errors.hpp"
#include "mcb/reports.hpp"
#include "mcb/rng.hpp"

using mcb::Dataset;
using mcb::FitResult;
using mcb::ModelIndexSet;
using mcb::SelectorKind;
using mcb::SelectorSpec;

namespace {

Dataset signal_dataset(int n, int p, double noise, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Dataset d;
  d.X.resize(n, p);
  d.y.resize(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < p; ++j) d.X(i, j) = normal(rng);
    d.y[i] = 3.0 * d.X(i, 0) - 2.0 * d.X(i, 1) + noise * normal(rng);
  }
  for (int j = 0; j < p; ++j) d.names.push_back("x" + std::to_string(j));
  return mcb::standardize(d).first;
}

}  // namespace

TEST_CASE("zero residuals reproduce the fitted values exactly") {
  Dataset d = signal_dataset(20, 3, 0.5, 1);
  FitResult fit = mcb::fit_ols(d, ModelIndexSet::full(3));
  fit.residuals.setZero();
  auto rng = mcb::substream(7, 0);
  const Dataset boot = mcb::residual_resample(d, fit, rng);
  const Eigen::VectorXd fitted = d.X * fit.coefficients;
  CHECK((boot.y - fitted).cwiseAbs().maxCoeff() == 0.0);
  CHECK((boot.X - d.X).norm() == 0.0);
}

TEST_CASE("the resampling pool is centered") {
  // Constant residuals center to zero, so y* equals the fitted values even
  // though the raw residuals are far from zero.
  Dataset d = signal_dataset(15, 2, 0.5, 2);
  FitResult fit = mcb::fit_ols(d, ModelIndexSet::full(2));
  fit.residuals.setConstant(4.2);
  auto rng = mcb::substream(8, 0);
  const Dataset boot = mcb::residual_resample(d, fit, rng);
  CHECK((boot.y - d.X * fit.coefficients).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("resampling is deterministic under a fixed seed") {
  Dataset d = signal_dataset(25, 3, 1.0, 3);
  const FitResult fit = mcb::fit_ols(d, ModelIndexSet::full(3));
  auto rng1 = mcb::substream(99, 4);
  auto rng2 = mcb::substream(99, 4);
  const Dataset a = mcb::residual_resample(d, fit, rng1);
  const Dataset b = mcb::residual_resample(d, fit, rng2);
  CHECK((a.y - b.y).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("hard threshold level follows n^(-1/3)") {
  CHECK(std::fabs(mcb::hard_threshold_level(100) - 0.21544346900318834) < 1e-12);
  CHECK(std::fabs(mcb::hard_threshold_level(1000) - 0.1) < 1e-12);
  CHECK(mcb::hard_threshold_level(1) == 1.0);
}

TEST_CASE("full thresholding resamples around zero") {
  Dataset d = signal_dataset(20, 3, 0.5, 4);
  SelectorSpec spec;
  spec.kind = SelectorKind::Lasso;
  spec.lambda = 0.05;
  const auto lasso = mcb::select(d, spec);

  const double huge = 2.0 * lasso.fit.coefficients.cwiseAbs().maxCoeff() + 1.0;
  auto rng = mcb::substream(11, 0);
  const Dataset boot = mcb::modified_residual_resample(d, lasso.fit, rng, huge);

  // center is the zero vector, so the pool is exactly the centered response
  FitResult zero_fit;
  zero_fit.coefficients = Eigen::VectorXd::Zero(3);
  zero_fit.support = ModelIndexSet(3);
  zero_fit.residuals = d.y;
  auto rng2 = mcb::substream(11, 0);
  const Dataset expected = mcb::residual_resample(d, zero_fit, rng2);
  CHECK((boot.y - expected.y).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("zero threshold reduces to the residual bootstrap around the lasso fit") {
  Dataset d = signal_dataset(20, 3, 0.5, 5);
  SelectorSpec spec;
  spec.kind = SelectorKind::Lasso;
  spec.lambda = 0.05;
  const auto lasso = mcb::select(d, spec);

  auto rng1 = mcb::substream(12, 0);
  const Dataset a = mcb::modified_residual_resample(d, lasso.fit, rng1, 0.0);
  auto rng2 = mcb::substream(12, 0);
  const Dataset b = mcb::residual_resample(d, lasso.fit, rng2);
  CHECK((a.y - b.y).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("noiseless strong signal selects the truth in every replicate") {
  Dataset d = signal_dataset(60, 4, 1e-8, 6);
  SelectorSpec spec;
  spec.kind = SelectorKind::AdaptiveLasso;
  spec.cv_folds = 5;
  const auto ens = mcb::build_ensemble(d, spec, 10, mcb::BootstrapMethod::Residual, 21);
  const auto truth = ModelIndexSet::from_indices({0, 1}, 4);
  for (const auto& m : ens.models) CHECK(m == truth);
  CHECK(ens.frequencies[0] == 1.0);
  CHECK(ens.frequencies[1] == 1.0);
  CHECK(ens.frequencies[2] == 0.0);
  CHECK(ens.frequencies[3] == 0.0);
}

TEST_CASE("a single replicate gives indicator frequencies") {
  Dataset d = signal_dataset(40, 4, 0.8, 7);
  SelectorSpec spec;
  spec.kind = SelectorKind::Lasso;
  spec.lambda = 0.1;
  const auto ens = mcb::build_ensemble(d, spec, 1, mcb::BootstrapMethod::ModifiedResidual, 22);
  CHECK(ens.B == 1);
  REQUIRE(ens.models.size() == 1);
  for (int j = 0; j < 4; ++j)
    CHECK(ens.frequencies[j] == (ens.models[0].contains(j) ? 1.0 : 0.0));
}

TEST_CASE("ensembles are identical across thread counts") {
  Dataset d = signal_dataset(50, 5, 1.0, 8);
  SelectorSpec spec;
  spec.kind = SelectorKind::AdaptiveLasso;
  spec.cv_folds = 5;
  const auto one = mcb::build_ensemble(d, spec, 50, mcb::BootstrapMethod::Residual, 33, 1);
  const auto eight = mcb::build_ensemble(d, spec, 50, mcb::BootstrapMethod::Residual, 33, 8);
  CHECK(mcb::ensemble_to_json(one).dump() == mcb::ensemble_to_json(eight).dump());
}

TEST_CASE("frequencies are recomputable from the models") {
  Dataset d = signal_dataset(40, 5, 2.0, 9);
  SelectorSpec spec;
  spec.kind = SelectorKind::Lasso;
  spec.lambda = 0.08;
  auto ens = mcb::build_ensemble(d, spec, 30, mcb::BootstrapMethod::ModifiedResidual, 44);
  CHECK_NOTHROW(ens.validate());
  const Eigen::VectorXd expect = mcb::BootstrapEnsemble::compute_frequencies(ens.models, 5);
  CHECK((ens.frequencies - expect).cwiseAbs().maxCoeff() == 0.0);

  ens.frequencies[0] += 0.25;
  CHECK_THROWS_AS(ens.validate(), mcb::ConfigError);
}

TEST_CASE("modified bootstrap is tied to the lasso selector") {
  Dataset d = signal_dataset(30, 3, 0.5, 10);
  SelectorSpec spec;
  spec.kind = SelectorKind::Scad;
  spec.lambda = 0.1;
  CHECK_THROWS_AS(mcb::build_ensemble(d, spec, 5, mcb::BootstrapMethod::ModifiedResidual, 1),
                  mcb::ConfigError);
  CHECK(mcb::default_bootstrap_method(SelectorKind::Lasso) ==
        mcb::BootstrapMethod::ModifiedResidual);
  CHECK(mcb::default_bootstrap_method(SelectorKind::Scad) == mcb::BootstrapMethod::Residual);
}

TEST_CASE("ensemble serializes to the documented schema") {
  Dataset d = signal_dataset(30, 3, 0.5, 11);
  SelectorSpec spec;
  spec.kind = SelectorKind::Lasso;
  spec.lambda = 0.05;
  const auto ens = mcb::build_ensemble(d, spec, 4, mcb::BootstrapMethod::ModifiedResidual, 55);
  const auto doc = mcb::ensemble_to_json(ens);
  CHECK(doc["B"] == 4);
  CHECK(doc["method"] == "modified_residual");
  CHECK(doc["seed"] == 55);
  CHECK(doc["models"].size() == 4);
  CHECK(doc["frequencies"].size() == 3);
  for (const auto& m : doc["models"]) CHECK(m.is_array());
}
