#pragma once

#include <vector>

#include "mcb/dataset.hpp"
#include "mcb/model_set.hpp"

namespace mcb {

/// Candidate models surviving the F-test against the full model at level
/// alpha, ordered by cardinality then lexicographically. The full model
/// always survives.
struct VscsResult {
  std::vector<ModelIndexSet> surviving;
  double alpha = 0.0;
  std::vector<ModelIndexSet> lbms;  // subset-minimal survivors
  int cardinality = 0;              // == surviving.size()
};

/// Enumeration guard: vscs visits all 2^p candidate models.
inline constexpr int kVscsPredictorLimit = 20;

/// F-test survival over all candidate models. A model survives when the
/// p-value of F = ((RSS_m - RSS_full)/(p - |m|)) / (RSS_full/(n - p)) under
/// F(p - |m|, n - p) is at least alpha. Requires n > p and a full-rank
/// design; throws TooManyPredictors beyond the enumeration guard.
VscsResult vscs(const Dataset& data, double alpha);

/// Survival at several levels sharing one RSS enumeration.
std::vector<VscsResult> vscs_sweep(const Dataset& data, const std::vector<double>& alphas);

/// Subset-minimal members (antichain) of a survivor list.
std::vector<ModelIndexSet> minimal_models(const std::vector<ModelIndexSet>& surviving);

}  // namespace mcb
