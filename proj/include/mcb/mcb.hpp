#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mcb/bootstrap.hpp"
#include "mcb/model_set.hpp"

namespace mcb {

/// Nested model pair. The models between lbm and ubm form the model
/// confidence set of cardinality 2^width.
struct McbPair {
  ModelIndexSet lbm;
  ModelIndexSet ubm;
  int width = 0;
  double bcr = 0.0;
};

enum class McbAlgorithm { Exhaustive, Ranked };

std::string mcb_algorithm_name(McbAlgorithm algorithm);

/// Pin one bound of the pair search for one-sided bounds.
enum class BoundConstraint { None, LowerEmpty, UpperFull };

/// Per-width best pairs: entries[w] maximizes the bootstrap coverage rate
/// over the searched pairs of width w, and cr[w] is that coverage rate.
/// pair_evaluations[w] counts the candidate pairs visited at width w.
struct Muc {
  std::vector<McbPair> entries;
  std::vector<double> cr;
  int p = 0;
  McbAlgorithm algorithm = McbAlgorithm::Exhaustive;
  std::vector<std::uint64_t> pair_evaluations;

  std::uint64_t total_pair_evaluations() const;
};

/// Exhaustive search is feasible through this many predictors.
inline constexpr int kExhaustiveLimit = 15;
/// Guard on enumerating the 2^width models of a confidence set.
inline constexpr int kEnumerationWidthLimit = 20;

/// Fraction of bootstrap models nested between m1 and m2.
/// Throws NotNested unless m1 is a subset of m2.
double bcr(const ModelIndexSet& m1, const ModelIndexSet& m2, const BootstrapEnsemble& ens);

/// Best pair at every width over all nested pairs. Ties resolve to the
/// lexicographically smallest LBM, then smallest UBM. Throws TooLarge beyond
/// kExhaustiveLimit predictors.
Muc mcb_exhaustive(const BootstrapEnsemble& ens,
                   BoundConstraint constraint = BoundConstraint::None);

/// Predictor-importance search: predictors are ranked by descending selection
/// frequency (ties by ascending index) and candidate pairs are prefixes of
/// the ranking. Ties at a width resolve to the smallest prefix length k.
Muc mcb_ranked(const BootstrapEnsemble& ens, BoundConstraint constraint = BoundConstraint::None);

/// Ranking used by mcb_ranked.
std::vector<int> importance_ranking(const BootstrapEnsemble& ens);

/// The final pair: smallest width with cr(w) >= 1 - alpha (always exists
/// because cr(p) = 1).
McbPair select_final_mcb(const Muc& muc, double alpha);

/// All 2^width models nested between the bounds. Throws WidthTooLarge beyond
/// kEnumerationWidthLimit.
std::vector<ModelIndexSet> mcs_enumerate(const McbPair& pair);

/// Area under the curve of CR(w) against w/p (trapezoid rule); in [0, 1].
double amuc(const Muc& muc);

/// The (w/p, CR(w)) points of the model uncertainty curve.
std::vector<std::pair<double, double>> muc_points(const Muc& muc);

}  // namespace mcb
