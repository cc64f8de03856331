#include "mcb/mcb.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <unordered_map>

#include "mcb/errors.hpp"

namespace mcb {

namespace {

// Lexicographic order on the ascending bit-position sequences of two masks;
// a strict prefix compares smaller. Matches lex_less on ModelIndexSet.
bool mask_lex_less(std::uint32_t a, std::uint32_t b) {
  while (a != 0 && b != 0) {
    const int ia = std::countr_zero(a);
    const int ib = std::countr_zero(b);
    if (ia != ib) return ia < ib;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

struct PairCandidate {
  std::int64_t count = -1;
  std::uint32_t m1 = 0;
  std::uint32_t m2 = 0;
};

bool candidate_beats(std::int64_t count, std::uint32_t m1, std::uint32_t m2,
                     const PairCandidate& incumbent) {
  if (count != incumbent.count) return count > incumbent.count;
  if (m1 != incumbent.m1) return mask_lex_less(m1, incumbent.m1);
  if (m2 != incumbent.m2) return mask_lex_less(m2, incumbent.m2);
  return false;
}

Muc make_muc(int p, McbAlgorithm algorithm) {
  Muc muc;
  muc.p = p;
  muc.algorithm = algorithm;
  muc.entries.resize(p + 1);
  muc.cr.assign(p + 1, 0.0);
  muc.pair_evaluations.assign(p + 1, 0);
  return muc;
}

}  // namespace

std::string mcb_algorithm_name(McbAlgorithm algorithm) {
  return algorithm == McbAlgorithm::Exhaustive ? "exhaustive" : "ranked";
}

std::uint64_t Muc::total_pair_evaluations() const {
  return std::accumulate(pair_evaluations.begin(), pair_evaluations.end(), std::uint64_t{0});
}

double bcr(const ModelIndexSet& m1, const ModelIndexSet& m2, const BootstrapEnsemble& ens) {
  if (!m1.is_subset_of(m2))
    throw NotNested("bcr requires m1 to be a subset of m2; got " + m1.to_string() + " vs " +
                    m2.to_string());
  if (ens.p() != m1.ambient())
    throw ConfigError("pair and ensemble have different ambient dimensions");
  int count = 0;
  for (const auto& m : ens.models)
    if (m1.is_subset_of(m) && m.is_subset_of(m2)) ++count;
  return static_cast<double>(count) / ens.B;
}

Muc mcb_exhaustive(const BootstrapEnsemble& ens, BoundConstraint constraint) {
  ens.validate();
  const int p = ens.p();
  if (p > kExhaustiveLimit)
    throw TooLarge("exhaustive search supports at most " + std::to_string(kExhaustiveLimit) +
                   " predictors, got " + std::to_string(p));

  const std::uint32_t full = (p == 32) ? ~0u : ((std::uint32_t{1} << p) - 1);
  std::vector<std::uint32_t> counts(std::size_t{1} << p, 0);
  for (const auto& m : ens.models) counts[static_cast<std::uint32_t>(m.mask())]++;

  std::vector<PairCandidate> best(p + 1);
  Muc muc = make_muc(p, McbAlgorithm::Exhaustive);

  // Scratch for the sublattice of each candidate UBM: `expand` maps the
  // compressed submask index back to a predictor mask and `dense` holds, after
  // the superset-sum pass, the number of bootstrap models nested between the
  // compressed LBM and the UBM.
  std::vector<std::uint32_t> expand(std::size_t{1} << p);
  std::vector<std::uint32_t> dense(std::size_t{1} << p);
  int positions[32];

  for (std::uint32_t m2 = 0; m2 <= full; ++m2) {
    if (constraint == BoundConstraint::UpperFull && m2 != full) continue;
    const int k = std::popcount(m2);
    {
      std::uint32_t rest = m2;
      for (int b = 0; b < k; ++b) {
        positions[b] = std::countr_zero(rest);
        rest &= rest - 1;
      }
    }
    const std::uint32_t sub_size = std::uint32_t{1} << k;
    expand[0] = 0;
    dense[0] = counts[0];
    for (std::uint32_t i = 1; i < sub_size; ++i) {
      const int b = std::countr_zero(i);
      expand[i] = expand[i & (i - 1)] | (std::uint32_t{1} << positions[b]);
      dense[i] = counts[expand[i]];
    }
    for (int b = 0; b < k; ++b) {
      const std::uint32_t bit = std::uint32_t{1} << b;
      for (std::uint32_t i = 0; i < sub_size; ++i)
        if (!(i & bit)) dense[i] += dense[i | bit];
    }
    for (std::uint32_t i = 0; i < sub_size; ++i) {
      if (constraint == BoundConstraint::LowerEmpty && i != 0) continue;
      const int w = k - std::popcount(i);
      muc.pair_evaluations[w]++;
      const std::int64_t count = dense[i];
      if (candidate_beats(count, expand[i], m2, best[w]))
        best[w] = {count, expand[i], m2};
    }
  }

  for (int w = 0; w <= p; ++w) {
    McbPair pair;
    pair.lbm = ModelIndexSet::from_mask(best[w].m1, p);
    pair.ubm = ModelIndexSet::from_mask(best[w].m2, p);
    pair.width = w;
    pair.bcr = static_cast<double>(best[w].count) / ens.B;
    muc.cr[w] = pair.bcr;
    muc.entries[w] = std::move(pair);
  }
  return muc;
}

std::vector<int> importance_ranking(const BootstrapEnsemble& ens) {
  const int p = ens.p();
  std::vector<int> order(p);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (ens.frequencies[a] != ens.frequencies[b])
      return ens.frequencies[a] > ens.frequencies[b];
    return a < b;
  });
  return order;
}

Muc mcb_ranked(const BootstrapEnsemble& ens, BoundConstraint constraint) {
  ens.validate();
  const int p = ens.p();
  const std::vector<int> ranking = importance_ranking(ens);

  // Prefix models of the ranking; candidate pairs are (prefix[k], prefix[k+w]).
  std::vector<ModelIndexSet> prefix(p + 1, ModelIndexSet(p));
  for (int k = 1; k <= p; ++k) prefix[k] = prefix[k - 1].with(ranking[k - 1]);

  std::unordered_map<ModelIndexSet, int, ModelIndexSetHash> distinct;
  for (const auto& m : ens.models) distinct[m]++;

  Muc muc = make_muc(p, McbAlgorithm::Ranked);
  for (int w = 0; w <= p; ++w) {
    int best_k = -1;
    std::int64_t best_count = -1;
    for (int k = 0; k <= p - w; ++k) {
      if (constraint == BoundConstraint::LowerEmpty && k != 0) continue;
      if (constraint == BoundConstraint::UpperFull && k + w != p) continue;
      muc.pair_evaluations[w]++;
      std::int64_t count = 0;
      for (const auto& [model, c] : distinct)
        if (prefix[k].is_subset_of(model) && model.is_subset_of(prefix[k + w])) count += c;
      if (count > best_count) {  // ties resolve to the smallest k
        best_count = count;
        best_k = k;
      }
    }
    McbPair pair;
    pair.lbm = prefix[best_k];
    pair.ubm = prefix[best_k + w];
    pair.width = w;
    pair.bcr = static_cast<double>(best_count) / ens.B;
    muc.cr[w] = pair.bcr;
    muc.entries[w] = std::move(pair);
  }
  return muc;
}

McbPair select_final_mcb(const Muc& muc, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw ConfigError("alpha must lie in (0, 1)");
  for (int w = 0; w <= muc.p; ++w)
    if (muc.cr[w] >= 1.0 - alpha) return muc.entries[w];
  // Unreachable for a well-formed curve: cr(p) = 1.
  throw NumericError("model uncertainty curve never reaches the requested confidence");
}

std::vector<ModelIndexSet> mcs_enumerate(const McbPair& pair) {
  if (!pair.lbm.is_subset_of(pair.ubm))
    throw NotNested("mcs_enumerate requires lbm to be a subset of ubm");
  const std::vector<int> extra = pair.ubm.set_difference(pair.lbm).indices();
  const int width = static_cast<int>(extra.size());
  if (width > kEnumerationWidthLimit)
    throw WidthTooLarge("refusing to enumerate 2^" + std::to_string(width) + " models");

  std::vector<ModelIndexSet> out;
  out.reserve(std::size_t{1} << width);
  for (std::uint32_t sub = 0; sub < (std::uint32_t{1} << width); ++sub) {
    ModelIndexSet m = pair.lbm;
    for (int b = 0; b < width; ++b)
      if ((sub >> b) & 1u) m.insert(extra[b]);
    out.push_back(std::move(m));
  }
  return out;
}

double amuc(const Muc& muc) {
  if (muc.p < 1) throw ConfigError("model uncertainty curve has no predictors");
  double area = 0.0;
  for (int w = 0; w < muc.p; ++w) area += 0.5 * (muc.cr[w] + muc.cr[w + 1]);
  return area / muc.p;
}

std::vector<std::pair<double, double>> muc_points(const Muc& muc) {
  std::vector<std::pair<double, double>> points;
  points.reserve(muc.p + 1);
  for (int w = 0; w <= muc.p; ++w)
    points.emplace_back(static_cast<double>(w) / muc.p, muc.cr[w]);
  return points;
}

}  // namespace mcb
