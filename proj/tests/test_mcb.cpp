#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "mcb/errors.hpp"
#include "mcb/mcb.hpp"
#include "mcb/reports.hpp"

using mcb::BootstrapEnsemble;
using mcb::McbAlgorithm;
using mcb::McbPair;
using mcb::ModelIndexSet;
using mcb::Muc;

namespace {

BootstrapEnsemble make_ensemble(const std::vector<std::vector<int>>& models, int p) {
  BootstrapEnsemble ens;
  for (const auto& idx : models) ens.models.push_back(ModelIndexSet::from_indices(idx, p));
  ens.B = static_cast<int>(models.size());
  ens.frequencies = BootstrapEnsemble::compute_frequencies(ens.models, p);
  return ens;
}

BootstrapEnsemble bernoulli_ensemble(const std::vector<double>& freqs, int B,
                                     std::uint64_t seed) {
  const int p = static_cast<int>(freqs.size());
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  BootstrapEnsemble ens;
  for (int b = 0; b < B; ++b) {
    ModelIndexSet m(p);
    for (int j = 0; j < p; ++j)
      if (unif(rng) < freqs[j]) m.insert(j);
    ens.models.push_back(std::move(m));
  }
  ens.B = B;
  ens.frequencies = BootstrapEnsemble::compute_frequencies(ens.models, p);
  return ens;
}

long long choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Independent enumerator over all nested pairs: direct mask double loop plus
// a per-pair scan of the ensemble, with the documented tie rule.
struct BruteEntry {
  double best = -1.0;
  ModelIndexSet lbm, ubm;
};

std::vector<BruteEntry> brute_force_best_pairs(const BootstrapEnsemble& ens) {
  const int p = ens.p();
  std::vector<BruteEntry> best(p + 1);
  for (std::uint32_t a = 0; a < (1u << p); ++a) {
    for (std::uint32_t b = 0; b < (1u << p); ++b) {
      if ((a & ~b) != 0) continue;  // need a subset of b
      const auto m1 = ModelIndexSet::from_mask(a, p);
      const auto m2 = ModelIndexSet::from_mask(b, p);
      const int w = m2.size() - m1.size();
      const double rate = mcb::bcr(m1, m2, ens);
      BruteEntry& cur = best[w];
      bool take = false;
      if (rate > cur.best)
        take = true;
      else if (rate == cur.best) {
        if (mcb::lex_less(m1, cur.lbm))
          take = true;
        else if (m1 == cur.lbm && mcb::lex_less(m2, cur.ubm))
          take = true;
      }
      if (take) cur = {rate, m1, m2};
    }
  }
  return best;
}

}  // namespace

TEST_CASE("bcr counts nested bootstrap models") {
  const auto ens = make_ensemble({{0, 1}, {0}, {0, 2}}, 3);
  CHECK(mcb::bcr(ModelIndexSet(3), ModelIndexSet::full(3), ens) == 1.0);
  CHECK(mcb::bcr(ModelIndexSet::from_indices({0}, 3), ModelIndexSet::from_indices({0, 1}, 3),
                 ens) == doctest::Approx(2.0 / 3.0));
  const auto m = ModelIndexSet::from_indices({0, 1}, 3);
  const auto point = make_ensemble({{0, 1}, {0, 1}}, 3);
  CHECK(mcb::bcr(m, m, point) == 1.0);
  CHECK_THROWS_AS(mcb::bcr(ModelIndexSet::from_indices({1}, 3),
                           ModelIndexSet::from_indices({0, 2}, 3), ens),
                  mcb::NotNested);
}

TEST_CASE("point-mass ensembles give a zero-width optimum") {
  const auto ens = make_ensemble({{1, 3}, {1, 3}, {1, 3}}, 5);
  const auto target = ModelIndexSet::from_indices({1, 3}, 5);
  for (const Muc& muc : {mcb::mcb_exhaustive(ens), mcb::mcb_ranked(ens)}) {
    CHECK(muc.entries[0].lbm == target);
    CHECK(muc.entries[0].ubm == target);
    CHECK(muc.cr[0] == 1.0);
    CHECK(muc.cr[5] == 1.0);
  }
}

TEST_CASE("exhaustive pair counters match the closed form at p = 10") {
  const auto ens = bernoulli_ensemble({0.9, 0.8, 0.7, 0.6, 0.5, 0.4, 0.3, 0.2, 0.6, 0.5}, 25, 7);
  const Muc muc = mcb::mcb_exhaustive(ens);
  long long total = 0;
  for (int w = 0; w <= 10; ++w) {
    long long omega_w = 0;  // sum_k C(p,k) C(p-k,w)
    for (int k = 0; k <= 10 - w; ++k) omega_w += choose(10, k) * choose(10 - k, w);
    CHECK(static_cast<long long>(muc.pair_evaluations[w]) == omega_w);
    total += omega_w;
  }
  CHECK(total == 59049);  // 3^10, the "about 60,000" iteration count
  CHECK(muc.total_pair_evaluations() == 59049);
}

TEST_CASE("ranked search visits (p+1)(p+2)/2 candidates") {
  const auto ens = bernoulli_ensemble({0.9, 0.8, 0.7, 0.6, 0.5, 0.4, 0.3, 0.2, 0.6, 0.5}, 25, 8);
  const Muc muc = mcb::mcb_ranked(ens);
  CHECK(muc.total_pair_evaluations() == 66);
}

TEST_CASE("exhaustive search matches a brute-force enumerator") {
  for (std::uint64_t seed : {31, 32, 33}) {
    const auto ens = bernoulli_ensemble({0.95, 0.7, 0.5, 0.35, 0.2}, 20, seed);
    const Muc muc = mcb::mcb_exhaustive(ens);
    const auto oracle = brute_force_best_pairs(ens);
    for (int w = 0; w <= 5; ++w) {
      CHECK(muc.cr[w] == oracle[w].best);
      CHECK(muc.entries[w].lbm == oracle[w].lbm);
      CHECK(muc.entries[w].ubm == oracle[w].ubm);
    }
  }
}

TEST_CASE("ranked search respects the importance ordering") {
  const auto ens = make_ensemble({{0, 2}, {0, 2}, {0}, {0, 1, 2}}, 4);
  // frequencies: x0 = 1.0, x2 = 0.75, x1 = 0.25, x3 = 0
  CHECK(mcb::importance_ranking(ens) == std::vector<int>{0, 2, 1, 3});
  const Muc muc = mcb::mcb_ranked(ens);
  CHECK(muc.entries[0].lbm == ModelIndexSet::from_indices({0, 2}, 4));
  CHECK(muc.cr[0] == 0.5);
  CHECK(muc.cr[4] == 1.0);
}

TEST_CASE("ranking breaks frequency ties by ascending index") {
  const auto ens = make_ensemble({{1, 3}, {1, 3}}, 4);  // x1 and x3 tie at 1.0; x0,x2 at 0
  CHECK(mcb::importance_ranking(ens) == std::vector<int>{1, 3, 0, 2});
}

TEST_CASE("ranked coverage approaches exhaustive under independent selection") {
  // light version of the independence theorem check; the acceptance suite
  // runs the full-size configuration
  const auto ens = bernoulli_ensemble({0.9, 0.75, 0.6, 0.45, 0.3, 0.15}, 4000, 99);
  const Muc ranked = mcb::mcb_ranked(ens);
  const Muc exhaustive = mcb::mcb_exhaustive(ens);
  for (int w = 0; w <= 6; ++w) {
    CHECK(exhaustive.cr[w] >= ranked.cr[w]);
    CHECK(exhaustive.cr[w] - ranked.cr[w] <= 0.05);
  }
}

TEST_CASE("final selection takes the narrowest qualifying width") {
  const auto point = make_ensemble({{0, 1}, {0, 1}, {0, 1}}, 4);
  for (double alpha : {0.5, 0.25, 0.05}) {
    const auto pair = mcb::select_final_mcb(mcb::mcb_exhaustive(point), alpha);
    CHECK(pair.width == 0);
    CHECK(pair.bcr == 1.0);
  }

  // only the degenerate pair (empty, full) covers both extremes
  const auto split = make_ensemble({{}, {0, 1, 2, 3}}, 4);
  const Muc muc = mcb::mcb_exhaustive(split);
  for (int w = 0; w < 4; ++w) CHECK(muc.cr[w] == 0.5);
  const auto pair = mcb::select_final_mcb(muc, 1e-12);
  CHECK(pair.width == 4);
  CHECK(pair.lbm.empty());
  CHECK(pair.ubm == ModelIndexSet::full(4));

  CHECK_THROWS_AS(mcb::select_final_mcb(muc, 0.0), mcb::ConfigError);
  CHECK_THROWS_AS(mcb::select_final_mcb(muc, 1.0), mcb::ConfigError);
}

TEST_CASE("confidence set enumeration is 2^width") {
  McbPair pair;
  pair.lbm = ModelIndexSet::from_indices({0}, 8);
  pair.ubm = ModelIndexSet::from_indices({0}, 8);
  pair.width = 0;
  CHECK(mcb::mcs_enumerate(pair).size() == 1);
  CHECK(mcb::mcs_enumerate(pair)[0] == pair.lbm);

  pair.ubm = ModelIndexSet::from_indices({0, 1, 2, 3, 4}, 8);
  pair.width = 4;
  const auto mcs16 = mcb::mcs_enumerate(pair);
  CHECK(mcs16.size() == 16);
  for (const auto& m : mcs16) {
    CHECK(pair.lbm.is_subset_of(m));
    CHECK(m.is_subset_of(pair.ubm));
  }

  pair.ubm = ModelIndexSet::from_indices({0, 1, 2, 3, 4, 5, 6}, 8);
  pair.width = 6;
  CHECK(mcb::mcs_enumerate(pair).size() == 64);

  McbPair too_wide;
  too_wide.lbm = ModelIndexSet(24);
  too_wide.ubm = ModelIndexSet::full(24);
  CHECK_THROWS_AS(mcb::mcs_enumerate(too_wide), mcb::WidthTooLarge);

  McbPair crossed;
  crossed.lbm = ModelIndexSet::from_indices({1}, 4);
  crossed.ubm = ModelIndexSet::from_indices({0, 2}, 4);
  CHECK_THROWS_AS(mcb::mcs_enumerate(crossed), mcb::NotNested);
}

TEST_CASE("amuc integrates the curve") {
  Muc muc;
  muc.p = 3;
  muc.algorithm = McbAlgorithm::Ranked;
  muc.cr = {1.0, 1.0, 1.0, 1.0};
  CHECK(mcb::amuc(muc) == 1.0);

  muc.p = 2;
  muc.cr = {0.0, 0.0, 1.0};
  CHECK(mcb::amuc(muc) == doctest::Approx(0.25));  // trapezoid over (0,0),(.5,0),(1,1)

  // trapezoid sums never drop below the left endpoint of a nondecreasing curve
  muc.cr = {0.4, 0.7, 1.0};
  CHECK(mcb::amuc(muc) >= 0.4);
}

TEST_CASE("muc points project the curve") {
  const auto ens = make_ensemble({{0}, {1}}, 2);
  const Muc muc = mcb::mcb_exhaustive(ens);
  const auto points = mcb::muc_points(muc);
  REQUIRE(points.size() == 3);
  CHECK(points[0].first == 0.0);
  CHECK(points[1].first == 0.5);
  CHECK(points[2].first == 1.0);
  CHECK(points[2].second == 1.0);
  // ordinates equal recomputed coverage of the stored pairs
  for (int w = 0; w <= 2; ++w)
    CHECK(points[w].second == mcb::bcr(muc.entries[w].lbm, muc.entries[w].ubm, ens));
}

TEST_CASE("bcr is monotone under widening the pair") {
  std::mt19937_64 rng(123);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const auto ens = bernoulli_ensemble({0.8, 0.6, 0.5, 0.4, 0.3, 0.7}, 60, 17);
  for (int trial = 0; trial < 50; ++trial) {
    ModelIndexSet m1(6), m2(6);
    for (int j = 0; j < 6; ++j) {
      const double u = unif(rng);
      if (u < 0.3) {
        m1.insert(j);
        m2.insert(j);
      } else if (u < 0.6) {
        m2.insert(j);
      }
    }
    ModelIndexSet wider_m1 = m1;
    if (!m1.empty()) wider_m1.erase(m1.indices().front());
    ModelIndexSet wider_m2 = m2;
    for (int j = 0; j < 6; ++j)
      if (!m2.contains(j)) {
        wider_m2.insert(j);
        break;
      }
    CHECK(mcb::bcr(wider_m1, wider_m2, ens) >= mcb::bcr(m1, m2, ens));
  }
}

TEST_CASE("curves are monotone and dominance holds on random ensembles") {
  std::mt19937_64 rng(321);
  std::uniform_int_distribution<int> psize(2, 8);
  std::uniform_int_distribution<int> bsize(5, 100);
  std::uniform_real_distribution<double> unif(0.05, 0.95);
  for (int trial = 0; trial < 20; ++trial) {
    const int p = psize(rng);
    std::vector<double> freqs(p);
    for (double& f : freqs) f = unif(rng);
    const auto ens = bernoulli_ensemble(freqs, bsize(rng), 1000 + trial);
    const Muc exhaustive = mcb::mcb_exhaustive(ens);
    const Muc ranked = mcb::mcb_ranked(ens);
    CHECK(exhaustive.cr[p] == 1.0);
    CHECK(ranked.cr[p] == 1.0);
    for (int w = 0; w < p; ++w) {
      CHECK(exhaustive.cr[w + 1] >= exhaustive.cr[w]);
      CHECK(ranked.cr[w + 1] >= ranked.cr[w]);
    }
    for (int w = 0; w <= p; ++w) CHECK(exhaustive.cr[w] >= ranked.cr[w]);

    // the final pair is valid and minimal within the curve
    for (double alpha : {0.5, 0.1}) {
      const auto pair = mcb::select_final_mcb(exhaustive, alpha);
      CHECK(pair.bcr >= 1.0 - alpha);
      CHECK(mcb::bcr(pair.lbm, pair.ubm, ens) == pair.bcr);
      for (int w = 0; w < pair.width; ++w) CHECK(exhaustive.cr[w] < 1.0 - alpha);
    }
  }
}

TEST_CASE("coverage values are label equivariant") {
  const std::vector<double> freqs = {0.9, 0.3, 0.6, 0.8, 0.2};
  const auto ens = bernoulli_ensemble(freqs, 40, 55);
  const std::vector<int> perm = {4, 2, 0, 1, 3};  // new index j holds old perm[j]

  BootstrapEnsemble permuted;
  permuted.B = ens.B;
  for (const auto& m : ens.models) {
    ModelIndexSet pm(5);
    for (int j = 0; j < 5; ++j)
      if (m.contains(perm[j])) pm.insert(j);
    permuted.models.push_back(std::move(pm));
  }
  permuted.frequencies = BootstrapEnsemble::compute_frequencies(permuted.models, 5);

  const Muc base = mcb::mcb_exhaustive(ens);
  const Muc moved = mcb::mcb_exhaustive(permuted);
  for (int w = 0; w <= 5; ++w) CHECK(base.cr[w] == moved.cr[w]);

  // where the optimum is unique, the pair itself maps through the permutation
  const auto oracle = brute_force_best_pairs(ens);
  for (int w = 0; w <= 5; ++w) {
    int ties = 0;
    for (std::uint32_t a = 0; a < 32; ++a)
      for (std::uint32_t b = 0; b < 32; ++b) {
        if ((a & ~b) != 0) continue;
        const auto m1 = ModelIndexSet::from_mask(a, 5);
        const auto m2 = ModelIndexSet::from_mask(b, 5);
        if (m2.size() - m1.size() == w && mcb::bcr(m1, m2, ens) == oracle[w].best) ++ties;
      }
    if (ties == 1) {
      ModelIndexSet expected_lbm(5), expected_ubm(5);
      for (int j = 0; j < 5; ++j) {
        if (base.entries[w].lbm.contains(perm[j])) expected_lbm.insert(j);
        if (base.entries[w].ubm.contains(perm[j])) expected_ubm.insert(j);
      }
      CHECK(moved.entries[w].lbm == expected_lbm);
      CHECK(moved.entries[w].ubm == expected_ubm);
    }
  }
}

TEST_CASE("one-sided constraints pin the requested bound") {
  const auto ens = bernoulli_ensemble({0.85, 0.6, 0.4, 0.25}, 50, 77);
  const Muc lower = mcb::mcb_exhaustive(ens, mcb::BoundConstraint::LowerEmpty);
  const Muc upper = mcb::mcb_exhaustive(ens, mcb::BoundConstraint::UpperFull);
  for (int w = 0; w <= 4; ++w) {
    CHECK(lower.entries[w].lbm.empty());
    CHECK(lower.entries[w].ubm.size() == w);
    CHECK(upper.entries[w].ubm == ModelIndexSet::full(4));
    CHECK(upper.entries[w].lbm.size() == 4 - w);
  }
  // constrained optima are bounded by the unconstrained curve
  const Muc free = mcb::mcb_exhaustive(ens);
  for (int w = 0; w <= 4; ++w) {
    CHECK(lower.cr[w] <= free.cr[w]);
    CHECK(upper.cr[w] <= free.cr[w]);
  }
  // ranked constrained variants agree on the pinned bound
  const Muc ranked_lower = mcb::mcb_ranked(ens, mcb::BoundConstraint::LowerEmpty);
  const Muc ranked_upper = mcb::mcb_ranked(ens, mcb::BoundConstraint::UpperFull);
  for (int w = 0; w <= 4; ++w) {
    CHECK(ranked_lower.entries[w].lbm.empty());
    CHECK(ranked_upper.entries[w].ubm == ModelIndexSet::full(4));
  }
}

TEST_CASE("exhaustive search rejects oversized problems") {
  BootstrapEnsemble ens;
  ens.models.push_back(ModelIndexSet(16));
  ens.B = 1;
  ens.frequencies = BootstrapEnsemble::compute_frequencies(ens.models, 16);
  CHECK_THROWS_AS(mcb::mcb_exhaustive(ens), mcb::TooLarge);
  CHECK_NOTHROW(mcb::mcb_ranked(ens));
}

TEST_CASE("mcb report carries the documented fields") {
  const auto ens = make_ensemble({{0, 1}, {0}, {0, 1}}, 3);
  const Muc muc = mcb::mcb_exhaustive(ens);
  const auto pair = mcb::select_final_mcb(muc, 0.4);
  const auto doc = mcb::mcb_report(muc, pair, 0.4, {"alpha", "beta", "gamma"});
  CHECK(doc["alpha"] == 0.4);
  CHECK(doc["algorithm"] == "exhaustive");
  CHECK(doc["width"] == pair.width);
  CHECK(doc["cardinality"] == (1 << pair.width));
  CHECK(doc["muc"].size() == 4);
  CHECK(doc["muc"][3]["cr"] == 1.0);
  CHECK(doc["amuc"] == mcb::amuc(muc));
  CHECK(doc["lbm"].is_array());
  CHECK(doc["ubm"].is_array());
}
