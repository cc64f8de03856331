#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace mcb {

/// A subset of predictor columns (0-based) in a fixed ambient dimension p.
/// This is the universal currency for models: selected models, true models,
/// lower/upper bound models. Stored as a packed bitset so subset tests stay
/// cheap for p up to a few hundred.
class ModelIndexSet {
 public:
  ModelIndexSet() = default;
  explicit ModelIndexSet(int p);

  static ModelIndexSet from_indices(const std::vector<int>& indices, int p);
  static ModelIndexSet from_mask(std::uint64_t mask, int p);  // requires p <= 64
  static ModelIndexSet full(int p);

  int ambient() const { return p_; }
  int size() const;
  bool empty() const { return size() == 0; }

  bool contains(int j) const;
  void insert(int j);
  void erase(int j);
  ModelIndexSet with(int j) const;
  ModelIndexSet without(int j) const;

  /// Subset test; both sets must share the ambient dimension.
  bool is_subset_of(const ModelIndexSet& other) const;

  std::vector<int> indices() const;  // ascending
  std::uint64_t mask() const;        // requires p <= 64

  ModelIndexSet set_union(const ModelIndexSet& other) const;
  ModelIndexSet set_difference(const ModelIndexSet& other) const;

  friend bool operator==(const ModelIndexSet& a, const ModelIndexSet& b) {
    return a.p_ == b.p_ && a.words_ == b.words_;
  }
  friend bool operator!=(const ModelIndexSet& a, const ModelIndexSet& b) { return !(a == b); }

  std::string to_string() const;  // e.g. "{0,2,5}"

 private:
  void check_index(int j) const;
  void check_same_ambient(const ModelIndexSet& other) const;

  int p_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Lexicographic order on the ascending index sequences; a strict prefix
/// compares smaller. This is the tie-breaking order used by the MCB search.
bool lex_less(const ModelIndexSet& a, const ModelIndexSet& b);

struct ModelIndexSetHash {
  std::size_t operator()(const ModelIndexSet& m) const;
};

}  // namespace mcb
