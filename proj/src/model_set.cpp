#include "mcb/model_set.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "mcb/errors.hpp"

namespace mcb {

ModelIndexSet::ModelIndexSet(int p) : p_(p), words_((p + 63) / 64, 0) {
  if (p < 0) throw ConfigError("ambient dimension must be nonnegative");
}

ModelIndexSet ModelIndexSet::from_indices(const std::vector<int>& indices, int p) {
  ModelIndexSet m(p);
  for (int j : indices) m.insert(j);
  return m;
}

ModelIndexSet ModelIndexSet::from_mask(std::uint64_t mask, int p) {
  if (p > 64) throw ConfigError("from_mask supports p <= 64");
  ModelIndexSet m(p);
  if (p > 0) {
    if (p < 64 && (mask >> p) != 0) throw ConfigError("mask has bits beyond ambient dimension");
    m.words_[0] = mask;
  } else if (mask != 0) {
    throw ConfigError("mask has bits beyond ambient dimension");
  }
  return m;
}

ModelIndexSet ModelIndexSet::full(int p) {
  ModelIndexSet m(p);
  for (int j = 0; j < p; ++j) m.insert(j);
  return m;
}

int ModelIndexSet::size() const {
  int s = 0;
  for (std::uint64_t w : words_) s += std::popcount(w);
  return s;
}

void ModelIndexSet::check_index(int j) const {
  if (j < 0 || j >= p_)
    throw ConfigError("predictor index " + std::to_string(j) + " outside [0, " +
                      std::to_string(p_) + ")");
}

void ModelIndexSet::check_same_ambient(const ModelIndexSet& other) const {
  if (p_ != other.p_)
    throw ConfigError("model index sets have different ambient dimensions (" +
                      std::to_string(p_) + " vs " + std::to_string(other.p_) + ")");
}

bool ModelIndexSet::contains(int j) const {
  check_index(j);
  return (words_[j / 64] >> (j % 64)) & 1u;
}

void ModelIndexSet::insert(int j) {
  check_index(j);
  words_[j / 64] |= std::uint64_t{1} << (j % 64);
}

void ModelIndexSet::erase(int j) {
  check_index(j);
  words_[j / 64] &= ~(std::uint64_t{1} << (j % 64));
}

ModelIndexSet ModelIndexSet::with(int j) const {
  ModelIndexSet m = *this;
  m.insert(j);
  return m;
}

ModelIndexSet ModelIndexSet::without(int j) const {
  ModelIndexSet m = *this;
  m.erase(j);
  return m;
}

bool ModelIndexSet::is_subset_of(const ModelIndexSet& other) const {
  check_same_ambient(other);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

std::vector<int> ModelIndexSet::indices() const {
  std::vector<int> out;
  out.reserve(size());
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t w = words_[i];
    while (w) {
      int b = std::countr_zero(w);
      out.push_back(static_cast<int>(i) * 64 + b);
      w &= w - 1;
    }
  }
  return out;
}

std::uint64_t ModelIndexSet::mask() const {
  if (p_ > 64) throw ConfigError("mask() supports p <= 64");
  return words_.empty() ? 0 : words_[0];
}

ModelIndexSet ModelIndexSet::set_union(const ModelIndexSet& other) const {
  check_same_ambient(other);
  ModelIndexSet m = *this;
  for (std::size_t i = 0; i < words_.size(); ++i) m.words_[i] |= other.words_[i];
  return m;
}

ModelIndexSet ModelIndexSet::set_difference(const ModelIndexSet& other) const {
  check_same_ambient(other);
  ModelIndexSet m = *this;
  for (std::size_t i = 0; i < words_.size(); ++i) m.words_[i] &= ~other.words_[i];
  return m;
}

std::string ModelIndexSet::to_string() const {
  std::string s = "{";
  bool first = true;
  for (int j : indices()) {
    if (!first) s += ",";
    s += std::to_string(j);
    first = false;
  }
  return s + "}";
}

bool lex_less(const ModelIndexSet& a, const ModelIndexSet& b) {
  const auto ai = a.indices();
  const auto bi = b.indices();
  return std::lexicographical_compare(ai.begin(), ai.end(), bi.begin(), bi.end());
}

std::size_t ModelIndexSetHash::operator()(const ModelIndexSet& m) const {
  // FNV-1a over the index stream; cheap and stable.
  std::size_t h = 1469598103934665603ull;
  for (int j : m.indices()) {
    h ^= static_cast<std::size_t>(j) + 1;
    h *= 1099511628211ull;
  }
  h ^= static_cast<std::size_t>(m.ambient());
  h *= 1099511628211ull;
  return h;
}

}  // namespace mcb
