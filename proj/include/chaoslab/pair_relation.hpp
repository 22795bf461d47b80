#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace chaoslab {

/// A set of ordered pairs over {0..n-1}, packed as a bit matrix.
class PairRelation {
 public:
  explicit PairRelation(int n);

  static PairRelation diagonal(int n);
  static PairRelation complete(int n);

  int base_size() const { return n_; }

  bool at(int i, int j) const {
    const size_t k = static_cast<size_t>(i) * n_ + j;
    return (bits_[k >> 6] >> (k & 63)) & 1u;
  }
  void set(int i, int j, bool value = true);

  bool is_reflexive() const;
  bool is_symmetric() const;
  bool is_transitive() const;
  bool is_equivalence() const;

  bool subset_of(const PairRelation& other) const;
  bool empty() const;
  int count() const;

  PairRelation& operator&=(const PairRelation& other);
  PairRelation& operator|=(const PairRelation& other);
  /// Removes every pair present in `other`.
  PairRelation& subtract(const PairRelation& other);
  void remove_diagonal();

  friend bool operator==(const PairRelation& a, const PairRelation& b) = default;

  /// All pairs in lexicographic order.
  std::vector<std::pair<int, int>> pairs() const;

  /// First pair on which the two relations disagree, in lexicographic order.
  std::optional<std::pair<int, int>> first_difference(
      const PairRelation& other) const;

  /// "(0,1) (1,0)" style rendering of pairs(), "{}" when empty.
  std::string to_string() const;

 private:
  void check_compatible(const PairRelation& other) const;

  int n_;
  std::vector<std::uint64_t> bits_;
};

}  // namespace chaoslab
