#pragma once

#include <vector>

namespace chaoslab {

inline constexpr int kDefaultGenerationCap = 512;

/// Finite semigroup with identity, stored as its full composition table.
/// compose(s, t) means "s then t", so right actions satisfy
/// x.(s t) = (x.s).t with no reordering.
class FiniteSemigroup {
 public:
  /// Empty placeholder; every usable instance comes from from_table,
  /// trivial, or a generating construction.
  FiniteSemigroup() = default;

  /// Validates the table exhaustively: entries in range, identity law,
  /// associativity over all triples. Group/abelian flags are computed by
  /// inspection, never trusted from input.
  static FiniteSemigroup from_table(const std::vector<std::vector<int>>& rows,
                                    int identity);

  static FiniteSemigroup trivial();

  int size() const { return size_; }
  int identity() const { return identity_; }
  int compose(int s, int t) const { return table_[s * size_ + t]; }
  bool is_group() const { return group_; }
  bool is_abelian() const { return abelian_; }

  /// Smallest subsemigroup containing `seed` and the identity, as a sorted
  /// element list.
  std::vector<int> closure(std::vector<int> seed) const;

  std::vector<std::vector<int>> table_rows() const;

  friend bool operator==(const FiniteSemigroup& a,
                         const FiniteSemigroup& b) = default;

 private:
  friend FiniteSemigroup make_semigroup_unchecked(int size,
                                                  std::vector<int> table,
                                                  int identity);

  void compute_flags();

  int size_{0};
  std::vector<int> table_;  // row-major, table_[s * size_ + t] = s.t
  int identity_{0};
  bool group_{false};
  bool abelian_{false};
};

/// A semigroup of self-maps together with the maps themselves.
/// element_maps[s] is element s as a total map on the generating domain;
/// the natural right action is x.s = element_maps[s][x]. Index 0 is the
/// identity map.
struct GeneratedSemigroup {
  FiniteSemigroup semigroup;
  std::vector<std::vector<int>> element_maps;
};

/// Closes {identity} ∪ maps under function composition. Throws
/// Errc::closure_exceeds_cap when the closure grows past `cap`.
GeneratedSemigroup semigroup_from_generators(
    const std::vector<std::vector<int>>& maps,
    int cap = kDefaultGenerationCap);

}  // namespace chaoslab
