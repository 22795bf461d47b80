#pragma once

#include <span>
#include <vector>

#include "chaoslab/cardinal.hpp"
#include "chaoslab/semigroup.hpp"

namespace chaoslab {

inline constexpr int kDefaultIdealEnumerationBound = 12;

/// An ideal on a semigroup, in one of three shapes:
///  - finite_carrier(A): the powerset P(A). On a finite set every family
///    containing ∅ and closed under subsets and unions is P(⋃ family), so
///    carriers lose nothing and cost 2^|S| instead of a doubly exponential
///    family walk.
///  - cardinal_bound(κ): {B : |B| < κ} with κ ≥ aleph0 (κ = aleph0 is the
///    finite-subsets ideal, κ = aleph1 the countable-subsets ideal).
///  - full: P(S). Kept distinct so statements quantifying over proper
///    ideals can skip it without inspecting carriers.
class IdealSpec {
 public:
  enum class Kind { finite_carrier, cardinal_bound, full };

  static IdealSpec finite_carrier(std::vector<int> carrier);
  static IdealSpec cardinal_bound(Cardinal kappa);
  static IdealSpec full();

  Kind kind() const { return kind_; }

  /// Sorted, duplicate-free. Only valid for finite_carrier.
  const std::vector<int>& carrier() const;

  /// Only valid for cardinal_bound.
  Cardinal kappa() const;

  /// Membership of an explicitly listed subset.
  bool contains_set(std::span<const int> b) const;

  /// Membership of a subset described only by its cardinality. Throws
  /// Errc::ideal_kind_mismatch for finite carriers, which need the
  /// elements themselves.
  bool contains_size(Cardinal size) const;

  /// True when this ideal is all of P(S) for a semigroup of size n.
  bool is_powerset_of(int n) const;

  friend bool operator==(const IdealSpec& a, const IdealSpec& b) = default;

 private:
  IdealSpec(Kind kind, std::vector<int> carrier, Cardinal kappa)
      : kind_(kind), carrier_(std::move(carrier)), kappa_(kappa) {}

  Kind kind_{Kind::full};
  std::vector<int> carrier_;
  Cardinal kappa_{Cardinal::aleph(0)};
};

/// Invariance check carrier·s ⊆ carrier for every s; equivalent to
/// As ∈ I for all A ∈ I. Finite carriers only.
bool is_invariant_ideal(const IdealSpec& ideal, const FiniteSemigroup& s);

/// All 2^|S| finite-carrier ideals on S, in carrier-bitmask order. The last
/// entry (carrier = S) is the one equal to P(S); is_powerset_of identifies
/// it. Throws Errc::bound_exceeded past `bound`.
std::vector<IdealSpec> enumerate_ideals(
    const FiniteSemigroup& s, int bound = kDefaultIdealEnumerationBound);

}  // namespace chaoslab
