#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chaoslab/ideal.hpp"
#include "chaoslab/pair_relation.hpp"
#include "chaoslab/semigroup.hpp"

namespace chaoslab {

inline constexpr int kDefaultPhaseCap = 4096;
inline constexpr int kMaxExactCliquePhase = 64;

/// A right action of a finite semigroup on a finite phase set:
/// act(x, e) = x and act(x, s·t) = act(act(x, s), t), both validated on
/// construction.
class FiniteAction {
 public:
  static FiniteAction from_table(FiniteSemigroup semigroup,
                                 const std::vector<std::vector<int>>& rows);

  /// The natural action of a generated map semigroup on its domain.
  static FiniteAction natural(const GeneratedSemigroup& generated);

  /// x.s = x for every s; valid over any semigroup.
  static FiniteAction trivial(FiniteSemigroup semigroup, int phase_size);

  int phase_size() const { return phase_size_; }
  const FiniteSemigroup& semigroup() const { return semigroup_; }
  int act(int x, int s) const { return table_[static_cast<size_t>(x) * semigroup_.size() + s]; }

  std::vector<std::vector<int>> act_rows() const;

  friend bool operator==(const FiniteAction& a, const FiniteAction& b) = default;

 private:
  FiniteAction() = default;
  void validate() const;

  int phase_size_{0};
  FiniteSemigroup semigroup_;
  std::vector<int> table_;  // phase-major: table_[x * |S| + s]
};

/// Equivariant map between two actions of the same semigroup.
struct ActionHomomorphism {
  FiniteAction source;
  FiniteAction target;
  std::vector<int> map;  // source phase -> target phase

  /// Throws Errc::not_equivariant (or validation_error on shape problems).
  void validate() const;
};

/// A closed invariant equivalence relation on an action's phase set.
struct InvariantRelation {
  PairRelation pairs;

  /// Throws Errc::not_equivalence / Errc::not_invariant.
  static InvariantRelation over(const FiniteAction& action, PairRelation pairs);
};

struct CheckReport {
  bool holds{true};
  std::string counterexample;  // empty when holds
};

struct ChaosVerdict {
  bool chaotic{false};  // always false on a finite phase space
  std::vector<int> max_scrambled;
  std::string witness;
};

struct SubsemigroupRestriction {
  FiniteAction action;
  std::vector<int> parent_element;  // factor element -> element of S
  bool identity_adjoined{false};
};

struct ProductAction {
  FiniteAction action;
  std::vector<int> phase_dims;
};

struct MixedProductAction {
  FiniteAction action;
  IdealSpec ideal{IdealSpec::full()};
  std::vector<int> phase_dims;
  std::vector<int> semigroup_dims;
};

struct QuotientAction {
  FiniteAction action;
  std::vector<int> class_of;              // phase point -> class index
  std::vector<std::vector<int>> classes;  // class index -> sorted members
  ActionHomomorphism projection;
};

struct CoDecomposition {
  std::vector<SubsemigroupRestriction> factors;
  bool commuting{false};
};

/// Mixed-radix helpers shared by the product constructions and their tests.
int encode_index(const std::vector<int>& dims, const std::vector<int>& coords);
std::vector<int> decode_index(const std::vector<int>& dims, int index);

/// {(x,y) : some s has x.s = y.s}. On a finite discrete phase the unique
/// uniformity is generated by the diagonal alone, so the net definition
/// collapses to this.
PairRelation prox_pairs(const FiniteAction& action);

/// {(x,y) : the disagreement set {s : x.s != y.s} belongs to the ideal}.
/// Finite-carrier and full ideals only; cardinal bounds are rejected with
/// Errc::ideal_kind_mismatch.
PairRelation asym_pairs(const FiniteAction& action, const IdealSpec& ideal);

/// prox minus asym, diagonal removed.
PairRelation scrambled_pairs(const FiniteAction& action, const IdealSpec& ideal);

/// Maximum clique of the scrambled-pair graph, lexicographically smallest
/// among maximum cliques; empty when no scrambled pair exists (scrambled
/// sets need two elements). Exact up to 64 phase points.
std::vector<int> max_scrambled_set(const FiniteAction& action,
                                   const IdealSpec& ideal);

/// Always "not chaotic" on a finite phase (countable sets cannot contain an
/// uncountable scrambled subset); the witness reports what was found.
ChaosVerdict is_li_yorke_chaotic_mod(const FiniteAction& action,
                                     const IdealSpec& ideal);

/// Componentwise action on the Cartesian product of phases over one shared
/// semigroup.
ProductAction product_action(const std::vector<FiniteAction>& factors,
                             int phase_cap = kDefaultPhaseCap);

/// Product over per-factor semigroups with per-factor finite-carrier (or
/// full) ideals; the returned ideal is generated by the cylinders
/// H_b(D) = {(s_a) : s_b in D} over the factor carriers.
MixedProductAction product_action_mixed(
    const std::vector<std::pair<FiniteAction, IdealSpec>>& factors,
    int phase_cap = kDefaultPhaseCap, int semigroup_cap = kDefaultPhaseCap);

/// Checks the mixed-product law Asym(product, generated ideal) ==
/// componentwise Asym with per-factor ideals. Requires every factor ideal
/// proper or every factor ideal full; a lone improper factor makes the
/// generated ideal swallow everything while other factors still constrain
/// the right-hand side.
CheckReport mixed_product_asym_check(
    const std::vector<std::pair<FiniteAction, IdealSpec>>& factors);

/// Same phase, semigroup cut down to T (closed under compose; the identity
/// is adjoined when missing, flagged in the result).
SubsemigroupRestriction restrict_to_subsemigroup(const FiniteAction& action,
                                                 std::vector<int> elements);

/// Re-index a carrier on S to the restricted semigroup (dropping elements
/// outside it).
std::vector<int> restrict_carrier(const std::vector<int>& carrier,
                                  const SubsemigroupRestriction& restriction);

QuotientAction quotient_action(const FiniteAction& action,
                               const InvariantRelation& relation);

/// Partition of the phase set by asymptoticity. Throws Errc::not_equivalence
/// if the computed relation is not one (which would be a bug, never an
/// input condition).
std::vector<std::vector<int>> asym_equivalence_classes(
    const FiniteAction& action, const IdealSpec& ideal);

/// Exact check of Prox(X,S) = ⋃{Asym_I : I a proper ideal on S}, via full
/// carrier enumeration. Needs |S| >= 2 and |S| within the enumeration bound.
CheckReport prox_union_asym_check(const FiniteAction& action,
                                  int bound = kDefaultIdealEnumerationBound);

/// Image inclusions under an equivariant map: φ×φ(Asym) ⊆ Asym and
/// φ×φ(Prox) ⊆ Prox.
CheckReport homomorphism_image_check(const ActionHomomorphism& hom,
                                     const IdealSpec& ideal);

/// Restricts the action to the subsemigroups generated by each part (the
/// parts together must generate S) and reports whether the factor actions
/// commute pairwise.
CoDecomposition co_decompose(const FiniteAction& action,
                             const std::vector<std::vector<int>>& parts);

/// Scrambled pairs of every factor (ideal re-indexed onto the factor)
/// stay scrambled in the ambient action.
CheckReport co_decompose_scrambled_check(const FiniteAction& action,
                                         const CoDecomposition& decomposition,
                                         const IdealSpec& ideal);

}  // namespace chaoslab
