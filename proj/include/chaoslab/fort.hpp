#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chaoslab/cardinal.hpp"
#include "chaoslab/ideal.hpp"

namespace chaoslab {

/// One stratum of points of an infinite Fort space F∖{b}: how many points,
/// how big their orbits are, how big their stabilizers are. Every criterion
/// here reads only these cardinals, so points are never materialised.
struct OrbitClass {
  std::string label;
  Cardinal point_count{Cardinal::finite(1)};
  Cardinal orbit_size{Cardinal::finite(1)};
  Cardinal stabilizer_size{Cardinal::finite(1)};
};

/// Orbit-class summary of an infinite Fort transformation group (F, G)
/// with particular point b.
struct FortGroupSpec {
  Cardinal group_size{Cardinal::aleph(0)};
  bool abelian{true};
  std::vector<OrbitClass> classes;

  /// Orbit-stabilizer holds per class, at least one point per class, and
  /// the non-particular point total is infinite (F is an infinite Fort
  /// space).
  void validate() const;

  Cardinal total_points() const;
};

/// Pair strata over a class list: the diagonal, pairs {x, b} with x in a
/// class, and pairs of distinct points drawn from classes a <= b (a == b
/// means two distinct points of the same class).
enum class StratumKind { diagonal, with_particular, class_pair };

struct Stratum {
  StratumKind kind{StratumKind::diagonal};
  int a{-1};
  int b{-1};

  friend bool operator==(const Stratum& x, const Stratum& y) = default;
  std::string to_string(const FortGroupSpec& spec) const;
};

/// Membership of a stratum in a relation, as a lower and an upper bound.
/// exact() when the two coincide; they can differ only for proximality of
/// doubly-infinite-orbit pairs in non-abelian groups, where only one-sided
/// inclusions are known.
struct StratumVerdict {
  Stratum stratum;
  bool lower{false};
  bool upper{false};

  bool exact() const { return lower == upper; }
};

struct PairClassReport {
  bool exact{true};  // all strata exact
  std::vector<StratumVerdict> strata;

  const StratumVerdict* find(const Stratum& s) const;
};

/// Classification of Prox(F, G) by strata. Exact except on the
/// (infinite, infinite) class pairs of non-abelian groups.
PairClassReport prox_classes(const FortGroupSpec& spec);

/// Stabilizer-coset criterion for Asym mod a cardinal-bound (or full)
/// ideal: (x, b) asymptotic iff |st(x)| < κ, (x, y) iff max of the two
/// stabilizer sizes < κ. Cardinal ideals are G-invariant (|Ah| = |A|), so
/// the coset existential collapses to the stabilizer itself. Always exact.
PairClassReport asym_classes(const FortGroupSpec& spec, const IdealSpec& ideal);

struct ScrambledReport {
  PairClassReport strata;        // Prox minus Asym, stratum-wise
  std::vector<int> h_classes;    // classes with infinite orbit, stabilizer outside the ideal
  Cardinal h_cardinality{Cardinal::finite(0)};
  bool confinement_ok{true};  // scrambled strata stay inside H ∪ {b} with ≤1 exception
  std::string confinement_note;
};

/// Prox ∖ Asym by strata plus the scrambled-set confinement bound: any
/// scrambled set minus (H ∪ {b}) has at most one element.
ScrambledReport scrambled_structure(const FortGroupSpec& spec,
                                    const IdealSpec& ideal);

struct ChaosReport {
  bool chaotic{false};
  Cardinal h_cardinality{Cardinal::finite(0)};
  std::optional<int> witness_class;
  std::string criterion;  // provenance: which decision path produced this
};

/// The chaoticity criterion for abelian infinite Fort transformation
/// groups: Li-Yorke chaotic mod the ideal iff H = {x : xG infinite,
/// st(x) outside the ideal} is uncountable. Refuses non-abelian specs,
/// where only one-sided bounds are known.
ChaosReport is_li_yorke_chaotic(const FortGroupSpec& spec,
                                const IdealSpec& ideal);

struct GeneralizedExampleReport {
  FortGroupSpec spec;
  Cardinal beta{Cardinal::aleph(0)};
  Cardinal alpha{Cardinal::aleph(1)};
  ChaosReport mod_beta;   // expected chaotic
  ChaosReport mod_alpha;  // expected not chaotic
};

/// G = K×R acting on R∪{∞} by x.(k, r) = x + r, with β ≤ |K| < α: chaotic
/// modulo {A : |A| < β} and not modulo {A : |A| < α}. Tier arguments out of
/// order raise Errc::cardinal_order_violated.
GeneralizedExampleReport generalized_cardinal_example(int alpha_tier,
                                                      int beta_tier,
                                                      Cardinal k_card);

struct CoDecompositionReport {
  ChaosReport whole;
  bool biconditional_holds{true};  // chaotic ⇔ co-decomposable to chaotic
  std::vector<std::string> cyclic_derivation;
  bool all_cyclic_factors_nonchaotic{true};
  ChaosReport extremal_cyclic_factor;  // worst-case cyclic factor verdict
};

/// Chaoticity of the whole versus its co-decompositions: the biconditional
/// (witnessed by the trivial co-decomposition {G}), and the cyclic
/// co-decomposition {<g> : g in G}, every factor of which is non-chaotic —
/// an infinite orbit under a cyclic group forces a trivial stabilizer.
CoDecompositionReport co_decomposition_report(const FortGroupSpec& spec,
                                              const IdealSpec& ideal);

/// A concretely infinite Fort transformation group: Z^k acting on Z∪{∞} by
/// x.(m_1..m_k) = x + Σ m_i a_i, or (real_factor form) K×R on R∪{∞} by
/// x.(k, r) = x + r with |K| = k_card.
struct TranslationActionSpec {
  int rank{1};
  std::vector<long long> coefficients;
  bool real_factor{false};
  Cardinal k_card{Cardinal::aleph(0)};

  void validate() const;
};

/// Compiles the translation action into an orbit-class summary: stabilizer
/// = kernel of m -> Σ m_i a_i, orbits = arithmetic progressions of stride
/// gcd(a), one class per residue.
FortGroupSpec translation_to_spec(const TranslationActionSpec& t);

/// A point of Z∪{∞} (or R∪{∞}, at the integer points the oracle touches).
struct FortPoint {
  bool infinity{false};
  long long value{0};

  static FortPoint inf() { return FortPoint{true, 0}; }
  static FortPoint at(long long v) { return FortPoint{false, v}; }
  friend bool operator==(const FortPoint& a, const FortPoint& b) {
    return a.infinity == b.infinity && (a.infinity || a.value == b.value);
  }
  std::string to_string() const;
};

/// Basis entourage α_D of a Fort space: identifies all points outside the
/// finite set D, separates the points of D.
class FortEntourage {
 public:
  explicit FortEntourage(std::vector<long long> excluded);

  bool contains(FortPoint u, FortPoint v) const;
  const std::vector<long long>& excluded() const { return excluded_; }

 private:
  std::vector<long long> excluded_;  // sorted
};

/// α_D from explicit points; the particular point may not occur in D.
FortEntourage fort_entourage(const std::vector<FortPoint>& d);

struct EntourageCheck {
  bool holds{true};
  std::string counterexample;
};

/// α_D = ⋂_{z∈D} α_{{z}}, verified pointwise over the window
/// {-window..window} ∪ {∞}.
EntourageCheck entourage_intersection_check(const std::vector<FortPoint>& d,
                                            long long window);

struct OracleReport {
  bool formula_asymptotic{false};
  bool oracle_asymptotic{false};
  bool agree{false};
  int window_hits{0};          // z values whose separating set is nonempty
  long long box_solutions{0};  // separating elements found in the box
  std::string note;
};

/// Definition-level check of asymptoticity mod the finite-subsets ideal for
/// an integer translation action: for each z in the window, the set
/// {g : (x.g, y.g) ∉ α_{{z}}} is a union of kernel cosets; membership in
/// the ideal is decided from the kernel's finiteness, and the coefficient
/// box [-bound, bound]^k supplies brute-force corroboration. Precomputes a
/// box histogram, so sweeping many pairs against one spec is cheap.
class TranslationOracle {
 public:
  TranslationOracle(TranslationActionSpec spec, long long window,
                    long long bound);

  OracleReport check_pair(FortPoint x, FortPoint y) const;

 private:
  long long box_count(long long value) const;

  TranslationActionSpec spec_;
  long long window_;
  long long bound_;
  long long gcd_;
  bool kernel_finite_;
  std::vector<long long> histogram_;  // counts of Σ g_i a_i over the box
  long long histogram_offset_;
};

OracleReport windowed_definition_oracle(const TranslationActionSpec& t,
                                        FortPoint x, FortPoint y,
                                        long long window, long long bound);

/// Deterministic representative pairs touching every pair stratum of a
/// compiled integer translation: the diagonal, each residue against ∞, all
/// cross-residue pairs, and one same-class pair.
std::vector<std::pair<FortPoint, FortPoint>> oracle_representative_pairs(
    const TranslationActionSpec& t);

}  // namespace chaoslab
