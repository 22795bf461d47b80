#include <algorithm>
#include <numeric>

#include "doctest.h"

#include "chaoslab/errors.hpp"
#include "chaoslab/finite_engine.hpp"
#include "chaoslab/max_clique.hpp"
#include "chaoslab/verify.hpp"

using namespace chaoslab;

namespace {

// X = {0,1,2}, S = {e, m} with m: 0->0, 1->0, 2->2.
FiniteAction e1() {
  const FiniteSemigroup s = FiniteSemigroup::from_table({{0, 1}, {1, 1}}, 0);
  return FiniteAction::from_table(s, {{0, 0}, {1, 0}, {2, 2}});
}

PairRelation rel_of(int n, std::vector<std::pair<int, int>> pairs) {
  PairRelation r(n);
  for (auto [x, y] : pairs) r.set(x, y);
  return r;
}

}  // namespace

TEST_CASE("pair relation basics") {
  PairRelation r = rel_of(3, {{0, 1}, {1, 0}, {0, 0}, {1, 1}, {2, 2}});
  CHECK(r.is_symmetric());
  CHECK(r.is_reflexive());
  CHECK(r.is_transitive());
  CHECK(r.is_equivalence());
  r.set(0, 2);
  CHECK_FALSE(r.is_symmetric());
  CHECK(r.count() == 6);
  r.remove_diagonal();
  CHECK(r.pairs() == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 0}});
  CHECK(PairRelation::diagonal(2).subset_of(PairRelation::complete(2)));
}

TEST_CASE("exact max clique with deterministic tie-break") {
  // Two disjoint triangles {0,1,2} and {3,4,5}: the lexicographically
  // smallest maximum clique wins.
  std::vector<std::uint64_t> adj(6, 0);
  auto link = [&](int a, int b) {
    adj[a] |= (1ull << b);
    adj[b] |= (1ull << a);
  };
  link(0, 1);
  link(0, 2);
  link(1, 2);
  link(3, 4);
  link(3, 5);
  link(4, 5);
  CHECK(max_clique_size(adj) == 3);
  CHECK(max_clique(adj) == std::vector<int>{0, 1, 2});

  // Break the first triangle: {3,4,5} remains the unique maximum.
  adj[0] &= ~(1ull << 1);
  adj[1] &= ~(1ull << 0);
  CHECK(max_clique(adj) == std::vector<int>{3, 4, 5});

  // No edges: a single vertex is still a 1-clique (the "scrambled sets
  // need two elements" rule lives in max_scrambled_set).
  CHECK(max_clique(std::vector<std::uint64_t>(4, 0)) == std::vector<int>{0});
  CHECK(max_clique({}).empty());
}

TEST_CASE("action construction validates the laws") {
  const FiniteSemigroup s = FiniteSemigroup::from_table({{0, 1}, {1, 1}}, 0);
  CHECK_THROWS_AS(FiniteAction::from_table(s, {{1, 0}, {1, 1}}), Error);
  CHECK_THROWS_AS(FiniteAction::from_table(s, {{0, 0}, {1, 2}}), Error);
  const FiniteAction a = e1();
  CHECK(a.phase_size() == 3);
  CHECK(a.act(1, 1) == 0);
}

TEST_CASE("prox, asym and scrambled pairs on E1") {
  const FiniteAction a = e1();
  CHECK(prox_pairs(a) ==
        rel_of(3, {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {1, 0}}));

  CHECK(asym_pairs(a, IdealSpec::finite_carrier({})) == PairRelation::diagonal(3));
  CHECK(asym_pairs(a, IdealSpec::finite_carrier({0})) ==
        rel_of(3, {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {1, 0}}));
  CHECK(asym_pairs(a, IdealSpec::full()) == PairRelation::complete(3));
  CHECK_THROWS_AS(asym_pairs(a, IdealSpec::cardinal_bound(Cardinal::aleph(0))),
                  Error);

  CHECK(scrambled_pairs(a, IdealSpec::finite_carrier({})) ==
        rel_of(3, {{0, 1}, {1, 0}}));
  CHECK(scrambled_pairs(a, IdealSpec::finite_carrier({0})).empty());
  CHECK(scrambled_pairs(a, IdealSpec::full()).empty());
}

TEST_CASE("identity-only semigroup has diagonal Prox") {
  const FiniteAction a = FiniteAction::trivial(FiniteSemigroup::trivial(), 4);
  CHECK(prox_pairs(a) == PairRelation::diagonal(4));
}

TEST_CASE("max scrambled set and the chaos verdict") {
  const FiniteAction a = e1();
  CHECK(max_scrambled_set(a, IdealSpec::finite_carrier({})) ==
        std::vector<int>{0, 1});
  CHECK(max_scrambled_set(a, IdealSpec::finite_carrier({0})).empty());

  const ChaosVerdict some = is_li_yorke_chaotic_mod(a, IdealSpec::finite_carrier({}));
  CHECK_FALSE(some.chaotic);
  CHECK(some.max_scrambled.size() == 2);
  const ChaosVerdict none = is_li_yorke_chaotic_mod(a, IdealSpec::full());
  CHECK_FALSE(none.chaotic);
  CHECK(none.witness.find("no scrambled pair") != std::string::npos);

  const FiniteAction big =
      FiniteAction::trivial(FiniteSemigroup::trivial(), 65);
  CHECK_THROWS_AS(max_scrambled_set(big, IdealSpec::full()), Error);
}

TEST_CASE("asym equivalence classes on E1") {
  const FiniteAction a = e1();
  CHECK(asym_equivalence_classes(a, IdealSpec::full()) ==
        std::vector<std::vector<int>>{{0, 1, 2}});
  CHECK(asym_equivalence_classes(a, IdealSpec::finite_carrier({0})) ==
        std::vector<std::vector<int>>{{0, 1}, {2}});
  CHECK(asym_equivalence_classes(a, IdealSpec::finite_carrier({})) ==
        std::vector<std::vector<int>>{{0}, {1}, {2}});
}

TEST_CASE("shared-semigroup products") {
  const FiniteAction a = e1();

  // A single factor is an isomorphic copy.
  const ProductAction single = product_action({a});
  CHECK(single.action.phase_size() == 3);
  CHECK(single.action.act_rows() == a.act_rows());

  // E1 x E1: product Asym is exactly componentwise.
  const ProductAction square = product_action({a, a});
  const IdealSpec pe = IdealSpec::finite_carrier({0});
  const PairRelation product_asym = asym_pairs(square.action, pe);
  const PairRelation factor_asym = asym_pairs(a, pe);
  for (int p = 0; p < 9; ++p) {
    const auto pc = decode_index(square.phase_dims, p);
    for (int q = 0; q < 9; ++q) {
      const auto qc = decode_index(square.phase_dims, q);
      CHECK(product_asym.at(p, q) ==
            (factor_asym.at(pc[0], qc[0]) && factor_asym.at(pc[1], qc[1])));
    }
  }

  // E1 x trivial: product Prox within componentwise Prox.
  const ProductAction mixed =
      product_action({a, FiniteAction::trivial(a.semigroup(), 2)});
  const PairRelation pp = prox_pairs(mixed.action);
  const PairRelation pa = prox_pairs(a);
  for (auto [p, q] : pp.pairs()) {
    const auto pc = decode_index(mixed.phase_dims, p);
    const auto qc = decode_index(mixed.phase_dims, q);
    CHECK(pa.at(pc[0], qc[0]));
  }

  const FiniteSemigroup other = FiniteSemigroup::trivial();
  CHECK_THROWS_AS(product_action({a, FiniteAction::trivial(other, 2)}), Error);
  CHECK_THROWS_AS(product_action({a, a, a, a, a, a, a}, 100), Error);
}

TEST_CASE("mixed products generate the cylinder ideal") {
  const FiniteAction a = e1();

  // Carriers {e} and {}: the generated carrier is {e} x S in the first slot.
  const MixedProductAction mp = product_action_mixed(
      {{a, IdealSpec::finite_carrier({0})}, {a, IdealSpec::finite_carrier({})}});
  CHECK(mp.action.semigroup().size() == 4);
  REQUIRE(mp.ideal.kind() == IdealSpec::Kind::finite_carrier);
  CHECK(mp.ideal.carrier() == std::vector<int>{0, 1});  // (e,e), (e,m)
  CHECK(mixed_product_asym_check(
            {{a, IdealSpec::finite_carrier({0})},
             {a, IdealSpec::finite_carrier({})}})
            .holds);

  // A single factor is the identity construction.
  const MixedProductAction single =
      product_action_mixed({{a, IdealSpec::finite_carrier({1})}});
  CHECK(single.action.act_rows() == a.act_rows());
  CHECK(single.ideal.carrier() == std::vector<int>{1});

  // Both factors full: the product ideal is full and Asym is everything.
  const MixedProductAction full = product_action_mixed(
      {{a, IdealSpec::full()}, {a, IdealSpec::full()}});
  CHECK(full.ideal.kind() == IdealSpec::Kind::full);
  CHECK(asym_pairs(full.action, full.ideal) == PairRelation::complete(9));
  CHECK(mixed_product_asym_check(
            {{a, IdealSpec::full()}, {a, IdealSpec::full()}})
            .holds);

  CHECK_THROWS_AS(
      product_action_mixed(
          {{a, IdealSpec::cardinal_bound(Cardinal::aleph(0))}}),
      Error);
}

// A lone improper factor ideal swallows the whole product while the other
// factor still constrains the componentwise side; the equality needs the
// all-proper (or all-full) hypothesis, and this pins the boundary.
TEST_CASE("mixed product law fails with exactly one improper factor") {
  const FiniteAction a = e1();
  const CheckReport report = mixed_product_asym_check(
      {{a, IdealSpec::full()}, {a, IdealSpec::finite_carrier({})}});
  CHECK_FALSE(report.holds);
}

TEST_CASE("subsemigroup restriction") {
  const FiniteAction a = e1();

  const SubsemigroupRestriction whole = restrict_to_subsemigroup(a, {0, 1});
  CHECK(whole.action.act_rows() == a.act_rows());
  CHECK_FALSE(whole.identity_adjoined);

  // {m} is closed; the identity is adjoined.
  const SubsemigroupRestriction just_m = restrict_to_subsemigroup(a, {1});
  CHECK(just_m.identity_adjoined);
  CHECK(just_m.action.semigroup().size() == 2);

  // T = {e}: with the empty carrier nothing off-diagonal is asymptotic,
  // and the inclusion Asym(X,S) within Asym(X,T) holds.
  const SubsemigroupRestriction only_e = restrict_to_subsemigroup(a, {0});
  const IdealSpec empty = IdealSpec::finite_carrier({});
  CHECK(asym_pairs(only_e.action, empty) == PairRelation::diagonal(3));
  CHECK(asym_pairs(a, empty).subset_of(asym_pairs(only_e.action, empty)));

  // A genuinely non-closed subset: a 3-cycle alone inside C3.
  const GeneratedSemigroup c3 = semigroup_from_generators({{1, 2, 0}});
  const FiniteAction rot = FiniteAction::natural(c3);
  CHECK_THROWS_AS(restrict_to_subsemigroup(rot, {1}), Error);
  try {
    restrict_to_subsemigroup(rot, {1});
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_closed);
  }
}

TEST_CASE("quotients by invariant relations") {
  const FiniteAction a = e1();

  const QuotientAction iso =
      quotient_action(a, InvariantRelation::over(a, PairRelation::diagonal(3)));
  CHECK(iso.action.phase_size() == 3);

  const QuotientAction point =
      quotient_action(a, InvariantRelation::over(a, PairRelation::complete(3)));
  CHECK(point.action.phase_size() == 1);
  CHECK(asym_pairs(point.action, IdealSpec::finite_carrier({})) ==
        PairRelation::complete(1));

  // Merge {0,1}; invariant because 0m = 1m = 0.
  PairRelation merge = PairRelation::diagonal(3);
  merge.set(0, 1);
  merge.set(1, 0);
  const QuotientAction q = quotient_action(a, InvariantRelation::over(a, merge));
  CHECK(q.classes == std::vector<std::vector<int>>{{0, 1}, {2}});
  CHECK(homomorphism_image_check(q.projection, IdealSpec::finite_carrier({0}))
            .holds);
  CHECK(homomorphism_image_check(q.projection, IdealSpec::finite_carrier({}))
            .holds);

  // Identity homomorphism: inclusions hold trivially.
  ActionHomomorphism identity{a, a, {0, 1, 2}};
  CHECK(homomorphism_image_check(identity, IdealSpec::finite_carrier({}))
            .holds);

  // Constant map onto the one-point action: target relations are total.
  ActionHomomorphism constant{a, point.action, {0, 0, 0}};
  CHECK(homomorphism_image_check(constant, IdealSpec::finite_carrier({}))
            .holds);

  // A non-equivariant map is rejected.
  ActionHomomorphism broken{a, a, {2, 1, 0}};
  CHECK_THROWS_AS(homomorphism_image_check(broken, IdealSpec::full()), Error);

  // Merging 1 and 2 is not invariant: 1m = 0 but 2m = 2.
  PairRelation bad = PairRelation::diagonal(3);
  bad.set(1, 2);
  bad.set(2, 1);
  CHECK_THROWS_AS(InvariantRelation::over(a, bad), Error);

  PairRelation not_equiv(3);
  not_equiv.set(0, 1);
  CHECK_THROWS_AS(InvariantRelation::over(a, not_equiv), Error);
}

TEST_CASE("prox equals the union of Asym over proper ideals") {
  const FiniteAction a = e1();
  CHECK(prox_union_asym_check(a).holds);

  const FiniteAction one =
      FiniteAction::trivial(FiniteSemigroup::trivial(), 3);
  CHECK_THROWS_AS(prox_union_asym_check(one), Error);
  try {
    prox_union_asym_check(one);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::hypothesis_violated);
  }
}

TEST_CASE("co-decompositions") {
  const FiniteAction a = e1();
  const CoDecomposition trivial_parts = co_decompose(a, {{0, 1}});
  CHECK(trivial_parts.factors.size() == 1);
  CHECK(trivial_parts.commuting);

  // Abelian S split into singleton parts commutes.
  const CoDecomposition split = co_decompose(a, {{0}, {1}});
  CHECK(split.commuting);
  CHECK(co_decompose_scrambled_check(a, split, IdealSpec::finite_carrier({}))
            .holds);
  CHECK(co_decompose_scrambled_check(a, split, IdealSpec::finite_carrier({0}))
            .holds);
  CHECK(co_decompose_scrambled_check(a, split, IdealSpec::full()).holds);

  // S3 on three points: transposition and 3-cycle do not commute.
  const GeneratedSemigroup s3 =
      semigroup_from_generators({{1, 0, 2}, {1, 2, 0}});
  const FiniteAction sym = FiniteAction::natural(s3);
  CHECK(s3.semigroup.size() == 6);
  const CoDecomposition parts = co_decompose(sym, {{1}, {2}});
  CHECK_FALSE(parts.commuting);
  CHECK(co_decompose_scrambled_check(sym, parts, IdealSpec::finite_carrier({}))
            .holds);

  CHECK_THROWS_AS(co_decompose(sym, {{1}}), Error);
  try {
    co_decompose(sym, {{1}});
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_generating);
  }
}

TEST_CASE("enumerating every action of the order-2 group") {
  const GeneratedSemigroup c2 = semigroup_from_generators({{1, 0}});
  REQUIRE(c2.semigroup.size() == 2);
  // The non-identity column must be an involution.
  CHECK(enumerate_actions(c2.semigroup, 2).size() == 2);
  CHECK(enumerate_actions(c2.semigroup, 3).size() == 4);  // id + 3 transpositions
}

TEST_CASE("random actions keep the structural laws (small budgets)") {
  CHECK(suite_section3(101, 60).ok);
  CHECK(suite_product(102, 60).ok);
  CHECK(suite_scrambled_exact(103, 40).ok);
  CHECK(suite_prox_union(104, 20).ok);
}

TEST_CASE("max scrambled set agrees with subset enumeration on E1") {
  const FiniteAction a = e1();
  for (const IdealSpec& ideal :
       {IdealSpec::finite_carrier({}), IdealSpec::finite_carrier({0}),
        IdealSpec::finite_carrier({1}), IdealSpec::full()}) {
    CHECK(max_scrambled_set(a, ideal) == exhaustive_max_scrambled(a, ideal));
  }
}
