#include "doctest.h"

#include "chaoslab/errors.hpp"
#include "chaoslab/fort.hpp"
#include "chaoslab/verify.hpp"

using namespace chaoslab;

namespace {

const Cardinal a0 = Cardinal::aleph(0);
const Cardinal a1 = Cardinal::aleph(1);

// G = Z x R acting on R ∪ {inf} by x.(n, r) = x + r.
FortGroupSpec zxr_spec() {
  FortGroupSpec spec;
  spec.group_size = a1;
  spec.abelian = true;
  spec.classes = {OrbitClass{"reals", a1, a1, a0}};
  spec.validate();
  return spec;
}

const StratumVerdict& find(const PairClassReport& report, StratumKind kind,
                           int a = -1, int b = -1) {
  const StratumVerdict* v = report.find(Stratum{kind, a, b});
  REQUIRE(v != nullptr);
  return *v;
}

}  // namespace

TEST_CASE("spec validation enforces orbit-stabilizer and infiniteness") {
  FortGroupSpec bad;
  bad.group_size = a0;
  bad.abelian = true;
  bad.classes = {OrbitClass{"x", a0, Cardinal::finite(2), Cardinal::finite(2)}};
  CHECK_THROWS_AS(bad.validate(), Error);

  FortGroupSpec finite_phase;
  finite_phase.group_size = a0;
  finite_phase.abelian = true;
  finite_phase.classes = {OrbitClass{"x", Cardinal::finite(5), a0,
                                     Cardinal::finite(1)}};
  CHECK_THROWS_AS(finite_phase.validate(), Error);
}

TEST_CASE("fort entourages") {
  const FortEntourage everything = fort_entourage({});
  CHECK(everything.contains(FortPoint::at(3), FortPoint::inf()));
  CHECK(everything.contains(FortPoint::at(3), FortPoint::at(-7)));

  const FortEntourage single = fort_entourage({FortPoint::at(2)});
  CHECK(single.contains(FortPoint::at(2), FortPoint::at(2)));
  CHECK(single.contains(FortPoint::at(1), FortPoint::at(5)));
  CHECK(single.contains(FortPoint::inf(), FortPoint::at(1)));
  CHECK_FALSE(single.contains(FortPoint::at(2), FortPoint::at(5)));
  CHECK_FALSE(single.contains(FortPoint::inf(), FortPoint::at(2)));

  CHECK_THROWS_AS(fort_entourage({FortPoint::inf()}), Error);
  try {
    fort_entourage({FortPoint::at(1), FortPoint::inf()});
  } catch (const Error& e) {
    CHECK(e.code() == Errc::particular_point_in_d);
  }

  // alpha_D is the intersection of the singleton entourages, pointwise
  // over a window.
  CHECK(entourage_intersection_check({FortPoint::at(1), FortPoint::at(-2)}, 5)
            .holds);
  CHECK(entourage_intersection_check({}, 4).holds);
  CHECK(entourage_intersection_check(
            {FortPoint::at(0), FortPoint::at(1), FortPoint::at(7)}, 5)
            .holds);
}

TEST_CASE("prox classification") {
  // All orbits finite: only the diagonal stratum is proximal.
  FortGroupSpec finite_orbits;
  finite_orbits.group_size = a0;
  finite_orbits.abelian = true;
  finite_orbits.classes = {OrbitClass{"f", a0, Cardinal::finite(2), a0}};
  finite_orbits.validate();
  const PairClassReport fo = prox_classes(finite_orbits);
  CHECK(fo.exact);
  CHECK(find(fo, StratumKind::diagonal).lower);
  CHECK_FALSE(find(fo, StratumKind::with_particular, 0, 0).upper);
  CHECK_FALSE(find(fo, StratumKind::class_pair, 0, 0).upper);

  // The Z x R spec: everything is proximal, exactly.
  const PairClassReport pp = prox_classes(zxr_spec());
  CHECK(pp.exact);
  CHECK(find(pp, StratumKind::with_particular, 0, 0).lower);
  CHECK(find(pp, StratumKind::class_pair, 0, 0).lower);

  // Rank-1 translation a=2: every non-particular orbit is infinite, so
  // every stratum is proximal, exactly.
  const PairClassReport tr =
      prox_classes(translation_to_spec(TranslationActionSpec{1, {2}}));
  CHECK(tr.exact);
  for (const StratumVerdict& v : tr.strata) CHECK(v.lower);

  // Non-abelian: the doubly-infinite stratum is one-sided.
  FortGroupSpec nab = zxr_spec();
  nab.abelian = false;
  const PairClassReport np = prox_classes(nab);
  CHECK_FALSE(np.exact);
  const StratumVerdict& v = find(np, StratumKind::class_pair, 0, 0);
  CHECK_FALSE(v.lower);
  CHECK(v.upper);
  CHECK(find(np, StratumKind::with_particular, 0, 0).exact());
}

TEST_CASE("asym classification via stabilizers") {
  const FortGroupSpec spec = zxr_spec();

  const PairClassReport fin = asym_classes(spec, IdealSpec::cardinal_bound(a0));
  CHECK(fin.exact);
  CHECK(find(fin, StratumKind::diagonal).lower);
  CHECK_FALSE(find(fin, StratumKind::with_particular, 0, 0).lower);
  CHECK_FALSE(find(fin, StratumKind::class_pair, 0, 0).lower);

  const PairClassReport cnt = asym_classes(spec, IdealSpec::cardinal_bound(a1));
  CHECK(find(cnt, StratumKind::with_particular, 0, 0).lower);
  CHECK(find(cnt, StratumKind::class_pair, 0, 0).lower);

  const PairClassReport full = asym_classes(spec, IdealSpec::full());
  for (const StratumVerdict& v : full.strata) CHECK(v.lower);

  CHECK_THROWS_AS(asym_classes(spec, IdealSpec::finite_carrier({0})), Error);
  try {
    asym_classes(spec, IdealSpec::finite_carrier({0}));
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ideal_kind_mismatch);
  }
}

TEST_CASE("asym monotone over the cardinal ladder") {
  for (const FortGroupSpec& spec :
       {zxr_spec(), translation_to_spec(TranslationActionSpec{2, {2, 0}}),
        translation_to_spec(TranslationActionSpec{1, {3}})}) {
    const PairClassReport small = asym_classes(spec, IdealSpec::cardinal_bound(a0));
    const PairClassReport large = asym_classes(spec, IdealSpec::cardinal_bound(a1));
    REQUIRE(small.strata.size() == large.strata.size());
    for (size_t i = 0; i < small.strata.size(); ++i) {
      if (small.strata[i].lower) CHECK(large.strata[i].lower);
    }
  }
}

TEST_CASE("scrambled structure") {
  const FortGroupSpec spec = zxr_spec();

  const ScrambledReport full = scrambled_structure(spec, IdealSpec::full());
  for (const StratumVerdict& v : full.strata.strata) CHECK_FALSE(v.upper);
  CHECK(full.h_classes.empty());

  const ScrambledReport fin =
      scrambled_structure(spec, IdealSpec::cardinal_bound(a0));
  CHECK(fin.h_classes == std::vector<int>{0});
  CHECK(fin.h_cardinality == a1);
  CHECK(fin.confinement_ok);
  CHECK(find(fin.strata, StratumKind::with_particular, 0, 0).lower);
  CHECK(find(fin.strata, StratumKind::class_pair, 0, 0).lower);
  CHECK_FALSE(find(fin.strata, StratumKind::diagonal).upper);

  // Rank-2 translation (2,0): infinite kernel, every off-diagonal stratum
  // scrambled mod finite subsets.
  const FortGroupSpec rank2 =
      translation_to_spec(TranslationActionSpec{2, {2, 0}});
  const ScrambledReport r2 =
      scrambled_structure(rank2, IdealSpec::cardinal_bound(a0));
  CHECK(r2.h_classes.size() == rank2.classes.size());
  for (const StratumVerdict& v : r2.strata.strata) {
    if (v.stratum.kind != StratumKind::diagonal) CHECK(v.lower);
  }

  // Rank-1 translation a=2: trivial kernel, nothing scrambled mod finite
  // subsets.
  const FortGroupSpec rank1 = translation_to_spec(TranslationActionSpec{1, {2}});
  const ScrambledReport r1 =
      scrambled_structure(rank1, IdealSpec::cardinal_bound(a0));
  for (const StratumVerdict& v : r1.strata.strata) CHECK_FALSE(v.upper);
  CHECK(r1.h_classes.empty());
}

TEST_CASE("mixed finite and infinite orbit classes") {
  FortGroupSpec spec;
  spec.group_size = a0;
  spec.abelian = true;
  spec.classes = {OrbitClass{"finorb", a0, Cardinal::finite(2), a0},
                  OrbitClass{"inforb", a0, a0, a0}};
  spec.validate();
  const ScrambledReport report =
      scrambled_structure(spec, IdealSpec::cardinal_bound(a0));
  CHECK(report.h_classes == std::vector<int>{1});
  // The finite-orbit side kills proximality, hence scrambling.
  CHECK_FALSE(find(report.strata, StratumKind::class_pair, 0, 1).upper);
  CHECK_FALSE(find(report.strata, StratumKind::with_particular, 0, 0).upper);
  CHECK(find(report.strata, StratumKind::class_pair, 1, 1).lower);
  CHECK(find(report.strata, StratumKind::with_particular, 1, 1).lower);
  CHECK(report.confinement_ok);
  // Scrambled pairs exist, but H is countable: not chaotic.
  CHECK_FALSE(is_li_yorke_chaotic(spec, IdealSpec::cardinal_bound(a0)).chaotic);
}

TEST_CASE("non-abelian scrambled structure keeps one-sided class pairs") {
  FortGroupSpec nab = zxr_spec();
  nab.abelian = false;
  const ScrambledReport report =
      scrambled_structure(nab, IdealSpec::cardinal_bound(a0));
  const StratumVerdict& pair = find(report.strata, StratumKind::class_pair, 0, 0);
  CHECK_FALSE(pair.lower);
  CHECK(pair.upper);
  CHECK_FALSE(report.strata.exact);
  // Pairs with the particular point stay exact without commutativity.
  CHECK(find(report.strata, StratumKind::with_particular, 0, 0).exact());
  CHECK(report.confinement_ok);
}

TEST_CASE("chaoticity criterion") {
  const FortGroupSpec spec = zxr_spec();

  const ChaosReport fin = is_li_yorke_chaotic(spec, IdealSpec::cardinal_bound(a0));
  CHECK(fin.chaotic);
  CHECK(fin.h_cardinality == a1);
  CHECK(fin.witness_class == 0);
  CHECK(fin.criterion == "stabilizer-formula");

  const ChaosReport cnt = is_li_yorke_chaotic(spec, IdealSpec::cardinal_bound(a1));
  CHECK_FALSE(cnt.chaotic);
  CHECK(cnt.h_cardinality == Cardinal::finite(0));

  // Countable H: scrambled pairs exist but chaos fails.
  const FortGroupSpec rank2 =
      translation_to_spec(TranslationActionSpec{2, {2, 0}});
  const ChaosReport r2 = is_li_yorke_chaotic(rank2, IdealSpec::cardinal_bound(a0));
  CHECK_FALSE(r2.chaotic);
  CHECK(r2.h_cardinality == a0);
  CHECK_FALSE(scrambled_structure(rank2, IdealSpec::cardinal_bound(a0))
                  .strata.strata.empty());

  FortGroupSpec nab = zxr_spec();
  nab.abelian = false;
  CHECK_THROWS_AS(is_li_yorke_chaotic(nab, IdealSpec::cardinal_bound(a0)), Error);
  try {
    is_li_yorke_chaotic(nab, IdealSpec::cardinal_bound(a0));
  } catch (const Error& e) {
    CHECK(e.code() == Errc::non_abelian);
  }
}

TEST_CASE("generalized cardinal example") {
  // beta = aleph0, |K| = aleph0, alpha = aleph1 reproduces Z x R.
  const GeneralizedExampleReport zr = generalized_cardinal_example(1, 0, a0);
  CHECK(zr.mod_beta.chaotic);
  CHECK_FALSE(zr.mod_alpha.chaotic);
  CHECK(zr.spec.group_size == a1);
  CHECK(zr.spec.classes[0].stabilizer_size == a0);

  const GeneralizedExampleReport up = generalized_cardinal_example(2, 1, a1);
  CHECK(up.mod_beta.chaotic);
  CHECK_FALSE(up.mod_alpha.chaotic);

  CHECK_THROWS_AS(generalized_cardinal_example(1, 0, Cardinal::finite(1)),
                  Error);
  try {
    generalized_cardinal_example(1, 0, Cardinal::finite(1));
  } catch (const Error& e) {
    CHECK(e.code() == Errc::cardinal_order_violated);
  }
}

TEST_CASE("co-decomposition report") {
  const CoDecompositionReport chaotic =
      co_decomposition_report(zxr_spec(), IdealSpec::cardinal_bound(a0));
  CHECK(chaotic.whole.chaotic);
  CHECK(chaotic.biconditional_holds);
  CHECK(chaotic.all_cyclic_factors_nonchaotic);
  CHECK_FALSE(chaotic.extremal_cyclic_factor.chaotic);
  CHECK_FALSE(chaotic.cyclic_derivation.empty());

  const FortGroupSpec rank1 = translation_to_spec(TranslationActionSpec{1, {2}});
  const CoDecompositionReport quiet =
      co_decomposition_report(rank1, IdealSpec::cardinal_bound(a0));
  CHECK_FALSE(quiet.whole.chaotic);
  CHECK(quiet.biconditional_holds);
  CHECK(quiet.all_cyclic_factors_nonchaotic);

  // Trivial group on an infinite Fort space.
  FortGroupSpec trivial_group;
  trivial_group.group_size = Cardinal::finite(1);
  trivial_group.abelian = true;
  trivial_group.classes = {OrbitClass{"fixed", a0, Cardinal::finite(1),
                                      Cardinal::finite(1)}};
  trivial_group.validate();
  const CoDecompositionReport tg =
      co_decomposition_report(trivial_group, IdealSpec::cardinal_bound(a0));
  CHECK_FALSE(tg.whole.chaotic);
  CHECK(tg.all_cyclic_factors_nonchaotic);
}

TEST_CASE("translation compiler") {
  // Trivial action: one aggregated class of fixed points.
  const FortGroupSpec zero = translation_to_spec(TranslationActionSpec{1, {0}});
  CHECK(zero.classes.size() == 1);
  CHECK(zero.classes[0].orbit_size == Cardinal::finite(1));
  CHECK(zero.classes[0].stabilizer_size == a0);  // the whole group

  // a = 2: trivial kernel, two residue classes, infinite orbits.
  const FortGroupSpec two = translation_to_spec(TranslationActionSpec{1, {2}});
  CHECK(two.classes.size() == 2);
  for (const OrbitClass& cls : two.classes) {
    CHECK(cls.orbit_size == a0);
    CHECK(cls.stabilizer_size == Cardinal::finite(1));
  }

  // a = (2, 0): infinite kernel {0} x Z.
  const FortGroupSpec r2 = translation_to_spec(TranslationActionSpec{2, {2, 0}});
  CHECK(r2.classes.size() == 2);
  CHECK(r2.classes[0].stabilizer_size == a0);

  // K x R form = the bundled Z x R example when |K| = aleph0.
  TranslationActionSpec real;
  real.real_factor = true;
  real.coefficients = {};
  real.k_card = a0;
  const FortGroupSpec kr = translation_to_spec(real);
  CHECK(kr.group_size == a1);
  CHECK(kr.classes[0].stabilizer_size == a0);
  CHECK(is_li_yorke_chaotic(kr, IdealSpec::cardinal_bound(a0)).chaotic);

  const TranslationActionSpec mismatched{2, {1}};
  CHECK_THROWS_AS(mismatched.validate(), Error);
}

TEST_CASE("windowed definition oracle") {
  // Diagonal pairs are asymptotic by both routes.
  const TranslationActionSpec rank1{1, {2}};
  const OracleReport diag =
      windowed_definition_oracle(rank1, FortPoint::at(3), FortPoint::at(3), 50, 50);
  CHECK(diag.formula_asymptotic);
  CHECK(diag.oracle_asymptotic);
  CHECK(diag.agree);

  // k=1, a=2, (0, inf): singleton solution sets, asymptotic.
  const OracleReport single =
      windowed_definition_oracle(rank1, FortPoint::at(0), FortPoint::inf(), 50, 50);
  CHECK(single.formula_asymptotic);
  CHECK(single.oracle_asymptotic);
  CHECK(single.agree);
  CHECK(single.window_hits > 0);
  CHECK(single.box_solutions > 0);

  // k=2, a=(2,0), (0, inf): cosets of an infinite kernel, not asymptotic.
  const TranslationActionSpec rank2{2, {2, 0}};
  const OracleReport infinite =
      windowed_definition_oracle(rank2, FortPoint::at(0), FortPoint::inf(), 50, 10);
  CHECK_FALSE(infinite.formula_asymptotic);
  CHECK_FALSE(infinite.oracle_asymptotic);
  CHECK(infinite.agree);

  // A window that misses every distinguishing point.
  const TranslationActionSpec still{1, {0}};
  CHECK_THROWS_AS(windowed_definition_oracle(still, FortPoint::at(7),
                                             FortPoint::inf(), 5, 5),
                  Error);
  try {
    windowed_definition_oracle(still, FortPoint::at(7), FortPoint::inf(), 5, 5);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::window_too_small);
  }

  // The real-factor form has no integer box to enumerate.
  TranslationActionSpec real;
  real.real_factor = true;
  CHECK_THROWS_AS(
      windowed_definition_oracle(real, FortPoint::at(0), FortPoint::inf(), 5, 5),
      Error);
}

TEST_CASE("fort suites at acceptance scale") {
  const SuiteResult oracle = suite_fort_oracle(2, 30, 10);
  CHECK(oracle.ok);
  CHECK(oracle.instances == 5 + 25 + 125);
  const SuiteResult structure = suite_fort_structure(2);
  CHECK(structure.ok);
}
