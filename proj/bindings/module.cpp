#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "chaoslab/analysis.hpp"
#include "chaoslab/errors.hpp"
#include "chaoslab/finite_engine.hpp"
#include "chaoslab/fort.hpp"
#include "chaoslab/instance_io.hpp"
#include "chaoslab/iterated.hpp"
#include "chaoslab/verify.hpp"

namespace py = pybind11;
using namespace chaoslab;

namespace {

std::vector<std::pair<long long, long long>> metric_pairs(
    const IteratedSystem& sys) {
  std::vector<std::pair<long long, long long>> out;
  for (int x = 0; x < sys.phase_size(); ++x) {
    for (int y = 0; y < sys.phase_size(); ++y) {
      const Rational d = sys.dist(x, y);
      out.emplace_back(d.numerator(), d.denominator());
    }
  }
  return out;
}

IteratedSystem iterated_from_pairs(
    std::vector<int> step,
    const std::vector<std::vector<std::pair<long long, long long>>>& metric) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& row : metric) {
    std::vector<Rational> r;
    for (const auto& [num, den] : row) r.emplace_back(num, den);
    rows.push_back(std::move(r));
  }
  return IteratedSystem::with_metric(std::move(step), std::move(rows));
}

ExhaustionFamily family_by_name(const std::string& name) {
  if (name == "initial") return ExhaustionFamily::initial_segments();
  if (name == "evens") return ExhaustionFamily::evens();
  if (name.rfind("strided:", 0) == 0) {
    return ExhaustionFamily::strided(std::stoi(name.substr(8)));
  }
  throw Error(Errc::validation_error,
              "unknown family \"" + name +
                  "\" (use initial, evens, or strided:<k>)");
}

}  // namespace

PYBIND11_MODULE(_chaoslab, m) {
  m.doc() = "Li-Yorke chaos modulo an ideal for transformation semigroups";

  py::register_exception<Error>(m, "ChaoslabError");

  // -- cardinals ------------------------------------------------------------
  py::class_<Cardinal>(m, "Cardinal")
      .def_static("finite", &Cardinal::finite, py::arg("n"))
      .def_static("aleph", &Cardinal::aleph, py::arg("tier"))
      .def_static("parse",
                  [](const std::string& text) {
                    auto parsed = Cardinal::parse(text);
                    if (!parsed) {
                      throw Error(Errc::validation_error,
                                  "not a cardinal: " + text);
                    }
                    return *parsed;
                  })
      .def_property_readonly("is_finite", &Cardinal::is_finite)
      .def_property_readonly("is_infinite", &Cardinal::is_infinite)
      .def_property_readonly("uncountable", &Cardinal::uncountable)
      .def("finite_value", &Cardinal::finite_value)
      .def("aleph_tier", &Cardinal::aleph_tier)
      .def("__mul__", &cardinal_product)
      .def("__add__", &cardinal_sum)
      .def(py::self == py::self)
      .def(py::self < py::self)
      .def(py::self <= py::self)
      .def("__str__", &Cardinal::to_string)
      .def("__repr__", [](const Cardinal& c) {
        return "Cardinal(" + c.to_string() + ")";
      });
  m.def("cardinal_max", &cardinal_max);

  // -- semigroups and ideals --------------------------------------------------
  py::class_<FiniteSemigroup>(m, "FiniteSemigroup")
      .def_static("from_table", &FiniteSemigroup::from_table, py::arg("rows"),
                  py::arg("identity"))
      .def_static("trivial", &FiniteSemigroup::trivial)
      .def_property_readonly("size", &FiniteSemigroup::size)
      .def_property_readonly("identity", &FiniteSemigroup::identity)
      .def_property_readonly("is_group", &FiniteSemigroup::is_group)
      .def_property_readonly("is_abelian", &FiniteSemigroup::is_abelian)
      .def("compose", &FiniteSemigroup::compose)
      .def("closure", &FiniteSemigroup::closure)
      .def("table_rows", &FiniteSemigroup::table_rows);

  py::class_<GeneratedSemigroup>(m, "GeneratedSemigroup")
      .def_readonly("semigroup", &GeneratedSemigroup::semigroup)
      .def_readonly("element_maps", &GeneratedSemigroup::element_maps);

  m.def("semigroup_from_generators", &semigroup_from_generators,
        py::arg("maps"), py::arg("cap") = kDefaultGenerationCap);

  py::class_<IdealSpec>(m, "IdealSpec")
      .def_static("finite_carrier", &IdealSpec::finite_carrier)
      .def_static("cardinal_bound", &IdealSpec::cardinal_bound)
      .def_static("full", &IdealSpec::full)
      .def("contains_set",
           [](const IdealSpec& ideal, const std::vector<int>& b) {
             return ideal.contains_set(b);
           })
      .def("contains_size", &IdealSpec::contains_size)
      .def("is_powerset_of", &IdealSpec::is_powerset_of);

  m.def("is_invariant_ideal", &is_invariant_ideal);
  m.def("enumerate_ideals", &enumerate_ideals, py::arg("semigroup"),
        py::arg("bound") = kDefaultIdealEnumerationBound);

  // -- finite engine ----------------------------------------------------------
  py::class_<FiniteAction>(m, "FiniteAction")
      .def_static("from_table", &FiniteAction::from_table)
      .def_static("natural", &FiniteAction::natural)
      .def_static("trivial", &FiniteAction::trivial)
      .def_property_readonly("phase_size", &FiniteAction::phase_size)
      .def_property_readonly("semigroup", &FiniteAction::semigroup)
      .def("act", &FiniteAction::act)
      .def("act_rows", &FiniteAction::act_rows);

  m.def("prox_pairs",
        [](const FiniteAction& a) { return prox_pairs(a).pairs(); });
  m.def("asym_pairs", [](const FiniteAction& a, const IdealSpec& ideal) {
    return asym_pairs(a, ideal).pairs();
  });
  m.def("scrambled_pairs", [](const FiniteAction& a, const IdealSpec& ideal) {
    return scrambled_pairs(a, ideal).pairs();
  });
  m.def("max_scrambled_set", &max_scrambled_set);
  m.def("asym_equivalence_classes", &asym_equivalence_classes);

  py::class_<ChaosVerdict>(m, "ChaosVerdict")
      .def_readonly("chaotic", &ChaosVerdict::chaotic)
      .def_readonly("max_scrambled", &ChaosVerdict::max_scrambled)
      .def_readonly("witness", &ChaosVerdict::witness);
  m.def("is_li_yorke_chaotic_mod", &is_li_yorke_chaotic_mod);

  py::class_<CheckReport>(m, "CheckReport")
      .def_readonly("holds", &CheckReport::holds)
      .def_readonly("counterexample", &CheckReport::counterexample);

  py::class_<ProductAction>(m, "ProductAction")
      .def_readonly("action", &ProductAction::action)
      .def_readonly("phase_dims", &ProductAction::phase_dims);
  m.def("product_action", &product_action, py::arg("factors"),
        py::arg("phase_cap") = kDefaultPhaseCap);

  py::class_<MixedProductAction>(m, "MixedProductAction")
      .def_readonly("action", &MixedProductAction::action)
      .def_readonly("ideal", &MixedProductAction::ideal)
      .def_readonly("phase_dims", &MixedProductAction::phase_dims)
      .def_readonly("semigroup_dims", &MixedProductAction::semigroup_dims);
  m.def("product_action_mixed", &product_action_mixed, py::arg("factors"),
        py::arg("phase_cap") = kDefaultPhaseCap,
        py::arg("semigroup_cap") = kDefaultPhaseCap);
  m.def("mixed_product_asym_check", &mixed_product_asym_check);

  py::class_<SubsemigroupRestriction>(m, "SubsemigroupRestriction")
      .def_readonly("action", &SubsemigroupRestriction::action)
      .def_readonly("parent_element", &SubsemigroupRestriction::parent_element)
      .def_readonly("identity_adjoined",
                    &SubsemigroupRestriction::identity_adjoined);
  m.def("restrict_to_subsemigroup", &restrict_to_subsemigroup);

  py::class_<ActionHomomorphism>(m, "ActionHomomorphism")
      .def(py::init([](FiniteAction source, FiniteAction target,
                       std::vector<int> map) {
        ActionHomomorphism hom{std::move(source), std::move(target),
                               std::move(map)};
        hom.validate();
        return hom;
      }))
      .def_readonly("map", &ActionHomomorphism::map);

  py::class_<QuotientAction>(m, "QuotientAction")
      .def_readonly("action", &QuotientAction::action)
      .def_readonly("class_of", &QuotientAction::class_of)
      .def_readonly("classes", &QuotientAction::classes)
      .def_readonly("projection", &QuotientAction::projection);
  m.def("quotient_action",
        [](const FiniteAction& action,
           const std::vector<std::pair<int, int>>& pairs) {
          PairRelation rel = PairRelation::diagonal(action.phase_size());
          for (auto [x, y] : pairs) {
            rel.set(x, y);
            rel.set(y, x);
          }
          return quotient_action(action, InvariantRelation::over(action, rel));
        },
        "Quotient by the invariant equivalence generated by the given "
        "symmetric pairs plus the diagonal");

  m.def("prox_union_asym_check", &prox_union_asym_check, py::arg("action"),
        py::arg("bound") = kDefaultIdealEnumerationBound);
  m.def("homomorphism_image_check", &homomorphism_image_check);

  py::class_<CoDecomposition>(m, "CoDecomposition")
      .def_readonly("factors", &CoDecomposition::factors)
      .def_readonly("commuting", &CoDecomposition::commuting);
  m.def("co_decompose", &co_decompose);
  m.def("co_decompose_scrambled_check", &co_decompose_scrambled_check);

  // -- iterated systems --------------------------------------------------------
  py::class_<IteratedSystem>(m, "IteratedSystem")
      .def_static("discrete", &IteratedSystem::discrete, py::arg("step"))
      .def_static("with_metric", &iterated_from_pairs, py::arg("step"),
                  py::arg("metric"),
                  "Metric entries as (numerator, denominator) pairs")
      .def_property_readonly("phase_size", &IteratedSystem::phase_size)
      .def_property_readonly("step", &IteratedSystem::step)
      .def("apply", &IteratedSystem::apply)
      .def("metric_pairs", &metric_pairs);

  py::class_<PairTrajectory>(m, "PairTrajectory")
      .def_readonly("tail", &PairTrajectory::tail)
      .def_readonly("cycle", &PairTrajectory::cycle);

  py::class_<ExhaustionFamily>(m, "ExhaustionFamily")
      .def_static("by_name", &family_by_name, py::arg("name"))
      .def_readonly("name", &ExhaustionFamily::name)
      .def("max_element",
           [](const ExhaustionFamily& f, int n) { return f.max_element(n); })
      .def("contains", [](const ExhaustionFamily& f, int n, long long s) {
        return f.contains(n, s);
      });

  m.def("pair_trajectory", &pair_trajectory);
  m.def("is_proximal", &is_proximal);
  m.def("is_asymptotic", &is_asymptotic);
  m.def("is_scrambled_relative", &is_scrambled_relative);
  m.def("scrambled_witness", &scrambled_witness);

  py::class_<ClaimsReport>(m, "ClaimsReport")
      .def_readonly("holds", &ClaimsReport::holds)
      .def_readonly("counterexample", &ClaimsReport::counterexample);
  m.def("claims_check", &claims_check);

  // -- fort analyzer -------------------------------------------------------------
  py::class_<OrbitClass>(m, "OrbitClass")
      .def(py::init([](std::string label, Cardinal points, Cardinal orbit,
                       Cardinal stabilizer) {
             return OrbitClass{std::move(label), points, orbit, stabilizer};
           }),
           py::arg("label"), py::arg("points"), py::arg("orbit"),
           py::arg("stabilizer"))
      .def_readonly("label", &OrbitClass::label)
      .def_readonly("points", &OrbitClass::point_count)
      .def_readonly("orbit", &OrbitClass::orbit_size)
      .def_readonly("stabilizer", &OrbitClass::stabilizer_size);

  py::class_<FortGroupSpec>(m, "FortGroupSpec")
      .def(py::init([](Cardinal group_size, bool abelian,
                       std::vector<OrbitClass> classes) {
             FortGroupSpec spec{group_size, abelian, std::move(classes)};
             spec.validate();
             return spec;
           }),
           py::arg("group_size"), py::arg("abelian"), py::arg("classes"))
      .def_readonly("group_size", &FortGroupSpec::group_size)
      .def_readonly("abelian", &FortGroupSpec::abelian)
      .def_readonly("classes", &FortGroupSpec::classes)
      .def("total_points", &FortGroupSpec::total_points);

  py::enum_<StratumKind>(m, "StratumKind")
      .value("diagonal", StratumKind::diagonal)
      .value("with_particular", StratumKind::with_particular)
      .value("class_pair", StratumKind::class_pair);

  py::class_<Stratum>(m, "Stratum")
      .def_readonly("kind", &Stratum::kind)
      .def_readonly("a", &Stratum::a)
      .def_readonly("b", &Stratum::b);

  py::class_<StratumVerdict>(m, "StratumVerdict")
      .def_readonly("stratum", &StratumVerdict::stratum)
      .def_readonly("lower", &StratumVerdict::lower)
      .def_readonly("upper", &StratumVerdict::upper)
      .def("exact", &StratumVerdict::exact);

  py::class_<PairClassReport>(m, "PairClassReport")
      .def_readonly("exact", &PairClassReport::exact)
      .def_readonly("strata", &PairClassReport::strata);

  m.def("prox_classes", &prox_classes);
  m.def("asym_classes", &asym_classes);

  py::class_<ScrambledReport>(m, "ScrambledReport")
      .def_readonly("strata", &ScrambledReport::strata)
      .def_readonly("h_classes", &ScrambledReport::h_classes)
      .def_readonly("h_cardinality", &ScrambledReport::h_cardinality)
      .def_readonly("confinement_ok", &ScrambledReport::confinement_ok)
      .def_readonly("confinement_note", &ScrambledReport::confinement_note);
  m.def("scrambled_structure", &scrambled_structure);

  py::class_<ChaosReport>(m, "ChaosReport")
      .def_readonly("chaotic", &ChaosReport::chaotic)
      .def_readonly("h_cardinality", &ChaosReport::h_cardinality)
      .def_readonly("witness_class", &ChaosReport::witness_class)
      .def_readonly("criterion", &ChaosReport::criterion);
  m.def("is_li_yorke_chaotic", &is_li_yorke_chaotic);

  py::class_<GeneralizedExampleReport>(m, "GeneralizedExampleReport")
      .def_readonly("spec", &GeneralizedExampleReport::spec)
      .def_readonly("mod_beta", &GeneralizedExampleReport::mod_beta)
      .def_readonly("mod_alpha", &GeneralizedExampleReport::mod_alpha);
  m.def("generalized_cardinal_example", &generalized_cardinal_example,
        py::arg("alpha_tier"), py::arg("beta_tier"), py::arg("k_card"));

  py::class_<CoDecompositionReport>(m, "CoDecompositionReport")
      .def_readonly("whole", &CoDecompositionReport::whole)
      .def_readonly("biconditional_holds",
                    &CoDecompositionReport::biconditional_holds)
      .def_readonly("cyclic_derivation",
                    &CoDecompositionReport::cyclic_derivation)
      .def_readonly("all_cyclic_factors_nonchaotic",
                    &CoDecompositionReport::all_cyclic_factors_nonchaotic)
      .def_readonly("extremal_cyclic_factor",
                    &CoDecompositionReport::extremal_cyclic_factor);
  m.def("co_decomposition_report", &co_decomposition_report);

  py::class_<TranslationActionSpec>(m, "TranslationActionSpec")
      .def(py::init([](int rank, std::vector<long long> coefficients,
                       bool real_factor, Cardinal k_card) {
             TranslationActionSpec spec{rank, std::move(coefficients),
                                        real_factor, k_card};
             spec.validate();
             return spec;
           }),
           py::arg("rank") = 1,
           py::arg("coefficients") = std::vector<long long>{},
           py::arg("real_factor") = false,
           py::arg("k_card") = Cardinal::aleph(0))
      .def_readonly("rank", &TranslationActionSpec::rank)
      .def_readonly("coefficients", &TranslationActionSpec::coefficients)
      .def_readonly("real_factor", &TranslationActionSpec::real_factor)
      .def_readonly("k_card", &TranslationActionSpec::k_card);
  m.def("translation_to_spec", &translation_to_spec);

  py::class_<FortPoint>(m, "FortPoint")
      .def_static("inf", &FortPoint::inf)
      .def_static("at", &FortPoint::at)
      .def_readonly("infinity", &FortPoint::infinity)
      .def_readonly("value", &FortPoint::value)
      .def("__repr__", &FortPoint::to_string);

  py::class_<FortEntourage>(m, "FortEntourage")
      .def("contains", &FortEntourage::contains)
      .def_property_readonly("excluded", &FortEntourage::excluded);
  m.def("fort_entourage", &fort_entourage);
  m.def("entourage_intersection_check",
        [](const std::vector<FortPoint>& d, long long window) {
          const EntourageCheck check = entourage_intersection_check(d, window);
          return py::make_tuple(check.holds, check.counterexample);
        });

  py::class_<OracleReport>(m, "OracleReport")
      .def_readonly("formula_asymptotic", &OracleReport::formula_asymptotic)
      .def_readonly("oracle_asymptotic", &OracleReport::oracle_asymptotic)
      .def_readonly("agree", &OracleReport::agree)
      .def_readonly("window_hits", &OracleReport::window_hits)
      .def_readonly("box_solutions", &OracleReport::box_solutions)
      .def_readonly("note", &OracleReport::note);
  m.def("windowed_definition_oracle", &windowed_definition_oracle,
        py::arg("spec"), py::arg("x"), py::arg("y"), py::arg("window") = 50,
        py::arg("bound") = 20);
  m.def("oracle_representative_pairs", &oracle_representative_pairs);

  // -- io and batch entry points ----------------------------------------------
  py::class_<InstanceDocument>(m, "InstanceDocument")
      .def_property_readonly(
          "kind", [](const InstanceDocument& doc) { return kind_name(doc.kind); })
      .def_readonly("ideals", &InstanceDocument::ideals);
  m.def("parse_instance", &parse_instance, py::arg("path"));
  m.def("parse_instance_text", &parse_instance_text, py::arg("text"),
        py::arg("origin") = "<input>");
  m.def("serialize_instance", &serialize_instance);

  m.def(
      "run_analysis",
      [](const InstanceDocument& doc, const std::vector<std::string>& ops,
         std::optional<int> ideal_index, long long window, long long bound,
         const std::string& format) {
        AnalyzeOptions options;
        options.ops = ops;
        options.ideal_index = ideal_index;
        options.window = window;
        options.bound = bound;
        const Report report = run_analysis(doc, options);
        return py::make_tuple(report.rendered(format), report.exit_code);
      },
      py::arg("doc"), py::arg("ops"), py::arg("ideal_index") = std::nullopt,
      py::arg("window") = 50, py::arg("bound") = 20,
      py::arg("format") = "text");

  m.def(
      "run_verify",
      [](const std::string& suite, std::uint64_t seed, int budget,
         const std::string& format) {
        const Report report = run_verify(suite, seed, budget);
        return py::make_tuple(report.rendered(format), report.exit_code);
      },
      py::arg("suite"), py::arg("seed") = 42, py::arg("budget") = 200,
      py::arg("format") = "text");
}
