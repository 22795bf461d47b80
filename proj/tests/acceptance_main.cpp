// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Budgets, bounds and time limits are pinned here, not configurable.

#include <chrono>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "chaoslab/analysis.hpp"
#include "chaoslab/errors.hpp"
#include "chaoslab/fort.hpp"
#include "chaoslab/instance_io.hpp"
#include "chaoslab/verify.hpp"

namespace {

using namespace chaoslab;

std::string g_fixtures = "fixtures";

struct Criterion {
  std::string name;
  double time_limit_seconds;
  std::function<bool(std::string&)> run;
};

bool expect(bool condition, const std::string& message, std::string& why) {
  if (!condition && why.empty()) why = message;
  return condition;
}

bool suite_passes(const SuiteResult& result, int min_instances,
                  std::string& why) {
  bool ok = true;
  ok &= expect(result.ok, result.counterexample, why);
  ok &= expect(result.instances >= min_instances,
               "only " + std::to_string(result.instances) + " instances",
               why);
  return ok;
}

// 1. The Z x R Fort example: chaotic mod finite subsets with |H| = aleph1,
//    not chaotic mod countable subsets with |H| = 0.
bool bundled_zxr_example(std::string& why) {
  const InstanceDocument doc =
      parse_instance(g_fixtures + "/paper-example.json");
  if (doc.kind != InstanceDocument::Kind::fort_spec) {
    why = "fixture kind mismatch";
    return false;
  }
  const ChaosReport fin =
      is_li_yorke_chaotic(*doc.fort, IdealSpec::cardinal_bound(Cardinal::aleph(0)));
  const ChaosReport cnt =
      is_li_yorke_chaotic(*doc.fort, IdealSpec::cardinal_bound(Cardinal::aleph(1)));
  bool ok = true;
  ok &= expect(fin.chaotic, "not chaotic mod finite subsets", why);
  ok &= expect(fin.h_cardinality == Cardinal::aleph(1),
               "|H| mod finite subsets is " + fin.h_cardinality.to_string(),
               why);
  ok &= expect(!cnt.chaotic, "chaotic mod countable subsets", why);
  ok &= expect(cnt.h_cardinality == Cardinal::finite(0),
               "|H| mod countable subsets is " + cnt.h_cardinality.to_string(),
               why);
  return ok;
}

// 2. Generalized example at (beta, |K|, alpha) = (aleph1, aleph1, aleph2).
bool generalized_example(std::string& why) {
  const GeneralizedExampleReport report =
      generalized_cardinal_example(2, 1, Cardinal::aleph(1));
  bool ok = true;
  ok &= expect(report.mod_beta.chaotic, "not chaotic mod the beta ideal", why);
  ok &= expect(!report.mod_alpha.chaotic, "chaotic mod the alpha ideal", why);
  return ok;
}

// 3. Stabilizer formula vs windowed definition oracle over every rank
//    1..3 translation with coefficients in [-3,3]^k, window 50, box 20.
bool fort_formula_vs_oracle(std::string& why) {
  return suite_passes(suite_fort_oracle(3, 50, 20), 399, why);
}

// 4. Section 3 law suite on seeded random finite instances.
bool section3_laws(std::string& why) {
  return suite_passes(suite_section3(42, 200), 200, why);
}

// 5. Shared-semigroup and mixed product Asym equalities.
bool product_laws(std::string& why) {
  return suite_passes(suite_product(42, 200), 200, why);
}

// 6. Prox = union of Asym over proper ideals, all actions on up to 4
//    points over at least 100 sampled semigroups of size <= 3.
bool prox_union(std::string& why) {
  return suite_passes(suite_prox_union(42, 100), 100, why);
}

// 7. Claims equivalence: exhaustive self-maps through |X| = 4 under the
//    discrete metric plus 50 random rational metrics, with family
//    independence per pair.
bool claims_equivalence(std::string& why) {
  const int exhaustive = 1 + 4 + 27 + 256;
  return suite_passes(suite_claims(42, 50, 4), exhaustive + 50, why);
}

// 8. Clique search equals exhaustive subset search on random instances.
bool scrambled_exactness(std::string& why) {
  return suite_passes(suite_scrambled_exact(42, 100, 10), 100, why);
}

// 9. Scrambled strata confined to H ∪ {b} on every compiled translation
//    spec and cardinal ideal.
bool structural_bound(std::string& why) {
  return suite_passes(suite_fort_structure(3), 344, why);
}

// 10. Every chaotic bundled spec co-decomposes into non-chaotic cyclic
//     factors, certified through the orbit-stabilizer derivation.
bool cyclic_co_decomposition(std::string& why) {
  const std::vector<std::string> fort_fixtures = {
      g_fixtures + "/paper-example.json",
      g_fixtures + "/translations/real_factor.json",
  };
  int chaotic_specs = 0;
  bool ok = true;
  for (const std::string& path : fort_fixtures) {
    const InstanceDocument doc = parse_instance(path);
    const FortGroupSpec spec = doc.fort ? *doc.fort
                                        : translation_to_spec(*doc.translation);
    for (const IdealSpec& ideal : doc.ideals) {
      if (ideal.kind() != IdealSpec::Kind::cardinal_bound) continue;
      const CoDecompositionReport report = co_decomposition_report(spec, ideal);
      if (report.whole.chaotic) {
        ++chaotic_specs;
        ok &= expect(report.all_cyclic_factors_nonchaotic,
                     path + ": a cyclic factor came out chaotic", why);
        ok &= expect(!report.cyclic_derivation.empty(),
                     path + ": missing derivation", why);
        ok &= expect(!report.extremal_cyclic_factor.chaotic,
                     path + ": extremal cyclic factor chaotic", why);
      }
      ok &= expect(report.biconditional_holds, path + ": biconditional", why);
    }
  }
  ok &= expect(chaotic_specs >= 2, "expected at least two chaotic bundled specs",
               why);
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_fixtures = argv[1];

  const std::vector<Criterion> criteria = {
      {"1 bundled Z x R fort example: chaotic mod P_fin, not mod P_count", 1.0,
       bundled_zxr_example},
      {"2 generalized cardinals (aleph1, aleph1, aleph2)", 1.0,
       generalized_example},
      {"3 fort stabilizer formula vs definition oracle", 60.0,
       fort_formula_vs_oracle},
      {"4 section-3 law suite (200 random instances)", 30.0, section3_laws},
      {"5 product and mixed-product Asym equalities", 60.0, product_laws},
      {"6 Prox = union of Asym over proper ideals", 60.0, prox_union},
      {"7 claims equivalence (exhaustive maps + random metrics)", 30.0,
       claims_equivalence},
      {"8 max scrambled set vs exhaustive subset search", 30.0,
       scrambled_exactness},
      {"9 scrambled strata confined to H and the particular point", 5.0,
       structural_bound},
      {"10 cyclic co-decomposition of chaotic bundled specs", 1.0,
       cyclic_co_decomposition},
  };

  int failures = 0;
  for (const Criterion& criterion : criteria) {
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string why;
    try {
      ok = criterion.run(why);
    } catch (const std::exception& e) {
      why = e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (seconds > criterion.time_limit_seconds) {
      ok = false;
      if (why.empty()) {
        why = "exceeded " + std::to_string(criterion.time_limit_seconds) +
              "s time limit";
      }
    }
    std::printf("criterion %-58s %s (%.2fs)%s%s\n", criterion.name.c_str(),
                ok ? "PASS" : "FAIL", seconds, why.empty() ? "" : " -- ",
                why.c_str());
    if (!ok) ++failures;
  }
  if (failures > 0) {
    std::printf("acceptance: %d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("acceptance: all %zu criteria passed\n", criteria.size());
  return 0;
}
