#include "chaoslab/analysis.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "chaoslab/errors.hpp"

namespace chaoslab {

using nlohmann::ordered_json;

namespace {

const std::vector<std::string> kKnownOps = {
    "prox",    "asym",    "scrambled",    "max-scrambled", "chaotic",
    "classes", "co-decompose", "oracle",  "claims"};

std::string ideal_label(const IdealSpec& ideal) {
  switch (ideal.kind()) {
    case IdealSpec::Kind::full:
      return "full";
    case IdealSpec::Kind::cardinal_bound:
      return "kappa=" + ideal.kappa().to_string();
    case IdealSpec::Kind::finite_carrier: {
      std::string out = "carrier{";
      const auto& c = ideal.carrier();
      for (size_t i = 0; i < c.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(c[i]);
      }
      return out + "}";
    }
  }
  return "?";
}

ordered_json ideal_descriptor(const IdealSpec& ideal) {
  switch (ideal.kind()) {
    case IdealSpec::Kind::full:
      return ordered_json("full");
    case IdealSpec::Kind::cardinal_bound:
      return ordered_json{{"kappa", ideal.kappa().to_string()}};
    case IdealSpec::Kind::finite_carrier:
      return ordered_json{{"carrier", ideal.carrier()}};
  }
  return ordered_json();
}

ordered_json pairs_json(const PairRelation& rel) {
  ordered_json out = ordered_json::array();
  for (auto [x, y] : rel.pairs()) out.push_back(ordered_json::array({x, y}));
  return out;
}

std::string set_str(const std::vector<int>& xs) {
  std::string out = "{";
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(xs[i]);
  }
  return out + "}";
}

std::string verdict_str(const StratumVerdict& v) {
  if (v.lower && v.upper) return "yes";
  if (!v.lower && !v.upper) return "no";
  return "possible (upper bound only)";
}

struct ReportBuilder {
  ordered_json machine = ordered_json::object();
  ordered_json analyses = ordered_json::array();
  std::ostringstream text;
  int exit_code = 0;

  void line(const std::string& s) { text << s << "\n"; }
  void add(ordered_json analysis) { analyses.push_back(std::move(analysis)); }
  void counterexample_found() { exit_code = std::max(exit_code, 1); }
};

// Ideals the ideal-dependent analyses run over.
std::vector<std::pair<int, IdealSpec>> select_ideals(
    const InstanceDocument& doc, const AnalyzeOptions& options) {
  std::vector<IdealSpec> listed = doc.ideals;
  if (listed.empty()) {
    // Sensible defaults: the empty-carrier ideal for finite instances, the
    // finite-subsets ideal for infinite ones.
    if (doc.kind == InstanceDocument::Kind::fort_spec ||
        doc.kind == InstanceDocument::Kind::translation_action) {
      listed.push_back(IdealSpec::cardinal_bound(Cardinal::aleph(0)));
    } else {
      listed.push_back(IdealSpec::finite_carrier({}));
    }
  }
  std::vector<std::pair<int, IdealSpec>> out;
  if (options.ideal_index) {
    const int i = *options.ideal_index;
    if (i < 0 || i >= static_cast<int>(listed.size())) {
      throw Error(Errc::validation_error,
                  "--ideal " + std::to_string(i) + " out of range; the "
                  "instance lists " + std::to_string(listed.size()));
    }
    out.emplace_back(i, listed[i]);
  } else {
    for (size_t i = 0; i < listed.size(); ++i) {
      out.emplace_back(static_cast<int>(i), listed[i]);
    }
  }
  return out;
}

[[noreturn]] void unsupported(const std::string& op,
                              InstanceDocument::Kind kind) {
  throw Error(Errc::unsupported_command,
              "op \"" + op + "\" is not defined for kind \"" +
                  kind_name(kind) + "\"");
}

// --------------------------------------------------------------------------
// finite-action ops

void run_finite_op(const std::string& op, const FiniteAction& action,
                   const std::vector<std::pair<int, IdealSpec>>& ideals,
                   ReportBuilder& rb) {
  if (op == "prox") {
    const PairRelation rel = prox_pairs(action);
    rb.line("prox: " + rel.to_string());
    rb.add({{"op", op}, {"pairs", pairs_json(rel)}});
    return;
  }
  if (op == "asym" || op == "scrambled" || op == "max-scrambled" ||
      op == "chaotic" || op == "classes") {
    for (const auto& [index, ideal] : ideals) {
      const std::string tag = "[ideal " + std::to_string(index) + " " +
                              ideal_label(ideal) + "]";
      ordered_json entry = {{"op", op},
                            {"ideal_index", index},
                            {"ideal", ideal_descriptor(ideal)}};
      if (op == "asym") {
        const PairRelation rel = asym_pairs(action, ideal);
        rb.line("asym" + tag + ": " + rel.to_string());
        entry["pairs"] = pairs_json(rel);
      } else if (op == "scrambled") {
        const PairRelation rel = scrambled_pairs(action, ideal);
        rb.line("scrambled" + tag + ": " + rel.to_string());
        entry["pairs"] = pairs_json(rel);
      } else if (op == "max-scrambled") {
        const std::vector<int> best = max_scrambled_set(action, ideal);
        rb.line("max-scrambled" + tag + ": " + set_str(best) + " (size " +
                std::to_string(best.size()) + ")");
        entry["set"] = best;
      } else if (op == "chaotic") {
        const ChaosVerdict verdict = is_li_yorke_chaotic_mod(action, ideal);
        rb.line("chaotic" + tag + ": " +
                (verdict.chaotic ? "true" : "false") + " -- " +
                verdict.witness + " [criterion: brute-force]");
        entry["verdict"] = verdict.chaotic;
        entry["witness"] = verdict.witness;
        entry["max_scrambled"] = verdict.max_scrambled;
        entry["criterion"] = "brute-force";
      } else {
        const auto classes = asym_equivalence_classes(action, ideal);
        std::string out;
        ordered_json jclasses = ordered_json::array();
        for (const auto& cls : classes) {
          out += set_str(cls) + " ";
          jclasses.push_back(cls);
        }
        if (!out.empty()) out.pop_back();
        rb.line("classes" + tag + ": " + out);
        entry["classes"] = std::move(jclasses);
      }
      rb.add(std::move(entry));
    }
    return;
  }
  if (op == "co-decompose") {
    // The file format carries no explicit parts, so decompose into the
    // cyclic subsemigroups generated by each element.
    std::vector<std::vector<int>> parts;
    for (int s = 0; s < action.semigroup().size(); ++s) parts.push_back({s});
    const CoDecomposition decomposition = co_decompose(action, parts);
    std::string sizes;
    ordered_json factor_sizes = ordered_json::array();
    for (const auto& factor : decomposition.factors) {
      sizes += std::to_string(factor.action.semigroup().size()) + " ";
      factor_sizes.push_back(factor.action.semigroup().size());
    }
    if (!sizes.empty()) sizes.pop_back();
    rb.line("co-decompose: " + std::to_string(decomposition.factors.size()) +
            " cyclic factors of sizes " + sizes + "; commuting=" +
            (decomposition.commuting ? "true" : "false"));
    ordered_json entry = {{"op", op},
                          {"factor_sizes", std::move(factor_sizes)},
                          {"commuting", decomposition.commuting}};
    ordered_json checks = ordered_json::array();
    for (const auto& [index, ideal] : ideals) {
      const CheckReport check =
          co_decompose_scrambled_check(action, decomposition, ideal);
      rb.line("co-decompose scrambled-inclusion[ideal " +
              std::to_string(index) + " " + ideal_label(ideal) +
              "]: " + (check.holds ? "holds" : check.counterexample));
      checks.push_back({{"ideal_index", index},
                        {"holds", check.holds},
                        {"counterexample", check.counterexample}});
      if (!check.holds) rb.counterexample_found();
    }
    entry["scrambled_inclusion"] = std::move(checks);
    rb.add(std::move(entry));
    return;
  }
  unsupported(op, InstanceDocument::Kind::finite_action);
}

// --------------------------------------------------------------------------
// iterated-system ops

PairRelation iterated_relation(const IteratedSystem& sys,
                               bool (*pred)(const IteratedSystem&, int, int)) {
  PairRelation rel(sys.phase_size());
  for (int x = 0; x < sys.phase_size(); ++x) {
    for (int y = 0; y < sys.phase_size(); ++y) {
      if (pred(sys, x, y)) rel.set(x, y);
    }
  }
  return rel;
}

void run_iterated_op(const std::string& op, const IteratedSystem& sys,
                     ReportBuilder& rb) {
  if (op == "prox") {
    const PairRelation rel = iterated_relation(sys, is_proximal);
    rb.line("prox: " + rel.to_string());
    rb.add({{"op", op}, {"pairs", pairs_json(rel)}});
    return;
  }
  if (op == "asym") {
    const PairRelation rel = iterated_relation(sys, is_asymptotic);
    rb.line("asym[mod finite-subsets]: " + rel.to_string());
    rb.add({{"op", op}, {"ideal", "finite-subsets"}, {"pairs", pairs_json(rel)}});
    return;
  }
  if (op == "scrambled") {
    PairRelation rel = iterated_relation(sys, is_proximal);
    rel.subtract(iterated_relation(sys, is_asymptotic));
    rel.remove_diagonal();
    rb.line("scrambled[mod finite-subsets]: " + rel.to_string());
    rb.add({{"op", op}, {"ideal", "finite-subsets"}, {"pairs", pairs_json(rel)}});
    return;
  }
  if (op == "claims") {
    const ClaimsReport claims = claims_check(sys);
    rb.line("claims: " + std::string(claims.holds ? "holds" : "violated -- " +
                                                        claims.counterexample));
    rb.add({{"op", op},
            {"holds", claims.holds},
            {"counterexample", claims.counterexample}});
    if (!claims.holds) rb.counterexample_found();
    return;
  }
  unsupported(op, InstanceDocument::Kind::iterated_system);
}

// --------------------------------------------------------------------------
// fort ops (native specs and compiled translations)

void render_strata(const std::string& op, const FortGroupSpec& spec,
                   const PairClassReport& report, const std::string& tag,
                   ReportBuilder& rb, ordered_json entry) {
  std::string out;
  ordered_json strata = ordered_json::array();
  for (const StratumVerdict& v : report.strata) {
    out += v.stratum.to_string(spec) + "=" + verdict_str(v) + " ";
    strata.push_back({{"stratum", v.stratum.to_string(spec)},
                      {"lower", v.lower},
                      {"upper", v.upper}});
  }
  if (!out.empty()) out.pop_back();
  rb.line(op + tag + ": " + out);
  entry["exact"] = report.exact;
  entry["strata"] = std::move(strata);
  rb.add(std::move(entry));
}

void run_fort_op(const std::string& op, const FortGroupSpec& spec,
                 const std::vector<std::pair<int, IdealSpec>>& ideals,
                 ReportBuilder& rb) {
  if (op == "prox") {
    render_strata(op, spec, prox_classes(spec), "", rb, {{"op", op}});
    return;
  }
  if (op == "asym" || op == "scrambled" || op == "chaotic" ||
      op == "classes" || op == "co-decompose") {
    for (const auto& [index, ideal] : ideals) {
      const std::string tag = "[ideal " + std::to_string(index) + " " +
                              ideal_label(ideal) + "]";
      ordered_json entry = {{"op", op},
                            {"ideal_index", index},
                            {"ideal", ideal_descriptor(ideal)}};
      if (op == "asym") {
        render_strata(op, spec, asym_classes(spec, ideal), tag, rb,
                      std::move(entry));
      } else if (op == "scrambled") {
        const ScrambledReport report = scrambled_structure(spec, ideal);
        entry["h_classes"] = report.h_classes;
        entry["h_cardinality"] = report.h_cardinality.to_string();
        entry["confinement_ok"] = report.confinement_ok;
        entry["confinement"] = report.confinement_note;
        if (!report.confinement_ok) rb.counterexample_found();
        render_strata(op, spec, report.strata, tag, rb, std::move(entry));
        rb.line("  confinement: " + report.confinement_note);
      } else if (op == "chaotic") {
        const ChaosReport report = is_li_yorke_chaotic(spec, ideal);
        std::string witness =
            report.witness_class
                ? "; witness class " + spec.classes[*report.witness_class].label
                : "";
        rb.line("chaotic" + tag + ": " +
                (report.chaotic ? "true" : "false") + " -- |H| = " +
                report.h_cardinality.to_string() + witness +
                " [criterion: " + report.criterion + "]");
        entry["verdict"] = report.chaotic;
        entry["h_cardinality"] = report.h_cardinality.to_string();
        if (report.witness_class) entry["witness_class"] = *report.witness_class;
        entry["criterion"] = report.criterion;
        rb.add(std::move(entry));
      } else if (op == "classes") {
        const ScrambledReport report = scrambled_structure(spec, ideal);
        std::string out;
        ordered_json jclasses = ordered_json::array();
        for (size_t c = 0; c < spec.classes.size(); ++c) {
          const OrbitClass& cls = spec.classes[c];
          const bool in_h =
              std::find(report.h_classes.begin(), report.h_classes.end(),
                        static_cast<int>(c)) != report.h_classes.end();
          out += cls.label + "(points=" + cls.point_count.to_string() +
                 ",orbit=" + cls.orbit_size.to_string() +
                 ",st=" + cls.stabilizer_size.to_string() +
                 (in_h ? ",in H" : "") + ") ";
          jclasses.push_back({{"label", cls.label},
                              {"points", cls.point_count.to_string()},
                              {"orbit", cls.orbit_size.to_string()},
                              {"stabilizer", cls.stabilizer_size.to_string()},
                              {"in_h", in_h}});
        }
        if (!out.empty()) out.pop_back();
        rb.line("classes" + tag + ": " + out);
        entry["classes"] = std::move(jclasses);
        entry["h_cardinality"] = report.h_cardinality.to_string();
        rb.add(std::move(entry));
      } else {
        const CoDecompositionReport report = co_decomposition_report(spec, ideal);
        rb.line("co-decompose" + tag + ": whole " +
                (report.whole.chaotic ? "chaotic" : "not chaotic") +
                "; chaotic iff co-decomposable to chaotic: " +
                (report.biconditional_holds ? "certified" : "violated") +
                "; all cyclic factors non-chaotic: " +
                (report.all_cyclic_factors_nonchaotic ? "certified"
                                                      : "violated"));
        for (const std::string& step : report.cyclic_derivation) {
          rb.line("  derivation: " + step);
        }
        entry["whole_chaotic"] = report.whole.chaotic;
        entry["whole_h_cardinality"] = report.whole.h_cardinality.to_string();
        entry["biconditional_holds"] = report.biconditional_holds;
        entry["cyclic_derivation"] = report.cyclic_derivation;
        entry["all_cyclic_factors_nonchaotic"] =
            report.all_cyclic_factors_nonchaotic;
        entry["extremal_cyclic_factor_chaotic"] =
            report.extremal_cyclic_factor.chaotic;
        if (!report.all_cyclic_factors_nonchaotic ||
            !report.biconditional_holds) {
          rb.counterexample_found();
        }
        rb.add(std::move(entry));
      }
    }
    return;
  }
  unsupported(op, InstanceDocument::Kind::fort_spec);
}

void run_translation_oracle(const TranslationActionSpec& spec,
                            const AnalyzeOptions& options, ReportBuilder& rb) {
  const TranslationOracle oracle(spec, options.window, options.bound);
  ordered_json entry = {{"op", "oracle"},
                        {"window", options.window},
                        {"bound", options.bound}};
  ordered_json results = ordered_json::array();
  bool all_agree = true;
  for (const auto& [x, y] : oracle_representative_pairs(spec)) {
    const OracleReport report = oracle.check_pair(x, y);
    rb.line("oracle (" + x.to_string() + "," + y.to_string() + "): formula=" +
            (report.formula_asymptotic ? "asym" : "non-asym") + " definition=" +
            (report.oracle_asymptotic ? "asym" : "non-asym") +
            (report.agree ? " (agree)" : " (DISAGREE)"));
    results.push_back({{"x", x.to_string()},
                       {"y", y.to_string()},
                       {"formula_asymptotic", report.formula_asymptotic},
                       {"oracle_asymptotic", report.oracle_asymptotic},
                       {"agree", report.agree},
                       {"window_hits", report.window_hits},
                       {"box_solutions", report.box_solutions}});
    all_agree = all_agree && report.agree;
  }
  entry["pairs"] = std::move(results);
  entry["all_agree"] = all_agree;
  if (!all_agree) rb.counterexample_found();
  rb.add(std::move(entry));
}

}  // namespace

std::string Report::rendered(const std::string& format) const {
  if (format == "json") return machine.dump(2) + "\n";
  return text;
}

Report run_analysis(const InstanceDocument& doc, const AnalyzeOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  if (options.ops.empty()) {
    throw Error(Errc::validation_error, "no analyses requested");
  }
  for (const std::string& op : options.ops) {
    if (std::find(kKnownOps.begin(), kKnownOps.end(), op) == kKnownOps.end()) {
      throw Error(Errc::unsupported_command, "unknown op \"" + op + "\"");
    }
  }

  ReportBuilder rb;
  rb.line("chaoslab report");
  rb.line("instance: " + kind_name(doc.kind));
  const auto ideals = select_ideals(doc, options);

  for (const std::string& op : options.ops) {
    switch (doc.kind) {
      case InstanceDocument::Kind::finite_action:
        run_finite_op(op, *doc.finite, ideals, rb);
        break;
      case InstanceDocument::Kind::iterated_system:
        run_iterated_op(op, *doc.iterated, rb);
        break;
      case InstanceDocument::Kind::fort_spec:
        if (op == "oracle") unsupported(op, doc.kind);
        run_fort_op(op, *doc.fort, ideals, rb);
        break;
      case InstanceDocument::Kind::translation_action: {
        if (op == "claims") unsupported(op, doc.kind);
        if (op == "oracle") {
          run_translation_oracle(*doc.translation, options, rb);
        } else {
          run_fort_op(op, translation_to_spec(*doc.translation), ideals, rb);
        }
        break;
      }
    }
  }

  Report report;
  report.machine["schema"] = 1;
  report.machine["instance"] = doc.normalized;
  report.machine["analyses"] = std::move(rb.analyses);
  if (options.timing) {
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - started)
                             .count();
    report.machine["timing_ms"] = elapsed;
    rb.line("timing: " + std::to_string(elapsed) + " ms");
  }
  report.text = rb.text.str();
  report.exit_code = rb.exit_code;
  return report;
}

}  // namespace chaoslab
