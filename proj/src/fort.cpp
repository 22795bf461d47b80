#include "chaoslab/fort.hpp"

#include <algorithm>
#include <numeric>

#include "chaoslab/errors.hpp"

namespace chaoslab {

namespace {

const Cardinal kAleph0 = Cardinal::aleph(0);

void require_cardinal_ideal(const IdealSpec& ideal) {
  if (ideal.kind() == IdealSpec::Kind::finite_carrier) {
    throw Error(Errc::ideal_kind_mismatch,
                "an ideal on an infinite group needs a cardinal bound (or "
                "full); explicit finite carriers cannot describe it");
  }
}

// st(x) ∈ ideal, i.e. the stabilizer is small enough to be negligible.
bool stabilizer_in_ideal(const OrbitClass& cls, const IdealSpec& ideal) {
  if (ideal.kind() == IdealSpec::Kind::full) return true;
  return cls.stabilizer_size < ideal.kappa();
}

bool orbit_infinite(const OrbitClass& cls) {
  return cls.orbit_size >= kAleph0;
}

}  // namespace

// ---------------------------------------------------------------------------
// Spec validation

void FortGroupSpec::validate() const {
  if (group_size < Cardinal::finite(1)) {
    throw Error(Errc::validation_error, "group must be nonempty");
  }
  if (classes.empty()) {
    throw Error(Errc::validation_error, "spec needs at least one orbit class");
  }
  for (size_t i = 0; i < classes.size(); ++i) {
    const OrbitClass& cls = classes[i];
    if (cls.point_count < Cardinal::finite(1)) {
      throw Error(Errc::validation_error,
                  "class " + std::to_string(i) + " has no points");
    }
    if (cls.orbit_size < Cardinal::finite(1) ||
        cls.stabilizer_size < Cardinal::finite(1)) {
      throw Error(Errc::validation_error,
                  "orbit and stabilizer sizes must be at least 1");
    }
    if (cardinal_product(cls.orbit_size, cls.stabilizer_size) != group_size) {
      throw Error(Errc::validation_error,
                  "orbit-stabilizer identity fails for class " +
                      std::to_string(i) + ": " + cls.orbit_size.to_string() +
                      " * " + cls.stabilizer_size.to_string() +
                      " != " + group_size.to_string());
    }
  }
  if (total_points() < kAleph0) {
    throw Error(Errc::validation_error,
                "a Fort phase space must be infinite; the classes list only " +
                    total_points().to_string() + " points");
  }
}

Cardinal FortGroupSpec::total_points() const {
  Cardinal total = Cardinal::finite(0);
  for (const OrbitClass& cls : classes) {
    total = cardinal_sum(total, cls.point_count);
  }
  return total;
}

std::string Stratum::to_string(const FortGroupSpec& spec) const {
  switch (kind) {
    case StratumKind::diagonal:
      return "diagonal";
    case StratumKind::with_particular:
      return "{b, " + spec.classes[a].label + "}";
    case StratumKind::class_pair:
      return "{" + spec.classes[a].label + ", " + spec.classes[b].label + "}";
  }
  return "?";
}

const StratumVerdict* PairClassReport::find(const Stratum& s) const {
  for (const StratumVerdict& v : strata) {
    if (v.stratum == s) return &v;
  }
  return nullptr;
}

namespace {

// Deterministic stratum order: diagonal, pairs with b, class pairs a <= b.
// The (a, a) stratum means two distinct points of one class and is listed
// only when the class holds at least two points.
std::vector<Stratum> enumerate_strata(const FortGroupSpec& spec) {
  std::vector<Stratum> out;
  out.push_back(Stratum{StratumKind::diagonal, -1, -1});
  const int k = static_cast<int>(spec.classes.size());
  for (int c = 0; c < k; ++c) {
    out.push_back(Stratum{StratumKind::with_particular, c, c});
  }
  for (int a = 0; a < k; ++a) {
    for (int b = a; b < k; ++b) {
      if (a == b && spec.classes[a].point_count < Cardinal::finite(2)) {
        continue;
      }
      out.push_back(Stratum{StratumKind::class_pair, a, b});
    }
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Prox / Asym / scrambled classification

PairClassReport prox_classes(const FortGroupSpec& spec) {
  spec.validate();
  PairClassReport report;
  for (const Stratum& s : enumerate_strata(spec)) {
    StratumVerdict v{s, false, false};
    switch (s.kind) {
      case StratumKind::diagonal:
        v.lower = v.upper = true;
        break;
      case StratumKind::with_particular:
        // (x, b) is proximal exactly when the orbit of x is infinite; this
        // direction needs no commutativity.
        v.lower = v.upper = orbit_infinite(spec.classes[s.a]);
        break;
      case StratumKind::class_pair: {
        const bool both = orbit_infinite(spec.classes[s.a]) &&
                          orbit_infinite(spec.classes[s.b]);
        if (!both) {
          // A point with a finite orbit is proximal only to itself.
          v.lower = v.upper = false;
        } else if (spec.abelian) {
          v.lower = v.upper = true;
        } else {
          // Known one-sided: contained in the doubly-infinite stratum, with
          // equality proved only for abelian groups.
          v.lower = false;
          v.upper = true;
        }
        break;
      }
    }
    report.exact = report.exact && v.exact();
    report.strata.push_back(v);
  }
  return report;
}

PairClassReport asym_classes(const FortGroupSpec& spec, const IdealSpec& ideal) {
  spec.validate();
  require_cardinal_ideal(ideal);
  PairClassReport report;
  for (const Stratum& s : enumerate_strata(spec)) {
    StratumVerdict v{s, false, false};
    bool member = false;
    switch (s.kind) {
      case StratumKind::diagonal:
        member = true;
        break;
      case StratumKind::with_particular:
        member = stabilizer_in_ideal(spec.classes[s.a], ideal);
        break;
      case StratumKind::class_pair:
        member = stabilizer_in_ideal(spec.classes[s.a], ideal) &&
                 stabilizer_in_ideal(spec.classes[s.b], ideal);
        break;
    }
    v.lower = v.upper = member;
    report.strata.push_back(v);
  }
  return report;
}

ScrambledReport scrambled_structure(const FortGroupSpec& spec,
                                    const IdealSpec& ideal) {
  const PairClassReport prox = prox_classes(spec);
  const PairClassReport asym = asym_classes(spec, ideal);
  ScrambledReport out;
  out.strata.exact = true;
  for (size_t i = 0; i < prox.strata.size(); ++i) {
    const StratumVerdict& p = prox.strata[i];
    const StratumVerdict& a = asym.strata[i];
    StratumVerdict v{p.stratum, p.lower && !a.lower, p.upper && !a.lower};
    out.strata.exact = out.strata.exact && v.exact();
    out.strata.strata.push_back(v);
  }
  for (size_t c = 0; c < spec.classes.size(); ++c) {
    if (orbit_infinite(spec.classes[c]) &&
        !stabilizer_in_ideal(spec.classes[c], ideal)) {
      out.h_classes.push_back(static_cast<int>(c));
    }
  }
  out.h_cardinality = Cardinal::finite(0);
  for (int c : out.h_classes) {
    out.h_cardinality =
        cardinal_sum(out.h_cardinality, spec.classes[c].point_count);
  }

  // Confinement: a scrambled pair never has both sides outside H ∪ {b}, so
  // a scrambled set can carry at most one point outside H ∪ {b}.
  auto in_h = [&](int c) {
    return std::find(out.h_classes.begin(), out.h_classes.end(), c) !=
           out.h_classes.end();
  };
  out.confinement_ok = true;
  for (const StratumVerdict& v : out.strata.strata) {
    if (!v.upper) continue;
    if (v.stratum.kind == StratumKind::with_particular && !in_h(v.stratum.a)) {
      out.confinement_ok = false;
    }
    if (v.stratum.kind == StratumKind::class_pair &&
        !in_h(v.stratum.a) && !in_h(v.stratum.b)) {
      out.confinement_ok = false;
    }
  }
  out.confinement_note =
      out.confinement_ok
          ? "every possibly-scrambled stratum keeps at least one side in "
            "H or at the particular point; a scrambled set minus (H ∪ {b}) "
            "has at most one element"
          : "a scrambled stratum escapes H ∪ {b}; this contradicts the "
            "stabilizer characterization and signals a bug";
  return out;
}

// ---------------------------------------------------------------------------
// Chaoticity

ChaosReport is_li_yorke_chaotic(const FortGroupSpec& spec,
                                const IdealSpec& ideal) {
  spec.validate();
  if (!spec.abelian) {
    throw Error(Errc::non_abelian,
                "the chaoticity criterion is two-sided only for abelian "
                "groups; refusing to guess");
  }
  require_cardinal_ideal(ideal);
  ChaosReport report;
  report.criterion = "stabilizer-formula";
  report.h_cardinality = Cardinal::finite(0);
  for (size_t c = 0; c < spec.classes.size(); ++c) {
    const OrbitClass& cls = spec.classes[c];
    if (orbit_infinite(cls) && !stabilizer_in_ideal(cls, ideal)) {
      report.h_cardinality =
          cardinal_sum(report.h_cardinality, cls.point_count);
      if (!report.witness_class && cls.point_count.uncountable()) {
        report.witness_class = static_cast<int>(c);
      }
    }
  }
  report.chaotic = report.h_cardinality.uncountable();
  return report;
}

GeneralizedExampleReport generalized_cardinal_example(int alpha_tier,
                                                      int beta_tier,
                                                      Cardinal k_card) {
  if (alpha_tier < 0 || beta_tier < 0) {
    throw Error(Errc::cardinal_order_violated, "tiers must be nonnegative");
  }
  const Cardinal alpha = Cardinal::aleph(alpha_tier);
  const Cardinal beta = Cardinal::aleph(beta_tier);
  if (!(beta <= k_card && k_card < alpha)) {
    throw Error(Errc::cardinal_order_violated,
                "need beta <= |K| < alpha, got " + beta.to_string() +
                    " <= " + k_card.to_string() + " < " + alpha.to_string());
  }
  GeneralizedExampleReport report;
  report.beta = beta;
  report.alpha = alpha;
  report.spec.group_size = cardinal_max(k_card, Cardinal::aleph(1));
  report.spec.abelian = true;
  report.spec.classes = {OrbitClass{"reals", Cardinal::aleph(1),
                                    Cardinal::aleph(1), k_card}};
  report.spec.validate();
  report.mod_beta =
      is_li_yorke_chaotic(report.spec, IdealSpec::cardinal_bound(beta));
  report.mod_alpha =
      is_li_yorke_chaotic(report.spec, IdealSpec::cardinal_bound(alpha));
  return report;
}

CoDecompositionReport co_decomposition_report(const FortGroupSpec& spec,
                                              const IdealSpec& ideal) {
  spec.validate();
  if (!spec.abelian) {
    throw Error(Errc::non_abelian,
                "co-decomposition results assume an abelian group");
  }
  require_cardinal_ideal(ideal);
  CoDecompositionReport report;
  report.whole = is_li_yorke_chaotic(spec, ideal);
  report.biconditional_holds = true;

  report.cyclic_derivation = {
      "a cyclic subgroup <g> is finite or isomorphic to Z, so |<g>| <= aleph0",
      "orbit-stabilizer in <g>: |x<g>| * |st(x)| = |<g>| <= aleph0",
      "an infinite orbit under <g> forces <g> isomorphic to Z with a "
      "stabilizer of infinite index; the only subgroup of Z with infinite "
      "index is trivial, so |st(x)| = 1",
      "1 < aleph0 <= kappa: every such stabilizer lies in the ideal, so "
      "H(<g>) is empty",
      "an empty H is not uncountable: no cyclic factor is Li-Yorke chaotic",
  };

  // Decide the extremal cyclic factor explicitly: the most chaotic a cyclic
  // factor could possibly be is infinite orbits with the trivial stabilizer.
  FortGroupSpec extremal;
  extremal.group_size = kAleph0;
  extremal.abelian = true;
  extremal.classes = {OrbitClass{"cyclic-extremal", spec.total_points(),
                                 kAleph0, Cardinal::finite(1)}};
  report.extremal_cyclic_factor = is_li_yorke_chaotic(extremal, ideal);
  report.all_cyclic_factors_nonchaotic = !report.extremal_cyclic_factor.chaotic;
  return report;
}

// ---------------------------------------------------------------------------
// Translation actions

void TranslationActionSpec::validate() const {
  if (rank < 1) {
    throw Error(Errc::validation_error, "rank must be positive");
  }
  if (real_factor) {
    if (!coefficients.empty()) {
      throw Error(Errc::validation_error,
                  "the K x R form takes no integer coefficients");
    }
    if (k_card < Cardinal::finite(1)) {
      throw Error(Errc::validation_error, "K must be a nonempty group");
    }
    return;
  }
  if (static_cast<int>(coefficients.size()) != rank) {
    throw Error(Errc::validation_error,
                "need exactly rank coefficients, got " +
                    std::to_string(coefficients.size()));
  }
}

FortGroupSpec translation_to_spec(const TranslationActionSpec& t) {
  t.validate();
  FortGroupSpec spec;
  spec.abelian = true;
  if (t.real_factor) {
    spec.group_size = cardinal_max(t.k_card, Cardinal::aleph(1));
    spec.classes = {OrbitClass{"reals", Cardinal::aleph(1), Cardinal::aleph(1),
                               t.k_card}};
    spec.validate();
    return spec;
  }
  spec.group_size = kAleph0;
  long long g = 0;
  for (long long a : t.coefficients) g = std::gcd(g, a < 0 ? -a : a);
  if (g == 0) {
    // Trivial action: Z∖{∞} splits into aleph0 fixed points; orbit classes
    // only ever feed cardinals to the criteria, so they aggregate into one.
    spec.classes = {OrbitClass{"fixed", kAleph0, Cardinal::finite(1), kAleph0}};
  } else {
    const Cardinal stabilizer =
        (t.rank == 1) ? Cardinal::finite(1) : kAleph0;  // kernel of m -> <m,a>
    for (long long r = 0; r < g; ++r) {
      spec.classes.push_back(OrbitClass{"residue" + std::to_string(r), kAleph0,
                                        kAleph0, stabilizer});
    }
  }
  spec.validate();
  return spec;
}

std::string FortPoint::to_string() const {
  return infinity ? "inf" : std::to_string(value);
}

FortEntourage::FortEntourage(std::vector<long long> excluded)
    : excluded_(std::move(excluded)) {
  std::sort(excluded_.begin(), excluded_.end());
  excluded_.erase(std::unique(excluded_.begin(), excluded_.end()),
                  excluded_.end());
}

bool FortEntourage::contains(FortPoint u, FortPoint v) const {
  if (u == v) return true;
  auto in_d = [&](const FortPoint& p) {
    return !p.infinity &&
           std::binary_search(excluded_.begin(), excluded_.end(), p.value);
  };
  return !in_d(u) && !in_d(v);
}

FortEntourage fort_entourage(const std::vector<FortPoint>& d) {
  std::vector<long long> values;
  for (const FortPoint& p : d) {
    if (p.infinity) {
      throw Error(Errc::particular_point_in_d,
                  "the particular point cannot be excluded by an entourage");
    }
    values.push_back(p.value);
  }
  return FortEntourage(std::move(values));
}

EntourageCheck entourage_intersection_check(const std::vector<FortPoint>& d,
                                            long long window) {
  const FortEntourage alpha_d = fort_entourage(d);
  std::vector<FortEntourage> singletons;
  for (long long z : alpha_d.excluded()) {
    singletons.push_back(FortEntourage({z}));
  }
  std::vector<FortPoint> points;
  points.push_back(FortPoint::inf());
  for (long long v = -window; v <= window; ++v) points.push_back(FortPoint::at(v));
  for (long long z : alpha_d.excluded()) {
    if (z < -window || z > window) points.push_back(FortPoint::at(z));
  }
  EntourageCheck check;
  for (const FortPoint& u : points) {
    for (const FortPoint& v : points) {
      bool meet = true;
      for (const FortEntourage& single : singletons) {
        if (!single.contains(u, v)) {
          meet = false;
          break;
        }
      }
      if (alpha_d.contains(u, v) != meet) {
        check.holds = false;
        check.counterexample = "pair (" + u.to_string() + "," + v.to_string() +
                               ") distinguishes alpha_D from the intersection";
        return check;
      }
    }
  }
  return check;
}

// ---------------------------------------------------------------------------
// Windowed definition oracle

TranslationOracle::TranslationOracle(TranslationActionSpec spec,
                                     long long window, long long bound)
    : spec_(std::move(spec)), window_(window), bound_(bound) {
  spec_.validate();
  if (spec_.real_factor) {
    throw Error(Errc::validation_error,
                "the definition oracle runs on integer translation actions");
  }
  if (window_ < 1 || bound_ < 1) {
    throw Error(Errc::validation_error, "window and bound must be positive");
  }
  double box = 1;
  for (int i = 0; i < spec_.rank; ++i) box *= 2.0 * bound_ + 1.0;
  if (box > 8e6) {
    throw Error(Errc::bound_exceeded,
                "coefficient box too large for enumeration");
  }
  long long g = 0;
  long long reach = 0;
  for (long long a : spec_.coefficients) {
    const long long abs_a = a < 0 ? -a : a;
    g = std::gcd(g, abs_a);
    reach += abs_a * bound_;
  }
  gcd_ = g;
  histogram_offset_ = reach;
  histogram_.assign(static_cast<size_t>(2 * reach + 1), 0);
  // Enumerate the box [-bound, bound]^k and tally the linear form.
  std::vector<long long> coord(spec_.rank, -bound_);
  while (true) {
    long long value = 0;
    for (int i = 0; i < spec_.rank; ++i) value += coord[i] * spec_.coefficients[i];
    histogram_[static_cast<size_t>(value + histogram_offset_)] += 1;
    int i = spec_.rank - 1;
    while (i >= 0 && coord[i] == bound_) {
      coord[i] = -bound_;
      --i;
    }
    if (i < 0) break;
    ++coord[i];
  }

  // Kernel finiteness read off the box: a finite kernel meets it in the
  // origin alone, an infinite one brings whole lattice lines through. The
  // primitive kernel vectors have entries bounded by the coefficients, so
  // the box decides this whenever it is at least that wide; otherwise fall
  // back to the linear structure alone.
  long long max_coeff = 0;
  for (long long a : spec_.coefficients) {
    max_coeff = std::max(max_coeff, a < 0 ? -a : a);
  }
  const bool by_rank = (spec_.rank == 1 && spec_.coefficients[0] != 0);
  if (bound_ >= max_coeff) {
    kernel_finite_ = (box_count(0) == 1);
    if (kernel_finite_ != by_rank) {
      throw Error(Errc::validation_error,
                  "box enumeration and the linear structure disagree about "
                  "the kernel");
    }
  } else {
    kernel_finite_ = by_rank;
  }
}

long long TranslationOracle::box_count(long long value) const {
  if (value < -histogram_offset_ || value > histogram_offset_) return 0;
  return histogram_[static_cast<size_t>(value + histogram_offset_)];
}

OracleReport TranslationOracle::check_pair(FortPoint x, FortPoint y) const {
  OracleReport report;
  if (x == y) {
    report.formula_asymptotic = true;
    report.oracle_asymptotic = true;
    report.agree = true;
    report.note = "diagonal pair; the separating sets are empty";
    return report;
  }
  if (x.infinity) std::swap(x, y);  // normalize: x finite when possible

  const FortGroupSpec compiled = translation_to_spec(spec_);
  const PairClassReport asym =
      asym_classes(compiled, IdealSpec::cardinal_bound(kAleph0));
  auto class_of = [&](long long v) {
    if (gcd_ == 0) return 0;
    return static_cast<int>(((v % gcd_) + gcd_) % gcd_);
  };
  Stratum stratum;
  if (y.infinity) {
    stratum = Stratum{StratumKind::with_particular, class_of(x.value),
                      class_of(x.value)};
  } else {
    int a = class_of(x.value);
    int b = class_of(y.value);
    if (a > b) std::swap(a, b);
    stratum = Stratum{StratumKind::class_pair, a, b};
  }
  const StratumVerdict* verdict = asym.find(stratum);
  if (verdict == nullptr) {
    throw Error(Errc::validation_error, "pair stratum missing from report");
  }
  report.formula_asymptotic = verdict->lower;

  // Definition path: for each z in the window, {g : (x.g, y.g) ∉ α_{z}} is
  // the set of g with exactly one of x.g, y.g equal to z. Translations never
  // collide distinct points, so this is a disjoint union of kernel cosets
  // {g : <g,a> = z - x} and {g : <g,a> = z - y}; each coset is finite iff it
  // is empty or the kernel is finite.
  bool all_finite = true;
  for (long long z = -window_; z <= window_; ++z) {
    bool nonempty = false;
    bool finite = true;
    for (const FortPoint& side : {x, y}) {
      if (side.infinity) continue;
      const long long c = z - side.value;
      const bool coset_nonempty =
          (gcd_ == 0) ? (c == 0) : (c % gcd_ == 0);
      const long long hits = box_count(c);
      if (!coset_nonempty && hits != 0) {
        throw Error(Errc::validation_error,
                    "box enumeration contradicts the divisibility test");
      }
      if (kernel_finite_) {
        // Rank-one nonzero form: the unique solution is c / a when integral.
        const long long a0 = spec_.coefficients[0];
        const long long sol = coset_nonempty ? c / a0 : 0;
        if (coset_nonempty && sol >= -bound_ && sol <= bound_ && hits < 1) {
          throw Error(Errc::validation_error,
                      "box enumeration missed the unique solution");
        }
      }
      report.box_solutions += hits;
      if (coset_nonempty) {
        nonempty = true;
        if (!kernel_finite_) finite = false;
      }
    }
    if (nonempty) {
      report.window_hits += 1;
      if (!finite) all_finite = false;
    }
  }
  if (report.window_hits == 0) {
    throw Error(Errc::window_too_small,
                "no z in the window distinguishes the pair " + x.to_string() +
                    ", " + y.to_string());
  }
  report.oracle_asymptotic = all_finite;
  report.agree = (report.formula_asymptotic == report.oracle_asymptotic);
  report.note = report.agree ? "formula and definition paths agree"
                             : "formula and definition paths disagree";
  return report;
}

OracleReport windowed_definition_oracle(const TranslationActionSpec& t,
                                        FortPoint x, FortPoint y,
                                        long long window, long long bound) {
  return TranslationOracle(t, window, bound).check_pair(x, y);
}

std::vector<std::pair<FortPoint, FortPoint>> oracle_representative_pairs(
    const TranslationActionSpec& t) {
  t.validate();
  long long g = 0;
  for (long long a : t.coefficients) g = std::gcd(g, a < 0 ? -a : a);
  const long long residues = g == 0 ? 1 : g;
  std::vector<std::pair<FortPoint, FortPoint>> out;
  out.emplace_back(FortPoint::at(0), FortPoint::at(0));
  out.emplace_back(FortPoint::inf(), FortPoint::inf());
  for (long long r = 0; r < residues; ++r) {
    out.emplace_back(FortPoint::at(r), FortPoint::inf());
  }
  for (long long r = 0; r < residues; ++r) {
    for (long long q = r + 1; q < residues; ++q) {
      out.emplace_back(FortPoint::at(r), FortPoint::at(q));
    }
  }
  out.emplace_back(FortPoint::at(0), FortPoint::at(g == 0 ? 1 : g));
  return out;
}

}  // namespace chaoslab
