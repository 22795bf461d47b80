#include "chaoslab/finite_engine.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

#include "chaoslab/errors.hpp"
#include "chaoslab/max_clique.hpp"

namespace chaoslab {

FiniteSemigroup make_semigroup_unchecked(int size, std::vector<int> table,
                                         int identity);

namespace {

std::string pair_str(int x, int y) {
  return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
}

std::vector<char> carrier_bitmap(const IdealSpec& ideal,
                                 const FiniteSemigroup& s) {
  std::vector<char> in(s.size(), 0);
  for (int a : ideal.carrier()) {
    if (a >= s.size()) {
      throw Error(Errc::validation_error, "carrier element outside semigroup");
    }
    in[a] = 1;
  }
  return in;
}

}  // namespace

// ---------------------------------------------------------------------------
// FiniteAction

void FiniteAction::validate() const {
  const int n = semigroup_.size();
  const int e = semigroup_.identity();
  for (int x = 0; x < phase_size_; ++x) {
    if (act(x, e) != x) {
      throw Error(Errc::validation_error,
                  "identity must act trivially, fails at point " +
                      std::to_string(x));
    }
    for (int s = 0; s < n; ++s) {
      for (int t = 0; t < n; ++t) {
        if (act(x, semigroup_.compose(s, t)) != act(act(x, s), t)) {
          throw Error(Errc::validation_error,
                      "action law x.(st) = (x.s).t fails at point " +
                          std::to_string(x) + ", elements " + pair_str(s, t));
        }
      }
    }
  }
}

FiniteAction FiniteAction::from_table(FiniteSemigroup semigroup,
                                      const std::vector<std::vector<int>>& rows) {
  FiniteAction a;
  a.phase_size_ = static_cast<int>(rows.size());
  if (a.phase_size_ == 0) {
    throw Error(Errc::validation_error, "phase set must be nonempty");
  }
  const int n = semigroup.size();
  a.semigroup_ = std::move(semigroup);
  a.table_.reserve(static_cast<size_t>(a.phase_size_) * n);
  for (int x = 0; x < a.phase_size_; ++x) {
    if (static_cast<int>(rows[x].size()) != n) {
      throw Error(Errc::validation_error,
                  "act row " + std::to_string(x) + " has wrong length");
    }
    for (int s = 0; s < n; ++s) {
      if (rows[x][s] < 0 || rows[x][s] >= a.phase_size_) {
        throw Error(Errc::validation_error,
                    "act entry out of range at point " + std::to_string(x));
      }
      a.table_.push_back(rows[x][s]);
    }
  }
  a.validate();
  return a;
}

FiniteAction FiniteAction::natural(const GeneratedSemigroup& generated) {
  const int m = static_cast<int>(generated.element_maps.at(0).size());
  const int n = generated.semigroup.size();
  std::vector<std::vector<int>> rows(m, std::vector<int>(n));
  for (int x = 0; x < m; ++x) {
    for (int s = 0; s < n; ++s) rows[x][s] = generated.element_maps[s][x];
  }
  return from_table(generated.semigroup, rows);
}

FiniteAction FiniteAction::trivial(FiniteSemigroup semigroup, int phase_size) {
  std::vector<std::vector<int>> rows(
      phase_size, std::vector<int>(semigroup.size()));
  for (int x = 0; x < phase_size; ++x) {
    std::fill(rows[x].begin(), rows[x].end(), x);
  }
  return from_table(std::move(semigroup), rows);
}

std::vector<std::vector<int>> FiniteAction::act_rows() const {
  std::vector<std::vector<int>> rows(phase_size_);
  const int n = semigroup_.size();
  for (int x = 0; x < phase_size_; ++x) {
    rows[x].assign(table_.begin() + static_cast<size_t>(x) * n,
                   table_.begin() + static_cast<size_t>(x + 1) * n);
  }
  return rows;
}

void ActionHomomorphism::validate() const {
  if (!(source.semigroup() == target.semigroup())) {
    throw Error(Errc::validation_error,
                "homomorphism endpoints use different semigroups");
  }
  if (static_cast<int>(map.size()) != source.phase_size()) {
    throw Error(Errc::validation_error, "homomorphism map has wrong length");
  }
  for (int v : map) {
    if (v < 0 || v >= target.phase_size()) {
      throw Error(Errc::validation_error, "homomorphism value out of range");
    }
  }
  for (int x = 0; x < source.phase_size(); ++x) {
    for (int s = 0; s < source.semigroup().size(); ++s) {
      if (map[source.act(x, s)] != target.act(map[x], s)) {
        throw Error(Errc::not_equivariant,
                    "map(x.s) != map(x).s at point " + std::to_string(x) +
                        ", element " + std::to_string(s));
      }
    }
  }
}

InvariantRelation InvariantRelation::over(const FiniteAction& action,
                                          PairRelation pairs) {
  if (pairs.base_size() != action.phase_size()) {
    throw Error(Errc::validation_error,
                "relation base does not match the phase set");
  }
  if (!pairs.is_equivalence()) {
    throw Error(Errc::not_equivalence,
                "relation is not reflexive-symmetric-transitive");
  }
  for (auto [x, y] : pairs.pairs()) {
    for (int s = 0; s < action.semigroup().size(); ++s) {
      if (!pairs.at(action.act(x, s), action.act(y, s))) {
        throw Error(Errc::not_invariant,
                    "relation not invariant: " + pair_str(x, y) +
                        " under element " + std::to_string(s));
      }
    }
  }
  return InvariantRelation{std::move(pairs)};
}

// ---------------------------------------------------------------------------
// Core relations

PairRelation prox_pairs(const FiniteAction& action) {
  const int m = action.phase_size();
  const int n = action.semigroup().size();
  PairRelation rel(m);
  for (int x = 0; x < m; ++x) {
    rel.set(x, x);
    for (int y = x + 1; y < m; ++y) {
      for (int s = 0; s < n; ++s) {
        if (action.act(x, s) == action.act(y, s)) {
          rel.set(x, y);
          rel.set(y, x);
          break;
        }
      }
    }
  }
  return rel;
}

PairRelation asym_pairs(const FiniteAction& action, const IdealSpec& ideal) {
  const int m = action.phase_size();
  const int n = action.semigroup().size();
  switch (ideal.kind()) {
    case IdealSpec::Kind::full:
      return PairRelation::complete(m);
    case IdealSpec::Kind::cardinal_bound:
      throw Error(Errc::ideal_kind_mismatch,
                  "cardinal-bound ideals are not meaningful on a finite "
                  "semigroup; use a finite carrier or full");
    case IdealSpec::Kind::finite_carrier:
      break;
  }
  const std::vector<char> in = carrier_bitmap(ideal, action.semigroup());
  PairRelation rel(m);
  for (int x = 0; x < m; ++x) {
    rel.set(x, x);
    for (int y = x + 1; y < m; ++y) {
      bool asym = true;
      for (int s = 0; s < n; ++s) {
        if (action.act(x, s) != action.act(y, s) && !in[s]) {
          asym = false;
          break;
        }
      }
      if (asym) {
        rel.set(x, y);
        rel.set(y, x);
      }
    }
  }
  return rel;
}

PairRelation scrambled_pairs(const FiniteAction& action,
                             const IdealSpec& ideal) {
  PairRelation rel = prox_pairs(action);
  rel.subtract(asym_pairs(action, ideal));
  rel.remove_diagonal();
  return rel;
}

std::vector<int> max_scrambled_set(const FiniteAction& action,
                                   const IdealSpec& ideal) {
  const int m = action.phase_size();
  if (m > kMaxExactCliquePhase) {
    throw Error(Errc::phase_too_large,
                "exact scrambled-set search is limited to " +
                    std::to_string(kMaxExactCliquePhase) + " phase points");
  }
  const PairRelation scrambled = scrambled_pairs(action, ideal);
  if (!scrambled.is_symmetric()) {
    throw Error(Errc::validation_error, "scrambled relation must be symmetric");
  }
  if (scrambled.empty()) return {};
  std::vector<std::uint64_t> adjacency(m, 0);
  for (auto [x, y] : scrambled.pairs()) {
    adjacency[x] |= (std::uint64_t{1} << y);
  }
  return max_clique(adjacency);
}

ChaosVerdict is_li_yorke_chaotic_mod(const FiniteAction& action,
                                     const IdealSpec& ideal) {
  ChaosVerdict verdict;
  verdict.max_scrambled = max_scrambled_set(action, ideal);
  if (verdict.max_scrambled.empty()) {
    verdict.witness =
        "no scrambled pair; a finite phase space is never Li-Yorke chaotic";
  } else {
    verdict.witness =
        "max scrambled set has " +
        std::to_string(verdict.max_scrambled.size()) +
        " elements; a finite phase is countable, so an uncountable "
        "scrambled subset cannot exist";
  }
  return verdict;
}

// ---------------------------------------------------------------------------
// Products

int encode_index(const std::vector<int>& dims, const std::vector<int>& coords) {
  int idx = 0;
  for (size_t i = 0; i < dims.size(); ++i) idx = idx * dims[i] + coords[i];
  return idx;
}

std::vector<int> decode_index(const std::vector<int>& dims, int index) {
  std::vector<int> coords(dims.size());
  for (size_t i = dims.size(); i-- > 0;) {
    coords[i] = index % dims[i];
    index /= dims[i];
  }
  return coords;
}

namespace {

int checked_product(const std::vector<int>& dims, int cap, Errc errc,
                    const char* what) {
  long long total = 1;
  for (int d : dims) {
    total *= d;
    if (total > cap) {
      throw Error(errc, std::string(what) + " exceeds cap " +
                            std::to_string(cap));
    }
  }
  return static_cast<int>(total);
}

}  // namespace

ProductAction product_action(const std::vector<FiniteAction>& factors,
                             int phase_cap) {
  if (factors.empty()) {
    throw Error(Errc::validation_error, "product needs at least one factor");
  }
  const FiniteSemigroup& s = factors[0].semigroup();
  for (const auto& f : factors) {
    if (!(f.semigroup() == s)) {
      throw Error(Errc::validation_error,
                  "product factors must share one semigroup");
    }
  }
  std::vector<int> dims;
  for (const auto& f : factors) dims.push_back(f.phase_size());
  const int m = checked_product(dims, phase_cap, Errc::phase_too_large,
                                "product phase");
  const int n = s.size();
  std::vector<std::vector<int>> rows(m, std::vector<int>(n));
  for (int p = 0; p < m; ++p) {
    const std::vector<int> coords = decode_index(dims, p);
    std::vector<int> image(coords.size());
    for (int t = 0; t < n; ++t) {
      for (size_t i = 0; i < factors.size(); ++i) {
        image[i] = factors[i].act(coords[i], t);
      }
      rows[p][t] = encode_index(dims, image);
    }
  }
  return ProductAction{FiniteAction::from_table(s, rows), dims};
}

MixedProductAction product_action_mixed(
    const std::vector<std::pair<FiniteAction, IdealSpec>>& factors,
    int phase_cap, int semigroup_cap) {
  if (factors.empty()) {
    throw Error(Errc::validation_error, "product needs at least one factor");
  }
  for (const auto& [action, ideal] : factors) {
    if (ideal.kind() == IdealSpec::Kind::cardinal_bound) {
      throw Error(Errc::ideal_kind_mismatch,
                  "mixed products take finite-carrier or full factor ideals");
    }
  }
  std::vector<int> phase_dims, sg_dims;
  for (const auto& [action, ideal] : factors) {
    phase_dims.push_back(action.phase_size());
    sg_dims.push_back(action.semigroup().size());
  }
  const int m = checked_product(phase_dims, phase_cap, Errc::phase_too_large,
                                "product phase");
  const int n = checked_product(sg_dims, semigroup_cap,
                                Errc::semigroup_too_large, "product semigroup");

  // Componentwise composition; associativity is inherited from the factors.
  std::vector<int> table(static_cast<size_t>(n) * n);
  for (int u = 0; u < n; ++u) {
    const std::vector<int> us = decode_index(sg_dims, u);
    for (int v = 0; v < n; ++v) {
      const std::vector<int> vs = decode_index(sg_dims, v);
      std::vector<int> w(us.size());
      for (size_t i = 0; i < factors.size(); ++i) {
        w[i] = factors[i].first.semigroup().compose(us[i], vs[i]);
      }
      table[static_cast<size_t>(u) * n + v] = encode_index(sg_dims, w);
    }
  }
  std::vector<int> ident(factors.size());
  for (size_t i = 0; i < factors.size(); ++i) {
    ident[i] = factors[i].first.semigroup().identity();
  }
  FiniteSemigroup product_sg = make_semigroup_unchecked(
      n, std::move(table), encode_index(sg_dims, ident));

  std::vector<std::vector<int>> rows(m, std::vector<int>(n));
  for (int p = 0; p < m; ++p) {
    const std::vector<int> coords = decode_index(phase_dims, p);
    std::vector<int> image(coords.size());
    for (int t = 0; t < n; ++t) {
      const std::vector<int> ts = decode_index(sg_dims, t);
      for (size_t i = 0; i < factors.size(); ++i) {
        image[i] = factors[i].first.act(coords[i], ts[i]);
      }
      rows[p][t] = encode_index(phase_dims, image);
    }
  }
  FiniteAction product = FiniteAction::from_table(product_sg, rows);

  // Ideal generated by the cylinders H_b(carrier_b): its carrier is their
  // union, since finite ideals are powersets of their union.
  std::vector<char> in_carrier(n, 0);
  for (int t = 0; t < n; ++t) {
    const std::vector<int> ts = decode_index(sg_dims, t);
    for (size_t i = 0; i < factors.size(); ++i) {
      const IdealSpec& ideal = factors[i].second;
      const bool member =
          ideal.kind() == IdealSpec::Kind::full ||
          std::binary_search(ideal.carrier().begin(), ideal.carrier().end(),
                             ts[i]);
      if (member) {
        in_carrier[t] = 1;
        break;
      }
    }
  }
  std::vector<int> carrier;
  for (int t = 0; t < n; ++t) {
    if (in_carrier[t]) carrier.push_back(t);
  }
  IdealSpec product_ideal = static_cast<int>(carrier.size()) == n
                                ? IdealSpec::full()
                                : IdealSpec::finite_carrier(std::move(carrier));
  return MixedProductAction{std::move(product), std::move(product_ideal),
                            std::move(phase_dims), std::move(sg_dims)};
}

CheckReport mixed_product_asym_check(
    const std::vector<std::pair<FiniteAction, IdealSpec>>& factors) {
  const MixedProductAction product = product_action_mixed(factors);
  const PairRelation lhs = asym_pairs(product.action, product.ideal);

  std::vector<PairRelation> factor_asym;
  factor_asym.reserve(factors.size());
  for (const auto& [action, ideal] : factors) {
    factor_asym.push_back(asym_pairs(action, ideal));
  }
  const int m = product.action.phase_size();
  PairRelation rhs(m);
  for (int p = 0; p < m; ++p) {
    const std::vector<int> pc = decode_index(product.phase_dims, p);
    for (int q = 0; q < m; ++q) {
      const std::vector<int> qc = decode_index(product.phase_dims, q);
      bool all = true;
      for (size_t i = 0; i < factors.size(); ++i) {
        if (!factor_asym[i].at(pc[i], qc[i])) {
          all = false;
          break;
        }
      }
      if (all) rhs.set(p, q);
    }
  }
  CheckReport report;
  if (auto diff = lhs.first_difference(rhs)) {
    report.holds = false;
    report.counterexample =
        "product pair " + pair_str(diff->first, diff->second) +
        (lhs.at(diff->first, diff->second)
             ? " asymptotic in the product but not componentwise"
             : " componentwise asymptotic but not in the product");
  }
  return report;
}

// ---------------------------------------------------------------------------
// Subsemigroups, quotients, classes

SubsemigroupRestriction restrict_to_subsemigroup(const FiniteAction& action,
                                                 std::vector<int> elements) {
  const FiniteSemigroup& s = action.semigroup();
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()),
                 elements.end());
  if (elements.empty()) {
    throw Error(Errc::validation_error, "subsemigroup must be nonempty");
  }
  for (int t : elements) {
    if (t < 0 || t >= s.size()) {
      throw Error(Errc::validation_error, "element index out of range");
    }
  }
  for (int a : elements) {
    for (int b : elements) {
      if (!std::binary_search(elements.begin(), elements.end(),
                              s.compose(a, b))) {
        throw Error(Errc::not_closed,
                    "subset not closed under composition at " +
                        pair_str(a, b));
      }
    }
  }
  bool adjoined = false;
  if (!std::binary_search(elements.begin(), elements.end(), s.identity())) {
    // Transformation semigroups here always carry identities; adjoin it and
    // say so in the result.
    elements.insert(std::lower_bound(elements.begin(), elements.end(),
                                     s.identity()),
                    s.identity());
    adjoined = true;
  }
  const int k = static_cast<int>(elements.size());
  std::vector<int> local_of(s.size(), -1);
  for (int i = 0; i < k; ++i) local_of[elements[i]] = i;

  std::vector<int> table(static_cast<size_t>(k) * k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      table[static_cast<size_t>(i) * k + j] =
          local_of[s.compose(elements[i], elements[j])];
    }
  }
  FiniteSemigroup sub = make_semigroup_unchecked(
      k, std::move(table), local_of[s.identity()]);

  std::vector<std::vector<int>> rows(action.phase_size(),
                                     std::vector<int>(k));
  for (int x = 0; x < action.phase_size(); ++x) {
    for (int i = 0; i < k; ++i) rows[x][i] = action.act(x, elements[i]);
  }
  return SubsemigroupRestriction{FiniteAction::from_table(std::move(sub), rows),
                                 std::move(elements), adjoined};
}

std::vector<int> restrict_carrier(const std::vector<int>& carrier,
                                  const SubsemigroupRestriction& restriction) {
  std::vector<int> local;
  for (size_t i = 0; i < restriction.parent_element.size(); ++i) {
    if (std::find(carrier.begin(), carrier.end(),
                  restriction.parent_element[i]) != carrier.end()) {
      local.push_back(static_cast<int>(i));
    }
  }
  return local;
}

QuotientAction quotient_action(const FiniteAction& action,
                               const InvariantRelation& relation) {
  // Revalidate against this action; the relation may have been built
  // elsewhere.
  const InvariantRelation checked =
      InvariantRelation::over(action, relation.pairs);
  const int m = action.phase_size();
  std::vector<int> class_of(m, -1);
  std::vector<std::vector<int>> classes;
  for (int x = 0; x < m; ++x) {
    if (class_of[x] >= 0) continue;
    const int c = static_cast<int>(classes.size());
    std::vector<int> members;
    for (int y = x; y < m; ++y) {
      if (checked.pairs.at(x, y)) {
        class_of[y] = c;
        members.push_back(y);
      }
    }
    classes.push_back(std::move(members));
  }
  const int n = action.semigroup().size();
  std::vector<std::vector<int>> rows(classes.size(), std::vector<int>(n));
  for (size_t c = 0; c < classes.size(); ++c) {
    for (int s = 0; s < n; ++s) {
      const int image = class_of[action.act(classes[c][0], s)];
      for (int member : classes[c]) {
        if (class_of[action.act(member, s)] != image) {
          throw Error(Errc::not_invariant,
                      "quotient action ill-defined on class " +
                          std::to_string(c));
        }
      }
      rows[c][s] = image;
    }
  }
  FiniteAction quotient = FiniteAction::from_table(action.semigroup(), rows);
  ActionHomomorphism projection{action, quotient, class_of};
  projection.validate();
  return QuotientAction{std::move(quotient), std::move(class_of),
                        std::move(classes), std::move(projection)};
}

std::vector<std::vector<int>> asym_equivalence_classes(
    const FiniteAction& action, const IdealSpec& ideal) {
  const PairRelation rel = asym_pairs(action, ideal);
  if (!rel.is_equivalence()) {
    throw Error(Errc::not_equivalence,
                "asymptotic relation failed the equivalence laws; this "
                "signals an implementation bug");
  }
  const int m = action.phase_size();
  std::vector<char> seen(m, 0);
  std::vector<std::vector<int>> classes;
  for (int x = 0; x < m; ++x) {
    if (seen[x]) continue;
    std::vector<int> members;
    for (int y = x; y < m; ++y) {
      if (rel.at(x, y)) {
        seen[y] = 1;
        members.push_back(y);
      }
    }
    classes.push_back(std::move(members));
  }
  return classes;
}

CheckReport prox_union_asym_check(const FiniteAction& action, int bound) {
  const int n = action.semigroup().size();
  if (n < 2) {
    throw Error(Errc::hypothesis_violated,
                "the union identity assumes card(S) >= 2");
  }
  const std::vector<IdealSpec> ideals = enumerate_ideals(action.semigroup(),
                                                         bound);
  PairRelation union_asym(action.phase_size());
  for (const IdealSpec& ideal : ideals) {
    if (ideal.is_powerset_of(n)) continue;  // proper ideals only
    union_asym |= asym_pairs(action, ideal);
  }
  const PairRelation prox = prox_pairs(action);
  CheckReport report;
  if (auto diff = prox.first_difference(union_asym)) {
    report.holds = false;
    report.counterexample =
        "pair " + pair_str(diff->first, diff->second) +
        (prox.at(diff->first, diff->second)
             ? " proximal but in no proper-ideal Asym"
             : " asymptotic mod a proper ideal but not proximal");
  }
  return report;
}

CheckReport homomorphism_image_check(const ActionHomomorphism& hom,
                                     const IdealSpec& ideal) {
  hom.validate();
  const PairRelation src_asym = asym_pairs(hom.source, ideal);
  const PairRelation tgt_asym = asym_pairs(hom.target, ideal);
  const PairRelation src_prox = prox_pairs(hom.source);
  const PairRelation tgt_prox = prox_pairs(hom.target);
  CheckReport report;
  for (auto [x, y] : src_asym.pairs()) {
    if (!tgt_asym.at(hom.map[x], hom.map[y])) {
      report.holds = false;
      report.counterexample = "image of asymptotic pair " + pair_str(x, y) +
                              " is not asymptotic";
      return report;
    }
  }
  for (auto [x, y] : src_prox.pairs()) {
    if (!tgt_prox.at(hom.map[x], hom.map[y])) {
      report.holds = false;
      report.counterexample =
          "image of proximal pair " + pair_str(x, y) + " is not proximal";
      return report;
    }
  }
  return report;
}

CoDecomposition co_decompose(const FiniteAction& action,
                             const std::vector<std::vector<int>>& parts) {
  if (parts.empty()) {
    throw Error(Errc::validation_error, "need at least one part");
  }
  const FiniteSemigroup& s = action.semigroup();
  std::vector<int> all;
  for (const auto& part : parts) {
    all.insert(all.end(), part.begin(), part.end());
  }
  if (static_cast<int>(s.closure(all).size()) != s.size()) {
    throw Error(Errc::not_generating,
                "the parts together do not generate the semigroup");
  }
  CoDecomposition out;
  std::vector<std::vector<int>> generated;
  for (const auto& part : parts) {
    std::vector<int> sub = s.closure(part);
    out.factors.push_back(restrict_to_subsemigroup(action, sub));
    generated.push_back(std::move(sub));
  }
  out.commuting = true;
  for (size_t i = 0; i < generated.size() && out.commuting; ++i) {
    for (size_t j = i + 1; j < generated.size() && out.commuting; ++j) {
      for (int a : generated[i]) {
        for (int b : generated[j]) {
          for (int x = 0; x < action.phase_size(); ++x) {
            if (action.act(action.act(x, a), b) !=
                action.act(action.act(x, b), a)) {
              out.commuting = false;
              break;
            }
          }
          if (!out.commuting) break;
        }
        if (!out.commuting) break;
      }
    }
  }
  return out;
}

CheckReport co_decompose_scrambled_check(const FiniteAction& action,
                                         const CoDecomposition& decomposition,
                                         const IdealSpec& ideal) {
  CheckReport report;
  for (size_t i = 0; i < decomposition.factors.size(); ++i) {
    const SubsemigroupRestriction& factor = decomposition.factors[i];
    IdealSpec factor_ideal = IdealSpec::full();
    IdealSpec ambient_ideal = IdealSpec::full();
    if (ideal.kind() == IdealSpec::Kind::finite_carrier) {
      // An ideal on T doubles as an ideal on S, so both sides use the
      // carrier cut down to the factor.
      factor_ideal =
          IdealSpec::finite_carrier(restrict_carrier(ideal.carrier(), factor));
      std::vector<int> ambient_carrier;
      for (int t : ideal.carrier()) {
        if (std::find(factor.parent_element.begin(),
                      factor.parent_element.end(),
                      t) != factor.parent_element.end()) {
          ambient_carrier.push_back(t);
        }
      }
      ambient_ideal = IdealSpec::finite_carrier(std::move(ambient_carrier));
    }
    const PairRelation factor_scrambled =
        scrambled_pairs(factor.action, factor_ideal);
    const PairRelation ambient_scrambled = scrambled_pairs(action, ambient_ideal);
    if (!factor_scrambled.subset_of(ambient_scrambled)) {
      const auto pairs = factor_scrambled.pairs();
      for (auto [x, y] : pairs) {
        if (!ambient_scrambled.at(x, y)) {
          report.holds = false;
          report.counterexample = "factor " + std::to_string(i) +
                                  " scrambles " + pair_str(x, y) +
                                  " but the ambient action does not";
          return report;
        }
      }
    }
  }
  return report;
}

}  // namespace chaoslab
