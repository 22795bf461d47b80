#include <algorithm>
#include <vector>

#include "doctest.h"

#include "chaoslab/cardinal.hpp"
#include "chaoslab/errors.hpp"
#include "chaoslab/ideal.hpp"
#include "chaoslab/semigroup.hpp"

using namespace chaoslab;

TEST_CASE("cardinal order and arithmetic") {
  const Cardinal two = Cardinal::finite(2);
  const Cardinal three = Cardinal::finite(3);
  const Cardinal a0 = Cardinal::aleph(0);
  const Cardinal a1 = Cardinal::aleph(1);

  CHECK(cardinal_product(two, three) == Cardinal::finite(6));
  CHECK(cardinal_product(three, a0) == a0);  // absorption
  CHECK(a0 < a1);
  CHECK(two < a0);
  CHECK(Cardinal::finite(2) < Cardinal::finite(3));
  CHECK(cardinal_sum(a0, a1) == a1);
  CHECK(cardinal_sum(two, three) == Cardinal::finite(5));
  CHECK(a1.uncountable());
  CHECK_FALSE(a0.uncountable());

  CHECK(Cardinal::parse("aleph1") == a1);
  CHECK(Cardinal::parse("42") == Cardinal::finite(42));
  CHECK_FALSE(Cardinal::parse("aleph").has_value());
  CHECK_FALSE(Cardinal::parse("-3").has_value());
  CHECK(a0.to_string() == "aleph0");
  CHECK(two.to_string() == "2");
}

TEST_CASE("cardinal laws over the small tier grid") {
  std::vector<Cardinal> grid;
  for (int n = 0; n <= 5; ++n) grid.push_back(Cardinal::finite(n));
  for (int k = 0; k <= 3; ++k) grid.push_back(Cardinal::aleph(k));

  for (const Cardinal& a : grid) {
    for (const Cardinal& b : grid) {
      CHECK(cardinal_product(a, b) == cardinal_product(b, a));
      // total order
      const bool lt = a < b, gt = b < a, eq = a == b;
      CHECK((lt ? 1 : 0) + (gt ? 1 : 0) + (eq ? 1 : 0) == 1);
      if (a.is_infinite() || b.is_infinite()) {
        CHECK(cardinal_product(a, b) == cardinal_max(a, b));
      }
      for (const Cardinal& c : grid) {
        CHECK(cardinal_product(cardinal_product(a, b), c) ==
              cardinal_product(a, cardinal_product(b, c)));
      }
    }
  }
}

TEST_CASE("semigroup from a full table is validated") {
  // Two-element monoid {e, m} with m idempotent.
  const FiniteSemigroup s = FiniteSemigroup::from_table({{0, 1}, {1, 1}}, 0);
  CHECK(s.size() == 2);
  CHECK(s.compose(1, 1) == 1);
  CHECK_FALSE(s.is_group());
  CHECK(s.is_abelian());

  CHECK_THROWS_AS(FiniteSemigroup::from_table({{0, 1}, {0, 0}}, 0), Error);
  // Broken associativity: left-zero vs table mix.
  CHECK_THROWS_AS(FiniteSemigroup::from_table({{0, 1}, {1, 0}}, 1), Error);
}

TEST_CASE("generated semigroups match the hand closures") {
  // Identity alone.
  const GeneratedSemigroup id = semigroup_from_generators({{0, 1, 2}});
  CHECK(id.semigroup.size() == 1);
  CHECK(id.semigroup.is_group());

  // Idempotent collapse m(0)=0, m(1)=0, m(2)=2: closure {e, m}.
  const GeneratedSemigroup m = semigroup_from_generators({{0, 0, 2}});
  CHECK(m.semigroup.size() == 2);
  CHECK(m.semigroup.compose(1, 1) == 1);
  CHECK_FALSE(m.semigroup.is_group());

  // A 3-cycle generates the cyclic group of order 3.
  const GeneratedSemigroup c3 = semigroup_from_generators({{1, 2, 0}});
  CHECK(c3.semigroup.size() == 3);
  CHECK(c3.semigroup.is_group());
  CHECK(c3.semigroup.is_abelian());

  // Two transpositions-ish generators on 3 points give all of S3.
  const GeneratedSemigroup s3 =
      semigroup_from_generators({{1, 0, 2}, {1, 2, 0}});
  CHECK(s3.semigroup.size() == 6);
  CHECK(s3.semigroup.is_group());
  CHECK_FALSE(s3.semigroup.is_abelian());

  CHECK_THROWS_AS(semigroup_from_generators({{1, 2, 0}}, 2), Error);
  try {
    semigroup_from_generators({{1, 2, 0}}, 2);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::closure_exceeds_cap);
  }
}

TEST_CASE("generated semigroups satisfy the axioms exhaustively") {
  const GeneratedSemigroup g = semigroup_from_generators({{1, 0, 2}, {0, 0, 1}});
  const FiniteSemigroup& s = g.semigroup;
  const int e = s.identity();
  for (int a = 0; a < s.size(); ++a) {
    CHECK(s.compose(e, a) == a);
    CHECK(s.compose(a, e) == a);
    for (int b = 0; b < s.size(); ++b) {
      for (int c = 0; c < s.size(); ++c) {
        CHECK(s.compose(s.compose(a, b), c) == s.compose(a, s.compose(b, c)));
      }
    }
  }
}

TEST_CASE("ideal membership") {
  const IdealSpec pe = IdealSpec::finite_carrier({0});
  CHECK(pe.contains_set(std::vector<int>{}));  // empty set in every ideal
  CHECK(pe.contains_set(std::vector<int>{0}));
  CHECK_FALSE(pe.contains_set(std::vector<int>{0, 1}));

  const IdealSpec pfin = IdealSpec::cardinal_bound(Cardinal::aleph(0));
  CHECK_FALSE(pfin.contains_size(Cardinal::aleph(0)));
  CHECK(pfin.contains_size(Cardinal::finite(1000000)));

  const IdealSpec pcount = IdealSpec::cardinal_bound(Cardinal::aleph(1));
  CHECK(pcount.contains_size(Cardinal::aleph(0)));
  CHECK_FALSE(pcount.contains_size(Cardinal::aleph(1)));

  CHECK(IdealSpec::full().contains_size(Cardinal::aleph(7)));
  CHECK(IdealSpec::full().contains_set(std::vector<int>{1, 2, 3}));

  CHECK_THROWS_AS(IdealSpec::cardinal_bound(Cardinal::finite(5)), Error);
  CHECK_THROWS_AS(pe.contains_size(Cardinal::finite(1)), Error);
}

TEST_CASE("ideal membership is monotone under subsets") {
  const IdealSpec ideal = IdealSpec::finite_carrier({0, 2, 3});
  const std::vector<int> big{0, 2};
  const std::vector<int> small{2};
  CHECK(ideal.contains_set(big));
  CHECK(ideal.contains_set(small));
  // any subset of a member stays inside
  for (unsigned mask = 0; mask < 4; ++mask) {
    std::vector<int> sub;
    if (mask & 1) sub.push_back(0);
    if (mask & 2) sub.push_back(2);
    CHECK(ideal.contains_set(sub));
  }
}

TEST_CASE("invariant ideals") {
  const FiniteSemigroup s = FiniteSemigroup::from_table({{0, 1}, {1, 1}}, 0);
  CHECK(is_invariant_ideal(IdealSpec::finite_carrier({}), s));
  // {e}.m = {m} leaves the carrier.
  CHECK_FALSE(is_invariant_ideal(IdealSpec::finite_carrier({0}), s));
  CHECK(is_invariant_ideal(IdealSpec::finite_carrier({1}), s));
}

TEST_CASE("ideal enumeration counts and the powerset flag") {
  const FiniteSemigroup one = FiniteSemigroup::trivial();
  CHECK(enumerate_ideals(one).size() == 2);

  const FiniteSemigroup two = FiniteSemigroup::from_table({{0, 1}, {1, 1}}, 0);
  const auto ideals = enumerate_ideals(two);
  CHECK(ideals.size() == 4);
  int full_count = 0;
  for (const IdealSpec& ideal : ideals) {
    if (ideal.is_powerset_of(2)) ++full_count;
  }
  CHECK(full_count == 1);

  const GeneratedSemigroup c3 = semigroup_from_generators({{1, 2, 0}});
  CHECK(enumerate_ideals(c3.semigroup).size() == 8);

  const GeneratedSemigroup s3 =
      semigroup_from_generators({{1, 0, 2}, {1, 2, 0}});
  CHECK_THROWS_AS(enumerate_ideals(s3.semigroup, 5), Error);
}

// On a finite set, a family containing the empty set and closed under
// subsets and binary unions is exactly the powerset of its union. Checked
// by enumerating every family over universes of up to 4 elements.
TEST_CASE("subset-and-union-closed families are powersets of their union") {
  for (int k = 0; k <= 4; ++k) {
    const unsigned subsets = 1u << k;
    long long valid = 0;
    for (unsigned long long family = 0; family < (1ull << subsets); ++family) {
      if (!(family & 1ull)) continue;  // must contain the empty set
      bool closed = true;
      for (unsigned a = 0; a < subsets && closed; ++a) {
        if (!(family >> a & 1ull)) continue;
        // downward closure: enumerate proper submasks
        for (unsigned sub = a; sub; sub = (sub - 1) & a) {
          if (!(family >> sub & 1ull)) {
            closed = false;
            break;
          }
        }
        for (unsigned b = a; b < subsets && closed; ++b) {
          if ((family >> b & 1ull) && !(family >> (a | b) & 1ull)) {
            closed = false;
          }
        }
      }
      if (!closed) continue;
      ++valid;
      unsigned u = 0;
      for (unsigned a = 0; a < subsets; ++a) {
        if (family >> a & 1ull) u |= a;
      }
      // family must be exactly the powerset of u
      bool is_powerset = true;
      for (unsigned a = 0; a < subsets; ++a) {
        const bool member = (family >> a & 1ull) != 0;
        const bool should = (a & ~u) == 0;
        if (member != should) {
          is_powerset = false;
          break;
        }
      }
      CHECK(is_powerset);
    }
    CHECK(valid == (1 << k));  // one family per carrier
  }
}
