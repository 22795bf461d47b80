#include "chaoslab/cardinal.hpp"

#include <limits>

#include "chaoslab/errors.hpp"

namespace chaoslab {

Cardinal Cardinal::finite(std::uint64_t n) { return Cardinal(true, n, 0); }

Cardinal Cardinal::aleph(int tier) {
  if (tier < 0) {
    throw Error(Errc::validation_error, "aleph tier must be nonnegative");
  }
  return Cardinal(false, 0, tier);
}

std::uint64_t Cardinal::finite_value() const {
  if (!finite_) {
    throw Error(Errc::validation_error, "infinite cardinal has no finite value");
  }
  return n_;
}

int Cardinal::aleph_tier() const {
  if (finite_) {
    throw Error(Errc::validation_error, "finite cardinal has no aleph tier");
  }
  return tier_;
}

std::strong_ordering operator<=>(const Cardinal& a, const Cardinal& b) {
  if (a.finite_ && b.finite_) return a.n_ <=> b.n_;
  if (a.finite_) return std::strong_ordering::less;
  if (b.finite_) return std::strong_ordering::greater;
  return a.tier_ <=> b.tier_;
}

std::string Cardinal::to_string() const {
  if (finite_) return std::to_string(n_);
  return "aleph" + std::to_string(tier_);
}

std::optional<Cardinal> Cardinal::parse(const std::string& text) {
  if (text.empty()) return std::nullopt;
  if (text.rfind("aleph", 0) == 0) {
    const std::string digits = text.substr(5);
    if (digits.empty()) return std::nullopt;
    int tier = 0;
    for (char c : digits) {
      if (c < '0' || c > '9') return std::nullopt;
      tier = tier * 10 + (c - '0');
      if (tier > 1000) return std::nullopt;
    }
    return aleph(tier);
  }
  std::uint64_t n = 0;
  for (char c : text) {
    if (c < '0' || c > '9') return std::nullopt;
    if (n > std::numeric_limits<std::uint64_t>::max() / 10) return std::nullopt;
    n = n * 10 + static_cast<std::uint64_t>(c - '0');
  }
  return finite(n);
}

Cardinal cardinal_product(Cardinal a, Cardinal b) {
  if (a.is_finite() && b.is_finite()) {
    const std::uint64_t x = a.finite_value();
    const std::uint64_t y = b.finite_value();
    if (x != 0 && y > std::numeric_limits<std::uint64_t>::max() / x) {
      throw Error(Errc::validation_error, "finite cardinal product overflows");
    }
    return Cardinal::finite(x * y);
  }
  // Infinite factors absorb.
  return cardinal_max(a, b);
}

Cardinal cardinal_sum(Cardinal a, Cardinal b) {
  if (a.is_finite() && b.is_finite()) {
    const std::uint64_t x = a.finite_value();
    const std::uint64_t y = b.finite_value();
    if (x > std::numeric_limits<std::uint64_t>::max() - y) {
      throw Error(Errc::validation_error, "finite cardinal sum overflows");
    }
    return Cardinal::finite(x + y);
  }
  return cardinal_max(a, b);
}

Cardinal cardinal_max(Cardinal a, Cardinal b) { return a < b ? b : a; }

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::closure_exceeds_cap: return "ClosureExceedsCap";
    case Errc::bound_exceeded: return "BoundExceeded";
    case Errc::ideal_kind_mismatch: return "IdealKindMismatch";
    case Errc::phase_too_large: return "PhaseTooLarge";
    case Errc::semigroup_too_large: return "SemigroupTooLarge";
    case Errc::not_closed: return "NotClosed";
    case Errc::not_invariant: return "NotInvariant";
    case Errc::not_equivalence: return "NotEquivalence";
    case Errc::not_equivariant: return "NotEquivariant";
    case Errc::not_generating: return "NotGenerating";
    case Errc::hypothesis_violated: return "HypothesisViolated";
    case Errc::particular_point_in_d: return "ParticularPointInD";
    case Errc::non_abelian: return "NonAbelian";
    case Errc::cardinal_order_violated: return "CardinalOrderViolated";
    case Errc::window_too_small: return "WindowTooSmall";
    case Errc::unknown_suite: return "UnknownSuite";
    case Errc::unsupported_command: return "UnsupportedCommandForKind";
    case Errc::parse_error: return "ParseError";
    case Errc::validation_error: return "ValidationError";
  }
  return "Error";
}

}  // namespace chaoslab
