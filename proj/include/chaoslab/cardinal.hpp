#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace chaoslab {

/// Cardinal arithmetic restricted to what the chaoticity criteria consume:
/// exact finite values plus a ladder of aleph tiers. Aleph(0) is countable
/// infinity, higher tiers are distinct uncountable sizes. The continuum is
/// modelled as Aleph(1); every criterion in this toolkit only ever asks
/// "uncountable or not", so tiers above the ones a spec mentions never
/// change a verdict.
class Cardinal {
 public:
  static Cardinal finite(std::uint64_t n);
  static Cardinal aleph(int tier);

  bool is_finite() const { return finite_; }
  bool is_infinite() const { return !finite_; }

  /// Value of a finite cardinal; throws on infinite input.
  std::uint64_t finite_value() const;

  /// Tier of an infinite cardinal; throws on finite input.
  int aleph_tier() const;

  bool uncountable() const { return !finite_ && tier_ >= 1; }

  friend bool operator==(const Cardinal& a, const Cardinal& b) = default;
  friend std::strong_ordering operator<=>(const Cardinal& a, const Cardinal& b);

  std::string to_string() const;

  /// Accepts "aleph<k>" or a nonnegative integer literal.
  static std::optional<Cardinal> parse(const std::string& text);

 private:
  Cardinal(bool finite, std::uint64_t n, int tier)
      : finite_(finite), n_(n), tier_(tier) {}

  bool finite_{true};
  std::uint64_t n_{0};
  int tier_{0};
};

/// max(a, b) when either side is infinite, the arithmetic product otherwise.
Cardinal cardinal_product(Cardinal a, Cardinal b);

/// max(a, b) when either side is infinite, a + b otherwise.
Cardinal cardinal_sum(Cardinal a, Cardinal b);

Cardinal cardinal_max(Cardinal a, Cardinal b);

}  // namespace chaoslab
