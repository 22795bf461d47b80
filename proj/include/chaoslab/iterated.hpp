#pragma once

#include <boost/rational.hpp>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace chaoslab {

/// Exact rational distances; no floating point anywhere near a liminf.
using Rational = boost::rational<long long>;

/// A classical dynamical system (X, f) on a finite phase set, viewed as the
/// transformation semigroup (X, N∪{0}) with x.n = f^n(x). The metric is an
/// exact rational matrix, validated against the metric axioms.
class IteratedSystem {
 public:
  /// d(x,y) = 1 off the diagonal.
  static IteratedSystem discrete(std::vector<int> step);

  static IteratedSystem with_metric(std::vector<int> step,
                                    std::vector<std::vector<Rational>> metric);

  int phase_size() const { return phase_size_; }
  int apply(int x) const { return step_[x]; }
  const std::vector<int>& step() const { return step_; }
  Rational dist(int x, int y) const {
    return metric_[static_cast<size_t>(x) * phase_size_ + y];
  }
  bool discrete_metric() const { return discrete_; }

 private:
  IteratedSystem() = default;

  int phase_size_{0};
  std::vector<int> step_;
  std::vector<Rational> metric_;
  bool discrete_{true};
};

/// Exact split of the orbit of (x, y) under (u,v) -> (f u, f v) into the
/// aperiodic prefix and the loop. tail + cycle replay the orbit.
struct PairTrajectory {
  std::vector<std::pair<int, int>> tail;
  std::vector<std::pair<int, int>> cycle;
};

/// An increasing sequence of finite subsets F_1 ⊆ F_2 ⊆ ... of N∪{0},
/// described by the bound n -> max(F_n) and a membership rule.
struct ExhaustionFamily {
  std::string name;
  std::function<long long(int)> max_element;        // n >= 1
  std::function<bool(int, long long)> contains;     // (n, s) -> s ∈ F_n

  /// F_n = {0..n}.
  static ExhaustionFamily initial_segments();
  /// F_n = {0..k*n}.
  static ExhaustionFamily strided(int k);
  /// F_n = even numbers up to 2n.
  static ExhaustionFamily evens();

  /// Spot-checks F_n ⊆ F_{n+1} and max consistency for n up to `horizon`.
  void validate(int horizon = 16) const;
};

PairTrajectory pair_trajectory(const IteratedSystem& sys, int x, int y);

/// liminf d(f^n x, f^n y) = 0. Deterministic maps make "equal once" absorb,
/// so this is "some reached pair-state is diagonal".
bool is_proximal(const IteratedSystem& sys, int x, int y);

/// {n : states differ} is finite, i.e. the loop is entirely diagonal. For a
/// deterministic single map this provably coincides with proximality; the
/// coincidence is a tested property, not an assumption.
bool is_asymptotic(const IteratedSystem& sys, int x, int y);

/// There is a sequence r_n ∈ S∖F_n with lim d(x.r_n, y.r_n) > 0. Decided
/// exactly: some loop state at positive distance recurs beyond any finite
/// set, which also makes the verdict family-independent.
bool is_scrambled_relative(const IteratedSystem& sys, int x, int y,
                           const ExhaustionFamily& family);

/// A concrete witness prefix r_1..r_count for is_scrambled_relative: each
/// r_n avoids F_n and realises the same positive distance. Empty when the
/// pair is not scrambled relative to the family.
std::vector<long long> scrambled_witness(const IteratedSystem& sys, int x,
                                         int y, const ExhaustionFamily& family,
                                         int count);

struct ClaimsReport {
  bool holds{true};
  std::string counterexample;
};

/// For every pair: not asymptotic ⇔ scrambled relative to the canonical
/// family F_n = {0..n} (and, spot-checked, to any family).
ClaimsReport claims_check(const IteratedSystem& sys);

}  // namespace chaoslab
