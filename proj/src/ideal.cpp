#include "chaoslab/ideal.hpp"

#include <algorithm>
#include <string>

#include "chaoslab/errors.hpp"

namespace chaoslab {

IdealSpec IdealSpec::finite_carrier(std::vector<int> carrier) {
  std::sort(carrier.begin(), carrier.end());
  carrier.erase(std::unique(carrier.begin(), carrier.end()), carrier.end());
  if (!carrier.empty() && carrier.front() < 0) {
    throw Error(Errc::validation_error, "carrier elements must be nonnegative");
  }
  return IdealSpec(Kind::finite_carrier, std::move(carrier), Cardinal::aleph(0));
}

IdealSpec IdealSpec::cardinal_bound(Cardinal kappa) {
  if (kappa < Cardinal::aleph(0)) {
    throw Error(Errc::validation_error,
                "cardinal-bound ideal needs kappa >= aleph0, got " +
                    kappa.to_string());
  }
  return IdealSpec(Kind::cardinal_bound, {}, kappa);
}

IdealSpec IdealSpec::full() {
  return IdealSpec(Kind::full, {}, Cardinal::aleph(0));
}

const std::vector<int>& IdealSpec::carrier() const {
  if (kind_ != Kind::finite_carrier) {
    throw Error(Errc::ideal_kind_mismatch, "ideal has no finite carrier");
  }
  return carrier_;
}

Cardinal IdealSpec::kappa() const {
  if (kind_ != Kind::cardinal_bound) {
    throw Error(Errc::ideal_kind_mismatch, "ideal has no cardinal bound");
  }
  return kappa_;
}

bool IdealSpec::contains_set(std::span<const int> b) const {
  switch (kind_) {
    case Kind::full:
      return true;
    case Kind::cardinal_bound:
      return Cardinal::finite(b.size()) < kappa_;
    case Kind::finite_carrier: {
      for (int x : b) {
        if (!std::binary_search(carrier_.begin(), carrier_.end(), x)) {
          return false;
        }
      }
      return true;
    }
  }
  return false;
}

bool IdealSpec::contains_size(Cardinal size) const {
  switch (kind_) {
    case Kind::full:
      return true;
    case Kind::cardinal_bound:
      return size < kappa_;
    case Kind::finite_carrier:
      throw Error(Errc::ideal_kind_mismatch,
                  "finite-carrier membership needs the subset itself, "
                  "not just its size");
  }
  return false;
}

bool IdealSpec::is_powerset_of(int n) const {
  if (kind_ == Kind::full) return true;
  if (kind_ != Kind::finite_carrier) return false;
  if (static_cast<int>(carrier_.size()) != n) return false;
  for (int i = 0; i < n; ++i) {
    if (carrier_[i] != i) return false;
  }
  return true;
}

bool is_invariant_ideal(const IdealSpec& ideal, const FiniteSemigroup& s) {
  const auto& carrier = ideal.carrier();
  std::vector<char> in(s.size(), 0);
  for (int a : carrier) {
    if (a >= s.size()) {
      throw Error(Errc::validation_error, "carrier element outside semigroup");
    }
    in[a] = 1;
  }
  for (int a : carrier) {
    for (int t = 0; t < s.size(); ++t) {
      if (!in[s.compose(a, t)]) return false;
    }
  }
  return true;
}

std::vector<IdealSpec> enumerate_ideals(const FiniteSemigroup& s, int bound) {
  if (s.size() > bound) {
    throw Error(Errc::bound_exceeded,
                "ideal enumeration bound " + std::to_string(bound) +
                    " exceeded by semigroup of size " + std::to_string(s.size()));
  }
  const int n = s.size();
  std::vector<IdealSpec> out;
  out.reserve(size_t{1} << n);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> carrier;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) carrier.push_back(i);
    }
    out.push_back(IdealSpec::finite_carrier(std::move(carrier)));
  }
  return out;
}

}  // namespace chaoslab
