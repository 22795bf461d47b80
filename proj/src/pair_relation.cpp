#include "chaoslab/pair_relation.hpp"

#include <bit>

#include "chaoslab/errors.hpp"

namespace chaoslab {

PairRelation::PairRelation(int n) : n_(n) {
  if (n < 0) {
    throw Error(Errc::validation_error, "relation base size must be >= 0");
  }
  bits_.assign((static_cast<size_t>(n) * n + 63) / 64, 0);
}

PairRelation PairRelation::diagonal(int n) {
  PairRelation r(n);
  for (int i = 0; i < n; ++i) r.set(i, i);
  return r;
}

PairRelation PairRelation::complete(int n) {
  PairRelation r(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) r.set(i, j);
  }
  return r;
}

void PairRelation::set(int i, int j, bool value) {
  if (i < 0 || i >= n_ || j < 0 || j >= n_) {
    throw Error(Errc::validation_error, "pair index out of range");
  }
  const size_t k = static_cast<size_t>(i) * n_ + j;
  if (value) {
    bits_[k >> 6] |= (std::uint64_t{1} << (k & 63));
  } else {
    bits_[k >> 6] &= ~(std::uint64_t{1} << (k & 63));
  }
}

bool PairRelation::is_reflexive() const {
  for (int i = 0; i < n_; ++i) {
    if (!at(i, i)) return false;
  }
  return true;
}

bool PairRelation::is_symmetric() const {
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      if (at(i, j) != at(j, i)) return false;
    }
  }
  return true;
}

bool PairRelation::is_transitive() const {
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (!at(i, j)) continue;
      for (int k = 0; k < n_; ++k) {
        if (at(j, k) && !at(i, k)) return false;
      }
    }
  }
  return true;
}

bool PairRelation::is_equivalence() const {
  return is_reflexive() && is_symmetric() && is_transitive();
}

void PairRelation::check_compatible(const PairRelation& other) const {
  if (other.n_ != n_) {
    throw Error(Errc::validation_error, "relation base sizes differ");
  }
}

bool PairRelation::subset_of(const PairRelation& other) const {
  check_compatible(other);
  for (size_t w = 0; w < bits_.size(); ++w) {
    if (bits_[w] & ~other.bits_[w]) return false;
  }
  return true;
}

bool PairRelation::empty() const {
  for (auto w : bits_) {
    if (w) return false;
  }
  return true;
}

int PairRelation::count() const {
  int c = 0;
  for (auto w : bits_) c += std::popcount(w);
  return c;
}

PairRelation& PairRelation::operator&=(const PairRelation& other) {
  check_compatible(other);
  for (size_t w = 0; w < bits_.size(); ++w) bits_[w] &= other.bits_[w];
  return *this;
}

PairRelation& PairRelation::operator|=(const PairRelation& other) {
  check_compatible(other);
  for (size_t w = 0; w < bits_.size(); ++w) bits_[w] |= other.bits_[w];
  return *this;
}

PairRelation& PairRelation::subtract(const PairRelation& other) {
  check_compatible(other);
  for (size_t w = 0; w < bits_.size(); ++w) bits_[w] &= ~other.bits_[w];
  return *this;
}

void PairRelation::remove_diagonal() {
  for (int i = 0; i < n_; ++i) set(i, i, false);
}

std::vector<std::pair<int, int>> PairRelation::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (at(i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

std::optional<std::pair<int, int>> PairRelation::first_difference(
    const PairRelation& other) const {
  check_compatible(other);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (at(i, j) != other.at(i, j)) return std::make_pair(i, j);
    }
  }
  return std::nullopt;
}

std::string PairRelation::to_string() const {
  const auto ps = pairs();
  if (ps.empty()) return "{}";
  std::string out;
  for (size_t i = 0; i < ps.size(); ++i) {
    if (i) out += ' ';
    out += '(' + std::to_string(ps[i].first) + ',' +
           std::to_string(ps[i].second) + ')';
  }
  return out;
}

}  // namespace chaoslab
