#include "chaoslab/semigroup.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "chaoslab/errors.hpp"

namespace chaoslab {

namespace {

std::string triple(int a, int b, int c) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," +
         std::to_string(c) + ")";
}

}  // namespace

FiniteSemigroup make_semigroup_unchecked(int size, std::vector<int> table,
                                         int identity) {
  FiniteSemigroup s;
  s.size_ = size;
  s.table_ = std::move(table);
  s.identity_ = identity;
  s.compute_flags();
  return s;
}

void FiniteSemigroup::compute_flags() {
  abelian_ = true;
  for (int s = 0; s < size_ && abelian_; ++s) {
    for (int t = s + 1; t < size_; ++t) {
      if (compose(s, t) != compose(t, s)) {
        abelian_ = false;
        break;
      }
    }
  }
  group_ = true;
  for (int s = 0; s < size_; ++s) {
    bool has_inverse = false;
    for (int t = 0; t < size_; ++t) {
      if (compose(s, t) == identity_ && compose(t, s) == identity_) {
        has_inverse = true;
        break;
      }
    }
    if (!has_inverse) {
      group_ = false;
      break;
    }
  }
}

FiniteSemigroup FiniteSemigroup::from_table(
    const std::vector<std::vector<int>>& rows, int identity) {
  const int n = static_cast<int>(rows.size());
  if (n == 0) {
    throw Error(Errc::validation_error, "semigroup must be nonempty");
  }
  if (identity < 0 || identity >= n) {
    throw Error(Errc::validation_error, "identity index out of range");
  }
  std::vector<int> table;
  table.reserve(static_cast<size_t>(n) * n);
  for (int s = 0; s < n; ++s) {
    if (static_cast<int>(rows[s].size()) != n) {
      throw Error(Errc::validation_error,
                  "compose row " + std::to_string(s) + " has wrong length");
    }
    for (int t = 0; t < n; ++t) {
      if (rows[s][t] < 0 || rows[s][t] >= n) {
        throw Error(Errc::validation_error,
                    "compose entry out of range at " + triple(s, t, rows[s][t]));
      }
      table.push_back(rows[s][t]);
    }
  }
  FiniteSemigroup sg;
  sg.size_ = n;
  sg.table_ = std::move(table);
  sg.identity_ = identity;
  for (int s = 0; s < n; ++s) {
    if (sg.compose(identity, s) != s || sg.compose(s, identity) != s) {
      throw Error(Errc::validation_error,
                  "identity law fails at element " + std::to_string(s));
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const int ab = sg.compose(a, b);
      for (int c = 0; c < n; ++c) {
        if (sg.compose(ab, c) != sg.compose(a, sg.compose(b, c))) {
          throw Error(Errc::validation_error,
                      "associativity fails at " + triple(a, b, c));
        }
      }
    }
  }
  sg.compute_flags();
  return sg;
}

FiniteSemigroup FiniteSemigroup::trivial() {
  return make_semigroup_unchecked(1, {0}, 0);
}

std::vector<int> FiniteSemigroup::closure(std::vector<int> seed) const {
  std::vector<char> in(size_, 0);
  std::vector<int> work;
  auto push = [&](int s) {
    if (s < 0 || s >= size_) {
      throw Error(Errc::validation_error, "element index out of range");
    }
    if (!in[s]) {
      in[s] = 1;
      work.push_back(s);
    }
  };
  push(identity_);
  for (int s : seed) push(s);
  for (size_t i = 0; i < work.size(); ++i) {
    for (size_t j = 0; j < work.size(); ++j) {
      push(compose(work[i], work[j]));
      push(compose(work[j], work[i]));
    }
  }
  std::sort(work.begin(), work.end());
  return work;
}

std::vector<std::vector<int>> FiniteSemigroup::table_rows() const {
  std::vector<std::vector<int>> rows(size_);
  for (int s = 0; s < size_; ++s) {
    rows[s].assign(table_.begin() + static_cast<size_t>(s) * size_,
                   table_.begin() + static_cast<size_t>(s + 1) * size_);
  }
  return rows;
}

GeneratedSemigroup semigroup_from_generators(
    const std::vector<std::vector<int>>& maps, int cap) {
  if (maps.empty()) {
    throw Error(Errc::validation_error, "need at least one generator map");
  }
  const int domain = static_cast<int>(maps[0].size());
  if (domain == 0) {
    throw Error(Errc::validation_error, "generator domain must be nonempty");
  }
  for (const auto& m : maps) {
    if (static_cast<int>(m.size()) != domain) {
      throw Error(Errc::validation_error, "generator maps have unequal domains");
    }
    for (int v : m) {
      if (v < 0 || v >= domain) {
        throw Error(Errc::validation_error, "generator map value out of range");
      }
    }
  }
  if (cap < 1) {
    throw Error(Errc::validation_error, "cap must be positive");
  }

  std::vector<std::vector<int>> elements;
  std::map<std::vector<int>, int> index_of;
  auto intern = [&](const std::vector<int>& m) {
    auto it = index_of.find(m);
    if (it != index_of.end()) return it->second;
    if (static_cast<int>(elements.size()) >= cap) {
      throw Error(Errc::closure_exceeds_cap,
                  "generated semigroup exceeds cap " + std::to_string(cap));
    }
    const int id = static_cast<int>(elements.size());
    elements.push_back(m);
    index_of.emplace(m, id);
    return id;
  };

  std::vector<int> identity(domain);
  for (int x = 0; x < domain; ++x) identity[x] = x;
  intern(identity);
  for (const auto& m : maps) intern(m);

  // compose(s, t) = "s then t": apply s's map first.
  auto composed = [&](int s, int t) {
    std::vector<int> m(domain);
    for (int x = 0; x < domain; ++x) m[x] = elements[t][elements[s][x]];
    return m;
  };

  std::vector<int> table;
  for (size_t s = 0; s < elements.size(); ++s) {
    for (size_t t = 0; t < elements.size(); ++t) {
      intern(composed(static_cast<int>(s), static_cast<int>(t)));
    }
  }
  // The loop above may have grown `elements`; repeat until stable.
  size_t settled = 0;
  while (settled != elements.size()) {
    settled = elements.size();
    for (size_t s = 0; s < elements.size(); ++s) {
      for (size_t t = 0; t < elements.size(); ++t) {
        intern(composed(static_cast<int>(s), static_cast<int>(t)));
      }
    }
  }

  const int n = static_cast<int>(elements.size());
  table.assign(static_cast<size_t>(n) * n, 0);
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) {
      table[static_cast<size_t>(s) * n + t] = index_of.at(composed(s, t));
    }
  }

  return GeneratedSemigroup{make_semigroup_unchecked(n, std::move(table), 0),
                            std::move(elements)};
}

}  // namespace chaoslab
