#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "walls/poset.hpp"

namespace walls::testing {

// e(P) by checking every permutation. Only for small posets.
inline std::uint64_t permutation_count(const Poset& p) {
  std::vector<int> perm(p.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t count = 0;
  std::vector<int> pos(p.size());
  do {
    for (int i = 0; i < p.size(); ++i) pos[perm[i]] = i;
    bool ok = true;
    for (auto [s, t] : p.covers()) {
      if (pos[s] > pos[t]) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

// Random poset: edges i -> j (i < j) kept with probability `density`, then
// reduced to covers.
inline Poset random_poset(std::mt19937_64& rng, int size, double density) {
  std::bernoulli_distribution keep(density);
  std::vector<std::vector<char>> rel(size, std::vector<char>(size, 0));
  for (int i = 0; i < size; ++i) {
    for (int j = i + 1; j < size; ++j) rel[i][j] = keep(rng);
  }
  // Transitive closure (indices are already a topological order).
  for (int k = 0; k < size; ++k) {
    for (int i = 0; i < k; ++i) {
      if (!rel[i][k]) continue;
      for (int j = k + 1; j < size; ++j) {
        if (rel[k][j]) rel[i][j] = 1;
      }
    }
  }
  std::vector<Cover> covers;
  for (int i = 0; i < size; ++i) {
    for (int j = i + 1; j < size; ++j) {
      if (!rel[i][j]) continue;
      bool direct = true;
      for (int k = i + 1; k < j && direct; ++k) direct = !(rel[i][k] && rel[k][j]);
      if (direct) covers.emplace_back(i, j);
    }
  }
  // Relabel so element order is not always a linear extension.
  std::vector<int> label(size);
  std::iota(label.begin(), label.end(), 0);
  std::shuffle(label.begin(), label.end(), rng);
  for (auto& [s, t] : covers) {
    s = label[s];
    t = label[t];
  }
  return Poset(size, std::move(covers));
}

// Random rooted forest with every element having at most one upper cover.
inline Poset random_forest(std::mt19937_64& rng, int size) {
  std::vector<Cover> covers;
  for (int v = 1; v < size; ++v) {
    std::uniform_int_distribution<int> parent(-1, v - 1);
    const int p = parent(rng);
    if (p >= 0) covers.emplace_back(v, p);
  }
  return Poset(size, std::move(covers));
}

}  // namespace walls::testing
