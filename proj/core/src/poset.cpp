#include "walls/poset.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <sstream>
#include <unordered_map>

namespace walls {

namespace {

__extension__ typedef unsigned __int128 u128;

// reach[s][t]: t is reachable from s by a nonempty path in the cover digraph.
// Returns false if the digraph has a cycle.
bool transitive_closure(int p, const std::vector<Cover>& covers, std::vector<std::vector<char>>& reach) {
  std::vector<std::vector<int>> succ(p);
  std::vector<int> indeg(p, 0);
  for (auto [s, t] : covers) {
    succ[s].push_back(t);
    ++indeg[t];
  }
  std::vector<int> order;
  for (int v = 0; v < p; ++v) {
    if (indeg[v] == 0) order.push_back(v);
  }
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (int t : succ[order[i]]) {
      if (--indeg[t] == 0) order.push_back(t);
    }
  }
  if (static_cast<int>(order.size()) != p) return false;
  reach.assign(p, std::vector<char>(p, 0));
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    for (int t : succ[*it]) {
      reach[*it][t] = 1;
      for (int u = 0; u < p; ++u) {
        if (reach[t][u]) reach[*it][u] = 1;
      }
    }
  }
  return true;
}

int parse_int(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw DomainError("bad integer in poset line: '" + std::string(s) + "'");
  }
  return v;
}

template <class Count>
Count count_ideals(int p, const std::vector<std::uint64_t>& below) {
  using Mask = std::uint64_t;
  std::unordered_map<Mask, Count> layer{{0, Count(1)}};
  for (int step = 0; step < p; ++step) {
    std::unordered_map<Mask, Count> next;
    next.reserve(layer.size() * 2);
    for (const auto& [mask, count] : layer) {
      for (int x = 0; x < p; ++x) {
        const Mask bit = Mask(1) << x;
        if ((mask & bit) == 0 && (below[x] & mask) == below[x]) next[mask | bit] += count;
      }
    }
    layer = std::move(next);
  }
  Count total = 0;
  for (const auto& kv : layer) total += kv.second;
  return total;
}

Nat to_nat(u128 v) {
  const auto hi = static_cast<unsigned long>(v >> 64);
  const auto lo = static_cast<unsigned long>(v);
  Nat r = hi;
  r <<= 64;
  r += lo;
  return r;
}

}  // namespace

Poset::Poset(int size, std::vector<Cover> covers) : size_(size), covers_(std::move(covers)) {
  if (size < 0) throw DomainError("poset size must be nonnegative");
  for (auto [s, t] : covers_) {
    if (s < 0 || t < 0 || s >= size || t >= size || s == t) {
      throw DomainError("cover (" + std::to_string(s) + "," + std::to_string(t) + ") out of range");
    }
  }
  std::sort(covers_.begin(), covers_.end());
  if (std::adjacent_find(covers_.begin(), covers_.end()) != covers_.end()) throw DomainError("repeated cover");
  std::vector<std::vector<char>> reach;
  if (!transitive_closure(size, covers_, reach)) throw DomainError("cover relation has a cycle");
  // (s,t) is redundant when some other upper cover u of s reaches t.
  auto succ = successors();
  for (auto [s, t] : covers_) {
    for (int u : succ[s]) {
      if (u != t && reach[u][t]) {
        throw DomainError("cover (" + std::to_string(s) + "," + std::to_string(t) + ") is implied by transitivity");
      }
    }
  }
}

std::vector<std::vector<int>> Poset::successors() const {
  std::vector<std::vector<int>> out(size_);
  for (auto [s, t] : covers_) out[s].push_back(t);
  return out;
}

std::vector<std::vector<int>> Poset::predecessors() const {
  std::vector<std::vector<int>> out(size_);
  for (auto [s, t] : covers_) out[t].push_back(s);
  return out;
}

std::string Poset::to_line() const {
  std::ostringstream out;
  out << size_;
  for (auto [s, t] : covers_) out << "; " << t << '>' << s;
  return out.str();
}

Poset Poset::from_line(std::string_view line) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t semi = line.find(';', start);
    parts.push_back(line.substr(start, semi == std::string_view::npos ? std::string_view::npos : semi - start));
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  const int p = parse_int(parts.front());
  std::vector<Cover> covers;
  for (std::size_t i = 1; i < parts.size(); ++i) {
    const std::size_t gt = parts[i].find('>');
    if (gt == std::string_view::npos) throw DomainError("expected 's>t' in poset line");
    const int big = parse_int(parts[i].substr(0, gt));
    const int small = parse_int(parts[i].substr(gt + 1));
    covers.emplace_back(small, big);
  }
  return Poset(p, std::move(covers));
}

Poset chain(int m) {
  std::vector<Cover> covers;
  for (int i = 0; i + 1 < m; ++i) covers.emplace_back(i, i + 1);
  return Poset(m, std::move(covers));
}

Poset antichain(int m) { return Poset(m, {}); }

Poset direct_sum(const Poset& p, const Poset& q) {
  std::vector<Cover> covers = p.covers();
  for (auto [s, t] : q.covers()) covers.emplace_back(s + p.size(), t + p.size());
  return Poset(p.size() + q.size(), std::move(covers));
}

Poset ordinal_sum(const Poset& p, const Poset& q) {
  std::vector<Cover> covers = p.covers();
  for (auto [s, t] : q.covers()) covers.emplace_back(s + p.size(), t + p.size());
  const auto up = p.successors();
  const auto down = q.predecessors();
  for (int s = 0; s < p.size(); ++s) {
    if (!up[s].empty()) continue;
    for (int t = 0; t < q.size(); ++t) {
      if (down[t].empty()) covers.emplace_back(s, t + p.size());
    }
  }
  return Poset(p.size() + q.size(), std::move(covers));
}

Nat count_linear_extensions(const Poset& p, int capacity) {
  const int n = p.size();
  const int limit = std::min(capacity, kMaxCapacity);
  if (n > limit) {
    throw CapacityError("poset has " + std::to_string(n) + " elements; limit is " + std::to_string(limit));
  }
  if (n == 0) return 1;
  std::vector<std::uint64_t> below(n, 0);
  for (auto [s, t] : p.covers()) below[t] |= std::uint64_t(1) << s;
  // n! < 2^128 for n <= 33.
  if (n <= 33) return to_nat(count_ideals<u128>(n, below));
  return count_ideals<Nat>(n, below);
}

bool is_outdegree_forest(const Poset& p) {
  for (const auto& up : p.successors()) {
    if (up.size() > 1) return false;
  }
  return true;
}

std::vector<long> hook_denominators(const Poset& p) {
  if (!is_outdegree_forest(p)) throw DomainError("hook product needs every element to have at most one upper cover");
  const auto down = p.predecessors();
  std::vector<long> omega(p.size(), 0);
  // Process each element after all of its lower covers.
  std::vector<int> pending(p.size());
  std::vector<int> ready;
  for (int v = 0; v < p.size(); ++v) {
    pending[v] = static_cast<int>(down[v].size());
    if (pending[v] == 0) ready.push_back(v);
  }
  const auto up = p.successors();
  while (!ready.empty()) {
    const int v = ready.back();
    ready.pop_back();
    omega[v] = 1;
    for (int c : down[v]) omega[v] += omega[c];
    for (int t : up[v]) {
      if (--pending[t] == 0) ready.push_back(t);
    }
  }
  return omega;
}

Nat forest_hook_count(const Poset& p) {
  Nat den = 1;
  for (long w : hook_denominators(p)) den *= w;
  return exact_div(factorial(p.size()), den, "forest_hook_count");
}

}  // namespace walls
