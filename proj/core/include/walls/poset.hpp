#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "walls/exact_arith.hpp"

namespace walls {

// (s, t) means s is covered by t.
using Cover = std::pair<int, int>;

class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Finite poset on 0..p-1 given by its cover relations. The constructor
// rejects cycles, repeated covers and covers implied by transitivity.
class Poset {
 public:
  Poset() = default;
  Poset(int size, std::vector<Cover> covers);

  int size() const { return size_; }
  const std::vector<Cover>& covers() const { return covers_; }
  // Upper covers of each element.
  std::vector<std::vector<int>> successors() const;
  // Lower covers of each element.
  std::vector<std::vector<int>> predecessors() const;

  // "p; s>t; s>t; ..." with covers sorted; "s>t" lists the larger element first.
  std::string to_line() const;
  static Poset from_line(std::string_view line);

  friend bool operator==(const Poset& a, const Poset& b) { return a.size_ == b.size_ && a.covers_ == b.covers_; }

 private:
  int size_ = 0;
  std::vector<Cover> covers_;
};

Poset chain(int m);
Poset antichain(int m);
// Disjoint union with no relations between the parts.
Poset direct_sum(const Poset& p, const Poset& q);
// Every element of p below every element of q.
Poset ordinal_sum(const Poset& p, const Poset& q);

inline constexpr int kDefaultCapacity = 24;
inline constexpr int kMaxCapacity = 63;

// e(P) by dynamic programming over order ideals encoded as bitmasks.
// Throws CapacityError when P has more than `capacity` elements.
Nat count_linear_extensions(const Poset& p, int capacity = kDefaultCapacity);

// True when every element has at most one upper cover.
bool is_outdegree_forest(const Poset& p);
// omega(v) = number of elements below or equal to v, for each v.
// Requires is_outdegree_forest(p).
std::vector<long> hook_denominators(const Poset& p);
// p! / prod omega(v). Requires is_outdegree_forest(p).
Nat forest_hook_count(const Poset& p);

}  // namespace walls
