#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <vector>

namespace walls {

// Memo storage keyed by small index tuples. Keys whose components all lie
// in [0, extent) go to a flat array; everything else goes to an ordered map.
// Stored values never move, so returned references stay valid.
template <class V, std::size_t Dim>
class MemoTable {
 public:
  using Key = std::array<long, Dim>;

  explicit MemoTable(long dense_extent = default_extent()) : extent_(dense_extent < 0 ? 0 : dense_extent) {}

  const V* find(const Key& key) const {
    if (auto slot = dense_slot(key)) {
      if (!dense_) return nullptr;
      const auto& cell = dense_[*slot];
      return cell ? &*cell : nullptr;
    }
    auto it = sparse_.find(key);
    return it == sparse_.end() ? nullptr : &it->second;
  }

  const V& store(const Key& key, V value) {
    if (auto slot = dense_slot(key)) {
      if (!dense_) dense_ = std::make_unique<std::optional<V>[]>(dense_capacity());
      auto& cell = dense_[*slot];
      if (!cell) {
        cell.emplace(std::move(value));
        ++count_;
      }
      return *cell;
    }
    auto [it, inserted] = sparse_.emplace(key, std::move(value));
    if (inserted) ++count_;
    return it->second;
  }

  std::size_t size() const { return count_; }
  long dense_extent() const { return extent_; }

  static constexpr long default_extent() { return Dim == 1 ? 256 : Dim == 2 ? 64 : 24; }

 private:
  std::size_t dense_capacity() const {
    std::size_t cap = 1;
    for (std::size_t d = 0; d < Dim; ++d) cap *= static_cast<std::size_t>(extent_);
    return cap;
  }

  std::optional<std::size_t> dense_slot(const Key& key) const {
    std::size_t slot = 0;
    for (long c : key) {
      if (c < 0 || c >= extent_) return std::nullopt;
      slot = slot * static_cast<std::size_t>(extent_) + static_cast<std::size_t>(c);
    }
    return slot;
  }

  long extent_;
  std::unique_ptr<std::optional<V>[]> dense_;
  std::map<Key, V> sparse_;
  std::size_t count_ = 0;
};

}  // namespace walls
