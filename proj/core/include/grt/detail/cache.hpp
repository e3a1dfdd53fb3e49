#pragma once

#include <functional>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

namespace grt::detail {

/// Memo table safe under concurrent readers and writers. Values are computed
/// outside the lock; if two threads race, the first insertion wins and both
/// observe the same value.
template <class Key, class Value, class Hash = std::hash<Key>>
class ConcurrentCache {
 public:
  using Ptr = std::shared_ptr<const Value>;

  template <class Compute>
  Ptr get_or_compute(const Key& key, Compute&& compute) {
    {
      std::shared_lock lock(mutex_);
      auto it = map_.find(key);
      if (it != map_.end()) return it->second;
    }
    Ptr value = std::make_shared<const Value>(compute());
    std::unique_lock lock(mutex_);
    auto [it, inserted] = map_.emplace(key, std::move(value));
    return it->second;
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return map_.size();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<Key, Ptr, Hash> map_;
};

}  // namespace grt::detail
