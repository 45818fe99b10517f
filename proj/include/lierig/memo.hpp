#pragma once

#include <mutex>
#include <unordered_map>
#include <vector>

#include "lierig/weight.hpp"

namespace lierig::detail {

// Write-once caches shared by copies of a RootSystem. Values are computed
// outside the lock; the first insertion for a key wins and later ones are
// dropped, so concurrent duplicate work is harmless. unordered_map nodes are
// stable, so returned references stay valid for the lifetime of the memo.
struct RootSystemMemo {
  std::mutex mutex;
  std::unordered_map<Weight, std::vector<Weight>, WeightHash> saturated;
  std::unordered_map<Weight, std::vector<Weight>, WeightHash> orbits;

  template <typename Compute>
  const std::vector<Weight>& get(std::unordered_map<Weight, std::vector<Weight>, WeightHash>& map,
                                 const Weight& key, Compute&& compute) {
    {
      std::lock_guard lock(mutex);
      if (auto it = map.find(key); it != map.end()) return it->second;
    }
    std::vector<Weight> value = compute();
    std::lock_guard lock(mutex);
    return map.try_emplace(key, std::move(value)).first->second;
  }
};

}  // namespace lierig::detail
