#pragma once

#include <map>
#include <memory>
#include <mutex>

namespace hodgelab::detail {

/// Per-degree memo shared across threads. Values are built outside the lock;
/// if two threads race, the first inserted value wins and both see it.
template <class T>
class DegreeCache {
 public:
  template <class Build>
  std::shared_ptr<const T> get(int n, Build&& build) {
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = map_.find(n);
      if (it != map_.end()) return it->second;
    }
    auto value = std::make_shared<const T>(build(n));
    std::lock_guard<std::mutex> lock(mu_);
    return map_.emplace(n, std::move(value)).first->second;
  }

 private:
  std::mutex mu_;
  std::map<int, std::shared_ptr<const T>> map_;
};

}  // namespace hodgelab::detail
