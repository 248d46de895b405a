#pragma once

// Memo for index-recursive sequences.  Each key owns a growing prefix; lookups
// beyond the prefix extend it.  Entries are deterministic, so two threads
// racing to extend the same key store identical values.

#include <functional>
#include <map>
#include <mutex>
#include <vector>

namespace balkan::detail {

template <class Key, class Value>
class SequenceMemo {
 public:
  using Step = std::function<Value(long index, const std::vector<Value>& prefix)>;

  Value get(const Key& key, long index, const Step& step) {
    std::vector<Value> prefix;
    {
      std::lock_guard lock(mutex_);
      auto it = table_.find(key);
      if (it != table_.end()) {
        if (index < static_cast<long>(it->second.size())) return it->second[index];
        prefix = it->second;
      }
    }
    while (static_cast<long>(prefix.size()) <= index) prefix.push_back(step(static_cast<long>(prefix.size()), prefix));
    Value out = prefix[index];
    std::lock_guard lock(mutex_);
    auto& slot = table_[key];
    if (slot.size() < prefix.size()) slot = std::move(prefix);
    return out;
  }

 private:
  std::mutex mutex_;
  std::map<Key, std::vector<Value>> table_;
};

}  // namespace balkan::detail
