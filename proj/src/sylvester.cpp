#include "excy/sylvester.hpp"

#include <deque>
#include <mutex>
#include <shared_mutex>

namespace excy::sylvester {

namespace {

// deque keeps references stable while the cache grows
std::shared_mutex cache_mutex;
std::deque<Int> cache;

}  // namespace

const Int& value_uncapped(int j) {
  if (j < 0) throw std::invalid_argument("sylvester: negative index");
  {
    std::shared_lock lock(cache_mutex);
    if (static_cast<size_t>(j) < cache.size()) return cache[static_cast<size_t>(j)];
  }
  std::unique_lock lock(cache_mutex);
  if (cache.empty()) cache.emplace_back(2);
  while (cache.size() <= static_cast<size_t>(j)) {
    const Int& s = cache.back();
    cache.emplace_back(s * (s - 1) + 1);
  }
  return cache[static_cast<size_t>(j)];
}

const Int& value(int j) {
  if (j > kDefaultCap) {
    throw std::invalid_argument("sylvester: index " + std::to_string(j) +
                                " above cap; use value_uncapped if intentional");
  }
  return value_uncapped(j);
}

Rat partial_sum(int j) {
  if (j < 0) throw std::invalid_argument("sylvester: negative index");
  Rat acc = 0;
  for (int i = 0; i <= j; ++i) acc += fraction(1, value(i));
  return acc;
}

}  // namespace excy::sylvester
