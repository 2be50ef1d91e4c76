#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <utility>
#include <vector>

namespace novikov {

// std::uniform_int_distribution and std::shuffle are implementation-defined;
// these are not, so seeded runs reproduce across standard libraries.

/// Uniform integer in [0, bound).
inline std::uint64_t uniform_below(std::mt19937_64& engine, std::uint64_t bound) {
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - max % bound;
  std::uint64_t v;
  do {
    v = engine();
  } while (v >= limit);
  return v % bound;
}

template <class T>
void seeded_shuffle(std::vector<T>& items, std::mt19937_64& engine) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(uniform_below(engine, i));
    std::swap(items[i - 1], items[j]);
  }
}

}  // namespace novikov
