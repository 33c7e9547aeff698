#pragma once

// Small hand-rolled generators for the property tests.  Fixed seeds keep
// failures reproducible; SWL_SEED overrides.

#include <cstdint>
#include <cstdlib>
#include <random>
#include <vector>

#include "swl/arith.hpp"

namespace gen {

inline std::mt19937_64& rng() {
  static std::mt19937_64 r = [] {
    const char* s = std::getenv("SWL_SEED");
    return std::mt19937_64(s ? std::strtoull(s, nullptr, 10) : 20240611ULL);
  }();
  return r;
}

inline std::int64_t integer(std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng());
}

inline int pick(std::initializer_list<int> xs) {
  auto i = integer(0, static_cast<std::int64_t>(xs.size()) - 1);
  return *(xs.begin() + i);
}

inline std::vector<std::int64_t> vec(std::size_t n, std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> v(n);
  for (auto& x : v) x = integer(lo, hi);
  return v;
}

inline swl::PlaceStructure structure(std::initializer_list<int> primes, int max_f,
                                     int max_places = 1) {
  int p = pick(primes);
  std::vector<int> degrees(static_cast<std::size_t>(integer(1, max_places)));
  for (auto& f : degrees) f = static_cast<int>(integer(1, max_f));
  return swl::PlaceStructure(p, degrees);
}

}  // namespace gen
