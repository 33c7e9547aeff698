#pragma once

// Weight effect of partial Hasse invariants and Theta operators, the cones
// they cut out, and the order <=_Ha they generate.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "swl/arith.hpp"
#include "swl/weights.hpp"

namespace swl {

inline constexpr long long kDefaultConeFuel = 10'000;

struct HasseWeight {
  int tau = 0;
  std::vector<std::int64_t> vector;
};

// p-1 at tau when Fr fixes tau; otherwise -1 at tau and p at Fr^{-1} tau.
HasseWeight hasse_weight(const PlaceStructure& s, int tau);

Weight theta_shift(const PlaceStructure& s, const Weight& w, int tau);
// k + k_{Ha_tau}, l unchanged.
Weight hasse_shift(const PlaceStructure& s, const Weight& w, int tau);

// p k_tau >= k_{Fr^{-1} tau} for all tau; `plus` also asks k_tau >= 1.
bool in_minimal_cone(const PlaceStructure& s, std::span<const std::int64_t> k,
                     bool plus = false);
// p (k_tau - 2) > k_{Fr^{-1} tau} - 2 for all tau.
bool in_liftable_cone(const PlaceStructure& s, std::span<const std::int64_t> k);

// The unique n with k2 - k1 = sum n_tau k_{Ha_tau}, if it is integral and
// nonnegative.
std::optional<std::vector<std::int64_t>> le_ha(
    const PlaceStructure& s, std::span<const std::int64_t> k1,
    std::span<const std::int64_t> k2);

// Embeddings tau with p k_tau < k_{Fr^{-1} tau}, ascending.
std::vector<int> cone_violations(const PlaceStructure& s,
                                 std::span<const std::int64_t> k);

// Subtracts k_{Ha_tau} at a violating tau until none is left.  `pick`
// chooses among the current violations (default: the smallest index).
// Throws FuelExhausted after SWL_FUEL (default 10^4) steps.
std::vector<std::int64_t> cone_reduce(
    const PlaceStructure& s, std::span<const std::int64_t> k,
    const std::function<int(const std::vector<int>&)>& pick = {});

Weight twist_weight(const Weight& w, std::span<const std::int64_t> lp);

// ((2, p k0 - k1 + 2), (-1, k1 - 1)); needs k1 >= k0 >= 2 and p k0 >= k1.
Weight stratum_weight(int p, std::int64_t k0, std::int64_t k1);

enum class ThetaDivisibility { always_divisible_by_ha, divisible_iff_input_divisible };

ThetaDivisibility theta_divisibility_flag(const PlaceStructure& s,
                                          const Weight& w, int tau);

const char* to_string(ThetaDivisibility d);

}  // namespace swl
