#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "swl/arith.hpp"

namespace swl {

// A weight (k, l) in Z^Sigma x Z^Sigma, indexed place-major.
struct Weight {
  std::vector<std::int64_t> k;
  std::vector<std::int64_t> l;

  bool operator==(const Weight&) const = default;
};

// det^D (x)_i Sym^{b_i - 2}_{[tau_i]} at one place: 2 <= b_i <= p+1 and the
// twist packed as an exponent of det_{[tau_0]} modulo p^f - 1.
struct PlaceWeight {
  std::vector<int> b;
  Int D;

  bool operator==(const PlaceWeight& o) const { return b == o.b && D == o.D; }
  bool operator<(const PlaceWeight& o) const {
    if (b != o.b) return b < o.b;
    return D < o.D;
  }
};

// A Serre weight of prod_v GL_2(F_v): one irreducible factor per place.
struct SerreWeight {
  std::vector<PlaceWeight> places;

  bool operator==(const SerreWeight& o) const { return places == o.places; }
  bool operator<(const SerreWeight& o) const { return places < o.places; }
};

void check_weight_shape(const PlaceStructure& s, const Weight& w);

PlaceWeight make_place_weight(const PlaceStructure& s, int place,
                              std::vector<int> b, const Int& D);

// V_{k,l} for 2 <= k_tau <= p+1, in canonical form.
SerreWeight normalize_serre_weight(const PlaceStructure& s,
                                   std::span<const std::int64_t> k,
                                   std::span<const std::int64_t> l);
inline SerreWeight normalize_serre_weight(const PlaceStructure& s,
                                          const Weight& w) {
  return normalize_serre_weight(s, w.k, w.l);
}

// prod_tau (b_tau - 1)
Int serre_weight_dimension(const SerreWeight& w);

// Adds c[v] to the twist at each place v.
SerreWeight twist_serre_weight(const PlaceStructure& s, const SerreWeight& w,
                               std::span<const Int> c);
PlaceWeight twist_place_weight(const PlaceStructure& s, int place,
                               const PlaceWeight& w, const Int& c);

bool is_trivial_up_to_twist(const PlaceWeight& w);

}  // namespace swl
