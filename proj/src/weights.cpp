#include "swl/weights.hpp"

#include <algorithm>

#include "swl/error.hpp"

namespace swl {

void check_weight_shape(const PlaceStructure& s, const Weight& w) {
  auto d = static_cast<std::size_t>(s.total_degree());
  if (w.k.size() != d || w.l.size() != d)
    throw DomainError("weight vectors must have length " + std::to_string(d));
}

PlaceWeight make_place_weight(const PlaceStructure& s, int place,
                              std::vector<int> b, const Int& D) {
  if (static_cast<int>(b.size()) != s.degree(place))
    throw DomainError("Serre weight at place " + std::to_string(place) +
                      " needs " + std::to_string(s.degree(place)) + " entries");
  for (int x : b)
    if (x < 2 || x > s.p() + 1)
      throw DomainError("Serre weight entry " + std::to_string(x) +
                        " outside [2, p+1]");
  return PlaceWeight{std::move(b), mod_floor(D, s.modulus(place))};
}

SerreWeight normalize_serre_weight(const PlaceStructure& s,
                                   std::span<const std::int64_t> k,
                                   std::span<const std::int64_t> l) {
  auto d = static_cast<std::size_t>(s.total_degree());
  if (k.size() != d || l.size() != d)
    throw DomainError("weight vectors must have length " + std::to_string(d));
  SerreWeight out;
  out.places.reserve(static_cast<std::size_t>(s.place_count()));
  for (int v = 0; v < s.place_count(); ++v) {
    auto first = static_cast<std::size_t>(s.offset(v));
    auto f = static_cast<std::size_t>(s.degree(v));
    std::vector<int> b;
    for (std::size_t i = 0; i < f; ++i) {
      std::int64_t kt = k[first + i];
      if (kt < 2 || kt > s.p() + 1)
        throw DomainError("k = " + std::to_string(kt) +
                          " is outside the Serre weight range [2, p+1]");
      b.push_back(static_cast<int>(kt));
    }
    Int D = pack_exponents(s, v, l.subspan(first, f)).exponent;
    out.places.push_back(PlaceWeight{std::move(b), std::move(D)});
  }
  return out;
}

Int serre_weight_dimension(const SerreWeight& w) {
  Int dim = 1;
  for (const auto& pw : w.places)
    for (int b : pw.b) dim *= (b - 1);
  return dim;
}

PlaceWeight twist_place_weight(const PlaceStructure& s, int place,
                               const PlaceWeight& w, const Int& c) {
  return PlaceWeight{w.b, mod_floor(w.D + c, s.modulus(place))};
}

SerreWeight twist_serre_weight(const PlaceStructure& s, const SerreWeight& w,
                               std::span<const Int> c) {
  if (static_cast<int>(c.size()) != s.place_count() ||
      static_cast<int>(w.places.size()) != s.place_count())
    throw DomainError("one twist exponent per place is required");
  SerreWeight out;
  for (int v = 0; v < s.place_count(); ++v)
    out.places.push_back(twist_place_weight(
        s, v, w.places[static_cast<std::size_t>(v)], c[static_cast<std::size_t>(v)]));
  return out;
}

bool is_trivial_up_to_twist(const PlaceWeight& w) {
  return std::all_of(w.b.begin(), w.b.end(), [](int b) { return b == 2; });
}

}  // namespace swl
