#include "swl/bdj.hpp"

#include <algorithm>
#include <map>

#include "swl/error.hpp"

namespace swl {

namespace {

// sum_{i in mask} (b_i - 1) p^i, with mask over [0, n) and b read mod f.
Int packed_sum(const std::vector<int>& b, unsigned mask, int n, int p) {
  Int acc = 0;
  Int pw = 1;
  const auto f = static_cast<int>(b.size());
  for (int j = 0; j < n; ++j) {
    if (mask & (1U << j)) acc += Int(b[static_cast<std::size_t>(j % f)] - 1) * pw;
    pw *= p;
  }
  return acc;
}

bool next_b(std::vector<int>& b, int p) {
  for (auto& x : b) {
    if (++x <= p + 1) return true;
    x = 2;
  }
  return false;
}

Int cyclotomic_exponent(const PlaceStructure& s, int place) {
  std::vector<std::int64_t> ones(static_cast<std::size_t>(s.degree(place)), 1);
  return pack_exponents(s, place, ones).exponent;
}

Int canonical_orbit(const PlaceStructure& s, int place, const Int& a) {
  Int m = s.modulus(place, 2);
  Int x = mod_floor(a, m);
  Int y = mod_floor(x * s.field_size(place), m);
  return std::min(x, y);
}

Certainty reducible_certainty(ExtensionFlag ext, bool full_J, bool trivial) {
  switch (ext) {
    case ExtensionFlag::split:
      return Certainty::certain;
    case ExtensionFlag::generic:
      return full_J && trivial ? Certainty::conditional : Certainty::certain;
    case ExtensionFlag::peu_ramifiee:
      return full_J ? Certainty::certain : Certainty::conditional;
    case ExtensionFlag::unknown:
    case ExtensionFlag::tres_ramifiee:
      return full_J && !trivial ? Certainty::certain : Certainty::conditional;
  }
  return Certainty::conditional;
}

}  // namespace

InertialType make_reducible(const PlaceStructure& s, int place, const Int& e1,
                            const Int& e2, ExtensionFlag ext) {
  Int m = s.modulus(place);
  InertialType t;
  t.place = place;
  t.kind = InertialType::Kind::reducible;
  t.e1 = mod_floor(e1, m);
  t.e2 = mod_floor(e2, m);
  t.ext = ext;
  if ((ext == ExtensionFlag::peu_ramifiee || ext == ExtensionFlag::tres_ramifiee) &&
      mod_floor(t.e1 - t.e2, m) != cyclotomic_exponent(s, place))
    throw DomainError("peu/tres ramifiee flags need chi_1 chi_2^{-1} cyclotomic");
  return t;
}

InertialType make_irreducible(const PlaceStructure& s, int place, const Int& a) {
  Int m = s.modulus(place, 2);
  Int x = mod_floor(a, m);
  if (mod_floor(x * s.field_size(place), m) == x)
    throw DomainError("orbit exponent " + x.str() +
                      " is fixed by p^f and gives a reducible type");
  InertialType t;
  t.place = place;
  t.kind = InertialType::Kind::irreducible;
  t.orbit = canonical_orbit(s, place, x);
  t.ext = ExtensionFlag::unknown;
  return t;
}

std::vector<WeightCandidate> bdj_candidates(const PlaceStructure& s,
                                           const InertialType& t) {
  const int f = s.degree(t.place);
  const int p = s.p();
  const Int m = s.modulus(t.place);
  std::map<std::pair<PlaceWeight, std::vector<int>>, Certainty> found;

  std::vector<int> b(static_cast<std::size_t>(f), 2);
  if (t.kind == InertialType::Kind::reducible) {
    const unsigned full = (1U << f) - 1;
    do {
      const bool trivial = std::all_of(b.begin(), b.end(), [](int x) { return x == 2; });
      const bool steinberg = std::all_of(b.begin(), b.end(), [p](int x) { return x == p + 1; });
      for (unsigned J = 0; J <= full; ++J) {
        Int D = mod_floor(t.e2 - packed_sum(b, full & ~J, f, p), m);
        if (mod_floor(packed_sum(b, J, f, p) + D, m) != t.e1) continue;
        Certainty c;
        if (t.ext == ExtensionFlag::tres_ramifiee) {
          if (!steinberg) continue;
          c = Certainty::certain;
        } else {
          c = reducible_certainty(t.ext, J == full, trivial);
        }
        std::vector<int> Jv;
        for (int i = 0; i < f; ++i)
          if (J & (1U << i)) Jv.push_back(i);
        found.emplace(std::pair{PlaceWeight{b, D}, std::move(Jv)}, c);
      }
    } while (next_b(b, p));
  } else {
    const Int q = s.field_size(t.place);
    const Int m2 = s.modulus(t.place, 2);
    const Int targets[2] = {t.orbit, mod_floor(t.orbit * q, m2)};
    do {
      // J' holds tau'_0 and exactly one lift of every other tau_i.
      for (unsigned choice = 0; choice < (1U << (f - 1)); ++choice) {
        unsigned mask = 1U;
        for (int i = 1; i < f; ++i)
          mask |= (choice & (1U << (i - 1))) ? (1U << (i + f)) : (1U << i);
        Int S = packed_sum(b, mask, 2 * f, p);
        for (const Int& target : targets) {
          Int diff = mod_floor(target - S, m2);
          if (diff % (q + 1) != 0) continue;
          Int D = mod_floor(diff / (q + 1), m);
          std::vector<int> Jv;
          for (int j = 0; j < 2 * f; ++j)
            if (mask & (1U << j)) Jv.push_back(j);
          found.emplace(std::pair{PlaceWeight{b, D}, std::move(Jv)},
                        Certainty::certain);
        }
      }
    } while (next_b(b, p));
  }

  std::vector<WeightCandidate> out;
  for (auto& [key, c] : found) out.push_back(WeightCandidate{key.first, key.second, c});
  return out;
}

std::vector<ProductCandidate> bdj_product(const PlaceStructure& s,
                                          const std::vector<InertialType>& ts) {
  if (static_cast<int>(ts.size()) != s.place_count())
    throw DomainError("bdj_product needs exactly one inertial type per place");
  std::vector<std::map<PlaceWeight, Certainty>> per_place;
  for (int v = 0; v < s.place_count(); ++v) {
    const auto& t = ts[static_cast<std::size_t>(v)];
    if (t.place != v)
      throw DomainError("inertial type for place " + std::to_string(t.place) +
                        " given in position " + std::to_string(v));
    std::map<PlaceWeight, Certainty> weights;
    for (const auto& c : bdj_candidates(s, t)) {
      auto [it, inserted] = weights.emplace(c.weight, c.certainty);
      if (!inserted) it->second = std::max(it->second, c.certainty);
    }
    per_place.push_back(std::move(weights));
  }
  std::vector<ProductCandidate> acc{{SerreWeight{}, Certainty::certain}};
  for (const auto& weights : per_place) {
    std::vector<ProductCandidate> next;
    for (const auto& partial : acc)
      for (const auto& [w, c] : weights) {
        ProductCandidate x = partial;
        x.weight.places.push_back(w);
        x.certainty = std::min(x.certainty, c);
        next.push_back(std::move(x));
      }
    acc = std::move(next);
  }
  return acc;
}

InertialType twist_inertial(const PlaceStructure& s, const InertialType& t,
                            std::span<const std::int64_t> lp) {
  std::vector<std::int64_t> neg(lp.begin(), lp.end());
  for (auto& x : neg) x = -x;
  Int c = pack_exponents(s, t.place, neg).exponent;
  if (t.kind == InertialType::Kind::reducible) {
    InertialType out = t;
    Int m = s.modulus(t.place);
    out.e1 = mod_floor(t.e1 + c, m);
    out.e2 = mod_floor(t.e2 + c, m);
    return out;
  }
  return make_irreducible(s, t.place, t.orbit + c * (s.field_size(t.place) + 1));
}

std::set<std::vector<int>> induced_character_weights(int p, InducedStructure st) {
  const int f = st == InducedStructure::split ? 1 : 2;
  PlaceStructure s(p, {f});
  const Int q = s.field_size(0);
  const Int m = s.modulus(0);
  const Int m2 = s.modulus(0, 2);
  std::set<std::vector<int>> out;

  auto collect = [&](const InertialType& t) {
    for (const auto& c : bdj_candidates(s, t)) {
      // Split: V_{k,0}.  Inert: V_{k,-k}, i.e. D = -k_0 - p k_1.
      Int target = 0;
      if (st == InducedStructure::inert_quadratic)
        target = mod_floor(Int(-c.weight.b[0]) - Int(p) * c.weight.b[1], m);
      if (c.weight.D == target) out.insert(c.weight.b);
    }
  };

  const Int half = m / 2;
  for (Int n = 0; n < 2 * m; ++n) {
    if (n % 2 == 0) {
      Int x = n / 2;
      collect(make_reducible(s, 0, x, x + half, ExtensionFlag::unknown));
      collect(make_reducible(s, 0, x + half, x, ExtensionFlag::unknown));
    } else {
      collect(make_irreducible(s, 0, mod_floor(n * (q + 1) / 2, m2)));
    }
  }
  return out;
}

const char* to_string(ExtensionFlag f) {
  switch (f) {
    case ExtensionFlag::split: return "split";
    case ExtensionFlag::generic: return "generic";
    case ExtensionFlag::peu_ramifiee: return "peu_ramifiee";
    case ExtensionFlag::tres_ramifiee: return "tres_ramifiee";
    case ExtensionFlag::unknown: return "unknown";
  }
  return "unknown";
}

const char* to_string(Certainty c) {
  return c == Certainty::certain ? "certain" : "conditional_on_extension_class";
}

ExtensionFlag parse_extension_flag(const std::string& s) {
  if (s == "split") return ExtensionFlag::split;
  if (s == "generic") return ExtensionFlag::generic;
  if (s == "peu_ramifiee" || s == "peu") return ExtensionFlag::peu_ramifiee;
  if (s == "tres_ramifiee" || s == "tres") return ExtensionFlag::tres_ramifiee;
  if (s == "unknown") return ExtensionFlag::unknown;
  throw ParseError("unknown extension flag '" + s + "'");
}

}  // namespace swl
