#pragma once

// The weight recipe at the level of inertial characters.  Extension classes
// are not computed: an ExtensionFlag records the only distinctions the
// recipe needs, and candidates that would depend on the distinguished
// subspaces are reported as conditional.

#include <set>
#include <span>
#include <string>
#include <vector>

#include "swl/arith.hpp"
#include "swl/weights.hpp"

namespace swl {

enum class ExtensionFlag { split, generic, peu_ramifiee, tres_ramifiee, unknown };
enum class Certainty { conditional, certain };  // ordered: min is the weaker

struct InertialType {
  enum class Kind { reducible, irreducible };

  int place = 0;
  Kind kind = Kind::reducible;
  Int e1;  // reducible: exponents of eps_{tau_0}, mod p^f - 1
  Int e2;
  ExtensionFlag ext = ExtensionFlag::unknown;
  Int orbit;  // irreducible: smaller of {a, p^f a} mod p^{2f} - 1

  bool operator==(const InertialType&) const = default;
};

// chi_1 = eps^e1 on top, chi_2 = eps^e2 on the diagonal below.  The peu and
// tres ramifiee flags require chi_1 chi_2^{-1} to be cyclotomic.
InertialType make_reducible(const PlaceStructure& s, int place, const Int& e1,
                            const Int& e2, ExtensionFlag ext);
// eps_{2f}^a + eps_{2f}^{p^f a}; a must not be fixed by a -> p^f a.
InertialType make_irreducible(const PlaceStructure& s, int place, const Int& a);

struct WeightCandidate {
  PlaceWeight weight;
  // Reducible: local indices in J.  Irreducible: indices j in [0, 2f) of J'.
  std::vector<int> J;
  Certainty certainty = Certainty::certain;

  bool operator==(const WeightCandidate&) const = default;
  bool operator<(const WeightCandidate& o) const {
    if (!(weight == o.weight)) return weight < o.weight;
    return J < o.J;
  }
};

// Sorted by (b, D, J).
std::vector<WeightCandidate> bdj_candidates(const PlaceStructure& s,
                                           const InertialType& t);

struct ProductCandidate {
  SerreWeight weight;
  Certainty certainty = Certainty::certain;

  bool operator==(const ProductCandidate&) const = default;
};

// One type per place, in place order.
std::vector<ProductCandidate> bdj_product(const PlaceStructure& s,
                                          const std::vector<InertialType>& ts);

// Tensor with prod_tau eps_tau^{-lp_tau} (lp indexed by Sigma_v).
InertialType twist_inertial(const PlaceStructure& s, const InertialType& t,
                            std::span<const std::int64_t> lp);

enum class InducedStructure { split, inert_quadratic };

// k-vectors forced by an inertial type induced from a ramified quadratic
// extension, matched against V_{k,0} (split) or V_{k,-k} (inert).
std::set<std::vector<int>> induced_character_weights(int p, InducedStructure st);

const char* to_string(ExtensionFlag f);
const char* to_string(Certainty c);
ExtensionFlag parse_extension_flag(const std::string& s);

}  // namespace swl
