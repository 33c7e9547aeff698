#pragma once

// Grothendieck group of mod p representations of prod_v GL_2(F_v).
//
// A SymbolicClass is a formal integer combination of unreduced tensor
// products det^D (x)_tau Sym^{n_tau}_{[tau]} with arbitrary integer degrees,
// subject to [Sym^{-1}] = 0 and [Sym^n] = -[det^{n+1} Sym^{-n-2}] for n < -1.
// reduce() rewrites such a combination into irreducible constituents.

#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <vector>

#include "swl/arith.hpp"
#include "swl/weights.hpp"

namespace swl {

inline constexpr long long kDefaultRewriteFuel = 1'000'000;

// det_{[tau_0]}^D (x)_i Sym^{n_i}_{[tau_i]} at one place; D is canonical
// modulo p^f - 1.
struct PlaceSymbol {
  Int D;
  std::vector<std::int64_t> n;

  bool operator==(const PlaceSymbol& o) const { return n == o.n && D == o.D; }
  bool operator<(const PlaceSymbol& o) const {
    if (n != o.n) return n < o.n;
    return D < o.D;
  }
};

struct SymbolTerm {
  long long coef = 1;
  std::vector<PlaceSymbol> places;
};

class SymbolicClass {
 public:
  explicit SymbolicClass(PlaceStructure s) : structure_(std::move(s)) {}

  // coef * (x)_tau det^{d_tau}_{[tau]} Sym^{n_tau}_{[tau]}, vectors over Sigma.
  static SymbolicClass monomial(const PlaceStructure& s,
                                std::span<const Int> d,
                                std::span<const std::int64_t> n,
                                long long coef = 1);
  // [V_{k,l}] = (x)_tau det^{l_tau} Sym^{k_tau - 2}
  static SymbolicClass from_weight(const PlaceStructure& s, const Weight& w);
  static SymbolicClass from_serre_weight(const PlaceStructure& s,
                                         const SerreWeight& w);

  const PlaceStructure& structure() const { return structure_; }
  const std::vector<SymbolTerm>& terms() const { return terms_; }

  void add_term(SymbolTerm t);
  SymbolicClass& operator+=(const SymbolicClass& o);
  SymbolicClass& operator-=(const SymbolicClass& o);
  SymbolicClass scaled(long long c) const;
  // Tensor with det^{c_v} at every place v.
  SymbolicClass twisted(std::span<const Int> c) const;

  // sum coef * prod (n_tau + 1); additive on the Grothendieck group.
  Int dimension() const;

 private:
  PlaceStructure structure_;
  std::vector<SymbolTerm> terms_;
};

class VirtualClass {
 public:
  explicit VirtualClass(PlaceStructure s) : structure_(std::move(s)) {}

  const PlaceStructure& structure() const { return structure_; }
  const std::map<SerreWeight, long long>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  long long multiplicity(const SerreWeight& w) const;
  void add(const SerreWeight& w, long long m);

  VirtualClass& operator+=(const VirtualClass& o);
  VirtualClass& operator-=(const VirtualClass& o);
  VirtualClass twisted(std::span<const Int> c) const;

  Int dimension() const;
  bool is_effective() const;
  std::set<SerreWeight> support() const;

  bool operator==(const VirtualClass& o) const {
    return structure_ == o.structure_ && terms_ == o.terms_;
  }

 private:
  PlaceStructure structure_;
  std::map<SerreWeight, long long> terms_;
};

VirtualClass operator-(VirtualClass a, const VirtualClass& b);
VirtualClass operator+(VirtualClass a, const VirtualClass& b);

// Per-place decomposition, keyed by the irreducible factor at that place.
using PlaceClass = std::map<PlaceWeight, long long>;

struct ReduceStats {
  long long steps = 0;
};

// Rewrites a single-place symbol with the periodic Grothendieck relation and
// the negative-degree conventions.  `fuel` is decremented once per step.
PlaceClass reduce_place(const PlaceStructure& s, int place,
                        const PlaceSymbol& sym, long long& fuel);

VirtualClass reduce(const SymbolicClass& c, ReduceStats* stats = nullptr);

// True iff b - a has only nonnegative multiplicities.
bool is_subquotient(const VirtualClass& a, const VirtualClass& b);

// Jordan-Hoelder constituents of V_{k,l} (k_tau >= 2).
std::set<SerreWeight> jh_set(const PlaceStructure& s, const Weight& w);

// Tensor product across places of per-place classes (one per place, in order).
VirtualClass tensor_places(const PlaceStructure& s,
                           const std::vector<PlaceClass>& factors,
                           long long coef);

}  // namespace swl
