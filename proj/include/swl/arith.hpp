#pragma once

// Exponent bookkeeping for tame inertial characters and the Frobenius-cyclic
// combinatorics of the embeddings Sigma = disjoint union of Sigma_v.
//
// Sign convention: the product of the fundamental characters over Sigma_v is
// the mod p cyclotomic character (some references use its inverse).  Every
// character of inertia at v is stored as an exponent of eps_{tau_0}, the
// fundamental character of the place's first embedding, using
// eps_{Fr o tau} = eps_tau^p.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <span>
#include <vector>

namespace swl {

using Int = boost::multiprecision::cpp_int;

// Least nonnegative residue of a modulo m (m > 0).
Int mod_floor(const Int& a, const Int& m);
Int ipow(const Int& base, unsigned exponent);
bool is_prime(long long n);

class PlaceStructure {
 public:
  // Throws DomainError unless p is a prime >= 3 and every degree is >= 1.
  PlaceStructure(int p, std::vector<int> degrees);

  int p() const { return p_; }
  const std::vector<int>& degrees() const { return degrees_; }
  int place_count() const { return static_cast<int>(degrees_.size()); }
  int degree(int place) const;
  int total_degree() const { return total_; }

  // Global embedding index of tau_0 at the given place.  Embeddings are
  // numbered place-major: tau_{v,i} has global index offset(v) + i.
  int offset(int place) const;
  int place_of(int tau) const;
  int local_index(int tau) const;
  int embedding(int place, int local) const { return offset(place) + local; }

  int frobenius(int tau) const;
  int frobenius_inverse(int tau) const;

  // p^(n * f_v) - 1, the order of the niveau-(n f_v) fundamental character.
  Int modulus(int place, int niveau_multiple = 1) const;
  // p^f_v
  Int field_size(int place) const;

  bool operator==(const PlaceStructure& other) const {
    return p_ == other.p_ && degrees_ == other.degrees_;
  }

 private:
  int p_;
  std::vector<int> degrees_;
  std::vector<int> offsets_;
  int total_ = 0;
};

// A tame character of inertia at one place, as the exponent of the
// fundamental character of niveau `niveau` (a multiple of f_v).
struct CharExponent {
  int place = 0;
  int niveau = 1;
  Int exponent;  // least nonnegative residue mod p^niveau - 1

  bool operator==(const CharExponent&) const = default;
};

CharExponent make_exponent(const PlaceStructure& s, int place, int niveau,
                           const Int& value);

// sum_i a_i p^i mod p^f_v - 1 for a vector indexed by Sigma_v.
CharExponent pack_exponents(const PlaceStructure& s, int place,
                            std::span<const std::int64_t> a);
CharExponent pack_exponents(const PlaceStructure& s, int place,
                            std::span<const Int> a);

// Multiplies the exponent by p (relabels eps_tau as eps_{Fr o tau}).
CharExponent frobenius_twist(const PlaceStructure& s, const CharExponent& e);

// Re-expresses an exponent of eps_{tau_from} as an exponent of eps_{tau_to},
// both local indices modulo the niveau.
CharExponent rebase(const PlaceStructure& s, const CharExponent& e,
                    int from_local, int to_local);

// Lifts a niveau-f exponent to niveau 2f (the restriction of a character of
// inertia at v to the inertia of the unramified quadratic extension).
CharExponent lift_to_double_niveau(const PlaceStructure& s,
                                   const CharExponent& e);

}  // namespace swl
