#pragma once

// Independent decomposition oracle: Brauer characters on the p-regular
// classes of GL_2(F_q), computed exactly modulo an auxiliary prime
// ell = 1 mod q^2 - 1, and a block-by-block linear solve against the
// characters of the irreducibles.  Shares nothing with the rewrite engine
// beyond the data types.

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "swl/groth.hpp"

namespace swl {

enum class Exec { serial, parallel };

struct OracleOptions {
  long long max_group_size = 10'000;  // cap on p^{2f} per place
  Exec exec = Exec::parallel;
};

// Character data for one GL_2(F_q), q = p^f.  Classes are pairs (a, b) of
// exponents of a generator of F_{q^2}^x: split and central classes have both
// exponents divisible by q + 1, non-split ones are {a, q a}.
class BrauerTable {
 public:
  struct Block {
    std::vector<PlaceWeight> irreducibles;
    std::vector<std::size_t> pivots;      // rows of `values` used for solving
    std::vector<std::uint64_t> inverse;   // K x K, row-major
    std::vector<std::uint64_t> values;    // rows x K, row-major
  };

  BrauerTable(int p, int f, Exec exec);

  // Shared, lazily built table; throws DomainError above the cap.
  static std::shared_ptr<const BrauerTable> get(int p, int f,
                                                long long max_group_size);

  int p() const { return p_; }
  int f() const { return f_; }
  std::uint64_t q() const { return q_; }
  std::uint64_t modulus() const { return ell_; }
  std::size_t class_count() const { return class_count_; }
  const std::vector<std::pair<std::uint64_t, std::uint64_t>>& rows() const {
    return reps_;
  }
  const std::vector<Block>& blocks() const { return blocks_; }

  // Brauer character of det^D (x)_i Sym^{n_i}_{[tau_i]} at class (a, b),
  // modulo ell.
  std::uint64_t character(const PlaceSymbol& sym, std::uint64_t a,
                          std::uint64_t b) const;

  // Projection of the symbol's character to central character c, at every
  // row; result is rows x (q - 1), row-major.
  std::vector<std::uint64_t> projected_character(const PlaceSymbol& sym,
                                                 Exec exec) const;

  PlaceClass decompose(const PlaceSymbol& sym, Exec exec) const;

 private:
  std::uint64_t sym_factor(std::int64_t n, std::uint64_t A,
                           std::uint64_t B) const;

  int p_;
  int f_;
  std::uint64_t q_;
  std::uint64_t N_;
  std::uint64_t ell_;
  std::vector<std::uint64_t> omega_pow_;   // omega^u, u in [0, N)
  std::vector<std::uint64_t> inv_gap_;     // 1 / (omega^u - 1), u in [1, N)
  std::vector<std::uint64_t> p_pow_;       // p^i mod N
  std::vector<std::pair<std::uint64_t, std::uint64_t>> reps_;
  std::size_t class_count_ = 0;
  std::vector<Block> blocks_;
};

PlaceClass brauer_decompose_place(const PlaceStructure& s, int place,
                                  const PlaceSymbol& sym,
                                  const OracleOptions& opts = {});

VirtualClass brauer_decompose(const SymbolicClass& c,
                              const OracleOptions& opts = {});

}  // namespace swl
