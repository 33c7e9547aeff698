#pragma once

// Integer expressions over named parameters, and the text notation for
// symbolic classes used by fixtures and the command line:
//
//   2 e^{1-p} Sym[0]^{p-2} Sym[1]^1 + e^{-p} Sym[0]^0 Sym[1]^2
//
// `e^x` / `det^x` is det_{[tau_0]}^x at the only place, `det[i]^x` and
// `Sym[i]^x` refer to the global embedding i, and an unindexed `Sym^x` needs
// a single embedding.  Exponents are integer literals, identifiers, or
// braced / parenthesised expressions.  Missing embeddings default to Sym^0.

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "swl/arith.hpp"
#include "swl/groth.hpp"

namespace swl {

using Env = std::map<std::string, Int>;

class Expr {
 public:
  struct Node;

  Expr() = default;
  explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Expr number(const Int& v);
  static Expr binary(char op, Expr a, Expr b);

  // Comparisons and && / || yield 0 or 1.  `/` is exact division; div() and
  // mod() are the floor versions; min(), max() and ceil_div() are provided.
  Int eval(const Env& env) const;
  bool valid() const { return node_ != nullptr; }

 private:
  std::shared_ptr<const Node> node_;
};

Expr parse_expr(std::string_view text);
Int eval_expr(std::string_view text, const Env& env);

struct FactorExpr {
  bool is_det = false;
  int embedding = -1;  // -1: unindexed
  Expr exponent;
};

struct TermExpr {
  Expr coef;
  std::vector<FactorExpr> factors;
};

struct ClassExpr {
  std::vector<TermExpr> terms;

  // Adds delta to the coefficient of term i (used by mutation tests).
  ClassExpr with_bumped_coefficient(std::size_t i, long long delta) const;
};

ClassExpr parse_class(std::string_view text);

SymbolicClass eval_class(const ClassExpr& c, const PlaceStructure& s,
                         const Env& env);

// Parses and evaluates in one step, with p bound from the structure.
SymbolicClass parse_symbolic(std::string_view text, const PlaceStructure& s,
                             const Env& extra = {});

}  // namespace swl
