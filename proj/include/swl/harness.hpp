#pragma once

// Claim registry loaded from JSON fixtures, and the runner that checks each
// claim for a given prime over its declared parameter ranges.
//
// Kinds: identity (reduce-equal classes), subquotient (lhs <= rhs),
// intersection (set relations against JH sets), forcing (induced-character
// weights), poset (<=_Ha implies <=), shift (weight bookkeeping).

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "swl/expr.hpp"
#include "swl/format.hpp"

namespace swl {

// A class operand: class notation, V_{k,-k-l} for a weight (k, l), or
// V_{k',-k'-l'} for (k', l') = stratum_weight(k0, k1).
struct ClassSpec {
  struct WeightRef {
    std::vector<Expr> k, l;
  };
  struct StratumRef {
    Expr k0, k1;
  };
  std::variant<ClassExpr, WeightRef, StratumRef> value;
};

struct Param {
  std::string name;
  Expr from, to;  // inclusive; may refer to p and earlier parameters
};

struct NamedSet {
  std::string name;
  std::vector<ClassExpr> members;
};

struct Claim {
  std::string id;
  std::string anchor;
  std::string kind;
  std::string provenance = "paper";
  std::vector<int> places{2};
  int min_p = 3;
  std::optional<int> max_p;
  std::vector<int> only_p;
  std::vector<Param> params;
  std::vector<std::pair<std::string, Expr>> lets;
  std::vector<Expr> where;

  // identity / subquotient / intersection
  std::optional<ClassSpec> lhs, rhs;
  std::string mode;
  std::optional<ClassExpr> member;
  std::vector<NamedSet> sets;
  std::vector<ClassExpr> exception;

  // forcing
  std::string structure;
  std::vector<std::vector<Expr>> expected_k;

  // poset
  Expr box_lo, box_hi;
  std::vector<std::vector<Expr>> exclude;

  // shift
  std::string check;
  std::vector<Expr> start_k, start_l, aux_k, expected_wk, expected_wl;
  std::vector<std::string> ops;
  std::optional<bool> expected_bool;
  bool expected_none = false;  // le_ha: no witness expected
};

Claim claim_from_json(const json& j);

class ClaimRegistry {
 public:
  static ClaimRegistry load(const std::string& path);
  static ClaimRegistry from_json(const json& j);

  const std::vector<Claim>& claims() const { return claims_; }
  const Claim& find(const std::string& id) const;

 private:
  std::vector<Claim> claims_;
};

bool claim_applies(const Claim& c, int p);

enum class ClaimStatus { pass, fail, skipped };
const char* to_string(ClaimStatus s);

struct ClaimReport {
  std::string id;
  int p = 0;
  ClaimStatus status = ClaimStatus::pass;
  long long cases = 0;
  std::string detail;  // first counterexample on failure
  double seconds = 0;
};

// Throws ParseError when p is not a prime >= 3 or outside the claim's range.
ClaimReport run_claim(const Claim& c, int p);

struct SuiteReport {
  std::vector<ClaimReport> reports;  // sorted by (id, p)
  bool ok() const;
};

// Claims outside their prime range are reported as skipped.
SuiteReport run_suite(const ClaimRegistry& reg, const std::vector<int>& primes);

// Copies of an identity claim with one coefficient of one side bumped by
// +1 or -1; every one of them must fail.
std::vector<Claim> multiplicity_mutants(const Claim& c);

std::string default_fixtures_dir();

}  // namespace swl
