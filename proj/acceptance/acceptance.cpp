// Acceptance suite: one line per criterion, PASS only when the check holds
// and finishes inside its time limit.  Exit status 0 iff every line passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "swl/bdj.hpp"
#include "swl/brauer.hpp"
#include "swl/groth.hpp"
#include "swl/harness.hpp"
#include "swl/shift.hpp"

using namespace swl;
using V = std::vector<std::int64_t>;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;  // counts on success, first failure otherwise
};

void fail(Outcome& o, const std::string& why) {
  if (o.ok) o.detail = why;
  o.ok = false;
}

const ClaimRegistry& registry() {
  static ClaimRegistry reg = ClaimRegistry::load(default_fixtures_dir() + "/paper.claims.json");
  return reg;
}

// Runs the named claims at the given primes; every one must pass.
Outcome run_claims(const std::vector<std::string>& ids, const std::vector<int>& primes) {
  Outcome o;
  long long cases = 0;
  for (const auto& id : ids)
    for (int p : primes) {
      const Claim& c = registry().find(id);
      if (!claim_applies(c, p)) continue;
      auto r = run_claim(c, p);
      cases += r.cases;
      if (r.status != ClaimStatus::pass)
        fail(o, id + " p=" + std::to_string(p) + ": " + to_string(r.status) + " " + r.detail);
    }
  if (o.ok) o.detail = std::to_string(ids.size()) + " claims, " + std::to_string(cases) + " cases";
  return o;
}

// Every k in [2, kmax]^d.
void for_each_k(int d, std::int64_t kmax, const std::function<void(const V&)>& fn) {
  V k(static_cast<std::size_t>(d), 2);
  while (true) {
    fn(k);
    std::size_t i = 0;
    while (i < k.size() && ++k[i] > kmax) k[i++] = 2;
    if (i == k.size()) return;
  }
}

Outcome oracle_equivalence() {
  Outcome o;
  long long n = 0;
  for (int p : {3, 5, 7})
    for (int f : {1, 2}) {
      PlaceStructure s(p, {f});
      for_each_k(f, 3 * p + 1, [&](const V& k) {
        auto sym = SymbolicClass::from_weight(s, Weight{k, V(k.size(), 0)});
        ++n;
        if (!(reduce(sym) == brauer_decompose(sym)))
          fail(o, "p=" + std::to_string(p) + " k=" + to_text(k));
      });
    }
  if (o.ok) o.detail = std::to_string(n) + " weights";
  return o;
}

Outcome dimension_conservation() {
  Outcome o;
  long long n = 0;
  for (int p : {3, 5, 7})
    for (int f : {1, 2}) {
      PlaceStructure s(p, {f});
      for_each_k(f, 3 * p + 1, [&](const V& k) {
        Int want = 1;
        for (auto x : k) want *= (x - 1);
        Int got = 0;
        auto cls = reduce(SymbolicClass::from_weight(s, Weight{k, V(k.size(), 0)}));
        for (const auto& [w, m] : cls.terms())
          got += serre_weight_dimension(w) * m;
        ++n;
        if (got != want) fail(o, "p=" + std::to_string(p) + " k=" + to_text(k));
      });
    }
  if (o.ok) o.detail = std::to_string(n) + " weights";
  return o;
}

Outcome bdj_recipe() {
  Outcome o;
  long long types = 0;
  for (auto [p, f] : {std::pair{5, 1}, {7, 1}, {5, 2}}) {
    PlaceStructure s(p, {f});
    const Int m = s.modulus(0), m2 = s.modulus(0, 2), q = s.field_size(0);
    const Int cyc = pack_exponents(s, 0, V(static_cast<std::size_t>(f), 1)).exponent;
    std::vector<V> twists;
    for (int i = 0; i < f; ++i) {
      V e(static_cast<std::size_t>(f), 0);
      e[static_cast<std::size_t>(i)] = 1;
      twists.push_back(e);
      e[static_cast<std::size_t>(i)] = -3;
      twists.push_back(e);
    }
    auto keyset = [](const std::vector<WeightCandidate>& cs) {
      std::set<std::pair<PlaceWeight, std::vector<int>>> out;
      for (const auto& c : cs) out.emplace(c.weight, c.J);
      return out;
    };
    for (Int e1 = 0; e1 < m; ++e1)
      for (Int e2 = 0; e2 < m; ++e2) {
        std::vector<ExtensionFlag> flags{ExtensionFlag::split, ExtensionFlag::generic,
                                         ExtensionFlag::unknown};
        if (mod_floor(e1 - e2, m) == cyc) {
          flags.push_back(ExtensionFlag::peu_ramifiee);
          flags.push_back(ExtensionFlag::tres_ramifiee);
        }
        for (auto ext : flags) {
          auto t = make_reducible(s, 0, e1, e2, ext);
          auto cs = bdj_candidates(s, t);
          ++types;
          if (cs.empty()) fail(o, "empty: p=" + std::to_string(p) + " e1=" + e1.str() + " e2=" + e2.str());
          if (ext != ExtensionFlag::generic) continue;
          std::set<std::pair<PlaceWeight, std::vector<int>>> swapped;
          for (const auto& c : cs) {
            std::vector<int> comp;
            for (int i = 0; i < f; ++i)
              if (std::find(c.J.begin(), c.J.end(), i) == c.J.end()) comp.push_back(i);
            swapped.emplace(c.weight, comp);
          }
          if (keyset(bdj_candidates(s, make_reducible(s, 0, e2, e1, ext))) != swapped)
            fail(o, "swap: e1=" + e1.str() + " e2=" + e2.str());
          for (const auto& lp : twists) {
            V neg(lp);
            for (auto& x : neg) x = -x;
            Int c = pack_exponents(s, 0, neg).exponent;
            std::set<std::pair<PlaceWeight, std::vector<int>>> want;
            for (const auto& x : cs) want.emplace(twist_place_weight(s, 0, x.weight, c), x.J);
            if (keyset(bdj_candidates(s, twist_inertial(s, t, lp))) != want)
              fail(o, "twist: e1=" + e1.str() + " e2=" + e2.str());
          }
        }
      }
    for (Int a = 0; a < m2; ++a) {
      if (mod_floor(a * q, m2) == a) continue;
      auto t = make_irreducible(s, 0, a);
      if (t.orbit != a) continue;  // one representative per orbit
      auto cs = bdj_candidates(s, t);
      ++types;
      if (cs.empty()) fail(o, "empty: p=" + std::to_string(p) + " orbit=" + a.str());
      for (const auto& lp : twists) {
        V neg(lp);
        for (auto& x : neg) x = -x;
        Int c = pack_exponents(s, 0, neg).exponent;
        std::set<PlaceWeight> want, got;
        for (const auto& x : cs) want.insert(twist_place_weight(s, 0, x.weight, c));
        for (const auto& x : bdj_candidates(s, twist_inertial(s, t, lp))) got.insert(x.weight);
        if (got != want) fail(o, "twist: orbit=" + a.str());
      }
    }
  }
  if (o.ok) o.detail = std::to_string(types) + " types";
  return o;
}

Outcome ordinary_consistency() {
  Outcome o;
  long long n = 0;
  for (int p : {5, 7})
    for (int f : {1, 2}) {
      PlaceStructure s(p, {f});
      const std::vector<int> all = f == 1 ? std::vector<int>{0} : std::vector<int>{0, 1};
      for_each_k(f, p + 1, [&](const V& k) {
        V km1(k);
        for (auto& x : km1) x -= 1;
        auto t = make_reducible(s, 0, pack_exponents(s, 0, km1).exponent, 0, ExtensionFlag::generic);
        auto cs = bdj_candidates(s, t);
        auto certainty = [&](std::vector<int> b) -> std::optional<Certainty> {
          for (const auto& c : cs)
            if (c.weight.b == b && c.weight.D == 0 && c.J == all) return c.certainty;
          return std::nullopt;
        };
        bool parallel2 = std::all_of(k.begin(), k.end(), [](auto x) { return x == 2; });
        ++n;
        if (!parallel2) {
          if (certainty(std::vector<int>(k.begin(), k.end())) != Certainty::certain)
            fail(o, "p=" + std::to_string(p) + " k=" + to_text(k));
        } else {
          if (certainty(std::vector<int>(k.size(), p + 1)) != Certainty::certain ||
              certainty(std::vector<int>(k.size(), 2)) == Certainty::certain)
            fail(o, "parallel 2 at p=" + std::to_string(p) + " f=" + std::to_string(f));
        }
      });
    }
  if (o.ok) o.detail = std::to_string(n) + " weights";
  return o;
}

Outcome induced_forcing() {
  Outcome o;
  for (int p : {5, 7, 11, 13}) {
    int a = (p + 1) / 2, b = (p + 3) / 2;
    if (induced_character_weights(p, InducedStructure::split) != std::set<std::vector<int>>{{a}, {b}})
      fail(o, "split p=" + std::to_string(p));
    if (induced_character_weights(p, InducedStructure::inert_quadratic) !=
        std::set<std::vector<int>>{{a, a}, {a, b}, {b, a}, {b, b}})
      fail(o, "inert p=" + std::to_string(p));
  }
  Outcome fx = run_claims({"forcing.split", "forcing.inert"}, {5, 7, 11, 13});
  if (!fx.ok) fail(o, fx.detail);
  if (o.ok) o.detail = "p in {5,7,11,13}";
  return o;
}

Outcome weight_calculus() {
  std::vector<std::string> ids;
  for (const auto& c : registry().claims())
    if (c.kind == "shift") ids.push_back(c.id);
  Outcome o = run_claims(ids, {5, 7, 11, 13});
  PlaceStructure s(5, {2});
  auto w = hasse_shift(s, theta_shift(s, Weight{{2, 2}, {0, 0}}, 1), 0);
  if (!(w == Weight{{6, 8}, {0, -1}})) fail(o, "Ha0 Theta1 (2,2) = " + to_text(w));
  if (cone_reduce(s, V{1, 20}) != V{3, 10}) fail(o, "cone_reduce (1,20)");
  if (in_liftable_cone(s, V{2, 6}) || !in_liftable_cone(s, V{3, 3})) fail(o, "liftable cone");
  return o;
}

Outcome mutation_sensitivity() {
  Outcome o;
  long long killed = 0, total = 0;
  for (const auto& c : registry().claims()) {
    if (c.kind != "identity") continue;
    for (const auto& m : multiplicity_mutants(c))
      for (int p : {5, 7}) {
        if (!claim_applies(m, p)) continue;
        ++total;
        if (run_claim(m, p).status == ClaimStatus::fail) ++killed;
        else fail(o, "survived: " + m.id + " p=" + std::to_string(p));
      }
  }
  if (total == 0) fail(o, "no mutants generated");
  if (o.ok) o.detail = std::to_string(killed) + "/" + std::to_string(total) + " mutants killed";
  return o;
}

struct Criterion {
  int number;
  const char* name;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "oracle equivalence", 60, oracle_equivalence},
      {2, "dimension conservation", 60, dimension_conservation},
      {3, "paper identity fixtures", 30,
       [] {
         return run_claims({"split.sym_p_plus_1", "twotwo.identity", "twothree.identity1",
                            "twothree.identity2", "twofour.identity1", "twofour.identity2",
                            "geq2.identity1", "geq2.identity2", "geq2.k1_eq_p",
                            "remark.identity1", "remark.identity2", "one_VinW"},
                           {5, 7, 11, 13});
       }},
      {4, "Grothendieck relation and induction identity", 60,
       [] {
         return run_claims({"Groth_relation", "Groth_ineq.step1", "Groth_ineq.step2",
                            "Grothendieck_eq"},
                           {5, 7});
       }},
      {5, "Hasse order implies subquotient", 60, [] { return run_claims({"Groth_Ha"}, {5}); }},
      {6, "BDJ recipe nonempty, swap, twist", 120, bdj_recipe},
      {7, "ordinary consistency", 60, ordinary_consistency},
      {8, "induced-character forcing", 30, induced_forcing},
      {9, "weight-calculus fixtures", 30, weight_calculus},
      {10, "mutation sensitivity", 60, mutation_sensitivity},
  };

  bool all = true;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = Outcome{false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool pass = o.ok && secs < c.limit_seconds;
    if (o.ok && !pass) o.detail += "; over time limit";
    all = all && pass;
    std::printf("%s  %2d  %-46s %7.2fs / %3.0fs  %s\n", pass ? "PASS" : "FAIL", c.number, c.name,
                secs, c.limit_seconds, o.detail.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
