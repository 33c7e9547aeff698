#include <cstdlib>

#include "doctest.h"
#include "gen.hpp"
#include "swl/brauer.hpp"
#include "swl/error.hpp"
#include "swl/expr.hpp"
#include "swl/groth.hpp"

using namespace swl;

namespace {

VirtualClass red(const PlaceStructure& s, const char* text) {
  return reduce(parse_symbolic(text, s));
}

SerreWeight sw(const PlaceStructure& s, std::vector<int> b, long long D) {
  return SerreWeight{{make_place_weight(s, 0, std::move(b), Int(D))}};
}

// One random single-place term.
SymbolTerm random_term(const PlaceStructure& s, std::int64_t lo, std::int64_t hi) {
  SymbolTerm t;
  t.coef = gen::integer(-3, 3);
  if (t.coef == 0) t.coef = 1;
  for (int v = 0; v < s.place_count(); ++v)
    t.places.push_back(PlaceSymbol{Int(gen::integer(-50, 50)),
                                   gen::vec(static_cast<std::size_t>(s.degree(v)), lo, hi)});
  return t;
}

SymbolicClass single(const PlaceStructure& s, SymbolTerm t) {
  SymbolicClass c(s);
  c.add_term(std::move(t));
  return c;
}

// Relabels tau_i as tau_{i+1} at place 0.
SymbolicClass frobenius(const SymbolicClass& c) {
  const auto& s = c.structure();
  SymbolicClass out(s);
  for (auto t : c.terms()) {
    auto& ps = t.places[0];
    auto f = ps.n.size();
    std::vector<std::int64_t> n(f);
    for (std::size_t i = 0; i < f; ++i) n[(i + 1) % f] = ps.n[i];
    ps.n = n;
    ps.D *= s.p();
    out.add_term(std::move(t));
  }
  return out;
}

VirtualClass frobenius(const VirtualClass& c) {
  const auto& s = c.structure();
  VirtualClass out(s);
  for (const auto& [orig, m] : c.terms()) {
    SerreWeight w = orig;
    auto& pw = w.places[0];
    auto f = pw.b.size();
    std::vector<int> b(f);
    for (std::size_t i = 0; i < f; ++i) b[(i + 1) % f] = pw.b[i];
    pw = make_place_weight(s, 0, b, pw.D * s.p());
    out.add(w, m);
  }
  return out;
}

}  // namespace

TEST_CASE("reduce examples") {
  PlaceStructure s(5, {1});
  VirtualClass sym5(s);
  sym5.add(sw(s, {3}, 0), 1);
  sym5.add(sw(s, {5}, 1), 1);
  CHECK(red(s, "Sym^5") == sym5);

  VirtualClass id(s);
  id.add(sw(s, {2}, 0), 1);
  id.add(sw(s, {4}, -1), 1);
  id.add(sw(s, {4}, -3), 1);
  CHECK(red(s, "det^-1 Sym^6") == id);
  CHECK(red(s, "det^-1 Sym^6") == red(s, "Sym^0 + det^-1 Sym^2 + det^-3 Sym^2"));

  PlaceStructure s2(5, {2});
  CHECK(red(s2, "e^-5 Sym[0]^4 Sym[1]^6") ==
        red(s2, "2 e^-4 Sym[0]^3 Sym[1]^1 + Sym[0]^0 Sym[1]^0 + e^-5 Sym[0]^0 Sym[1]^2 + "
                "e^5 Sym[0]^4 Sym[1]^2"));
}

TEST_CASE("frozen oracle fixtures") {
  // Values produced by the Brauer-character oracle and frozen here.
  PlaceStructure s(5, {1});
  VirtualClass sym8(s);
  sym8.add(sw(s, {2}, 0), 1);
  sym8.add(sw(s, {4}, 1), 1);
  sym8.add(sw(s, {6}, 0), 1);
  CHECK(red(s, "Sym^8") == sym8);

  PlaceStructure s2(5, {2});
  std::set<SerreWeight> jh28{sw(s2, {2, 4}, 10), sw(s2, {3, 3}, 0)};
  CHECK(jh_set(s2, Weight{{2, 8}, {0, 0}}) == jh28);
}

TEST_CASE("negative degree conventions") {
  PlaceStructure s(7, {1});
  CHECK(red(s, "Sym^-1").empty());
  CHECK(red(s, "Sym^-3") == red(s, "-det^-2 Sym^1"));
  CHECK(red(s, "Sym^4 - Sym^4").empty());
}

TEST_CASE("subquotient and jh") {
  PlaceStructure s(5, {2});
  CHECK(is_subquotient(red(s, "e^34 Sym[1]^7"), red(s, "Sym[0]^1 Sym[1]^6")));
  PlaceStructure s1(5, {1});
  auto a = red(s1, "2 Sym^0"), b = red(s1, "Sym^0");
  CHECK(is_subquotient(a, a));
  CHECK(!is_subquotient(a, b));
  CHECK(is_subquotient(b, a));
  CHECK_THROWS_AS(is_subquotient(a, red(s, "Sym[0]^0")), DomainError);

  CHECK(jh_set(s1, Weight{{4}, {0}}) == std::set<SerreWeight>{sw(s1, {4}, 0)});
  CHECK(jh_set(s1, Weight{{8}, {-1}}) ==
        std::set<SerreWeight>{sw(s1, {2}, 0), sw(s1, {4}, -1), sw(s1, {4}, -3)});
  CHECK_THROWS_AS(jh_set(s1, Weight{{1}, {0}}), DomainError);
}

TEST_CASE("multi-place tensor") {
  PlaceStructure s(5, {1, 1});
  auto c = reduce(SymbolicClass::from_weight(s, Weight{{7, 8}, {0, -1}}));
  CHECK(c.dimension() == 6 * 7);
  CHECK(c.terms().size() == 2 * 3);
  CHECK(c == brauer_decompose(SymbolicClass::from_weight(s, Weight{{7, 8}, {0, -1}})));
}

TEST_CASE("fuel") {
  PlaceStructure s(3, {2});
  auto big = parse_symbolic("Sym[0]^80 Sym[1]^80", s);
  setenv("SWL_FUEL", "10", 1);
  CHECK_THROWS_AS(reduce(big), FuelExhausted);
  setenv("SWL_FUEL", "ten", 1);
  CHECK_THROWS_AS(reduce(big), ParseError);
  unsetenv("SWL_FUEL");
  ReduceStats stats;
  auto c = reduce(big, &stats);
  CHECK(stats.steps > 10);
  CHECK(stats.steps < kDefaultRewriteFuel / 2);
  CHECK(c.dimension() == 81 * 81);
}

TEST_CASE("property: dimension is preserved") {
  for (int trial = 0; trial < 300; ++trial) {
    auto s = gen::structure({3, 5, 7}, 3, 2);
    SymbolicClass c(s);
    for (int i = 0; i < 3; ++i) c.add_term(random_term(s, -2 * s.p(), 3 * s.p()));
    REQUIRE(reduce(c).dimension() == c.dimension());
  }
}

TEST_CASE("property: reduced symbols agree with the Brauer oracle") {
  for (int trial = 0; trial < 150; ++trial) {
    auto s = gen::structure({3, 5}, 2, 2);
    SymbolicClass c(s);
    for (int i = 0; i < 2; ++i) c.add_term(random_term(s, -2 * s.p(), 3 * s.p()));
    REQUIRE(reduce(c) == brauer_decompose(c));
  }
}

TEST_CASE("property: the periodic relation holds after reduction") {
  for (int trial = 0; trial < 400; ++trial) {
    auto s = gen::structure({3, 5, 7}, 3);
    const std::int64_t p = s.p();
    const int f = s.degree(0);
    auto n = gen::vec(static_cast<std::size_t>(f), -2 * p, 3 * p);
    Int D(gen::integer(-100, 100));
    auto i = static_cast<std::size_t>(gen::integer(0, f - 1));
    auto term = [&](std::vector<std::int64_t> m, const Int& d, long long coef) {
      SymbolTerm t;
      t.coef = coef;
      t.places.push_back(PlaceSymbol{d, std::move(m)});
      return t;
    };
    SymbolicClass lhs = single(s, term(n, D, 1));
    SymbolicClass rhs(s);
    const std::int64_t m = n[i];
    if (f == 1) {
      rhs.add_term(term({m - p + 1}, D, 1));
      rhs.add_term(term({m - p - 1}, D + 1, 1));
      rhs.add_term(term({m - 2 * p}, D + 1, -1));
    } else {
      auto j = (i + 1) % static_cast<std::size_t>(f);
      Int pj = ipow(Int(p), static_cast<unsigned>(j));
      auto a = n, b = n, c = n;
      a[j] -= 1, a[i] = m - p;
      b[j] += 1, b[i] = m - p;
      c[i] = m - 2 * p;
      rhs.add_term(term(a, D + pj, 1));
      rhs.add_term(term(b, D, 1));
      rhs.add_term(term(c, D + pj, -1));
    }
    REQUIRE(reduce(lhs) == reduce(rhs));
  }
}

TEST_CASE("property: twist and Frobenius equivariance") {
  for (int trial = 0; trial < 300; ++trial) {
    auto s = gen::structure({3, 5, 7}, 3);
    auto c = single(s, random_term(s, -2 * s.p(), 3 * s.p()));
    std::vector<Int> t{Int(gen::integer(-1000, 1000))};
    REQUIRE(reduce(c.twisted(t)) == reduce(c).twisted(t));
    REQUIRE(reduce(frobenius(c)) == frobenius(reduce(c)));
  }
}

TEST_CASE("property: subquotient is a partial order on effective classes") {
  PlaceStructure s(5, {1});
  auto random_effective = [&] {
    VirtualClass c(s);
    for (int b = 2; b <= 6; ++b)
      for (int D = 0; D < 2; ++D) c.add(sw(s, {b}, D), gen::integer(0, 2));
    return c;
  };
  for (int trial = 0; trial < 500; ++trial) {
    auto a = random_effective(), b = random_effective(), c = random_effective();
    REQUIRE(is_subquotient(a, a));
    if (is_subquotient(a, b) && is_subquotient(b, a)) REQUIRE(a == b);
    if (is_subquotient(a, b) && is_subquotient(b, c)) REQUIRE(is_subquotient(a, c));
    REQUIRE(is_subquotient(a, a + b));
  }
}
