#include "doctest.h"
#include "gen.hpp"
#include "swl/arith.hpp"
#include "swl/error.hpp"

using namespace swl;

TEST_CASE("structure validation") {
  CHECK_THROWS_AS(PlaceStructure(4, {1}), DomainError);
  CHECK_THROWS_AS(PlaceStructure(2, {1}), DomainError);
  CHECK_THROWS_AS(PlaceStructure(5, {}), DomainError);
  CHECK_THROWS_AS(PlaceStructure(5, {0}), DomainError);
  PlaceStructure s(5, {2, 1, 3});
  CHECK(s.total_degree() == 6);
  CHECK(s.offset(2) == 3);
  CHECK(s.place_of(4) == 2);
  CHECK(s.local_index(4) == 1);
  CHECK(s.modulus(0) == 24);
  CHECK(s.modulus(0, 2) == 624);
  CHECK_THROWS_AS(s.offset(3), DomainError);
}

TEST_CASE("frobenius on embeddings") {
  PlaceStructure s(7, {2, 1, 3});
  CHECK(s.frobenius(0) == 1);
  CHECK(s.frobenius(1) == 0);
  CHECK(s.frobenius(2) == 2);
  CHECK(s.frobenius(5) == 3);
  for (int tau = 0; tau < s.total_degree(); ++tau) {
    CHECK(s.frobenius_inverse(s.frobenius(tau)) == tau);
    int x = tau;
    for (int i = 0; i < s.degree(s.place_of(tau)); ++i) x = s.frobenius(x);
    CHECK(x == tau);
  }
}

TEST_CASE("pack examples") {
  PlaceStructure s52(5, {2}), s51(5, {1}), s72(7, {2});
  CHECK(pack_exponents(s52, 0, std::vector<std::int64_t>{1, 1}).exponent == 6);
  CHECK(pack_exponents(s51, 0, std::vector<std::int64_t>{3}).exponent == 3);
  CHECK(pack_exponents(s72, 0, std::vector<std::int64_t>{0, 7}).exponent == 1);
  CHECK(pack_exponents(s52, 0, std::vector<std::int64_t>{-1, 0}).exponent == 23);
  CHECK_THROWS_AS(pack_exponents(s52, 0, std::vector<std::int64_t>{1}), DomainError);
}

TEST_CASE("frobenius twist examples") {
  PlaceStructure s(5, {1});
  CHECK(frobenius_twist(s, make_exponent(s, 0, 2, 1)).exponent == 5);
  CHECK(frobenius_twist(s, make_exponent(s, 0, 2, 6)).exponent == 6);
  auto e = make_exponent(s, 0, 4, 1);
  CHECK(frobenius_twist(s, e).exponent == 5);
  for (int i = 0; i < 4; ++i) e = frobenius_twist(s, e);
  CHECK(e.exponent == 1);
  CHECK_THROWS_AS(make_exponent(PlaceStructure(5, {2}), 0, 3, 1), DomainError);
}

TEST_CASE("lift and rebase") {
  PlaceStructure s(5, {1});
  CHECK(lift_to_double_niveau(s, make_exponent(s, 0, 1, 1)).exponent == 6);
  CHECK_THROWS_AS(lift_to_double_niveau(s, make_exponent(s, 0, 2, 1)), DomainError);
  PlaceStructure s2(5, {2});
  // eps_{tau_1} = eps_{tau_0}^5, so exponent 1 of eps_{tau_1} is 5 in base tau_0
  CHECK(rebase(s2, make_exponent(s2, 0, 2, 1), 1, 0).exponent == 5);
  CHECK(rebase(s2, make_exponent(s2, 0, 2, 5), 0, 1).exponent == 1);
}

TEST_CASE("property: pack is additive") {
  for (int trial = 0; trial < 500; ++trial) {
    auto s = gen::structure({3, 5, 7, 11}, 4);
    auto f = static_cast<std::size_t>(s.degree(0));
    auto a = gen::vec(f, -200, 200), b = gen::vec(f, -200, 200);
    std::vector<std::int64_t> sum(f);
    for (std::size_t i = 0; i < f; ++i) sum[i] = a[i] + b[i];
    Int lhs = pack_exponents(s, 0, sum).exponent;
    Int rhs = mod_floor(pack_exponents(s, 0, a).exponent + pack_exponents(s, 0, b).exponent,
                        s.modulus(0));
    REQUIRE(lhs == rhs);
    REQUIRE(lhs >= 0);
    REQUIRE(lhs < s.modulus(0));
  }
}

TEST_CASE("property: frobenius twist has order dividing the niveau") {
  for (int trial = 0; trial < 300; ++trial) {
    auto s = gen::structure({3, 5, 7, 11, 13}, 3);
    int niveau = s.degree(0) * static_cast<int>(gen::integer(1, 2));
    auto e0 = make_exponent(s, 0, niveau, Int(gen::integer(-100000, 100000)));
    auto e = e0;
    for (int i = 0; i < niveau; ++i) e = frobenius_twist(s, e);
    REQUIRE(e == e0);
    // Frobenius of a packed vector is the packed cyclic shift.
    auto f = static_cast<std::size_t>(s.degree(0));
    auto a = gen::vec(f, -50, 50);
    std::vector<std::int64_t> shifted(f);
    for (std::size_t i = 0; i < f; ++i) shifted[(i + 1) % f] = a[i];
    REQUIRE(frobenius_twist(s, pack_exponents(s, 0, a)) == pack_exponents(s, 0, shifted));
  }
}

TEST_CASE("big moduli stay exact") {
  PlaceStructure s(13, {20});
  auto e = make_exponent(s, 0, 40, Int(-1));
  CHECK(e.exponent == ipow(Int(13), 40) - 2);
}
