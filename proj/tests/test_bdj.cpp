#include <algorithm>
#include <set>

#include "doctest.h"
#include "gen.hpp"
#include "swl/bdj.hpp"
#include "swl/error.hpp"

using namespace swl;

namespace {

using Key = std::pair<PlaceWeight, std::vector<int>>;

std::set<Key> keys(const std::vector<WeightCandidate>& cs) {
  std::set<Key> out;
  for (const auto& c : cs) out.emplace(c.weight, c.J);
  return out;
}

std::set<PlaceWeight> weights(const std::vector<WeightCandidate>& cs) {
  std::set<PlaceWeight> out;
  for (const auto& c : cs) out.insert(c.weight);
  return out;
}

PlaceWeight pw(std::vector<int> b, long long D) { return PlaceWeight{std::move(b), Int(D)}; }

}  // namespace

TEST_CASE("reducible example, generic") {
  PlaceStructure s(5, {1});
  auto cs = bdj_candidates(s, make_reducible(s, 0, 3, 0, ExtensionFlag::generic));
  std::set<Key> want{{pw({2}, 3), {}}, {pw({4}, 0), {0}}, {pw({6}, 3), {}}};
  CHECK(keys(cs) == want);
  for (const auto& c : cs) CHECK(c.certainty == Certainty::certain);
}

TEST_CASE("reducible examples, split") {
  PlaceStructure s(5, {1});
  // Both characters trivial: b - 1 must vanish mod 4, so only b = 5 occurs.
  auto k = keys(bdj_candidates(s, make_reducible(s, 0, 0, 0, ExtensionFlag::split)));
  CHECK(k == std::set<Key>{{pw({5}, 0), {}}, {pw({5}, 0), {0}}});
  auto a = keys(bdj_candidates(s, make_reducible(s, 0, 0, 1, ExtensionFlag::split)));
  CHECK(a.count({pw({2}, 0), {}}));
  auto b = keys(bdj_candidates(s, make_reducible(s, 0, 1, 0, ExtensionFlag::split)));
  CHECK(b.count({pw({6}, 0), {0}}));
}

TEST_CASE("irreducible example") {
  PlaceStructure s(5, {1});
  auto cs = bdj_candidates(s, make_irreducible(s, 0, 1));
  CHECK(weights(cs) == std::set<PlaceWeight>{pw({2}, 0), pw({6}, 0)});
  CHECK(make_irreducible(s, 0, 5) == make_irreducible(s, 0, 1));
  CHECK_THROWS_AS(make_irreducible(s, 0, 6), DomainError);
}

TEST_CASE("extension flags") {
  PlaceStructure s(5, {2});
  // e1 - e2 = 6 is the cyclotomic exponent (1 + 5).
  CHECK_THROWS_AS(make_reducible(s, 0, 5, 0, ExtensionFlag::tres_ramifiee), DomainError);
  auto tres = bdj_candidates(s, make_reducible(s, 0, 6, 0, ExtensionFlag::tres_ramifiee));
  REQUIRE(!tres.empty());
  for (const auto& c : tres) {
    CHECK(c.weight.b == std::vector<int>{6, 6});
    CHECK(c.certainty == Certainty::certain);
  }
  auto peu = bdj_candidates(s, make_reducible(s, 0, 6, 0, ExtensionFlag::peu_ramifiee));
  for (const auto& c : peu)
    CHECK((c.certainty == Certainty::certain) == (c.J == std::vector<int>{0, 1}));
  auto unknown = bdj_candidates(s, make_reducible(s, 0, 6, 0, ExtensionFlag::unknown));
  for (const auto& c : unknown)
    CHECK((c.certainty == Certainty::certain) ==
          (c.J == std::vector<int>{0, 1} && !is_trivial_up_to_twist(c.weight)));
  CHECK(parse_extension_flag("tres") == ExtensionFlag::tres_ramifiee);
  CHECK(parse_extension_flag("peu_ramifiee") == ExtensionFlag::peu_ramifiee);
  CHECK_THROWS_AS(parse_extension_flag("mild"), ParseError);
  CHECK(std::string(to_string(Certainty::conditional)) == "conditional_on_extension_class");
}

TEST_CASE("twist example") {
  PlaceStructure s(5, {1});
  auto t = make_reducible(s, 0, 3, 0, ExtensionFlag::generic);
  auto u = twist_inertial(s, t, std::vector<std::int64_t>{1});
  CHECK(u.e1 == 2);
  CHECK(u.e2 == 3);
  CHECK(u.ext == ExtensionFlag::generic);
  CHECK(twist_inertial(s, t, std::vector<std::int64_t>{0}) == t);
}

TEST_CASE("products") {
  PlaceStructure s(5, {1, 1});
  auto single = bdj_candidates(PlaceStructure(5, {1}), make_reducible(PlaceStructure(5, {1}), 0, 3, 0,
                                                                      ExtensionFlag::generic));
  auto prod = bdj_product(s, {make_reducible(s, 0, 3, 0, ExtensionFlag::generic),
                              make_reducible(s, 1, 3, 0, ExtensionFlag::generic)});
  CHECK(prod.size() == weights(single).size() * weights(single).size());
  bool has_44 = std::any_of(prod.begin(), prod.end(), [](const ProductCandidate& c) {
    return c.weight.places[0] == pw({4}, 0) && c.weight.places[1] == pw({4}, 0);
  });
  CHECK(has_44);
  CHECK_THROWS_AS(bdj_product(s, {make_reducible(s, 0, 3, 0, ExtensionFlag::generic)}),
                  DomainError);
  PlaceStructure s1(5, {1});
  auto one = bdj_product(s1, {make_irreducible(s1, 0, 1)});
  CHECK(one.size() == 2);
}

TEST_CASE("induced characters") {
  for (int p : {5, 7, 11, 13}) {
    int a = (p + 1) / 2, b = (p + 3) / 2;
    CHECK(induced_character_weights(p, InducedStructure::split) ==
          std::set<std::vector<int>>{{a}, {b}});
    CHECK(induced_character_weights(p, InducedStructure::inert_quadratic) ==
          std::set<std::vector<int>>{{a, a}, {a, b}, {b, a}, {b, b}});
  }
}

TEST_CASE("property: swap, twist and orbit invariance on random types") {
  for (int trial = 0; trial < 200; ++trial) {
    auto s = gen::structure({3, 5, 7}, 2);
    const int f = s.degree(0);
    Int m = s.modulus(0);
    auto lp = gen::vec(static_cast<std::size_t>(f), -20, 20);
    std::vector<std::int64_t> neg(lp);
    for (auto& x : neg) x = -x;
    Int c = pack_exponents(s, 0, neg).exponent;

    auto e1 = Int(gen::integer(0, 10'000)), e2 = Int(gen::integer(0, 10'000));
    auto t = make_reducible(s, 0, e1, e2, ExtensionFlag::generic);
    auto cs = bdj_candidates(s, t);
    REQUIRE(!cs.empty());

    std::set<Key> swapped;
    for (const auto& x : cs) {
      std::vector<int> comp;
      for (int i = 0; i < f; ++i)
        if (!std::count(x.J.begin(), x.J.end(), i)) comp.push_back(i);
      swapped.emplace(x.weight, comp);
    }
    REQUIRE(keys(bdj_candidates(s, make_reducible(s, 0, e2, e1, ExtensionFlag::generic))) == swapped);

    std::set<Key> twisted;
    for (const auto& x : cs) twisted.emplace(twist_place_weight(s, 0, x.weight, c), x.J);
    REQUIRE(keys(bdj_candidates(s, twist_inertial(s, t, lp))) == twisted);

    Int a(gen::integer(0, 100'000));
    Int m2 = s.modulus(0, 2);
    if (mod_floor(a * s.field_size(0), m2) == mod_floor(a, m2)) continue;
    auto irr = make_irreducible(s, 0, a);
    auto ic = bdj_candidates(s, irr);
    REQUIRE(!ic.empty());
    REQUIRE(keys(bdj_candidates(s, make_irreducible(s, 0, a * s.field_size(0)))) == keys(ic));
    std::set<PlaceWeight> itw;
    for (const auto& x : ic) itw.insert(twist_place_weight(s, 0, x.weight, c));
    REQUIRE(weights(bdj_candidates(s, twist_inertial(s, irr, lp))) == itw);
  }
}
