#include <doctest.h>

#include <algorithm>
#include <random>

#include "zsum/group.hpp"
#include "zsum/numbers.hpp"
#include "zsum/rational.hpp"

using namespace zsum;

namespace {

Rational q(long n, long d) { return make_rational(n, d); }

// Element-order multiset of the raw direct product, computed without
// GroupSpec so normalization can be checked against it.
std::vector<std::uint64_t> raw_order_multiset(const std::vector<std::uint64_t>& moduli) {
  std::vector<std::uint64_t> orders;
  std::vector<std::uint64_t> a(moduli.size(), 0);
  while (true) {
    std::uint64_t ord = 1;
    for (std::size_t i = 0; i < moduli.size(); ++i)
      ord = lcm_u64(ord, moduli[i] / gcd_u64(a[i], moduli[i]));
    orders.push_back(ord);
    std::size_t i = 0;
    while (i < moduli.size() && ++a[i] == moduli[i]) a[i++] = 0;
    if (i == moduli.size()) break;
  }
  std::sort(orders.begin(), orders.end());
  return orders;
}

}  // namespace

TEST_CASE("parse and normalize") {
  CHECK(GroupSpec::parse("6").to_string() == "6");
  CHECK(GroupSpec::parse("3,2").to_string() == "6");
  CHECK(GroupSpec::parse("2,3").to_string() == "6");
  CHECK(GroupSpec::parse("6,4").to_string() == "2,12");
  CHECK(GroupSpec::parse("4,6").to_string() == "2,12");
  CHECK(GroupSpec::parse("2,4").to_string() == "2,4");
  CHECK(GroupSpec::parse("2, 4").to_string() == "2,4");
  CHECK(GroupSpec::parse("12,18").to_string() == "6,36");
  CHECK(GroupSpec::parse("1").is_trivial());
  CHECK(GroupSpec::parse("").is_trivial());
  CHECK(GroupSpec::parse("1").to_string() == "1");

  CHECK(GroupSpec::parse("2,12").invariant_factors() == std::vector<std::uint64_t>{2, 12});
  CHECK(GroupSpec::parse("2,12").exponent() == 12);
  CHECK(GroupSpec::parse("2,12").order() == 24);
  CHECK(GroupSpec::parse("2,12").rank() == 2);
  CHECK(GroupSpec::parse("1").exponent() == 1);
  CHECK(GroupSpec::parse("1").order() == 1);
}

TEST_CASE("parse rejects malformed specs") {
  CHECK_THROWS_AS(GroupSpec::parse("0"), ParseError);
  CHECK_THROWS_AS(GroupSpec::parse("2,0"), ParseError);
  CHECK_THROWS_AS(GroupSpec::parse("2,"), ParseError);
  CHECK_THROWS_AS(GroupSpec::parse(",2"), ParseError);
  CHECK_THROWS_AS(GroupSpec::parse("2,,3"), ParseError);
  CHECK_THROWS_AS(GroupSpec::parse("a"), ParseError);
  CHECK_THROWS_AS(GroupSpec::parse("-3"), ParseError);
  CHECK_THROWS_AS(GroupSpec::parse("3.5"), ParseError);
  CHECK_THROWS_AS(GroupSpec::parse("99999999999999999999999"), ParseError);
  // order fits in neither u64 nor anything we search
  CHECK_THROWS_AS(GroupSpec::from_moduli({1ull << 32, 1ull << 32, 2}), ParseError);
}

TEST_CASE("normalization is idempotent and preserves the group") {
  std::mt19937 rng(20240817);
  std::uniform_int_distribution<int> count(1, 4), modulus(2, 12);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::uint64_t> moduli;
    std::uint64_t order = 1;
    for (int i = 0, n = count(rng); i < n; ++i) {
      moduli.push_back(static_cast<std::uint64_t>(modulus(rng)));
      order *= moduli.back();
    }
    GroupSpec G = GroupSpec::from_moduli(moduli);
    CHECK(GroupSpec::from_moduli(G.invariant_factors()) == G);
    CHECK(G.order() == order);
    // invariant-factor chain: each divides the next
    const auto& f = G.invariant_factors();
    for (std::size_t i = 0; i + 1 < f.size(); ++i) CHECK(f[i + 1] % f[i] == 0);
    if (order <= 64) CHECK(raw_order_multiset(moduli) == raw_order_multiset(f));
  }
}

TEST_CASE("group predicates") {
  std::uint64_t p = 0;
  CHECK(GroupSpec::parse("8").is_p_group(&p));
  CHECK(p == 2);
  CHECK(GroupSpec::parse("2,4,8").is_p_group(&p));
  CHECK(p == 2);
  CHECK_FALSE(GroupSpec::parse("6").is_p_group());
  CHECK_FALSE(GroupSpec::parse("1").is_p_group());
  CHECK(GroupSpec::parse("3,3").is_elementary(&p));
  CHECK(p == 3);
  CHECK_FALSE(GroupSpec::parse("2,4").is_elementary());
  CHECK_FALSE(GroupSpec::parse("9").is_elementary());
  CHECK(GroupSpec::parse("7").is_cyclic());
  CHECK(GroupSpec::parse("1").is_cyclic());
  CHECK_FALSE(GroupSpec::parse("2,4").is_cyclic());
}

TEST_CASE("element order") {
  GroupSpec G = GroupSpec::parse("2,4");
  CHECK(element_order({0, 0}, G) == 1);
  CHECK(element_order({1, 0}, G) == 2);
  CHECK(element_order({0, 1}, G) == 4);
  CHECK(element_order({1, 1}, G) == 4);
  CHECK(element_order({1, 2}, G) == 2);
  CHECK(element_order({0, 3}, G) == 4);
  CHECK_THROWS_AS(element_order({1}, G), std::invalid_argument);
  CHECK_THROWS_AS(element_order({0, 4}, G), std::invalid_argument);
  CHECK(element_order({}, GroupSpec::parse("1")) == 1);
  CHECK(element_order({5}, GroupSpec::parse("12")) == 12);
  CHECK(element_order({8}, GroupSpec::parse("12")) == 3);
}

TEST_CASE("element sequences stay sorted") {
  ElementSequence s;
  s.push({3});
  s.push({1});
  s.push({2});
  s.push({1});
  CHECK(s.elements() == std::vector<GroupElement>{{1}, {1}, {2}, {3}});
  ElementSequence t(std::vector<GroupElement>{{3}, {1}, {2}, {1}});
  CHECK(s == t);
  CHECK(cross_number(s, GroupSpec::parse("4")) == q(1, 4) + q(1, 4) + q(1, 2) + q(1, 4));
}

TEST_CASE("subgroup factors") {
  GroupSpec G = GroupSpec::parse("2,12");
  CHECK(subgroup_factors(G, 1) == std::vector<std::uint64_t>{1, 1});
  CHECK(subgroup_factors(G, 2) == std::vector<std::uint64_t>{2, 2});
  CHECK(subgroup_factors(G, 4) == std::vector<std::uint64_t>{2, 4});
  CHECK(subgroup_factors(G, 3) == std::vector<std::uint64_t>{1, 3});
  CHECK(subgroup_factors(G, 12) == std::vector<std::uint64_t>{2, 12});
  CHECK_THROWS_AS(subgroup_factors(G, 5), std::invalid_argument);
}

TEST_CASE("upsilon groups") {
  // C_6, d' = 2, d = 6: escape part is C_2
  auto u = upsilon_group(GroupSpec::parse("6"), 2, 6);
  CHECK(u.positional == std::vector<std::uint64_t>{2});
  CHECK(u.normalized.to_string() == "2");

  // C_2 + C_4, d' = 2, d = 4: the C_2 coordinate collapses
  u = upsilon_group(GroupSpec::parse("2,4"), 2, 4);
  CHECK(u.positional == std::vector<std::uint64_t>{1, 2});
  CHECK(u.normalized.to_string() == "2");

  // d' = d keeps all of G_d
  u = upsilon_group(GroupSpec::parse("2,4"), 4, 4);
  CHECK(u.positional == std::vector<std::uint64_t>{2, 4});
  CHECK(u.normalized.to_string() == "2,4");

  // d' = 1 collapses everything
  u = upsilon_group(GroupSpec::parse("2,4"), 1, 4);
  CHECK(u.positional == std::vector<std::uint64_t>{1, 1});
  CHECK(u.normalized.is_trivial());

  CHECK_THROWS_AS(upsilon_group(GroupSpec::parse("6"), 4, 6), std::invalid_argument);
  CHECK_THROWS_AS(upsilon_group(GroupSpec::parse("6"), 2, 4), std::invalid_argument);
}

TEST_CASE("upsilon structural properties") {
  for (const char* spec : {"6", "12", "2,4", "2,12", "3,9", "2,2,6", "30"}) {
    GroupSpec G = GroupSpec::parse(spec);
    for (std::uint64_t d : divisors(G.exponent())) {
      for (std::uint64_t dp : divisors(d)) {
        auto u = upsilon_group(G, dp, d);
        const auto& nf = G.invariant_factors();
        const auto sub = subgroup_factors(G, dp);
        REQUIRE(u.positional.size() == nf.size());
        for (std::size_t i = 0; i < nf.size(); ++i) {
          // upsilon_i divides gcd(d', n_i): it is a quotient shape of G_{d'}
          CHECK(sub[i] % u.positional[i] == 0);
        }
        // the last coordinate never collapses: B_r = 1 since d | n_r
        CHECK(!nf.empty());
        CHECK(u.positional.back() == gcd_u64(dp, nf.back()));
        if (dp == d)
          CHECK(u.positional == subgroup_factors(G, d));
        if (dp == 1)
          CHECK(u.normalized.is_trivial());
      }
    }
  }
}

TEST_CASE("kstar and Kstar") {
  CHECK(kstar(GroupSpec::parse("1")) == q(0, 1));
  CHECK(Kstar(GroupSpec::parse("1")) == q(1, 1));
  CHECK(kstar(GroupSpec::parse("2")) == q(1, 2));
  CHECK(kstar(GroupSpec::parse("6")) == q(7, 6));
  CHECK(kstar(GroupSpec::parse("12")) == q(17, 12));
  CHECK(Kstar(GroupSpec::parse("12")) == q(3, 2));
  CHECK(kstar(GroupSpec::parse("2,4")) == q(5, 4));
  CHECK(Kstar(GroupSpec::parse("2,4")) == q(3, 2));
  CHECK(kstar(GroupSpec::parse("3,3")) == q(4, 3));
  CHECK(kstar(GroupSpec::parse("30")) == q(1, 2) + q(2, 3) + q(4, 5));

  // additivity over direct sums
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> modulus(2, 20);
  for (int trial = 0; trial < 50; ++trial) {
    std::uint64_t a = modulus(rng), b = modulus(rng), c = modulus(rng);
    CHECK(kstar(GroupSpec::from_moduli({a, b, c})) ==
          kstar(GroupSpec::from_moduli({a})) + kstar(GroupSpec::from_moduli({b, c})));
  }
}

TEST_CASE("kstar witness") {
  GroupSpec G = GroupSpec::parse("6");
  ElementSequence w = kstar_witness(G);
  CHECK(w.elements() == std::vector<GroupElement>{{3}, {4}, {4}});
  CHECK(cross_number(w, G) == kstar(G));

  for (const char* spec : {"2", "4", "12", "2,4", "3,3", "2,12", "2,2,6", "60"}) {
    GroupSpec H = GroupSpec::parse(spec);
    ElementSequence v = kstar_witness(H);
    CHECK(cross_number(v, H) == kstar(H));
    // length is the sum of (q - 1) over prime-power parts
    std::uint64_t len = 0;
    for (std::uint64_t f : H.invariant_factors())
      for (const auto& [p, e] : factorize(f)) {
        std::uint64_t pe = 1;
        for (unsigned i = 0; i < e; ++i) pe *= p;
        len += pe - 1;
      }
    CHECK(v.size() == len);
  }
  CHECK(kstar_witness(GroupSpec::parse("1")).empty());
}

TEST_CASE("phi quotient") {
  auto f = phi_quotient(GroupSpec::parse("6"));
  CHECK(f.value == q(0, 1));
  CHECK(f.direct_summand);

  f = phi_quotient(GroupSpec::parse("2,6"));
  CHECK(f.value == q(2, 3));
  CHECK(f.direct_summand);

  f = phi_quotient(GroupSpec::parse("2,4"));
  CHECK(f.value == q(1, 8));
  CHECK_FALSE(f.direct_summand);

  f = phi_quotient(GroupSpec::parse("3,3"));  // G is already C_3^2, quotient trivial
  CHECK(f.value == q(0, 1));
  CHECK(f.direct_summand);

  f = phi_quotient(GroupSpec::parse("2,2,6"));
  CHECK(f.value == q(2, 3) + q(2, 3));
  CHECK(f.direct_summand);

  f = phi_quotient(GroupSpec::parse("2,12"));  // quotient C_6, gcd(2,6) = 2
  CHECK(f.value == q(7, 6) / 12);
  CHECK_FALSE(f.direct_summand);
}
