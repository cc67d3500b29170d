#include <doctest.h>

#include <algorithm>

#include "zsum/numbers.hpp"
#include "zsum/polytope.hpp"

using namespace zsum;

namespace {

GroupSpec g(const char* s) { return GroupSpec::parse(s); }

InvariantProvider& default_provider() {
  static InvariantProvider prov;
  return prov;
}

// Odometer over the full coordinate box, filtered by membership: the
// reference optimum an exact solver must reproduce.
std::pair<Rational, ProfileVector> enumerate_optimum(const ProfilePolytope& P) {
  std::vector<std::uint64_t> caps;
  for (std::uint64_t d : P.divs) {
    std::uint64_t cap = P.g_cap.at(P.divs.back());  // coarse but finite
    auto it = P.f_cap.find(d);
    if (it != P.f_cap.end()) cap = std::min(cap, it->second);
    if (d == 1) cap = 0;
    caps.push_back(cap);
  }
  std::vector<std::uint64_t> x(P.divs.size(), 0);
  Rational best(-1);
  ProfileVector best_profile;
  for (;;) {
    ProfileVector profile;
    Rational val(0);
    for (std::size_t i = 0; i < x.size(); ++i) {
      profile[P.divs[i]] = x[i];
      val += Rational(static_cast<unsigned long>(x[i])) /
             Rational(static_cast<unsigned long>(P.divs[i]));
    }
    if (membership(profile, P, false)) {
      // Track max value; on ties keep the lexicographically largest
      // profile in divisor order.
      bool better = val > best;
      if (val == best) {
        for (std::size_t i = 0; i < x.size(); ++i) {
          std::uint64_t a = profile.at(P.divs[i]), b = best_profile.at(P.divs[i]);
          if (a != b) {
            better = a > b;
            break;
          }
        }
      }
      if (better) {
        best = val;
        best_profile = profile;
      }
    }
    std::size_t i = 0;
    while (i < x.size() && x[i] == caps[i]) x[i++] = 0;
    if (i == x.size()) break;
    ++x[i];
  }
  return {best, best_profile};
}

}  // namespace

TEST_CASE("polytope caps for small groups") {
  auto P3 = build_polytope(g("3"), default_provider());
  CHECK(P3.divs == std::vector<std::uint64_t>{1, 3});
  CHECK(P3.f_cap.count(1) == 0);
  CHECK(P3.f_cap.at(3) == 2);
  CHECK(P3.g_cap.at(1) == 0);
  CHECK(P3.g_cap.at(3) == 2);
  CHECK(P3.h_threshold == make_rational(2, 3));
  CHECK(P3.all_exact);
  CHECK_FALSE(P3.used_conjectural);
  // Ledger records one D per divisor and one eta per (d, d' > 1) pair.
  CHECK(P3.ledger.size() == 3);

  auto P24 = build_polytope(g("2,4"), default_provider());
  CHECK(P24.f_cap.at(2) == 3);  // eta(C_2^2) - 1
  CHECK(P24.f_cap.at(4) == 1);  // min(eta(C_2), eta(C_2+C_4)) - 1 via upsilon(2,4) = (1,2)
  CHECK(P24.g_cap.at(2) == 2);  // D(C_2^2) - 1
  CHECK(P24.g_cap.at(4) == 4);  // D(C_2+C_4) - 1

  auto Ptriv = build_polytope(GroupSpec(), default_provider());
  CHECK(Ptriv.divs == std::vector<std::uint64_t>{1});
  CHECK(Ptriv.g_cap.at(1) == 0);
  auto sol = maximize(Ptriv);
  CHECK(sol.optimum == 0);
  CHECK(sol.argmax.at(1) == 0);
}

TEST_CASE("membership semantics") {
  auto P = build_polytope(g("3"), default_provider());
  ProfileVector zero = {{1, 0}, {3, 0}};
  CHECK(membership(zero, P, false));
  CHECK_FALSE(membership(zero, P, true));  // 0 < k* = 2/3

  ProfileVector two = {{1, 0}, {3, 2}};
  CHECK(membership(two, P, true));  // 2/3 >= 2/3, caps respected

  ProfileVector over = {{1, 0}, {3, 3}};
  CHECK_FALSE(membership(over, P, false));  // f and g both violated

  ProfileVector bad_domain = {{3, 2}};
  CHECK_THROWS_AS(membership(bad_domain, P, false), std::invalid_argument);
  ProfileVector wrong_keys = {{1, 0}, {2, 0}};
  CHECK_THROWS_AS(membership(wrong_keys, P, false), std::invalid_argument);
}

TEST_CASE("maximize: closed-form cyclic optima") {
  for (unsigned long p : {2UL, 3UL, 5UL, 7UL, 11UL, 13UL}) {
    auto P = build_polytope(GroupSpec::from_moduli({p}), default_provider());
    auto sol = maximize(P);
    CHECK(sol.optimum == make_rational(static_cast<long>(p - 1), static_cast<long>(p)));
    CHECK(sol.argmax.at(p) == p - 1);
    CHECK(sol.all_exact);
  }

  auto P6 = build_polytope(g("6"), default_provider());
  auto sol6 = maximize(P6);
  CHECK(sol6.optimum == make_rational(4, 3));
  CHECK(sol6.argmax == ProfileVector{{1, 0}, {2, 1}, {3, 2}, {6, 1}});
}

TEST_CASE("maximize agrees with full enumeration on small lattices") {
  for (const char* s : {"4", "6", "8", "9", "12", "18", "20", "2,2", "2,4", "3,3", "2,6",
                        "4,4", "3,6", "2,12", "3,9", "6,6", "2,2,2", "2,2,6"}) {
    CAPTURE(s);
    auto P = build_polytope(g(s), default_provider());
    auto sol = maximize(P);
    auto [ref_value, ref_profile] = enumerate_optimum(P);
    CHECK(sol.optimum == ref_value);
    CHECK(sol.argmax == ref_profile);
    CHECK(membership(sol.argmax, P, false));
    // The optimum profile's weight is its objective value.
    Rational val(0);
    for (const auto& [d, c] : sol.argmax)
      val += Rational(static_cast<unsigned long>(c)) / Rational(static_cast<unsigned long>(d));
    CHECK(val == sol.optimum);
  }
}

TEST_CASE("maximize is deterministic") {
  auto P = build_polytope(g("2,12"), default_provider());
  auto a = maximize(P);
  auto b = maximize(P);
  CHECK(a.optimum == b.optimum);
  CHECK(a.argmax == b.argmax);
  CHECK(a.node_count == b.node_count);
  CHECK(a.node_count > 0);
}

TEST_CASE("cap monotonicity: enlarging a cap never shrinks the optimum") {
  for (const char* s : {"6", "12", "2,4", "3,3", "2,6"}) {
    CAPTURE(s);
    auto P = build_polytope(g(s), default_provider());
    Rational base = maximize(P).optimum;
    for (auto& [d, cap] : P.f_cap) {
      auto Q = P;
      ++Q.f_cap.at(d);
      CHECK(maximize(Q).optimum >= base);
    }
    for (auto& [d, cap] : P.g_cap) {
      auto Q = P;
      ++Q.g_cap.at(d);
      CHECK(maximize(Q).optimum >= base);
    }
  }
}

TEST_CASE("oracle little cross number never exceeds the polytope optimum") {
  for (const char* s : {"2", "3", "4", "5", "6", "8", "9", "10", "12", "2,2", "2,4", "3,3",
                        "2,6", "2,2,2", "2,8", "4,4", "2,2,4", "3,6", "2,10", "2,2,2,2"}) {
    CAPTURE(s);
    GroupSpec G = g(s);
    Rational k = little_cross_exact(G).value;
    Rational opt = maximize(build_polytope(G, default_provider())).optimum;
    CHECK(k <= opt);
  }
}

TEST_CASE("extremal witnesses live in the polytope") {
  for (const char* s : {"2", "3", "4", "6", "8", "2,2", "2,4", "3,3", "2,6", "12", "2,2,2"}) {
    CAPTURE(s);
    CHECK(verify_extremal_membership(g(s)));
  }
}

TEST_CASE("witness profile expansion covers the whole lattice") {
  auto res = little_cross_exact(g("6"));
  REQUIRE_FALSE(res.witnesses.empty());
  auto x = profile_of_witness(g("6"), res.witnesses.front());
  CHECK(x.size() == 4);  // divisors 1, 2, 3, 6
  std::uint64_t total = 0;
  for (const auto& [d, c] : x) total += c;
  CHECK(total == res.witnesses.front().sequence.size());
}

TEST_CASE("provenance and policy propagation") {
  // Strict provider cannot supply eta(C_5^3): refusal propagates.
  ProviderPolicy strict;
  strict.search_budget = 64;
  InvariantProvider sp(strict);
  CHECK_THROWS_AS(build_polytope(g("5,5,5"), sp), PolicyRefusal);

  // Conjectural eta taints the caps and the solution.
  ProviderPolicy conj;
  conj.allow_conjectural = true;
  conj.allow_search = false;
  InvariantProvider cp(conj);
  auto P = build_polytope(g("3,3,3"), cp);
  CHECK(P.used_conjectural);
  CHECK_FALSE(P.all_exact);
  auto sol = maximize(P);
  CHECK(sol.used_conjectural);

  // Oversized caps refuse exact enumeration rather than looping forever.
  REQUIRE(is_prime(1000003));
  auto big = build_polytope(GroupSpec::from_moduli({1000003}), default_provider());
  CHECK_THROWS_AS(maximize(big), BudgetExceeded);
}
