#include "zsum/polytope.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "zsum/numbers.hpp"

namespace zsum {

ProfilePolytope build_polytope(const GroupSpec& G, const InvariantProvider& provider) {
  ProfilePolytope P;
  P.group = G;
  P.n = G.exponent();
  P.divs = divisors(P.n);
  P.h_threshold = kstar(G);

  auto record = [&P](const char* quantity, std::uint64_t d, std::uint64_t d_prime,
                     GroupSpec upsilon, const ValueWithProvenance& v) {
    if (!v.is_exact()) P.all_exact = false;
    if (v.provenance == Provenance::Conjectural) P.used_conjectural = true;
    P.ledger.push_back({quantity, d, d_prime, std::move(upsilon), v});
  };

  for (std::uint64_t d : P.divs) {
    GroupSpec gd = upsilon_group(G, d, d).normalized;
    ValueWithProvenance dav = provider.davenport(gd);
    record("D", d, d, gd, dav);
    P.g_cap[d] = dav.value - 1;

    bool have_f = false;
    std::uint64_t fmin = std::numeric_limits<std::uint64_t>::max();
    for (std::uint64_t dp : divisors(d)) {
      if (dp == 1) continue;
      GroupSpec gu = upsilon_group(G, dp, d).normalized;
      ValueWithProvenance eta_v = provider.eta(gu);
      record("eta", d, dp, gu, eta_v);
      fmin = std::min(fmin, eta_v.value - 1);
      have_f = true;
    }
    if (have_f) P.f_cap[d] = fmin;  // d = 1 stays unconstrained (empty min)
  }
  return P;
}

bool membership(const ProfileVector& x, const ProfilePolytope& P, bool include_h) {
  if (x.size() != P.divs.size())
    throw std::invalid_argument("profile is not indexed by the divisor lattice");
  for (std::uint64_t d : P.divs)
    if (!x.count(d)) throw std::invalid_argument("profile is missing divisor " + std::to_string(d));

  for (const auto& [d, cap] : P.f_cap)
    if (x.at(d) > cap) return false;
  for (std::uint64_t d : P.divs) {
    std::uint64_t sum = 0;
    for (std::uint64_t dp : divisors(d)) sum += x.at(dp);
    if (sum > P.g_cap.at(d)) return false;
  }
  if (include_h) {
    Rational weight(0);
    for (const auto& [d, count] : x)
      weight += Rational(static_cast<unsigned long>(count)) /
                Rational(static_cast<unsigned long>(d));
    if (weight < P.h_threshold) return false;
  }
  return true;
}

namespace {

// Exact serial branch-and-bound over the box-plus-downset system. All
// objective arithmetic is integer after scaling by n.
class PolytopeSearch {
 public:
  explicit PolytopeSearch(const ProfilePolytope& P) : P_(P), m_(P.divs.size()) {
    weights_.resize(m_);
    supersets_.resize(m_);
    g_used_.assign(m_, 0);
    for (std::size_t i = 0; i < m_; ++i) {
      weights_[i] = P_.n / P_.divs[i];
      for (std::size_t j = 0; j < m_; ++j)
        if (P_.divs[j] % P_.divs[i] == 0) supersets_[i].push_back(j);
    }
    // Static feasibility budget: each variable's absolute cap, and the
    // worst-case scaled objective, must stay comfortably inside uint64.
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < m_; ++i) {
      std::uint64_t cap = var_cap(i);
      if (cap > 1000000) throw BudgetExceeded("polytope caps too large for exact enumeration");
      if (__builtin_mul_overflow(cap, weights_[i], &cap) ||
          __builtin_add_overflow(total, cap, &total) || total > (1ULL << 62))
        throw BudgetExceeded("polytope objective exceeds exact integer range");
    }
    x_.assign(m_, 0);
  }

  PolytopeSolution run() {
    dfs(0, 0);
    PolytopeSolution sol;
    sol.optimum = Rational(best_, Integer(static_cast<unsigned long>(P_.n)));
    sol.optimum.canonicalize();
    for (std::size_t i = 0; i < m_; ++i) sol.argmax[P_.divs[i]] = best_x_[i];
    sol.node_count = nodes_;
    sol.all_exact = P_.all_exact;
    sol.used_conjectural = P_.used_conjectural;
    return sol;
  }

 private:
  // Largest value variable i can take given the fixed prefix (f box cap
  // and every g slack over downsets containing it).
  std::uint64_t var_cap(std::size_t i) const {
    std::uint64_t cap = std::numeric_limits<std::uint64_t>::max();
    auto it = P_.f_cap.find(P_.divs[i]);
    if (it != P_.f_cap.end()) cap = it->second;
    for (std::size_t j : supersets_[i]) {
      std::uint64_t g = P_.g_cap.at(P_.divs[j]);
      std::uint64_t slack = g >= g_used_[j] ? g - g_used_[j] : 0;
      cap = std::min(cap, slack);
    }
    return cap;
  }

  void dfs(std::size_t i, std::uint64_t score) {
    ++nodes_;
    if (i == m_) {
      if (!seeded_ || score > best_) {
        best_ = score;
        best_x_ = x_;
        seeded_ = true;
      }
      return;
    }
    // Per-variable relaxation: no remaining variable can beat its own box
    // and current g slacks, so their weighted sum bounds any completion.
    if (seeded_) {
      std::uint64_t bound = score;
      for (std::size_t j = i; j < m_; ++j) bound += var_cap(j) * weights_[j];
      if (bound <= best_) return;
    }
    std::uint64_t cap = var_cap(i);
    for (std::uint64_t v = cap + 1; v-- > 0;) {
      x_[i] = v;
      for (std::size_t j : supersets_[i]) g_used_[j] += v;
      dfs(i + 1, score + v * weights_[i]);
      for (std::size_t j : supersets_[i]) g_used_[j] -= v;
    }
    x_[i] = 0;
  }

  const ProfilePolytope& P_;
  std::size_t m_;
  std::vector<std::uint64_t> weights_;
  std::vector<std::vector<std::size_t>> supersets_;
  std::vector<std::uint64_t> g_used_;
  std::vector<std::uint64_t> x_, best_x_;
  std::uint64_t best_ = 0, nodes_ = 0;
  bool seeded_ = false;
};

}  // namespace

PolytopeSolution maximize(const ProfilePolytope& P) { return PolytopeSearch(P).run(); }

ProfileVector profile_of_witness(const GroupSpec& G, const ExtremalWitness& w) {
  ProfileVector x;
  for (std::uint64_t d : divisors(G.exponent())) x[d] = 0;
  for (const auto& [ord, count] : w.profile) {
    auto it = x.find(ord);
    if (it == x.end())
      throw std::logic_error("witness contains an element order off the divisor lattice");
    it->second = count;
  }
  return x;
}

bool verify_extremal_membership(const GroupSpec& G, const SearchOptions& opts) {
  LittleCrossResult res = little_cross_exact(G, opts);

  ProviderPolicy policy;
  policy.search_budget = std::max<std::uint64_t>(64, G.order());
  policy.threads = opts.threads;
  InvariantProvider provider(policy);
  ProfilePolytope P = build_polytope(G, provider);
  if (!P.all_exact)
    throw std::logic_error("polytope caps are not all exact; membership check is inconclusive");

  for (const ExtremalWitness& w : res.witnesses)
    if (!membership(profile_of_witness(G, w), P, /*include_h=*/true)) return false;
  return true;
}

}  // namespace zsum
