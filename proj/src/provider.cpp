#include "zsum/provider.hpp"

#include "zsum/numbers.hpp"
#include "zsum/oracle.hpp"

namespace zsum {

const char* provenance_name(Provenance p) {
  switch (p) {
    case Provenance::ExactFormula:
      return "Exact-Formula";
    case Provenance::ExactSearch:
      return "Exact-Search";
    case Provenance::UpperBound:
      return "UpperBound";
    case Provenance::Conjectural:
      return "Conjectural";
  }
  return "?";
}

ProviderPolicy::ProviderPolicy() {
  c_r_.emplace(1, Rational(1));
  c_r_.emplace(2, Rational(3));
}

void ProviderPolicy::set_c_r(unsigned r, const Rational& value) {
  if (r == 0) throw std::invalid_argument("c_r: rank must be >= 1");
  if (value < Rational(static_cast<unsigned long>(r)))
    throw std::invalid_argument("c_" + std::to_string(r) + " = " + to_fraction_string(value) +
                                " violates c_r >= r");
  c_r_[r] = value;
}

InvariantProvider::InvariantProvider(ProviderPolicy policy) : policy_(std::move(policy)) {}

namespace {

// Olson: D(G) = 1 + sum (q_i - 1) over the prime-power invariant factors.
std::uint64_t olson_value(const GroupSpec& G) {
  std::uint64_t v = 1;
  for (std::uint64_t f : G.invariant_factors()) v += f - 1;
  return v;
}

SearchOptions search_options(const ProviderPolicy& policy) {
  SearchOptions opts;
  opts.max_order = policy.search_budget;
  opts.threads = policy.threads;
  return opts;
}

// ceil(c * m) + 1 as an integer, for the Alon-Dubiner-shaped eta bound.
std::uint64_t ceil_bound(const Rational& c, std::uint64_t m) {
  Integer num = c.get_num() * Integer(static_cast<unsigned long>(m));
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), c.get_den().get_mpz_t());
  return q.get_ui() + 1;
}

}  // namespace

ValueWithProvenance InvariantProvider::davenport_uncached(const GroupSpec& G) const {
  if (G.is_trivial()) return {1, Provenance::ExactFormula, "trivial group"};
  if (G.is_p_group())
    return {olson_value(G), Provenance::ExactFormula, "Olson's p-group formula"};
  if (G.rank() == 1)
    return {G.exponent(), Provenance::ExactFormula, "D(C_n) = n"};
  if (G.rank() == 2) {
    const auto& f = G.invariant_factors();
    return {f[0] + f[1] - 1, Provenance::ExactFormula, "rank-2 formula m+n-1"};
  }
  if (policy_.allow_search && G.order() <= policy_.search_budget)
    return {davenport_exact(G, search_options(policy_)), Provenance::ExactSearch,
            "exhaustive search"};
  return {G.order(), Provenance::UpperBound, "classical bound D(G) <= |G|"};
}

ValueWithProvenance InvariantProvider::eta_uncached(const GroupSpec& G) const {
  if (G.is_trivial()) return {1, Provenance::ExactFormula, "trivial group"};
  if (G.rank() == 1)
    return {G.exponent(), Provenance::ExactFormula, "eta(C_n) = n"};
  if (G.rank() == 2) {
    const auto& f = G.invariant_factors();
    return {2 * f[0] + f[1] - 2, Provenance::ExactFormula, "rank-2 formula 2m+n-2"};
  }

  std::uint64_t p = 0;
  const bool elementary = G.is_elementary(&p);
  if (elementary && p == 2) {
    std::uint64_t v = 1;
    for (std::size_t i = 0; i < G.rank(); ++i) v *= 2;
    return {v, Provenance::ExactFormula, "eta(C_2^r) = 2^r"};
  }
  if (elementary && policy_.has_c_r(static_cast<unsigned>(G.rank()))) {
    const Rational& c = policy_.c_r(static_cast<unsigned>(G.rank()));
    return {ceil_bound(c, p - 1), Provenance::UpperBound,
            "eta(C_p^r) <= c_r(p-1)+1 with c_" + std::to_string(G.rank()) + " = " +
                to_fraction_string(c)};
  }
  if (elementary && policy_.allow_conjectural && G.rank() == 3)
    return {8 * p - 7, Provenance::Conjectural, "conjectured eta(C_p^3) = 8p-7"};
  if (elementary && policy_.allow_conjectural && G.rank() == 4)
    return {19 * p - 18, Provenance::Conjectural, "conjectured eta(C_p^4) = 19p-18"};

  if (policy_.allow_search && G.order() <= policy_.search_budget)
    return {eta_exact(G, search_options(policy_)), Provenance::ExactSearch, "exhaustive search"};

  if (policy_.permissive_fallback) {
    std::uint64_t crude;
    if (__builtin_mul_overflow(G.order(), G.exponent(), &crude))
      throw PolicyRefusal("eta(" + G.to_string() + "): even the crude |G|*exp(G) bound overflows");
    return {crude, Provenance::UpperBound, "crude pigeonhole bound |G|*exp(G)"};
  }
  throw PolicyRefusal("eta(" + G.to_string() +
                      ") has no exact formula; search budget " +
                      std::to_string(policy_.search_budget) +
                      " exceeded and strict policy forbids crude bounds");
}

ValueWithProvenance InvariantProvider::davenport(const GroupSpec& G) const {
  const std::string key = G.to_string();
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = dav_cache_.find(key);
    if (it != dav_cache_.end()) return it->second;
  }
  ValueWithProvenance v = davenport_uncached(G);
  std::lock_guard<std::mutex> lock(mutex_);
  return dav_cache_.emplace(key, std::move(v)).first->second;
}

ValueWithProvenance InvariantProvider::eta(const GroupSpec& G) const {
  const std::string key = G.to_string();
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = eta_cache_.find(key);
    if (it != eta_cache_.end()) return it->second;
  }
  ValueWithProvenance v = eta_uncached(G);
  std::lock_guard<std::mutex> lock(mutex_);
  return eta_cache_.emplace(key, std::move(v)).first->second;
}

}  // namespace zsum
