#include "zsum/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "zsum/numbers.hpp"

namespace zsum {

GroupSpec GroupSpec::from_moduli(const std::vector<std::uint64_t>& moduli) {
  std::uint64_t order = 1;
  for (std::uint64_t m : moduli) {
    if (m < 2) throw ParseError("group modulus must be >= 2");
    if (__builtin_mul_overflow(order, m, &order))
      throw ParseError("group order exceeds 2^64");
  }

  // Largest-power merge: for each prime collect exponents across all moduli,
  // sort descending; the j-th invariant factor (from the top) takes the j-th
  // largest exponent of every prime.
  std::map<std::uint64_t, std::vector<unsigned>> exps;
  std::size_t depth = 0;
  for (std::uint64_t m : moduli) {
    for (const auto& [p, e] : factorize(m)) {
      exps[p].push_back(e);
      depth = std::max(depth, exps[p].size());
    }
  }
  for (auto& [p, v] : exps) std::sort(v.begin(), v.end(), std::greater<>());

  std::vector<std::uint64_t> factors;
  for (std::size_t j = 0; j < depth; ++j) {
    std::uint64_t f = 1;
    for (const auto& [p, v] : exps) {
      if (j < v.size()) {
        std::uint64_t q = 1;
        for (unsigned i = 0; i < v[j]; ++i) q *= p;
        f *= q;
      }
    }
    factors.push_back(f);
  }
  std::reverse(factors.begin(), factors.end());

  GroupSpec G;
  G.factors_ = std::move(factors);
  return G;
}

GroupSpec GroupSpec::parse(const std::string& text) {
  std::vector<std::uint64_t> moduli;
  std::string trimmed;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
  if (trimmed.empty() || trimmed == "1") return GroupSpec{};

  std::stringstream ss(trimmed);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("malformed group spec token: '" + token + "'");
    errno = 0;
    std::uint64_t v = std::strtoull(token.c_str(), nullptr, 10);
    if (errno != 0) throw ParseError("group modulus out of range: " + token);
    if (v < 2) throw ParseError("group modulus must be >= 2, got " + token);
    moduli.push_back(v);
  }
  if (!trimmed.empty() && trimmed.back() == ',') throw ParseError("trailing comma in group spec");
  return from_moduli(moduli);
}

std::uint64_t GroupSpec::order() const {
  std::uint64_t n = 1;
  for (std::uint64_t f : factors_) n *= f;
  return n;
}

bool GroupSpec::is_p_group(std::uint64_t* p_out) const {
  if (factors_.empty()) return false;
  auto fac = factorize(factors_.back());
  if (fac.size() != 1) return false;
  if (p_out) *p_out = fac.front().first;
  return true;
}

bool GroupSpec::is_elementary(std::uint64_t* p_out) const {
  if (factors_.empty()) return false;
  if (!is_prime(factors_.front())) return false;
  for (std::uint64_t f : factors_)
    if (f != factors_.front()) return false;
  if (p_out) *p_out = factors_.front();
  return true;
}

std::string GroupSpec::to_string() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(factors_[i]);
  }
  return out;
}

ElementSequence::ElementSequence(std::vector<GroupElement> elems) : elems_(std::move(elems)) {
  std::sort(elems_.begin(), elems_.end());
}

void ElementSequence::push(GroupElement g) {
  auto it = std::upper_bound(elems_.begin(), elems_.end(), g);
  elems_.insert(it, std::move(g));
}

std::uint64_t element_order(const GroupElement& g, const GroupSpec& G) {
  const auto& nf = G.invariant_factors();
  if (g.size() != nf.size()) throw std::invalid_argument("element rank mismatch");
  std::uint64_t ord = 1;
  for (std::size_t i = 0; i < nf.size(); ++i) {
    if (g[i] >= nf[i]) throw std::invalid_argument("element coordinate out of range");
    ord = lcm_u64(ord, nf[i] / gcd_u64(g[i], nf[i]));
  }
  return ord;
}

Rational cross_number(const ElementSequence& s, const GroupSpec& G) {
  Rational k = 0;
  for (const auto& g : s.elements()) k += make_rational(1, static_cast<long>(element_order(g, G)));
  return k;
}

std::vector<std::uint64_t> subgroup_factors(const GroupSpec& G, std::uint64_t d) {
  if (G.exponent() % d != 0) throw std::invalid_argument("d must divide exp(G)");
  std::vector<std::uint64_t> out;
  for (std::uint64_t n : G.invariant_factors()) out.push_back(gcd_u64(d, n));
  return out;
}

UpsilonGroup upsilon_group(const GroupSpec& G, std::uint64_t d_prime, std::uint64_t d) {
  if (d == 0 || G.exponent() % d != 0) throw std::invalid_argument("d must divide exp(G)");
  if (d_prime == 0 || d % d_prime != 0) throw std::invalid_argument("d' must divide d");

  UpsilonGroup out;
  std::vector<std::uint64_t> nontrivial;
  for (std::uint64_t n : G.invariant_factors()) {
    const std::uint64_t A = gcd_u64(d_prime, n);
    const std::uint64_t B = lcm_u64(d, n) / lcm_u64(d_prime, n);
    const std::uint64_t u = A / gcd_u64(A, B);
    out.positional.push_back(u);
    if (u > 1) nontrivial.push_back(u);
  }
  out.normalized = GroupSpec::from_moduli(nontrivial);
  return out;
}

Rational kstar(const GroupSpec& G) {
  Rational k = 0;
  for (std::uint64_t n : G.invariant_factors()) {
    for (const auto& [p, e] : factorize(n)) {
      std::uint64_t q = 1;
      for (unsigned i = 0; i < e; ++i) q *= p;
      k += make_rational(static_cast<long>(q - 1), static_cast<long>(q));
    }
  }
  return k;
}

Rational Kstar(const GroupSpec& G) {
  return kstar(G) + make_rational(1, static_cast<long>(G.exponent()));
}

ElementSequence kstar_witness(const GroupSpec& G) {
  const auto& nf = G.invariant_factors();
  std::vector<GroupElement> elems;
  for (std::size_t i = 0; i < nf.size(); ++i) {
    for (const auto& [p, e] : factorize(nf[i])) {
      std::uint64_t q = 1;
      for (unsigned j = 0; j < e; ++j) q *= p;
      // CRT generator of the C_q component of C_{n_i}: residue 1 mod q,
      // residue 0 mod n_i/q.
      const std::uint64_t m = nf[i] / q;
      const std::uint64_t gen = (m * mod_inverse(m % q, q)) % nf[i];
      GroupElement g(nf.size(), 0);
      g[i] = gen;
      for (std::uint64_t c = 0; c + 1 < q; ++c) elems.push_back(g);
    }
  }
  return ElementSequence(std::move(elems));
}

PhiQuotient phi_quotient(const GroupSpec& G) {
  const std::uint64_t n = G.exponent();
  std::vector<std::uint64_t> quotient_moduli;
  bool summand = true;
  for (std::uint64_t ni : G.invariant_factors()) {
    if (n / ni > 1) quotient_moduli.push_back(n / ni);
    if (gcd_u64(ni, n / ni) != 1) summand = false;
  }
  const Rational kq = kstar(GroupSpec::from_moduli(quotient_moduli));
  if (summand) return {kq, true};
  return {kq / make_rational(static_cast<long>(n), 1), false};
}

}  // namespace zsum
