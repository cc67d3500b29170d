#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zsum/rational.hpp"

namespace zsum {

/// Finite Abelian group in invariant-factor form C_{n_1} + ... + C_{n_r}
/// with 1 < n_1 | n_2 | ... | n_r. The empty factor list is the trivial
/// group. Immutable after construction.
class GroupSpec {
 public:
  GroupSpec() = default;

  /// Accepts any list of moduli >= 2 and normalizes it to the invariant-
  /// factor chain (CRT merge / prime-power redistribution).
  static GroupSpec from_moduli(const std::vector<std::uint64_t>& moduli);

  /// Parses "n1,n2,...,nr". Throws ParseError on malformed input. The empty
  /// string denotes the trivial group.
  static GroupSpec parse(const std::string& text);

  const std::vector<std::uint64_t>& invariant_factors() const { return factors_; }
  std::size_t rank() const { return factors_.size(); }
  std::uint64_t exponent() const { return factors_.empty() ? 1 : factors_.back(); }
  std::uint64_t order() const;
  bool is_trivial() const { return factors_.empty(); }
  bool is_cyclic() const { return factors_.size() <= 1; }

  /// True when every invariant factor is a power of the same prime p.
  bool is_p_group(std::uint64_t* p_out = nullptr) const;
  /// True when all factors equal one prime p (elementary Abelian).
  bool is_elementary(std::uint64_t* p_out = nullptr) const;

  /// Canonical text rendering: "n1,n2,...,nr" ("1" for the trivial group).
  std::string to_string() const;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
  friend auto operator<=>(const GroupSpec&, const GroupSpec&) = default;

 private:
  std::vector<std::uint64_t> factors_;
};

/// Element of a GroupSpec: residue coordinates a_i mod n_i.
using GroupElement = std::vector<std::uint64_t>;

/// Multiset of elements over one GroupSpec, kept canonically sorted
/// (lexicographic coordinate order).
class ElementSequence {
 public:
  ElementSequence() = default;
  explicit ElementSequence(std::vector<GroupElement> elems);

  void push(GroupElement g);
  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }
  const std::vector<GroupElement>& elements() const { return elems_; }

  friend bool operator==(const ElementSequence&, const ElementSequence&) = default;
  friend auto operator<=>(const ElementSequence&, const ElementSequence&) = default;

 private:
  std::vector<GroupElement> elems_;
};

struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// ord(g) = lcm_i n_i / gcd(a_i, n_i). Validates coordinate count and range.
std::uint64_t element_order(const GroupElement& g, const GroupSpec& G);

/// Sum of 1/ord(g) over the sequence.
Rational cross_number(const ElementSequence& s, const GroupSpec& G);

/// The subgroup G_d of elements of order dividing d, as a group spec:
/// positionally C_{gcd(d, n_i)}. d must divide exp(G).
std::vector<std::uint64_t> subgroup_factors(const GroupSpec& G, std::uint64_t d);

/// upsilon_i(d', d) = A_i / gcd(A_i, B_i) with A_i = gcd(d', n_i) and
/// B_i = lcm(d, n_i) / lcm(d', n_i). Positional 1-entries are retained;
/// `normalized` is the same group as a GroupSpec.
struct UpsilonGroup {
  std::vector<std::uint64_t> positional;
  GroupSpec normalized;
};
UpsilonGroup upsilon_group(const GroupSpec& G, std::uint64_t d_prime, std::uint64_t d);

/// k*(G): sum of (q-1)/q over the prime-power parts of the finest cyclic
/// decomposition. Trivial group: 0.
Rational kstar(const GroupSpec& G);

/// K*(G) = k*(G) + 1/exp(G). Trivial group: 1.
Rational Kstar(const GroupSpec& G);

/// Zero-sumfree sequence with cross number exactly k*(G): for every
/// prime-power part q of an invariant factor, q-1 copies of the CRT
/// coordinate generator (residue 1 in that component, 0 elsewhere).
ElementSequence kstar_witness(const GroupSpec& G);

/// phi(G, H) for H = C_n^r with n = exp(G), r = rank(G): k*(H/G) when the
/// per-coordinate criterion gcd(n_i, n/n_i) = 1 certifies G as a direct
/// summand of H, else the always-valid k*(H/G)/n.
struct PhiQuotient {
  Rational value;
  bool direct_summand;
};
PhiQuotient phi_quotient(const GroupSpec& G);

}  // namespace zsum
