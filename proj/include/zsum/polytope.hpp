#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "zsum/group.hpp"
#include "zsum/oracle.hpp"
#include "zsum/provider.hpp"
#include "zsum/rational.hpp"

namespace zsum {

/// Profile of a sequence over G: for every divisor d of exp(G), the number
/// of elements of order exactly d. The key set must be the full divisor
/// lattice of exp(G).
using ProfileVector = std::map<std::uint64_t, std::uint64_t>;

/// One invariant consulted while building the polytope caps.
struct CapLedgerEntry {
  std::string quantity;      // "eta" or "D"
  std::uint64_t d = 0;       // the constraint's divisor
  std::uint64_t d_prime = 0; // the inner divisor (equals d for g caps)
  GroupSpec upsilon;         // the section group whose invariant was used
  ValueWithProvenance value;
};

/// The profile polytope of G: box caps f_cap(d) on single coordinates and
/// cumulative caps g_cap(d) over the divisor downset of d, plus the cross
/// number threshold h. A missing f_cap entry (only ever d = 1, where the
/// min runs over an empty set) means unconstrained; x_1 is still forced to
/// 0 by g_cap(1) = D(trivial) - 1 = 0.
struct ProfilePolytope {
  GroupSpec group;
  std::uint64_t n = 1;                        // exp(G)
  std::vector<std::uint64_t> divs;            // ascending divisor lattice of n
  std::map<std::uint64_t, std::uint64_t> f_cap;
  std::map<std::uint64_t, std::uint64_t> g_cap;
  Rational h_threshold;                       // k*(G)
  std::vector<CapLedgerEntry> ledger;
  bool all_exact = true;
  bool used_conjectural = false;
};

/// Caps from the section groups:
///   f_cap(d) = min over 1 < d' | d of eta(G_upsilon(d', d)) - 1
///   g_cap(d) = D(G_upsilon(d, d)) - 1
/// Every eta/D consulted is recorded in the ledger with its provenance.
/// Propagates PolicyRefusal when the provider cannot supply an eta soundly.
ProfilePolytope build_polytope(const GroupSpec& G, const InvariantProvider& provider);

/// x_d <= f_cap(d), downset sums <= g_cap(d), and (only when include_h)
/// sum x_d / d >= k*(G). Throws std::invalid_argument if x is not indexed
/// by exactly the divisor lattice.
bool membership(const ProfileVector& x, const ProfilePolytope& P, bool include_h);

struct PolytopeSolution {
  Rational optimum;
  ProfileVector argmax;
  std::uint64_t node_count = 0;
  bool all_exact = true;
  bool used_conjectural = false;
};

/// Exact integer maximum of sum x_d / d over the polytope (h excluded).
/// Depth-first over divisors in decreasing weight 1/d, values descending,
/// pruned by the per-variable relaxation bound; ties resolve to the
/// lexicographically largest argmax in divisor order. Deterministic.
/// Throws BudgetExceeded when the caps are too large to enumerate exactly.
PolytopeSolution maximize(const ProfilePolytope& P);

/// Profile of an extremal witness over the full divisor lattice of exp(G).
ProfileVector profile_of_witness(const GroupSpec& G, const ExtremalWitness& w);

/// Runs the little-cross oracle, rebuilds the polytope from exact values
/// only, and checks that every minimal-length maximizer's profile lies in
/// the polytope intersected with the h >= 0 half-space. Throws
/// std::logic_error if any cap came back non-exact (the check would be
/// meaningless).
bool verify_extremal_membership(const GroupSpec& G, const SearchOptions& opts = {});

}  // namespace zsum
