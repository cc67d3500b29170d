#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zsum/bounds.hpp"
#include "zsum/group.hpp"
#include "zsum/oracle.hpp"
#include "zsum/polytope.hpp"
#include "zsum/provider.hpp"
#include "zsum/rational.hpp"

namespace zsum {

/// Shape snapshot of a group. tau, omega and pminus describe the exponent,
/// the modulus every per-divisor bound runs over.
struct GroupStats {
  std::uint64_t order = 1;
  std::uint64_t exponent = 1;
  unsigned rank = 0;
  std::uint64_t tau = 1;
  unsigned omega = 0;
  std::uint64_t pminus = 1;
};
GroupStats group_stats(const GroupSpec& G);

/// Oracle values, present when the group fit the search budgets.
struct ExactBlock {
  Rational k;
  Rational K;
  std::uint64_t davenport = 0;
  std::uint64_t eta = 0;
  std::uint64_t order_budget = 0;  // cap used for D / eta
  std::uint64_t cross_budget = 0;  // cap used for k / K
};

/// The profile-polytope optimum with its full constraint provenance.
struct PolytopeBlock {
  Rational optimum;
  ProfileVector argmax;
  std::uint64_t node_count = 0;
  Rational h_threshold;
  bool include_h = false;      // whether the experimental h check ran
  bool argmax_meets_h = false; // meaningful only when include_h
  bool all_exact = true;
  bool used_conjectural = false;
  std::vector<CapLedgerEntry> ledger;
};

struct BoundReport {
  std::string group;  // canonical invariant-factor string
  GroupStats stats;
  Rational kstar_value;
  Rational Kstar_value;
  std::optional<ExactBlock> exact;
  std::vector<BoundValue> bounds;
  std::vector<std::string> unavailable;  // skipped methods, with reasons
  std::optional<PolytopeBlock> polytope;
  bool verdict = true;  // max lower endpoint <= min upper endpoint
  bool conjectural_watermark = false;
};

struct ReportOptions {
  ProviderPolicy policy;  // drives polytope caps and qualitative bounds
  SearchOptions search;   // oracle budgets for the exact block
  bool want_exact = true;
  bool include_h = false;
};

/// Assembles stats, k*/K*, the oracle block (when budgets allow), every
/// applicable classic bound, and the polytope optimum. A bound whose
/// hypotheses do not apply (KZ on non-cyclic groups, alpha on rank >= 3)
/// is skipped silently; one whose inputs were refused by policy is listed
/// under `unavailable` with the reason. The verdict checks that the
/// largest certified lower endpoint does not exceed the smallest certified
/// upper endpoint.
BoundReport build_report(const GroupSpec& G, const ReportOptions& opts = {});

/// Deterministic serializations. JSON keeps every rational as "num/den";
/// decimal renderings are presentation-only fields. Field order is fixed;
/// two runs over the same input are byte-identical.
std::string report_json(const BoundReport& r);
BoundReport report_from_json(const std::string& text);
std::string report_csv(const BoundReport& r);
std::string report_table(const BoundReport& r);

// --- families -------------------------------------------------------------

enum class FamilyKind {
  CyclicByPrimes,  // C_n, n a product of omega consecutive primes
  PowerOfCyclic,   // C_n^r, same n
  UnitaryChain     // direct sums over nested unitary divisor chains
};

/// A finite trajectory of groups indexed by P^-(exp), one member per prime
/// in [p_min, p_max]. Each member's moduli are built from consecutive
/// primes p = q_1 < q_2 < ... so that P^- is the trajectory parameter:
///   CyclicByPrimes: n = q_1 ... q_omega, member C_n
///   PowerOfCyclic:  member C_n^rank with omega(n) = omega
///   UnitaryChain:   signature ells = (l_1 <= ... <= l_r); component
///                   primes q_1..q_{l_r}; n_i = q_1 ... q_{l_i}; member
///                   C_{n_1} + ... + C_{n_r}. Every n_i then satisfies
///                   omega(n_i) = l_i and gcd(n_i, n_r / n_i) = 1.
struct FamilySpec {
  FamilyKind kind = FamilyKind::CyclicByPrimes;
  unsigned omega = 1;                // for the cyclic kinds
  unsigned rank = 2;                 // for PowerOfCyclic
  std::vector<unsigned> ells;        // for UnitaryChain
  std::uint64_t p_min = 2;
  std::uint64_t p_max = 97;
};

struct FamilyMember {
  GroupSpec group;
  std::uint64_t pminus = 2;  // P^-(exp), the row key
};

/// Canonical hyphenated name: "cyclic-by-primes" etc.
const char* family_kind_name(FamilyKind k);

/// Members ordered by P^- ascending. Throws std::invalid_argument when the
/// parameters denote an empty or ill-formed family (no primes in range,
/// decreasing ells, zero rank).
std::vector<FamilyMember> enumerate_family(const FamilySpec& spec);

/// The limit k tends to along the trajectory: sum of l_i, or rank * omega.
Rational family_limit_target(const FamilySpec& spec);

/// Per-member bound columns. Recognized method tokens: "kstar", "gs",
/// "kz", "alpha", "sharp", "smooth", "polytope". A cell is empty when the
/// method does not apply to that member under the provider's policy.
struct FamilyTable {
  FamilySpec spec;
  Rational limit_target;
  std::vector<std::string> methods;
  std::vector<FamilyMember> members;
  // cells[i][j]: bound value of methods[j] on members[i], if available.
  std::vector<std::vector<std::optional<Rational>>> cells;
  bool conjectural_watermark = false;
};

FamilyTable family_table(const FamilySpec& spec, const std::vector<std::string>& methods,
                         const ProviderPolicy& policy = {});

std::string family_csv(const FamilyTable& t);
std::string family_table_text(const FamilyTable& t);

}  // namespace zsum
