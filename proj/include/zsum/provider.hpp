#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

#include "zsum/group.hpp"
#include "zsum/rational.hpp"

namespace zsum {

enum class Provenance { ExactFormula, ExactSearch, UpperBound, Conjectural };

/// Canonical labels: "Exact-Formula", "Exact-Search", "UpperBound",
/// "Conjectural".
const char* provenance_name(Provenance p);

struct ValueWithProvenance {
  std::uint64_t value = 0;
  Provenance provenance = Provenance::UpperBound;
  std::string source_note;
  bool is_exact() const {
    return provenance == Provenance::ExactFormula || provenance == Provenance::ExactSearch;
  }
};

/// Thrown when a requested value cannot be produced soundly under the
/// active policy (strict mode, no applicable formula, search over budget).
struct PolicyRefusal : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ProviderPolicy {
  bool allow_search = true;
  std::uint64_t search_budget = 64;
  bool allow_conjectural = false;
  /// Instead of refusing eta beyond formulas/search, fall back to the crude
  /// pigeonhole bound |G| * exp(G) (sound but weak).
  bool permissive_fallback = false;
  /// Search threads; 0 = hardware concurrency.
  unsigned threads = 1;

  ProviderPolicy();  // installs c_1 = 1 and c_2 = 3

  /// c_r for eta(C_p^r) <= c_r (p-1) + 1. Must satisfy c_r >= r.
  void set_c_r(unsigned r, const Rational& value);
  const std::map<unsigned, Rational>& c_r_values() const { return c_r_; }
  bool has_c_r(unsigned r) const { return c_r_.count(r) != 0; }
  const Rational& c_r(unsigned r) const { return c_r_.at(r); }

 private:
  std::map<unsigned, Rational> c_r_;
};

/// Single source of D(G) and eta(G) for bound construction. Formula where
/// one exists, exhaustive search within budget, sound upper bounds
/// otherwise; conjectural values only on explicit opt-in. Values are
/// memoized; the cache is fill-once-idempotent and safe to share.
class InvariantProvider {
 public:
  explicit InvariantProvider(ProviderPolicy policy = ProviderPolicy());

  const ProviderPolicy& policy() const { return policy_; }

  ValueWithProvenance davenport(const GroupSpec& G) const;
  ValueWithProvenance eta(const GroupSpec& G) const;

 private:
  ValueWithProvenance davenport_uncached(const GroupSpec& G) const;
  ValueWithProvenance eta_uncached(const GroupSpec& G) const;

  ProviderPolicy policy_;
  mutable std::mutex mutex_;
  mutable std::map<std::string, ValueWithProvenance> dav_cache_;
  mutable std::map<std::string, ValueWithProvenance> eta_cache_;
};

}  // namespace zsum
