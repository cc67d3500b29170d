#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "zsum/group.hpp"
#include "zsum/rational.hpp"

namespace zsum {

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SearchOptions {
  /// Order cap for D / eta / relative-constant searches.
  std::uint64_t max_order = 64;
  /// Order cap for little-cross / cross searches.
  std::uint64_t max_order_cross = 32;
  /// Branch-and-bound pruning (sumset growth, capacity, incumbent bounds).
  /// The plain-enumeration mode exists so tests can confirm pruning never
  /// changes a result.
  bool use_pruning = true;
  /// 0 = hardware concurrency.
  unsigned threads = 1;
};

/// Dense table for one group of order <= 64: mixed-radix element indexing
/// plus a word-parallel "add g" action on sumset bitmaps (per-dimension
/// block rotations of the 64-bit universe).
class GroupTable {
 public:
  explicit GroupTable(const GroupSpec& G);

  std::uint64_t order() const { return order_; }
  std::uint64_t exponent() const { return exponent_; }
  std::uint64_t universe() const { return universe_; }

  std::uint64_t index_of(const GroupElement& g) const;
  GroupElement element_at(std::uint64_t idx) const;

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return addv_[a * order_ + b]; }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return add(a, negv_[b]); }
  std::uint64_t neg(std::uint64_t a) const { return negv_[a]; }
  std::uint64_t order_of(std::uint64_t a) const { return ordv_[a]; }

  /// { s + g : s in bits } as a bitmap.
  std::uint64_t shift(std::uint64_t bits, std::uint64_t g) const {
    for (const Rot& r : rots_[g]) bits = ((bits & r.mask) << r.up) | ((bits & ~r.mask) >> r.down);
    return bits;
  }

  const GroupSpec& spec() const { return spec_; }

 private:
  struct Rot {
    std::uint64_t mask;
    unsigned up;
    unsigned down;
  };

  GroupSpec spec_;
  std::vector<std::uint64_t> moduli_;
  std::uint64_t order_ = 1;
  std::uint64_t exponent_ = 1;
  std::uint64_t universe_ = 1;
  std::vector<std::uint8_t> ordv_, negv_, addv_;
  std::vector<std::vector<Rot>> rots_;
};

/// Sumset of a sequence: membership bitmap over element indices plus the
/// minimal nonempty-subsequence length realizing each sum (0xFF when the
/// length exceeds 254 or the sum is unreachable).
struct SumsetState {
  std::uint64_t bits = 0;
  std::vector<std::uint8_t> min_length;
  bool zero_sumfree() const { return (bits & 1ull) == 0; }
  bool contains(std::uint64_t idx) const { return (bits >> idx) & 1ull; }
};

SumsetState sumset(const GroupSpec& G, const ElementSequence& S);

/// Davenport constant by exhaustive canonical-multiset search:
/// 1 + max length of a zero-sumfree multiset.
std::uint64_t davenport_exact(const GroupSpec& G, const SearchOptions& opts = {});

/// eta(G): 1 + max length of a multiset with no zero-sum subsequence of
/// length <= exp(G).
std::uint64_t eta_exact(const GroupSpec& G, const SearchOptions& opts = {});

/// D_(d',d)(G): smallest t forcing, in every length-t sequence of G_d, a
/// nonempty subsequence with sum in G_{d/d'}.
std::uint64_t d_relative_exact(const GroupSpec& G, std::uint64_t d_prime, std::uint64_t d,
                               const SearchOptions& opts = {});

/// eta_(d',d)(G): as above with the subsequence length capped at d'.
std::uint64_t eta_relative_exact(const GroupSpec& G, std::uint64_t d_prime, std::uint64_t d,
                                 const SearchOptions& opts = {});

/// A zero-sumfree sequence attaining k(G), of minimal length among the
/// attainers, together with its order profile x_d = |S_d|.
struct ExtremalWitness {
  ElementSequence sequence;
  Rational cross;
  std::map<std::uint64_t, std::uint64_t> profile;
};

struct LittleCrossResult {
  Rational value;
  std::vector<ExtremalWitness> witnesses;  // all minimal-length maximizers
  std::uint64_t davenport;                 // search by-product
};

LittleCrossResult little_cross_exact(const GroupSpec& G, const SearchOptions& opts = {});

/// K(G) over minimal zero-sum sequences, searched as
/// max { k(S) + 1/ord(-sigma(S)) : S nonempty zero-sumfree }.
/// Trivial group: 1, by the convention that (0) is minimal zero-sum.
Rational cross_exact(const GroupSpec& G, const SearchOptions& opts = {});

}  // namespace zsum
