#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zsum/group.hpp"
#include "zsum/interval.hpp"
#include "zsum/provider.hpp"
#include "zsum/rational.hpp"

namespace zsum {

enum class BoundMethod { KStarLower, GS, KZ, AlphaRank1, AlphaRank2, Qualitative, Polytope };

const char* bound_method_name(BoundMethod m);

/// One bound on k(G), tagged with its direction and everything it assumed.
/// [lo, hi] is a certified enclosure of the bound's mathematical value;
/// rational bounds are points (lo == hi), the GS bound carries its
/// evaluation width.
struct BoundValue {
  BoundMethod method = BoundMethod::KStarLower;
  bool lower = false;  // k* is a lower bound; everything else bounds from above
  Rational lo, hi;
  std::string note;
  std::vector<std::string> assumptions;
  bool conjectural = false;

  bool exact() const { return lo == hi; }
};

/// k*(G) <= k(G), exact.
BoundValue kstar_lower(const GroupSpec& G);

/// min over d | exp(G) of (d-1)/P^-(n) + ln(|G|/d), enclosed to width
/// <= 1e-9. at_divisor is the divisor attaining the smallest certified
/// upper endpoint (smallest such d on ties); log_order is the d = 1
/// specialization ln|G|.
struct GsBound {
  BoundValue bound;
  std::uint64_t at_divisor = 1;
  Interval log_order;
};
GsBound gs_bound(const GroupSpec& G);

/// k(C_n) <= 2 omega(n), exact. Throws std::invalid_argument unless G is
/// cyclic of order >= 2.
BoundValue kz_bound(const GroupSpec& G);

/// Rank 1: k(G) <= alpha(n). Rank 2: k(G) <= 3 alpha(n) - beta(n) -
/// phi(G, C_n^2). Throws std::invalid_argument for rank >= 3.
BoundValue alpha_bound(const GroupSpec& G);

/// The two qualitative upper bounds for k(G) with H = C_n^r, n = exp(G),
/// r = rank(G):
///   sharp:  sum over d | n of [min(eta(C_{P^-(d)}^r), D(C_d^r)) - 1]/d - phi(G,H)
///   smooth: c_r (alpha(n) - beta(n)) + r beta(n) - phi(G,H)
/// Either form may be unavailable under the provider's policy (missing c_r,
/// refused eta); the reason is reported in its place. Upper-bound
/// provenances keep the forms valid (the expressions are monotone in eta
/// and D); conjectural provenances taint the form's flag.
struct QualitativeBounds {
  std::optional<BoundValue> sharp;
  std::optional<BoundValue> smooth;
  std::string sharp_unavailable;
  std::string smooth_unavailable;
};
QualitativeBounds qualitative_bound(const GroupSpec& G, const InvariantProvider& provider);

/// D(G) <= floor(n * k_upper) + 1 for any upper bound k_upper >= k(G).
std::uint64_t davenport_from_k(const GroupSpec& G, const Rational& k_upper);

/// (k + 1/n, k + 1/P^-(n)): encloses K(G) when k_val is exactly k(G).
std::pair<Rational, Rational> K_interval_from_k(const GroupSpec& G, const Rational& k_val);

}  // namespace zsum
