#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "zsum/rational.hpp"

namespace zsum {

/// alpha(n) = sum over d | n of (P^-(d) - 1)/d; alpha(1) = 0.
Rational alpha_of(std::uint64_t n);

/// beta(n) = sum over prime p | n of (p - 1)/p; beta(1) = 0.
Rational beta_of(std::uint64_t n);

/// The prime-indexed companion sequences
///   alpha_1 = 1,  alpha_l = 1 + p_l/(p_l - 1) * alpha_{l-1},
///   beta_l  = sum_{i<=l} (p_i - 1)/p_i,
///   gamma_l = 3 alpha_l - beta_l,
/// which dominate alpha(n)/beta(n) over all n with omega(n) = l.
struct SequenceTriple {
  unsigned long l = 0;
  Rational alpha, beta, gamma;
};
SequenceTriple sequence_triple(unsigned long l);

/// alpha_9 / 9: the maximum of alpha_l / l, attained only at l = 9.
Rational d1_constant();
/// gamma_8 / 8: the maximum of gamma_l / l, attained only at l = 8.
Rational d2_constant();

/// Exhaustive exact sweep of the sequence inequalities up to max_l,
/// plus spot checks of alpha(n)/beta(n) against their l-indexed envelopes
/// for the supplied sample moduli. All comparisons are exact rational
/// arithmetic except the log/loglog envelopes, which are certified by
/// directed-rounding enclosures.
struct SequenceSweepReport {
  unsigned long max_l = 0;

  bool alpha_le_2l = false;             // alpha_l <= 2l everywhere
  bool alpha_ratio_le_d1 = false;       // alpha_l / l <= alpha_9 / 9 everywhere
  bool gamma_ratio_le_d2 = false;       // gamma_l / l <= gamma_8 / 8 everywhere
  unsigned long alpha_ratio_argmax = 0; // unique maximizer of alpha_l / l
  unsigned long gamma_ratio_argmax = 0; // unique maximizer of gamma_l / l

  /// 5l/2 <= gamma_l holds exactly for l <= gamma_lower_holds_up_to and is
  /// refuted at gamma_lower_first_failure (0 when it held on the whole
  /// range). Since gamma_l / l decreases toward 2 < 5/2, failure past the
  /// crossover is genuine, not numerical.
  unsigned long gamma_lower_holds_up_to = 0;
  unsigned long gamma_lower_first_failure = 0;

  bool gamma_ratio_increasing_to_8 = false;  // gamma_l/l strictly increasing on [1,8]
  bool gamma_ratio_decreasing_from_8 = false;// and strictly decreasing on [8,max_l]
  bool alpha_ratio_decreasing_from_241 = false; // alpha_l/l strictly decreasing on [241,max_l]

  bool beta_ratio_below_one = false;    // beta_l < l everywhere
  bool beta_lower_ok = false;           // beta_l >= l - 2 - loglog l for 3 <= l <= max_l
  bool rosser_ok = false;               // p_l >= l log l for all l <= max_l
  bool closed_form_ok = false;          // alpha_l = l + sum_{k<l} alpha_k/(p_{k+1}-1),
                                        // checked for l <= min(max_l, 1000)

  std::size_t samples_checked = 0;      // beta_l <= beta(n) <= alpha(n) <= alpha_l
  std::size_t samples_failed = 0;
  std::uint64_t first_failed_sample = 0;

  bool all_upper_bounds_ok() const {
    return alpha_le_2l && alpha_ratio_le_d1 && gamma_ratio_le_d2 && alpha_ratio_argmax == 9 &&
           gamma_ratio_argmax == 8 && rosser_ok && samples_failed == 0;
  }
};

/// max_l must be >= 9 (the argmax checks need the turning points) and at
/// most 100000 (prime-table budget); throws std::invalid_argument /
/// BudgetExceeded otherwise.
SequenceSweepReport sequence_sweep(unsigned long max_l, const std::vector<std::uint64_t>& sample_n);

/// Deterministic sample of `count` moduli in [2, 10^9] for the sweep's
/// envelope spot checks (fixed-seed mt19937_64).
std::vector<std::uint64_t> default_sweep_sample(std::size_t count);

enum class TrajectoryKind { AlphaOverL, BetaOverL };

struct TrajectoryRow {
  unsigned long l = 0;
  Rational value;  // alpha_l or beta_l, exact
  Rational ratio;  // value / l
};

std::vector<TrajectoryRow> limit_trajectory(TrajectoryKind kind, unsigned long max_l);

/// CSV with header: l, <alpha_l|beta_l> as exact fraction, ratio to 12
/// decimal digits.
void write_trajectory_csv(std::ostream& out, TrajectoryKind kind,
                          const std::vector<TrajectoryRow>& rows);

}  // namespace zsum
