#include "zsum/sequences.hpp"

#include <ostream>
#include <random>
#include <stdexcept>

#include "zsum/interval.hpp"
#include "zsum/numbers.hpp"
#include "zsum/oracle.hpp"

namespace zsum {

Rational alpha_of(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("alpha_of: n must be >= 1");
  // Enumerate divisors with their least prime attached: extending by a
  // prime smaller than everything already present makes it the new P^-.
  auto fac = factorize(n);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> divs = {{1, 1}};  // (d, P^-(d))
  for (auto it = fac.rbegin(); it != fac.rend(); ++it) {
    const auto [p, e] = *it;
    const std::size_t base = divs.size();
    std::uint64_t pk = 1;
    for (unsigned j = 1; j <= e; ++j) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back({divs[i].first * pk, p});
    }
  }
  Rational sum(0);
  for (const auto& [d, pm] : divs)
    if (d > 1)
      sum += Rational(static_cast<unsigned long>(pm - 1)) / Rational(static_cast<unsigned long>(d));
  return sum;
}

Rational beta_of(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("beta_of: n must be >= 1");
  Rational sum(0);
  for (const auto& [p, e] : factorize(n))
    sum += Rational(static_cast<unsigned long>(p - 1)) / Rational(static_cast<unsigned long>(p));
  return sum;
}

namespace {

// Unreduced integer tracks for the prime-indexed sequences:
//   alpha_l = A/B with B_l = B_{l-1}(p_l - 1), A_l = B_l + p_l A_{l-1}
//   beta_l  = C/D with D_l = D_{l-1} p_l,      C_l = C_{l-1} p_l + (p_l - 1) D_{l-1}
// plus the cross products Y = B*D, Z = A*D, W = C*B maintained by small
// multiplications only, so that gamma_l = (3Z - W)/Y without any big*big
// product. Skipping reduction keeps each step linear in the operand size.
struct Track {
  unsigned long l = 1;
  Integer A = 1, B = 1;  // alpha_1 = 1
  Integer C = 1, D = 2;  // beta_1 = 1/2
  Integer Y = 2, Z = 2, W = 1;

  void step(unsigned long p) {
    B *= p - 1;
    A = B + p * A;
    Integer old_D = D;
    C = C * p + (p - 1) * old_D;
    D *= p;
    Z = p * (p - 1) * Y + p * p * Z;
    W = p * (p - 1) * W + (p - 1) * (p - 1) * Y;
    Y *= p * (p - 1);
    ++l;
  }

  Rational alpha() const {
    Rational q(A, B);
    q.canonicalize();
    return q;
  }
  Rational beta() const {
    Rational q(C, D);
    q.canonicalize();
    return q;
  }
  Rational gamma() const {
    Rational q(Integer(3 * Z - W), Y);
    q.canonicalize();
    return q;
  }
};

PrimeTable& primes() {
  static PrimeTable table;
  return table;
}

constexpr unsigned long kMaxSweep = 100000;

}  // namespace

SequenceTriple sequence_triple(unsigned long l) {
  if (l == 0) throw std::invalid_argument("sequence index must be >= 1");
  if (l > kMaxSweep) throw BudgetExceeded("sequence index beyond prime-table budget");
  Track t;
  while (t.l < l) t.step(primes().nth_prime(t.l + 1));
  return {l, t.alpha(), t.beta(), t.gamma()};
}

Rational d1_constant() { return sequence_triple(9).alpha / 9; }

Rational d2_constant() { return sequence_triple(8).gamma / 8; }

SequenceSweepReport sequence_sweep(unsigned long max_l,
                                   const std::vector<std::uint64_t>& sample_n) {
  if (max_l < 9) throw std::invalid_argument("sweep needs max_l >= 9 to see both ratio peaks");
  if (max_l > kMaxSweep) throw BudgetExceeded("sweep range beyond prime-table budget");

  SequenceSweepReport rep;
  rep.max_l = max_l;
  rep.alpha_le_2l = true;
  rep.alpha_ratio_le_d1 = true;
  rep.gamma_ratio_le_d2 = true;
  rep.gamma_ratio_increasing_to_8 = true;
  rep.gamma_ratio_decreasing_from_8 = true;
  rep.alpha_ratio_decreasing_from_241 = true;
  rep.beta_ratio_below_one = true;
  rep.beta_lower_ok = true;
  rep.rosser_ok = true;
  rep.closed_form_ok = true;

  const Rational a9 = sequence_triple(9).alpha;   // reduced, tiny
  const Rational g8 = sequence_triple(8).gamma;
  const Integer& a9n = a9.get_num();
  const Integer& a9d = a9.get_den();
  const Integer& g8n = g8.get_num();
  const Integer& g8d = g8.get_den();

  const Rational log_width = make_rational(1, 1000000000);  // 1e-9
  const unsigned long closed_form_limit = std::min<unsigned long>(max_l, 1000);

  Track t;
  Integer prev_A = t.A, prev_X = 3 * t.Z - t.W;
  bool gamma_lower_failed = false;
  std::vector<unsigned long> alpha_eq, gamma_eq;  // ratio-equality witnesses
  Rational closed_sum(0);                         // sum_{k<l} alpha_k/(p_{k+1}-1)
  Rational prev_alpha = t.alpha();

  for (unsigned long l = 1; l <= max_l; ++l) {
    unsigned long p_l = primes().nth_prime(l);
    if (l > 1) {
      prev_A = t.A;
      prev_X = 3 * t.Z - t.W;
      t.step(p_l);
    }
    const Integer X = 3 * t.Z - t.W;

    if (t.A > 2 * l * t.B) rep.alpha_le_2l = false;
    if (t.C >= Integer(l) * t.D) rep.beta_ratio_below_one = false;

    // alpha_l / l vs alpha_9 / 9, cross-multiplied.
    int cmp_a = cmp(Integer(9 * t.A * a9d), Integer(Integer(l) * a9n * t.B));
    if (cmp_a > 0) rep.alpha_ratio_le_d1 = false;
    if (cmp_a == 0) alpha_eq.push_back(l);

    // gamma_l / l vs gamma_8 / 8.
    int cmp_g = cmp(Integer(8 * X * g8d), Integer(Integer(l) * g8n * t.Y));
    if (cmp_g > 0) rep.gamma_ratio_le_d2 = false;
    if (cmp_g == 0) gamma_eq.push_back(l);

    // 5l/2 <= gamma_l.
    if (5 * l * t.Y <= 2 * X) {
      if (!gamma_lower_failed) rep.gamma_lower_holds_up_to = l;
    } else if (!gamma_lower_failed) {
      gamma_lower_failed = true;
      rep.gamma_lower_first_failure = l;
    }

    if (l > 1) {
      // Consecutive-ratio comparisons: the shared denominator Y_{l-1}
      // cancels, leaving (l-1) X_l vs l (p_l-1) p_l X_{l-1} for gamma and
      // (l-1) A_l vs l (p_l-1) A_{l-1} for alpha.
      int dg = cmp(Integer((l - 1) * X), Integer(Integer(l) * (p_l - 1) * p_l * prev_X));
      if (l <= 8 && dg <= 0) rep.gamma_ratio_increasing_to_8 = false;
      if (l > 8 && dg >= 0) rep.gamma_ratio_decreasing_from_8 = false;
      if (l > 241) {
        int da = cmp(Integer((l - 1) * t.A), Integer(Integer(l) * (p_l - 1) * prev_A));
        if (da >= 0) rep.alpha_ratio_decreasing_from_241 = false;
      }
    }

    // beta_l >= l - 2 - loglog l, certified from below for l >= 3.
    if (l >= 3 && rep.beta_lower_ok) {
      Interval ll = loglog_interval(Rational(l), log_width);
      Rational threshold = Rational(l) - 2 - ll.lo;  // >= the true envelope
      if (t.C * threshold.get_den() < threshold.get_num() * t.D) rep.beta_lower_ok = false;
    }

    // Rosser: p_l >= l log l, certified.
    if (rep.rosser_ok) {
      Interval lg = log_interval(Rational(l), log_width);
      if (!(Rational(p_l) >= Rational(l) * lg.hi)) {
        // Inconclusive or false at this width; one sharp retry decides.
        Interval fine = log_interval(Rational(l), log_width / 1000000);
        if (!(Rational(p_l) >= Rational(l) * fine.hi)) rep.rosser_ok = false;
      }
    }

    // Closed form alpha_l = l + sum_{k=1}^{l-1} alpha_k / (p_{k+1} - 1).
    if (l > 1 && l <= closed_form_limit) {
      closed_sum += prev_alpha / Rational(static_cast<unsigned long>(p_l - 1));
      if (t.alpha() != Rational(l) + closed_sum) rep.closed_form_ok = false;
    }
    if (l < closed_form_limit) prev_alpha = t.alpha();
  }

  rep.alpha_ratio_argmax = (alpha_eq.size() == 1) ? alpha_eq.front() : 0;
  rep.gamma_ratio_argmax = (gamma_eq.size() == 1) ? gamma_eq.front() : 0;
  if (!gamma_lower_failed) rep.gamma_lower_holds_up_to = max_l;

  // Envelope spot checks: beta_l <= beta(n) <= alpha(n) <= alpha_l with
  // l = omega(n).
  std::vector<SequenceTriple> small;  // index l, for l <= 15 (omega of any uint64)
  for (unsigned long l = 1; l <= 15; ++l) small.push_back(sequence_triple(l));
  for (std::uint64_t n : sample_n) {
    ++rep.samples_checked;
    unsigned long l = omega(n);
    bool ok;
    if (l == 0) {
      ok = (n == 1);  // alpha(1) = beta(1) = 0 with empty envelope
    } else {
      const SequenceTriple& s = small.at(l - 1);
      Rational a = alpha_of(n), b = beta_of(n);
      ok = s.beta <= b && b <= a && a <= s.alpha;
    }
    if (!ok) {
      ++rep.samples_failed;
      if (rep.first_failed_sample == 0) rep.first_failed_sample = n;
    }
  }
  return rep;
}

std::vector<std::uint64_t> default_sweep_sample(std::size_t count) {
  std::mt19937_64 rng(0x5eedc0de);
  std::vector<std::uint64_t> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(2 + rng() % 999999999);
  return out;
}

std::vector<TrajectoryRow> limit_trajectory(TrajectoryKind kind, unsigned long max_l) {
  if (max_l == 0) throw std::invalid_argument("trajectory needs max_l >= 1");
  if (max_l > kMaxSweep) throw BudgetExceeded("trajectory range beyond prime-table budget");
  std::vector<TrajectoryRow> rows;
  rows.reserve(max_l);
  Track t;
  for (unsigned long l = 1; l <= max_l; ++l) {
    if (l > 1) t.step(primes().nth_prime(l));
    Rational v = (kind == TrajectoryKind::AlphaOverL) ? t.alpha() : t.beta();
    rows.push_back({l, v, v / Rational(l)});
  }
  return rows;
}

void write_trajectory_csv(std::ostream& out, TrajectoryKind kind,
                          const std::vector<TrajectoryRow>& rows) {
  const char* name = (kind == TrajectoryKind::AlphaOverL) ? "alpha_l" : "beta_l";
  out << "l," << name << "," << name << "_over_l\n";
  for (const TrajectoryRow& r : rows)
    out << r.l << "," << to_fraction_string(r.value) << "," << to_decimal_string(r.ratio, 12)
        << "\n";
}

}  // namespace zsum
