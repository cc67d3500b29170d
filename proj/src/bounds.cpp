#include "zsum/bounds.hpp"

#include "zsum/numbers.hpp"
#include "zsum/sequences.hpp"

namespace zsum {

const char* bound_method_name(BoundMethod m) {
  switch (m) {
    case BoundMethod::KStarLower:
      return "kstar-lower";
    case BoundMethod::GS:
      return "gs-log";
    case BoundMethod::KZ:
      return "kz-2omega";
    case BoundMethod::AlphaRank1:
      return "alpha-rank1";
    case BoundMethod::AlphaRank2:
      return "alpha-rank2";
    case BoundMethod::Qualitative:
      return "qualitative";
    case BoundMethod::Polytope:
      return "polytope";
  }
  return "?";
}

BoundValue kstar_lower(const GroupSpec& G) {
  BoundValue b;
  b.method = BoundMethod::KStarLower;
  b.lower = true;
  b.lo = b.hi = kstar(G);
  b.note = "k*(G) from the finest cyclic decomposition";
  return b;
}

GsBound gs_bound(const GroupSpec& G) {
  const std::uint64_t n = G.exponent();
  const std::uint64_t pm = pminus(n);
  const Rational width = make_rational(1, 2000000000);  // per-term 5e-10

  GsBound out;
  bool first = true;
  Interval best;
  for (std::uint64_t d : divisors(n)) {
    Rational linear = Rational(static_cast<unsigned long>(d - 1)) /
                      Rational(static_cast<unsigned long>(pm));
    Interval term = Interval(linear) + log_interval(Rational(G.order()) / Rational(static_cast<unsigned long>(d)), width);
    if (d == 1) out.log_order = term;
    if (first || term.hi < best.hi) out.at_divisor = d;
    best = first ? term : interval_min(best, term);
    first = false;
  }
  out.bound.method = BoundMethod::GS;
  out.bound.lo = best.lo;
  out.bound.hi = best.hi;
  out.bound.note = "minimized at d = " + std::to_string(out.at_divisor);
  return out;
}

BoundValue kz_bound(const GroupSpec& G) {
  if (!G.is_cyclic() || G.is_trivial())
    throw std::invalid_argument("the 2*omega bound applies to cyclic groups of order >= 2 only");
  BoundValue b;
  b.method = BoundMethod::KZ;
  b.lo = b.hi = Rational(2UL * omega(G.exponent()));
  b.note = "2 omega(n) for n = " + std::to_string(G.exponent());
  return b;
}

BoundValue alpha_bound(const GroupSpec& G) {
  if (G.rank() > 2) throw std::invalid_argument("alpha bound is stated for rank <= 2 only");
  const std::uint64_t n = G.exponent();
  BoundValue b;
  if (G.rank() <= 1) {
    b.method = BoundMethod::AlphaRank1;
    b.lo = b.hi = alpha_of(n);
    b.note = "alpha(n) divisor sum";
    return b;
  }
  b.method = BoundMethod::AlphaRank2;
  PhiQuotient phi = phi_quotient(G);
  b.lo = b.hi = 3 * alpha_of(n) - beta_of(n) - phi.value;
  b.note = "3 alpha(n) - beta(n) - phi(G, C_n^2)";
  if (!phi.direct_summand)
    b.assumptions.push_back("phi used the generic k*(H/G)/n branch (G not a direct summand of C_n^2)");
  return b;
}

namespace {

GroupSpec power_group(std::uint64_t base, std::size_t r) {
  return GroupSpec::from_moduli(std::vector<std::uint64_t>(r, base));
}

void absorb(BoundValue& b, const ValueWithProvenance& v, const std::string& what) {
  if (v.provenance == Provenance::UpperBound)
    b.assumptions.push_back(what + " bounded above via " + v.source_note);
  if (v.provenance == Provenance::Conjectural) {
    b.conjectural = true;
    b.assumptions.push_back(what + " = " + std::to_string(v.value) + " (conjectural)");
  }
}

}  // namespace

QualitativeBounds qualitative_bound(const GroupSpec& G, const InvariantProvider& provider) {
  QualitativeBounds out;
  const std::uint64_t n = G.exponent();
  const std::size_t r = G.rank();
  const PhiQuotient phi = phi_quotient(G);
  const std::string phi_note =
      phi.direct_summand ? std::string()
                         : "phi used the generic k*(H/G)/n branch (G not a direct summand of C_n^r)";

  // Sharp form: per-divisor min of eta on the least-prime layer vs D on the
  // full layer. An upper bound on either only enlarges the sum, so any
  // non-refused provenance is admissible.
  try {
    BoundValue sharp;
    sharp.method = BoundMethod::Qualitative;
    sharp.note = "sharp form (per-divisor min)";
    Rational sum(0);
    for (std::uint64_t d : divisors(n)) {
      if (d == 1) continue;
      ValueWithProvenance eta_v = provider.eta(power_group(pminus(d), r));
      ValueWithProvenance dav_v = provider.davenport(power_group(d, r));
      absorb(sharp, eta_v, "eta(C_" + std::to_string(pminus(d)) + "^" + std::to_string(r) + ")");
      absorb(sharp, dav_v, "D(C_" + std::to_string(d) + "^" + std::to_string(r) + ")");
      std::uint64_t m = std::min(eta_v.value, dav_v.value);
      sum += Rational(static_cast<unsigned long>(m - 1)) / Rational(static_cast<unsigned long>(d));
    }
    sharp.lo = sharp.hi = sum - phi.value;
    if (!phi_note.empty()) sharp.assumptions.push_back(phi_note);
    out.sharp = std::move(sharp);
  } catch (const PolicyRefusal& e) {
    out.sharp_unavailable = e.what();
  }

  // Smooth form: needs the policy's c_r for this rank.
  if (r >= 1 && !provider.policy().has_c_r(static_cast<unsigned>(r))) {
    out.smooth_unavailable = "no c_" + std::to_string(r) + " configured for rank " +
                             std::to_string(r) + " (eta(C_p^r) growth constant)";
  } else if (r == 0) {
    out.smooth_unavailable = "trivial group has no smooth form";
  } else {
    const Rational& c = provider.policy().c_r(static_cast<unsigned>(r));
    BoundValue smooth;
    smooth.method = BoundMethod::Qualitative;
    smooth.note = "smooth form c_r (alpha - beta) + r beta";
    Rational a = alpha_of(n), bta = beta_of(n);
    smooth.lo = smooth.hi = c * (a - bta) + Rational(static_cast<unsigned long>(r)) * bta - phi.value;
    smooth.assumptions.push_back("c_" + std::to_string(r) + " = " + to_fraction_string(c));
    if (!phi_note.empty()) smooth.assumptions.push_back(phi_note);
    out.smooth = std::move(smooth);
  }
  return out;
}

std::uint64_t davenport_from_k(const GroupSpec& G, const Rational& k_upper) {
  Integer f = floor_rational(Rational(G.exponent()) * k_upper);
  return f.get_ui() + 1;
}

std::pair<Rational, Rational> K_interval_from_k(const GroupSpec& G, const Rational& k_val) {
  const std::uint64_t n = G.exponent();
  return {k_val + Rational(1) / Rational(static_cast<unsigned long>(n)),
          k_val + Rational(1) / Rational(static_cast<unsigned long>(pminus(n)))};
}

}  // namespace zsum
