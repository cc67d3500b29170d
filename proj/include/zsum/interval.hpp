#pragma once

#include "zsum/rational.hpp"

namespace zsum {

/// Certified enclosure [lo, hi] with exact rational endpoints. Interval
/// arithmetic here is exact; width enters only through the transcendental
/// constructors below, which use MPFR directed rounding. Every MPFR float
/// is a dyadic rational, so converting endpoints back is lossless.
struct Interval {
  Rational lo, hi;

  Interval() = default;
  explicit Interval(const Rational& point) : lo(point), hi(point) {}
  Interval(Rational l, Rational h);

  Rational width() const { return hi - lo; }
  bool contains(const Rational& q) const { return lo <= q && q <= hi; }

  Interval operator+(const Interval& o) const { return {lo + o.lo, hi + o.hi}; }
  Interval operator-(const Interval& o) const { return {lo - o.hi, hi - o.lo}; }
  Interval& operator+=(const Interval& o) {
    lo += o.lo;
    hi += o.hi;
    return *this;
  }
};

/// Componentwise minimum: encloses min of the two enclosed values, with
/// width no larger than the wider operand.
Interval interval_min(const Interval& a, const Interval& b);

/// Enclosure of ln(x) for rational x > 0, refined until width <= max_width.
/// ln(1) is the exact point 0.
Interval log_interval(const Rational& x, const Rational& max_width);

/// Enclosure of ln(ln(x)) for rational x > 1, refined until width <= max_width.
Interval loglog_interval(const Rational& x, const Rational& max_width);

}  // namespace zsum
