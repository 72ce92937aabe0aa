#pragma once

#include "lcpforge/poly.hpp"
#include "lcpforge/rational.hpp"

namespace lcp {

/// Closed interval with exact rational endpoints. All operations return
/// enclosures computed without rounding, so containment claims are certificates.
struct RatInterval {
  Rat lo, hi;

  RatInterval() : lo(0), hi(0) {}
  RatInterval(const Rat& point) : lo(point), hi(point) {}  // NOLINT: implicit by design
  RatInterval(Rat l, Rat h);

  Rat width() const { return hi - lo; }
  Rat mid() const { return (lo + hi) / 2; }
  bool is_point() const { return lo == hi; }
  bool contains(const Rat& x) const { return lo <= x && x <= hi; }
  bool contains_zero() const { return lo <= 0 && 0 <= hi; }
  bool contains_interval(const RatInterval& o) const { return lo <= o.lo && o.hi <= hi; }
  bool strictly_contains(const RatInterval& o) const { return lo < o.lo && o.hi < hi; }
  bool intersects(const RatInterval& o) const { return lo <= o.hi && o.lo <= hi; }
  bool strictly_positive() const { return lo > 0; }
  bool strictly_negative() const { return hi < 0; }

  bool operator==(const RatInterval&) const = default;

  RatInterval operator-() const { return {-hi, -lo}; }
  RatInterval operator+(const RatInterval& o) const { return {lo + o.lo, hi + o.hi}; }
  RatInterval operator-(const RatInterval& o) const { return {lo - o.hi, hi - o.lo}; }
  RatInterval operator*(const RatInterval& o) const;
  /// Requires 0 outside o.
  RatInterval operator/(const RatInterval& o) const;

  static RatInterval intersection(const RatInterval& a, const RatInterval& b);
};

/// Tight enclosure of x^k; negative k requires 0 outside x.
RatInterval int_pow(const RatInterval& x, int k);

/// [s, t] with s^2 <= x.lo and t^2 >= x.hi and t - s <= tol. Requires x >= 0.
RatInterval sqrt_enclosure(const RatInterval& x, const Rat& tol);

RatInterval eval_on_interval(const PolyZ& p, const RatInterval& x);
RatInterval eval_on_interval(const PolyQ& p, const RatInterval& x);
RatInterval eval_on_interval(const std::vector<Rat>& coeffs, const RatInterval& x);

/// Axis-aligned rectangle in the complex plane with rational corners.
struct ComplexBox {
  RatInterval re, im;

  bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }
  bool intersects(const ComplexBox& o) const {
    return re.intersects(o.re) && im.intersects(o.im);
  }
  bool strictly_contains(const ComplexBox& o) const {
    return re.strictly_contains(o.re) && im.strictly_contains(o.im);
  }
  Rat width() const { return std::max(re.width(), im.width()); }

  ComplexBox operator+(const ComplexBox& o) const { return {re + o.re, im + o.im}; }
  ComplexBox operator-(const ComplexBox& o) const { return {re - o.re, im - o.im}; }
  ComplexBox operator*(const ComplexBox& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  /// Requires 0 outside |o|^2.
  ComplexBox operator/(const ComplexBox& o) const;
  ComplexBox conj() const { return {re, -im}; }

  /// Tight enclosure of |z|^2 over the box.
  RatInterval abs_sq() const { return int_pow(re, 2) + int_pow(im, 2); }

  static ComplexBox intersection(const ComplexBox& a, const ComplexBox& b) {
    return {RatInterval::intersection(a.re, b.re), RatInterval::intersection(a.im, b.im)};
  }
};

ComplexBox eval_on_box(const PolyZ& p, const ComplexBox& z);

}  // namespace lcp
