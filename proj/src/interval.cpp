#include "lcpforge/interval.hpp"

#include <algorithm>

namespace lcp {

RatInterval::RatInterval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {
  if (lo > hi) throw InvalidInput("interval endpoints out of order");
}

RatInterval RatInterval::operator*(const RatInterval& o) const {
  Rat a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
  return {std::min(std::min(a, b), std::min(c, d)), std::max(std::max(a, b), std::max(c, d))};
}

RatInterval RatInterval::operator/(const RatInterval& o) const {
  if (o.contains_zero()) throw InvalidInput("interval division by interval containing zero");
  Rat a = lo / o.lo, b = lo / o.hi, c = hi / o.lo, d = hi / o.hi;
  return {std::min(std::min(a, b), std::min(c, d)), std::max(std::max(a, b), std::max(c, d))};
}

RatInterval RatInterval::intersection(const RatInterval& a, const RatInterval& b) {
  Rat l = std::max(a.lo, b.lo), h = std::min(a.hi, b.hi);
  if (l > h) throw InvalidInput("empty interval intersection");
  return {l, h};
}

RatInterval int_pow(const RatInterval& x, int k) {
  if (k == 0) return {Rat(1), Rat(1)};
  if (k < 0) {
    RatInterval one(Rat(1));
    return one / int_pow(x, -k);
  }
  if (k % 2 == 0) {
    // Even powers are monotone in |x|.
    Rat a = x.lo, b = x.hi;
    Rat pa = 1, pb = 1;
    for (int i = 0; i < k; ++i) {
      pa *= a;
      pb *= b;
    }
    if (x.contains_zero()) return {Rat(0), std::max(pa, pb)};
    return {std::min(pa, pb), std::max(pa, pb)};
  }
  Rat pa = 1, pb = 1;
  for (int i = 0; i < k; ++i) {
    pa *= x.lo;
    pb *= x.hi;
  }
  return {pa, pb};  // odd powers preserve order
}

RatInterval sqrt_enclosure(const RatInterval& x, const Rat& tol) {
  if (x.lo < 0) throw InvalidInput("sqrt_enclosure needs a nonnegative interval");
  if (tol <= 0) throw InvalidInput("sqrt_enclosure needs positive tolerance");
  // Largest s with s^2 <= v, by bisection from below.
  auto lower = [&](const Rat& v) {
    if (v == 0) return Rat(0);
    Rat a = 0, b = v < 1 ? Rat(1) : v;  // b^2 >= v in both regimes
    while (b - a > tol / 2) {
      Rat m = (a + b) / 2;
      (m * m <= v ? a : b) = m;
    }
    return a;
  };
  // Smallest t with t^2 >= v.
  auto upper = [&](const Rat& v) {
    if (v == 0) return Rat(0);
    Rat a = 0, b = v < 1 ? Rat(1) : v;
    while (b - a > tol / 2) {
      Rat m = (a + b) / 2;
      (m * m >= v ? b : a) = m;
    }
    return b;
  };
  return {lower(x.lo), upper(x.hi)};
}

RatInterval eval_on_interval(const std::vector<Rat>& coeffs, const RatInterval& x) {
  RatInterval acc;  // zero
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + RatInterval(*it);
  return acc;
}

RatInterval eval_on_interval(const PolyZ& p, const RatInterval& x) {
  std::vector<Rat> c;
  c.reserve(p.coeffs().size());
  for (const auto& z : p.coeffs()) c.emplace_back(z);
  return eval_on_interval(c, x);
}

RatInterval eval_on_interval(const PolyQ& p, const RatInterval& x) {
  return eval_on_interval(p.coeffs(), x);
}

ComplexBox ComplexBox::operator/(const ComplexBox& o) const {
  RatInterval n = o.abs_sq();
  if (n.contains_zero()) throw InvalidInput("complex box division by box containing zero");
  ComplexBox num = *this * o.conj();
  return {num.re / n, num.im / n};
}

ComplexBox eval_on_box(const PolyZ& p, const ComplexBox& z) {
  ComplexBox acc{RatInterval(Rat(0)), RatInterval(Rat(0))};
  const auto& cs = p.coeffs();
  for (auto it = cs.rbegin(); it != cs.rend(); ++it) {
    acc = acc * z;
    acc.re = acc.re + RatInterval(Rat(*it));
  }
  return acc;
}

}  // namespace lcp
