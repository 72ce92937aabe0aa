#include "lcpforge/number_field.hpp"

#include <algorithm>

namespace lcp {

namespace {

// u*a + v*b = g with g monic (or zero).
struct Egcd {
  PolyQ g, u, v;
};
Egcd egcd_q(PolyQ a, PolyQ b) {
  PolyQ r0 = std::move(a), r1 = std::move(b);
  PolyQ s0{Rat(1)}, s1, t0, t1{Rat(1)};
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    PolyQ s2 = s0 - q * s1, t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Rat inv_lc = Rat(1) / r0.lc();
  return {r0 * inv_lc, s0 * inv_lc, t0 * inv_lc};
}

ComplexBox eval_rat_coeffs_on_box(const std::vector<Rat>& c, const ComplexBox& z) {
  ComplexBox acc{RatInterval(Rat(0)), RatInterval(Rat(0))};
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * z;
    acc.re = acc.re + RatInterval(*it);
  }
  return acc;
}

}  // namespace

FieldPtr NumberField::create(PolyZ min_poly, const RootBox& root) {
  if (!min_poly.is_monic() || min_poly.degree() < 1)
    throw InvalidInput("defining polynomial must be monic of degree >= 1");
  FactorizationZ fac = factor_over_Z(min_poly);
  if (fac.factors.size() != 1 || fac.factors[0].second != 1 ||
      fac.factors[0].first != min_poly)
    throw InvalidInput("defining polynomial is reducible: " + min_poly.to_string());

  // Replace the user's box by the canonical isolating box it singles out.
  std::vector<RootBox> all = isolate_roots(min_poly);
  std::optional<RootBox> chosen;
  for (int pass = 0; pass < 512 && !chosen; ++pass) {
    int inside = -1, undecided = 0;
    for (size_t k = 0; k < all.size(); ++k) {
      ComplexBox cand = all[k].box(), given = root.box();
      if (!cand.intersects(given)) continue;
      if (given.re.contains_interval(cand.re) && given.im.contains_interval(cand.im)) {
        if (inside >= 0) throw InvalidInput("root box contains more than one root");
        inside = int(k);
      } else {
        ++undecided;
        all[k] = refine_root(min_poly, all[k], all[k].width() / 2);
      }
    }
    if (undecided == 0) {
      if (inside < 0) throw InvalidInput("root box contains no root of the polynomial");
      chosen = all[size_t(inside)];
    }
  }
  if (!chosen) throw InvalidInput("root box is ambiguous (root on the boundary?)");

  auto f = std::shared_ptr<NumberField>(new NumberField());
  f->min_ = std::move(min_poly);
  f->root_ = *chosen;
  return f;
}

FieldPtr NumberField::create(PolyZ min_poly, const RatInterval& real_root) {
  return create(std::move(min_poly), RootBox{true, real_root, RatInterval(Rat(0))});
}

FieldPtr NumberField::rationals() {
  static FieldPtr q = [] {
    auto f = std::shared_ptr<NumberField>(new NumberField());
    f->min_ = PolyZ{0, 1};
    f->root_ = RootBox{true, RatInterval(Rat(0)), RatInterval(Rat(0))};
    return FieldPtr(f);
  }();
  return q;
}

FieldPtr NumberField::real_quadratic(const Int& n) {
  if (n <= 0) throw InvalidInput("real_quadratic needs a positive non-square");
  PolyZ p(std::vector<Int>{-n, 0, 1});
  Rat hi = Rat(n) + 1;
  return create(p, RatInterval(Rat(0), hi));
}

RootBox NumberField::root_box(const Rat& width) const {
  if (root_.width() > width) root_ = refine_root(min_, root_, width);
  return root_;
}

bool same_field(const FieldPtr& a, const FieldPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->min_poly() != b->min_poly()) return false;
  return same_root(a->min_poly(), a->root_box(Rat(1)), b->root_box(Rat(1)));
}

NFElement::NFElement() : field_(NumberField::rationals()), c_{Rat(0)} {}

NFElement::NFElement(FieldPtr field, std::vector<Rat> coords)
    : field_(std::move(field)), c_(std::move(coords)) {
  if (!field_) throw InvalidInput("element needs a field");
  if (int(c_.size()) > field_->degree())
    throw InvalidInput("too many coordinates for the field degree");
  c_.resize(size_t(field_->degree()), Rat(0));
}

NFElement::NFElement(FieldPtr field, const Rat& value)
    : NFElement(std::move(field), std::vector<Rat>{value}) {}

NFElement NFElement::theta(const FieldPtr& field) {
  if (field->degree() < 2) throw InvalidInput("field has no generator beyond Q");
  return NFElement(field, std::vector<Rat>{Rat(0), Rat(1)});
}

bool NFElement::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rat& x) { return x == 0; });
}

bool NFElement::is_rational() const {
  return std::all_of(c_.begin() + 1, c_.end(), [](const Rat& x) { return x == 0; });
}

Rat NFElement::rational_value() const {
  if (!is_rational()) throw InvalidInput("element is irrational: " + to_string());
  return c_[0];
}

namespace {

// Promote a rational-field element into f's field when fields differ.
void align(NFElement& a, NFElement& b) {
  if (same_field(a.field(), b.field())) {
    if (a.field() != b.field()) {
      // Same field through different handles; rebase one side for uniformity.
      b = NFElement(a.field(), b.coords());
    }
    return;
  }
  if (a.field()->degree() == 1 && a.is_rational()) {
    a = NFElement(b.field(), a.rational_value());
    return;
  }
  if (b.field()->degree() == 1 && b.is_rational()) {
    b = NFElement(a.field(), b.rational_value());
    return;
  }
  throw InvalidInput("elements of different number fields cannot mix");
}

}  // namespace

bool NFElement::operator==(const NFElement& o) const {
  NFElement a = *this, b = o;
  align(a, b);
  return a.coords() == b.coords();
}

NFElement NFElement::operator-() const {
  std::vector<Rat> r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
  return NFElement(field_, std::move(r));
}

NFElement NFElement::operator+(const NFElement& o) const {
  NFElement a = *this, b = o;
  align(a, b);
  std::vector<Rat> r(a.c_.size());
  for (size_t i = 0; i < r.size(); ++i) r[i] = a.c_[i] + b.c_[i];
  return NFElement(a.field_, std::move(r));
}

NFElement NFElement::operator-(const NFElement& o) const { return *this + (-o); }

NFElement NFElement::operator*(const NFElement& o) const {
  NFElement a = *this, b = o;
  align(a, b);
  size_t d = a.c_.size();
  std::vector<Rat> prod(2 * d - 1, Rat(0));
  for (size_t i = 0; i < d; ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < d; ++j)
      if (b.c_[j] != 0) prod[i + j] += a.c_[i] * b.c_[j];
  }
  // Reduce modulo the monic defining polynomial.
  const PolyZ& m = a.field_->min_poly();
  for (size_t k = prod.size(); k-- > d;) {
    Rat lead = prod[k];
    if (lead == 0) continue;
    prod[k] = 0;
    for (size_t j = 0; j < d; ++j) prod[k - d + j] -= lead * Rat(m.coeff(int(j)));
  }
  prod.resize(d);
  return NFElement(a.field_, std::move(prod));
}

NFElement NFElement::inverse() const {
  if (is_zero()) throw InvalidInput("division by zero in number field");
  PolyQ a{std::vector<Rat>(c_)};
  PolyQ m = to_polyq(field_->min_poly());
  Egcd e = egcd_q(std::move(a), std::move(m));
  if (e.g.degree() != 0)
    throw Error("gcd with irreducible modulus was not constant");
  PolyQ inv = e.u;  // g == 1 after normalization
  std::vector<Rat> r(inv.coeffs());
  return NFElement(field_, std::move(r));
}

NFElement NFElement::operator/(const NFElement& o) const {
  NFElement a = *this, b = o;
  align(a, b);
  return a * b.inverse();
}

NFElement NFElement::pow(long k) const {
  NFElement base = k < 0 ? inverse() : *this;
  unsigned long e = k < 0 ? static_cast<unsigned long>(-(k + 1)) + 1ul
                          : static_cast<unsigned long>(k);
  NFElement acc(field_, Rat(1));
  while (e) {
    if (e & 1ul) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

RatInterval NFElement::enclosure(const Rat& width) const {
  if (!field_->is_real()) throw InvalidInput("real enclosure of a complex embedding");
  if (width <= 0) throw InvalidInput("enclosure needs positive width");
  Rat rw = std::min(Rat(1), width);
  for (int iter = 0; iter < 512; ++iter) {
    RatInterval e = eval_on_interval(c_, field_->root_box(rw).re);
    if (e.width() <= width) return e;
    rw /= 4;
  }
  throw Error("element enclosure did not converge");
}

ComplexBox NFElement::complex_enclosure(const Rat& width) const {
  if (width <= 0) throw InvalidInput("enclosure needs positive width");
  Rat rw = std::min(Rat(1), width);
  for (int iter = 0; iter < 512; ++iter) {
    ComplexBox e = eval_rat_coeffs_on_box(c_, field_->root_box(rw).box());
    if (e.width() <= width) return e;
    rw /= 4;
  }
  throw Error("element enclosure did not converge");
}

int NFElement::sign() const {
  if (is_zero()) return 0;
  if (is_rational()) return c_[0] > 0 ? 1 : -1;
  if (!field_->is_real()) throw InvalidInput("sign of a complex embedding");
  Rat w = 1;
  for (int iter = 0; iter < 512; ++iter) {
    RatInterval e = enclosure(w);
    if (e.lo > 0) return 1;
    if (e.hi < 0) return -1;
    w /= 8;
  }
  throw Error("sign certification did not converge");
}

std::string NFElement::to_string() const {
  if (is_rational()) return rat_to_string(c_[0]);
  return PolyQ{std::vector<Rat>(c_)}.to_string("theta");
}

NFElement operator*(const Rat& s, const NFElement& x) {
  return NFElement(x.field(), s) * x;
}

std::optional<Rat> rational_sqrt(const Rat& x) {
  if (x < 0) return std::nullopt;
  if (x == 0) return Rat(0);
  Int num = x.get_num(), den = x.get_den();
  Int rn = sqrt(num), rd = sqrt(den);
  if (rn * rn != num || rd * rd != den) return std::nullopt;
  return Rat(rn) / Rat(rd);
}

std::optional<NFElement> sqrt_in_field(const NFElement& x) {
  const FieldPtr& f = x.field();
  if (f->is_real() && x.sign() < 0) return std::nullopt;
  if (x.is_rational()) {
    // A rational square root may exist even inside a bigger field; also try
    // pure-theta square roots when the field is quadratic.
    if (auto r = rational_sqrt(x.rational_value()))
      return NFElement(f, *r);
    if (f->degree() != 2) return std::nullopt;
  }
  if (f->degree() != 2) return std::nullopt;

  // theta^2 = s*theta + t from the defining polynomial x^2 - s x - t.
  Rat s = -Rat(f->min_poly().coeff(1));
  Rat t = -Rat(f->min_poly().coeff(0));
  Rat a = x.coord(0), b = x.coord(1);

  auto candidate = [&](const Rat& u, const Rat& v) -> std::optional<NFElement> {
    NFElement y(f, std::vector<Rat>{u, v});
    if (y * y == x) return (f->is_real() && y.sign() < 0) ? -y : y;
    return std::nullopt;
  };

  if (b == 0) {
    if (auto r = rational_sqrt(a)) return candidate(*r, Rat(0));
    Rat q = s * s / 4 + t;  // theta - s/2 squares to this rational
    if (q != 0) {
      if (auto v = rational_sqrt(a / q)) {
        if (auto y = candidate(-*v * s / 2, *v)) return y;
        if (auto y = candidate(*v * s / 2, -*v)) return y;
      }
    }
    return std::nullopt;
  }

  // (u + v theta)^2 = x with v != 0: eliminate u = (b - v^2 s) / (2 v) and
  // solve the quadratic (s^2 + 4t) w^2 - (2bs + 4a) w + b^2 = 0 for w = v^2.
  Rat A = s * s + 4 * t;
  Rat B = -(2 * b * s + 4 * a);
  Rat C = b * b;
  if (A == 0) return std::nullopt;  // excluded: squarefree defining polynomial
  Rat disc = B * B - 4 * A * C;
  auto rd = rational_sqrt(disc);
  if (!rd) return std::nullopt;
  for (int pm = 0; pm < 2; ++pm) {
    Rat w = (-B + (pm ? *rd : -*rd)) / (2 * A);
    auto v = rational_sqrt(w);
    if (!v || *v == 0) continue;
    Rat u = (b - w * s) / (2 * *v);
    if (auto y = candidate(u, *v)) return y;
    if (auto y = candidate(-u, -*v)) return y;
  }
  return std::nullopt;
}

}  // namespace lcp
