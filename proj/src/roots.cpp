#include "lcpforge/roots.hpp"

#include <algorithm>
#include <complex>
#include <map>

namespace lcp {

namespace {

int sign_of(const Rat& x) { return x > 0 ? 1 : x < 0 ? -1 : 0; }

// One bisection step keeping the sign-change invariant. Landing on a root
// collapses the interval to a point.
RatInterval bisect_once(const PolyZ& p, const RatInterval& iv) {
  if (iv.is_point()) return iv;
  Rat m = iv.mid();
  Rat pm = p.eval(m);
  if (pm == 0) return {m, m};
  if (sign_of(pm) == sign_of(p.eval(iv.lo))) return {m, iv.hi};
  return {iv.lo, m};
}

RatInterval bisect_box_once(const PolyZ& p, const RootBox& b) { return bisect_once(p, b.re); }

void refine_until_disjoint(const PolyZ& p, std::vector<RatInterval>& ivs) {
  for (int pass = 0; pass < 512; ++pass) {
    bool touched = false;
    for (size_t i = 0; i < ivs.size(); ++i)
      for (size_t j = i + 1; j < ivs.size(); ++j)
        if (ivs[i].intersects(ivs[j])) {
          ivs[i] = bisect_once(p, ivs[i]);
          ivs[j] = bisect_once(p, ivs[j]);
          touched = true;
        }
    if (!touched) return;
  }
  throw Error("real root intervals failed to separate");
}

// ---- numeric seeding for complex roots -------------------------------------

using Cd = std::complex<double>;

std::vector<Cd> durand_kerner(const std::vector<double>& monic, Cd seed) {
  int n = int(monic.size()) - 1;  // degree; monic[n] == 1
  double radius = 1.0;
  for (int i = 0; i < n; ++i) radius = std::max(radius, std::abs(monic[i]));
  radius = 1.0 + radius;
  std::vector<Cd> z(n);
  Cd rot = 1.0;
  for (int k = 0; k < n; ++k) {
    rot *= seed;
    z[k] = radius * rot;
  }
  auto eval = [&](Cd x) {
    Cd acc = 1.0;
    for (int i = n - 1; i >= 0; --i) acc = acc * x + monic[i];
    return acc;
  };
  for (int iter = 0; iter < 2000; ++iter) {
    double worst = 0.0;
    for (int k = 0; k < n; ++k) {
      Cd den = 1.0;
      for (int j = 0; j < n; ++j)
        if (j != k) den *= z[k] - z[j];
      if (std::abs(den) < 1e-290) {
        z[k] += Cd(1e-6, 1e-6);
        worst = 1.0;
        continue;
      }
      Cd w = eval(z[k]) / den;
      z[k] -= w;
      worst = std::max(worst, std::abs(w) / std::max(1.0, std::abs(z[k])));
    }
    if (worst < 1e-14) break;
  }
  return z;
}

Rat rat_from_double(double x) { return Rat(mpq_class(x)); }

struct Krawczyk {
  const PolyZ& p;
  PolyZ dp;
  explicit Krawczyk(const PolyZ& poly) : p(poly), dp(poly.derivative()) {}

  // One Krawczyk image; nullopt when the midpoint derivative vanishes.
  std::optional<ComplexBox> image(const ComplexBox& b) const {
    ComplexBox c{RatInterval(b.re.mid()), RatInterval(b.im.mid())};
    ComplexBox pc = eval_on_box(p, c);
    ComplexBox dpc = eval_on_box(dp, c);
    RatInterval n = dpc.abs_sq();
    if (n.lo == 0) return std::nullopt;
    ComplexBox y = dpc.conj();
    y.re = y.re / n;
    y.im = y.im / n;  // y = 1 / p'(mid), exact
    ComplexBox one{RatInterval(Rat(1)), RatInterval(Rat(0))};
    ComplexBox dpb = eval_on_box(dp, b);
    return c - y * pc + (one - y * dpb) * (b - c);
  }

  // Existence + uniqueness: derivative range excludes zero and K(B) lands in
  // the interior of B.
  bool certifies(const ComplexBox& b) const {
    if (eval_on_box(dp, b).abs_sq().lo <= 0) return false;
    auto k = image(b);
    return k && b.strictly_contains(*k);
  }
};

}  // namespace

std::vector<RatInterval> isolate_real_roots(const PolyZ& p) {
  if (p.is_zero()) throw InvalidInput("cannot isolate roots of the zero polynomial");
  PolyZ q = squarefree_part(p);
  if (q.degree() < 1) return {};
  SturmSequence sturm(to_polyq(q));
  Rat bound = cauchy_root_bound(q);
  std::vector<RatInterval> out;

  struct Span {
    Rat a, b;
    int count;
  };
  std::vector<Span> stack;
  int total = sturm.count_roots(-bound, bound);
  if (total > 0) stack.push_back({-bound, bound, total});

  while (!stack.empty()) {
    Span s = stack.back();
    stack.pop_back();
    if (s.count == 1 && sign_of(q.eval(s.a)) * sign_of(q.eval(s.b)) < 0) {
      out.emplace_back(s.a, s.b);
      continue;
    }
    Rat m = (s.a + s.b) / 2;
    if (q.eval(m) != 0) {
      int left = sturm.count_roots(s.a, m);
      if (left > 0) stack.push_back({s.a, m, left});
      if (s.count - left > 0) stack.push_back({m, s.b, s.count - left});
      continue;
    }
    // Exact hit: emit the point, then resume on both sides of a punctured
    // neighbourhood that contains no other root.
    out.emplace_back(m, m);
    Rat off = (s.b - s.a) / 8;
    for (int guard = 0;; ++guard) {
      if (guard > 200) throw Error("could not puncture a rational root");
      Rat lo2 = m - off, hi2 = m + off;
      if (q.eval(lo2) != 0 && q.eval(hi2) != 0 && sturm.count_roots(lo2, hi2) == 1) {
        int left = sturm.count_roots(s.a, lo2);
        int right = sturm.count_roots(hi2, s.b);
        if (left > 0) stack.push_back({s.a, lo2, left});
        if (right > 0) stack.push_back({hi2, s.b, right});
        break;
      }
      off /= 2;
    }
  }

  refine_until_disjoint(q, out);
  std::sort(out.begin(), out.end(),
            [](const RatInterval& x, const RatInterval& y) { return x.lo < y.lo; });
  return out;
}

RatInterval refine_real_root(const PolyZ& sqfree, RatInterval iv, const Rat& width) {
  if (width <= 0) throw InvalidInput("refine_real_root needs positive width");
  while (!iv.is_point() && iv.width() > width) iv = bisect_once(sqfree, iv);
  return iv;
}

ComplexBox refine_complex_root(const PolyZ& sqfree, ComplexBox box, const Rat& width) {
  Krawczyk op(sqfree);
  for (int iter = 0; iter < 256 && box.width() > width; ++iter) {
    auto k = op.image(box);
    if (!k) throw Error("Krawczyk refinement hit a critical point");
    ComplexBox next = ComplexBox::intersection(*k, box);
    if (next.width() >= box.width() && iter > 4)
      throw Error("Krawczyk refinement stalled");
    box = next;
  }
  return box;
}

RootBox refine_root(const PolyZ& sqfree, RootBox box, const Rat& width) {
  if (box.is_real)
    box.re = refine_real_root(sqfree, box.re, width);
  else {
    ComplexBox b = refine_complex_root(sqfree, box.box(), width);
    box.re = b.re;
    box.im = b.im;
  }
  return box;
}

std::vector<RootBox> isolate_roots(const PolyZ& p) {
  if (p.is_zero()) throw InvalidInput("cannot isolate roots of the zero polynomial");
  PolyZ q = squarefree_part(p);
  std::vector<RootBox> out;
  if (q.degree() < 1) return out;

  std::vector<RatInterval> reals = isolate_real_roots(q);
  for (const auto& iv : reals) out.push_back({true, iv, RatInterval(Rat(0))});

  int pairs = (q.degree() - int(reals.size())) / 2;
  if (2 * pairs + int(reals.size()) != q.degree())
    throw Error("real root count inconsistent with degree");
  if (pairs > 0) {
    // Numeric seeds, then exact certification around each upper-half root.
    std::vector<double> monic(size_t(q.degree()) + 1);
    double lead = q.lc().get_d();
    for (int i = 0; i <= q.degree(); ++i) {
      double ci = q.coeff(i).get_d() / lead;
      if (!std::isfinite(ci)) throw Unsupported("coefficients overflow numeric root seeding");
      monic[size_t(i)] = ci;
    }

    Krawczyk op(q);
    std::vector<ComplexBox> upper;
    const Cd seeds[] = {Cd(0.4, 0.9), Cd(0.36, 0.86), Cd(0.52, 0.78)};
    for (const Cd& seed : seeds) {
      upper.clear();
      std::vector<Cd> zs = durand_kerner(monic, seed);
      double scale = 1.0;
      for (const Cd& z : zs) scale = std::max(scale, std::abs(z));
      std::vector<Cd> up;
      for (const Cd& z : zs)
        if (z.imag() > 1e-7 * scale) up.push_back(z);
      if (int(up.size()) != pairs) continue;

      bool all_ok = true;
      for (const Cd& z : up) {
        double dmin = 10 * scale;
        for (const Cd& w : zs)
          if (std::abs(w - z) > 1e-12 * scale) dmin = std::min(dmin, std::abs(w - z));
        Rat cre = rat_from_double(z.real());
        Rat cim = rat_from_double(z.imag());
        bool done = false;
        for (int t = 0; t < 14 && !done; ++t) {
          double hd = std::max(1e-13 * scale, dmin * 1e-9) * std::pow(4.0, t);
          if (hd > dmin / 3) break;
          Rat h = rat_from_double(hd);
          ComplexBox b{{cre - h, cre + h}, {cim - h, cim + h}};
          if (b.im.lo > 0 && op.certifies(b)) {
            upper.push_back(b);
            done = true;
          }
        }
        if (!done) {
          all_ok = false;
          break;
        }
      }
      if (all_ok && int(upper.size()) == pairs) break;
      upper.clear();
    }
    if (int(upper.size()) != pairs) throw Error("complex root certification failed");

    // Separate certified boxes from one another before mirroring.
    for (int pass = 0; pass < 256; ++pass) {
      bool touched = false;
      for (size_t i = 0; i < upper.size(); ++i)
        for (size_t j = i + 1; j < upper.size(); ++j)
          if (upper[i].intersects(upper[j])) {
            upper[i] = refine_complex_root(q, upper[i], upper[i].width() / 2);
            upper[j] = refine_complex_root(q, upper[j], upper[j].width() / 2);
            touched = true;
          }
      if (!touched) break;
      if (pass == 255) throw Error("complex root boxes failed to separate");
    }

    for (const ComplexBox& b : upper) {
      out.push_back({false, b.re, -b.im});  // lower half first for ordering
      out.push_back({false, b.re, b.im});
    }
  }

  std::sort(out.begin(), out.end(), [](const RootBox& x, const RootBox& y) {
    if (x.is_real != y.is_real) return x.is_real;
    if (x.re.lo != y.re.lo) return x.re.lo < y.re.lo;
    return x.im.lo < y.im.lo;
  });
  return out;
}

Rat root_separation_lower_bound(const PolyZ& sqfree) {
  int d = sqfree.degree();
  if (d < 2) return Rat(1);
  Int s2 = 0;
  for (const Int& c : sqfree.coeffs()) s2 += c * c;
  Int norm = Int(sqrt(s2)) + 1;  // >= 2-norm of the coefficient vector
  Int denom = 1;
  for (int i = 0; i < (d + 3) / 2; ++i) denom *= d;
  for (int i = 0; i < d - 1; ++i) denom *= norm;
  return Rat(1) / Rat(denom);
}

bool same_root(const PolyZ& sqfree, RootBox a, RootBox b) {
  if (a.is_real != b.is_real) {
    // A certified non-real box excludes the axis, a real box sits on it.
    return false;
  }
  Rat sep = root_separation_lower_bound(sqfree) / 4;
  for (int iter = 0; iter < 4096; ++iter) {
    if (!a.box().intersects(b.box())) return false;
    if (a.width() < sep && b.width() < sep) return true;
    a = refine_root(sqfree, a, std::max(a.width() / 2, sep / 2));
    b = refine_root(sqfree, b, std::max(b.width() / 2, sep / 2));
  }
  throw Error("same_root did not converge");
}

int factor_of_root(const PolyZ& sqfree, RootBox& box, const std::vector<PolyZ>& factors) {
  if (factors.empty()) throw InvalidInput("factor_of_root needs candidates");
  for (int iter = 0; iter < 4096; ++iter) {
    int hit = -1, hits = 0;
    for (size_t k = 0; k < factors.size(); ++k) {
      bool may_vanish = box.is_real ? eval_on_interval(factors[k], box.re).contains_zero()
                                    : eval_on_box(factors[k], box.box()).contains_zero();
      if (may_vanish) {
        hit = int(k);
        ++hits;
      }
    }
    if (hits == 1) return hit;
    if (hits == 0) throw InvalidInput("no candidate factor vanishes at the root");
    box = refine_root(sqfree, box, box.width() / 2);
  }
  throw Error("factor_of_root did not converge");
}

ModulusPartition modulus_partition(const PolyZ& sqfree, std::vector<RootBox>& boxes,
                                   const Rat& modulus_tol) {
  if (sqfree.coeff(0) == 0) throw InvalidInput("modulus partition requires nonzero roots");
  if (modulus_tol <= 0) throw InvalidInput("modulus partition needs positive tolerance");
  PolyZ products = squarefree_part(root_product_poly(sqfree));
  std::vector<RatInterval> prod_roots = isolate_real_roots(products);

  // Squared moduli are positive; drop product roots that cannot qualify.
  std::vector<RatInterval> cand;
  for (const auto& iv : prod_roots)
    if (iv.hi > 0) cand.push_back(iv);

  ModulusPartition part;
  part.class_of.assign(boxes.size(), -1);
  std::map<size_t, int> class_by_candidate;
  for (size_t i = 0; i < boxes.size(); ++i) {
    size_t match = cand.size();
    for (int iter = 0; iter < 4096; ++iter) {
      RatInterval m = boxes[i].box().abs_sq();
      size_t hits = 0;
      for (size_t k = 0; k < cand.size(); ++k)
        if (m.intersects(cand[k])) {
          match = k;
          ++hits;
        }
      if (hits == 1) break;
      match = cand.size();
      boxes[i] = refine_root(sqfree, boxes[i], boxes[i].width() / 2);
    }
    if (match == cand.size()) throw Error("squared modulus did not settle into one class");
    auto [it, fresh] = class_by_candidate.try_emplace(match, int(class_by_candidate.size()));
    part.class_of[i] = it->second;
    if (fresh) {
      RatInterval sq = cand[match];
      RatInterval modulus(Rat(0));
      for (int round = 0; round < 128; ++round) {
        RatInterval clipped{std::max(sq.lo, Rat(0)), sq.hi};
        modulus = sqrt_enclosure(clipped, modulus_tol / 4);
        if (modulus.width() <= modulus_tol) break;
        sq = refine_real_root(products, sq, sq.width() / 2);
      }
      if (modulus.width() > modulus_tol) throw Error("modulus enclosure did not converge");
      part.class_modulus.push_back(modulus);
      part.class_modulus_sq.push_back(sq);
    }
  }
  return part;
}

}  // namespace lcp
