#pragma once

#include <vector>

#include "lcpforge/interval.hpp"
#include "lcpforge/poly.hpp"

namespace lcp {

/// Isolating box for one distinct root. Real roots carry im = [0,0] and either
/// a point interval (exact rational root) or a sign-change interval. Non-real
/// roots carry a Krawczyk-certified rectangle whose imaginary part excludes 0.
struct RootBox {
  bool is_real = true;
  RatInterval re, im;

  ComplexBox box() const { return {re, im}; }
  Rat width() const { return std::max(re.width(), im.width()); }
};

/// Isolating intervals for the distinct real roots of p, ascending and
/// pairwise disjoint. Point intervals appear when bisection lands on a root.
std::vector<RatInterval> isolate_real_roots(const PolyZ& p);

/// Isolating boxes for all distinct complex roots of p: pairwise disjoint,
/// deterministic order (ascending real roots first, then conjugate pairs by
/// real part, lower half before upper). Multiplicities are ignored.
std::vector<RootBox> isolate_roots(const PolyZ& p);

/// Shrinks an isolating interval of a squarefree polynomial below the given
/// width by sign bisection. Points pass through unchanged.
RatInterval refine_real_root(const PolyZ& sqfree, RatInterval iv, const Rat& width);

/// Shrinks a certified isolating rectangle by Krawczyk contraction.
ComplexBox refine_complex_root(const PolyZ& sqfree, ComplexBox box, const Rat& width);

RootBox refine_root(const PolyZ& sqfree, RootBox box, const Rat& width);

/// Sound lower bound on min |r_i - r_j| over distinct roots (Mahler-style),
/// for squarefree integer p of degree >= 2.
Rat root_separation_lower_bound(const PolyZ& sqfree);

/// Decides whether two isolating boxes pin the same root of sqfree: refines
/// until the boxes separate or both sit inside one separation radius.
bool same_root(const PolyZ& sqfree, RootBox a, RootBox b);

/// Index of the unique polynomial among `factors` (pairwise coprime, each
/// dividing sqfree) that vanishes at the root isolated by box. Refines the
/// box until only one candidate remains.
int factor_of_root(const PolyZ& sqfree, RootBox& box, const std::vector<PolyZ>& factors);

/// Grouping of root boxes by equal modulus. Equality is decided exactly: each
/// |r|^2 is a root of the root-product polynomial of p, so two roots share a
/// class iff their squared-modulus enclosures refine into the same isolating
/// interval of it.
struct ModulusPartition {
  std::vector<int> class_of;                  // index into classes, per box
  std::vector<RatInterval> class_modulus;     // |r| enclosure, width <= tol
  std::vector<RatInterval> class_modulus_sq;  // |r|^2 enclosure
};

/// Requires sqfree squarefree with sqfree(0) != 0; boxes are the output of
/// isolate_roots(sqfree) and get refined in place.
ModulusPartition modulus_partition(const PolyZ& sqfree, std::vector<RootBox>& boxes,
                                   const Rat& modulus_tol);

}  // namespace lcp
