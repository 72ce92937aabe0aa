#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lcpforge/nf_linalg.hpp"
#include "lcpforge/number_field.hpp"
#include "lcpforge/roots.hpp"

using namespace lcp;

namespace {

Rat q(long n, long d = 1) { return Rat(n) / Rat(d); }

bool encloses(const RatInterval& iv, double x) {
  return to_double(iv.lo) <= x && x <= to_double(iv.hi);
}

FieldPtr sqrt5() { return NumberField::real_quadratic(5); }

NFElement elem(const FieldPtr& f, long a, long b, long den = 1) {
  return NFElement(f, std::vector<Rat>{q(a, den), q(b, den)});
}

}  // namespace

TEST_CASE("interval arithmetic is exact and tight enough") {
  RatInterval a(q(1), q(2)), b(q(-3), q(4));
  CHECK((a * b) == RatInterval(q(-6), q(8)));
  CHECK((a / RatInterval(q(4), q(8))) == RatInterval(q(1, 8), q(1, 2)));
  CHECK_THROWS_AS(a / RatInterval(q(-1), q(1)), InvalidInput);
  CHECK(int_pow(RatInterval(q(-1), q(2)), 2) == RatInterval(q(0), q(4)));
  CHECK(int_pow(RatInterval(q(-2), q(-1)), 3) == RatInterval(q(-8), q(-1)));
  CHECK(int_pow(a, -1) == RatInterval(q(1, 2), q(1)));

  RatInterval s = sqrt_enclosure(RatInterval(q(2)), q(1, 1000000000));
  CHECK(s.lo * s.lo <= 2);
  CHECK(s.hi * s.hi >= 2);
  CHECK(s.width() <= q(1, 1000000000));
  CHECK(encloses(s, 1.41421356237309515));

  // (1+i)^2 = 2i exactly on point boxes.
  ComplexBox one_i{RatInterval(q(1)), RatInterval(q(1))};
  ComplexBox sq = one_i * one_i;
  CHECK(sq.re == RatInterval(q(0)));
  CHECK(sq.im == RatInterval(q(2)));
  CHECK(ComplexBox{RatInterval(q(3)), RatInterval(q(4))}.abs_sq() == RatInterval(q(25)));
  ComplexBox ratio = sq / one_i;
  CHECK(ratio.re == RatInterval(q(1)));
  CHECK(ratio.im == RatInterval(q(1)));
}

TEST_CASE("real root isolation separates all distinct roots") {
  PolyZ p{-6, 11, -6, 1};  // (x-1)(x-2)(x-3)
  auto ivs = isolate_real_roots(p);
  REQUIRE(ivs.size() == 3);
  for (double r : {1.0, 2.0, 3.0}) {
    int hits = 0;
    for (const auto& iv : ivs) hits += encloses(iv, r);
    CHECK(hits == 1);
  }
  for (size_t i = 0; i < ivs.size(); ++i)
    for (size_t j = i + 1; j < ivs.size(); ++j) CHECK(!ivs[i].intersects(ivs[j]));

  // Repeated roots collapse; the bisection midpoint 0 is hit exactly.
  PolyZ rep = PolyZ{-1, 1} * PolyZ{-1, 1} * PolyZ{2, 1};
  CHECK(isolate_real_roots(rep).size() == 2);
  PolyZ withzero{0, -2, 0, 1};  // x(x^2 - 2)
  auto ivz = isolate_real_roots(withzero);
  REQUIRE(ivz.size() == 3);
  bool zero_point = false;
  for (const auto& iv : ivz) zero_point |= (iv.is_point() && iv.lo == 0);
  CHECK(zero_point);

  RatInterval root2;
  for (const auto& iv : isolate_real_roots(PolyZ{-2, 0, 1}))
    if (iv.hi > 0) root2 = iv;
  root2 = refine_real_root(PolyZ{-2, 0, 1}, root2, q(1, 1000000000000));
  CHECK(root2.lo * root2.lo <= 2);
  CHECK(root2.hi * root2.hi >= 2);
  CHECK(root2.width() <= q(1, 1000000000000));
}

TEST_CASE("complex roots come as certified conjugate boxes") {
  auto boxes = isolate_roots(PolyZ{1, 0, 1});  // x^2 + 1
  REQUIRE(boxes.size() == 2);
  CHECK(!boxes[0].is_real);
  CHECK(boxes[0].im.hi < 0);  // lower half sorts first
  CHECK(boxes[1].im.lo > 0);
  RootBox up = refine_root(PolyZ{1, 0, 1}, boxes[1], q(1, 10000000000));
  CHECK(encloses(up.re, 0.0));
  CHECK(encloses(up.im, 1.0));

  // One real root and two conjugate pairs.
  auto quintic = isolate_roots(PolyZ{-1, -1, 0, 0, 0, 1});
  REQUIRE(quintic.size() == 5);
  int reals = 0;
  for (const auto& b : quintic) reals += b.is_real;
  CHECK(reals == 1);
  for (size_t i = 0; i < quintic.size(); ++i)
    for (size_t j = i + 1; j < quintic.size(); ++j)
      CHECK(!quintic[i].box().intersects(quintic[j].box()));

  CHECK(isolate_roots(PolyZ{0, 0, 1}).size() == 1);  // x^2: one distinct root
}

TEST_CASE("same_root and factor_of_root decide identity exactly") {
  PolyZ p{-2, 0, 1};
  auto ivs = isolate_roots(p);
  REQUIRE(ivs.size() == 2);
  CHECK(same_root(p, ivs[0], ivs[0]));
  CHECK(!same_root(p, ivs[0], ivs[1]));
  CHECK(root_separation_lower_bound(p) > 0);

  PolyZ prod = PolyZ{-2, 0, 1} * PolyZ{-3, 0, 1};
  std::vector<PolyZ> factors{PolyZ{-2, 0, 1}, PolyZ{-3, 0, 1}};
  auto all = isolate_roots(prod);
  REQUIRE(all.size() == 4);
  // Roots sorted ascending: -sqrt3, -sqrt2, sqrt2, sqrt3.
  CHECK(factor_of_root(prod, all[0], factors) == 1);
  CHECK(factor_of_root(prod, all[1], factors) == 0);
  CHECK(factor_of_root(prod, all[2], factors) == 0);
  CHECK(factor_of_root(prod, all[3], factors) == 1);
}

TEST_CASE("modulus partition groups roots by exact |root|") {
  Rat tol = q(1, 1000000000000);

  // Real quadratic pair: two distinct moduli (3 +- sqrt5)/2.
  PolyZ charpoly{1, -3, 1};
  auto boxes = isolate_roots(charpoly);
  auto part = modulus_partition(charpoly, boxes, tol);
  REQUIRE(part.class_modulus.size() == 2);
  CHECK(part.class_of[0] != part.class_of[1]);
  bool small_first = encloses(part.class_modulus[part.class_of[0]], 0.3819660112501051);
  int lo_cls = small_first ? part.class_of[0] : part.class_of[1];
  int hi_cls = small_first ? part.class_of[1] : part.class_of[0];
  CHECK(encloses(part.class_modulus[lo_cls], 0.3819660112501051));
  CHECK(encloses(part.class_modulus[hi_cls], 2.618033988749895));
  CHECK(encloses(part.class_modulus_sq[hi_cls], 6.854101966249685));

  // Rotation-scaling block 1 +- i together with +-sqrt2: all modulus sqrt2.
  PolyZ mixed = PolyZ{2, -2, 1} * PolyZ{-2, 0, 1};
  auto mboxes = isolate_roots(mixed);
  REQUIRE(mboxes.size() == 4);
  auto mpart = modulus_partition(mixed, mboxes, tol);
  CHECK(mpart.class_modulus.size() == 1);
  CHECK(mpart.class_modulus_sq[0].contains(q(2)));
  CHECK(encloses(mpart.class_modulus[0], 1.4142135623730951));

  // All four primitive 8th roots of unity sit on the unit circle.
  auto cy = isolate_roots(PolyZ{1, 0, 0, 0, 1});
  auto cpart = modulus_partition(PolyZ{1, 0, 0, 0, 1}, cy, tol);
  CHECK(cpart.class_modulus.size() == 1);
  CHECK(cpart.class_modulus_sq[0].contains(q(1)));

  PolyZ zero_root{0, 1};
  auto zb = isolate_roots(zero_root);
  CHECK_THROWS_AS(modulus_partition(zero_root, zb, tol), InvalidInput);
}

TEST_CASE("field construction validates the defining data") {
  CHECK_THROWS_AS(NumberField::create(PolyZ{-1, 0, 1}, RatInterval(q(0), q(2))),
                  InvalidInput);  // reducible
  CHECK_THROWS_AS(NumberField::create(PolyZ{-5, 0, 2}, RatInterval(q(0), q(2))),
                  InvalidInput);  // not monic
  CHECK_THROWS_AS(NumberField::create(PolyZ{-5, 0, 1}, RatInterval(q(-3), q(3))),
                  InvalidInput);  // two roots
  CHECK_THROWS_AS(NumberField::create(PolyZ{-5, 0, 1}, RatInterval(q(3), q(4))),
                  InvalidInput);  // no root
  CHECK_THROWS_AS(NumberField::real_quadratic(9), InvalidInput);

  FieldPtr f = sqrt5();
  CHECK(f->degree() == 2);
  CHECK(f->is_real());
  RootBox r = f->root_box(q(1, 100000));
  CHECK(encloses(r.re, 2.2360679774997896));

  FieldPtr again = NumberField::create(PolyZ{-5, 0, 1}, RatInterval(q(2), q(3)));
  FieldPtr conj = NumberField::create(PolyZ{-5, 0, 1}, RatInterval(q(-3), q(-2)));
  CHECK(same_field(f, again));
  CHECK(!same_field(f, conj));
  CHECK(NFElement::theta(conj).sign() == -1);

  // Complex embedding: x^2 + 1 pinned to the upper root.
  FieldPtr gauss = NumberField::create(
      PolyZ{1, 0, 1}, RootBox{false, RatInterval(q(-1, 2), q(1, 2)), RatInterval(q(1, 2), q(3, 2))});
  CHECK(!gauss->is_real());
  NFElement i = NFElement::theta(gauss);
  CHECK((i * i) == NFElement(gauss, q(-1)));
  CHECK_THROWS_AS(i.sign(), InvalidInput);
  CHECK(i.complex_enclosure(q(1, 1000)).abs_sq().contains(q(1)));
}

TEST_CASE("power basis arithmetic in Q(sqrt5)") {
  FieldPtr f = sqrt5();
  NFElement th = NFElement::theta(f);
  NFElement lam = elem(f, 3, 1, 2);   // (3 + theta)/2
  NFElement gold = elem(f, 1, 1, 2);  // (1 + theta)/2

  CHECK((gold * gold) == lam);  // golden ratio squares to (3+sqrt5)/2
  CHECK((elem(f, 1, 1, 2) * elem(f, 1, -1, 2)) == NFElement(f, q(-1)));
  CHECK((th * th.inverse()) == NFElement(f, q(1)));
  CHECK(th.inverse() == elem(f, 0, 1, 5));
  CHECK(lam.inverse() == elem(f, 3, -1, 2));
  CHECK((lam / gold) == gold);

  // Lucas/Fibonacci: ((1+sqrt5)/2)^10 = (123 + 55 sqrt5)/2.
  CHECK(gold.pow(10) == elem(f, 123, 55, 2));
  CHECK(lam.pow(-2) == (lam * lam).inverse());
  CHECK(lam.pow(0) == NFElement(f, q(1)));

  CHECK(lam.sign() == 1);
  CHECK(elem(f, 1, -1, 2).sign() == -1);  // (1 - sqrt5)/2 < 0
  CHECK((th - NFElement(f, q(2))).sign() == 1);
  CHECK(NFElement(f, q(0)).sign() == 0);

  RatInterval e = lam.enclosure(q(1, 1000000000));
  CHECK(encloses(e, 2.618033988749895));
  CHECK(e.width() <= q(1, 1000000000));

  CHECK_THROWS_AS(NFElement(f, q(0)).inverse(), InvalidInput);
  CHECK_THROWS_AS(NFElement::theta(NumberField::rationals()), InvalidInput);

  // Rational elements promote across fields; incompatible fields refuse.
  CHECK((NFElement() + th) == th);
  FieldPtr f2 = NumberField::real_quadratic(2);
  CHECK_THROWS_AS(th + NFElement::theta(f2), InvalidInput);

  CHECK(lam.to_string() == "1/2*theta + 3/2");
}

TEST_CASE("square roots inside the field are found exactly") {
  FieldPtr f = sqrt5();
  NFElement lam = elem(f, 3, 1, 2);
  auto r = sqrt_in_field(lam);
  REQUIRE(r.has_value());
  CHECK(*r == elem(f, 1, 1, 2));
  CHECK(r->sign() == 1);

  auto r9 = sqrt_in_field(NFElement(f, q(9)));
  REQUIRE(r9.has_value());
  CHECK(*r9 == NFElement(f, q(3)));

  auto r5 = sqrt_in_field(NFElement(f, q(5)));
  REQUIRE(r5.has_value());
  CHECK(*r5 == NFElement::theta(f));

  auto r62 = sqrt_in_field(elem(f, 6, 2));  // (1+theta)^2
  REQUIRE(r62.has_value());
  CHECK(*r62 == elem(f, 1, 1));

  CHECK(!sqrt_in_field(NFElement(f, q(2))).has_value());
  CHECK(!sqrt_in_field(NFElement(f, q(-1))).has_value());
  CHECK(!sqrt_in_field(elem(f, 0, 1) - NFElement(f, q(10))).has_value());

  auto rq = sqrt_in_field(NFElement(NumberField::rationals(), q(9, 4)));
  REQUIRE(rq.has_value());
  CHECK(rq->rational_value() == q(3, 2));
  CHECK(!sqrt_in_field(NFElement(NumberField::rationals(), q(2))).has_value());

  CHECK(rational_sqrt(q(49, 36)) == q(7, 6));
  CHECK(!rational_sqrt(q(1, 2)).has_value());
  CHECK(!rational_sqrt(q(-4)).has_value());
}

TEST_CASE("field arithmetic properties hold on random elements") {
  std::mt19937 rng(20240818);
  std::uniform_int_distribution<long> coef(-6, 6);
  for (long n : {2L, 3L, 5L, 13L}) {
    FieldPtr f = NumberField::real_quadratic(Int(n));
    for (int trial = 0; trial < 25; ++trial) {
      NFElement a = elem(f, coef(rng), coef(rng), 1 + std::abs(coef(rng)));
      NFElement b = elem(f, coef(rng), coef(rng), 1 + std::abs(coef(rng)));
      NFElement c = elem(f, coef(rng), coef(rng), 1 + std::abs(coef(rng)));
      CHECK(((a * b) * c) == (a * (b * c)));
      CHECK((a * (b + c)) == (a * b + a * c));
      if (!a.is_zero()) {
        CHECK((a * a.inverse()) == NFElement(f, q(1)));
        CHECK((a * a).sign() == 1);
      }
      // Enclosures respect arithmetic: the product enclosure must meet the
      // product of enclosures.
      RatInterval ea = a.enclosure(q(1, 1000000)), eb = b.enclosure(q(1, 1000000));
      RatInterval eab = (a * b).enclosure(q(1, 1000000));
      CHECK(eab.intersects(ea * eb));
    }
  }
}

TEST_CASE("matrices over the field eliminate exactly") {
  FieldPtr f = sqrt5();
  NFElement th = NFElement::theta(f);
  NFElement one(f, q(1)), zero(f, q(0));
  NFElement lam = elem(f, 3, 1, 2);

  NFMatrix m(f, 2, 2);
  m.at(0, 0) = lam;
  m.at(1, 1) = one;
  NFMatrix inv = m.inverse();
  CHECK((m * inv).is_identity());
  CHECK(inv.at(0, 0) == lam.inverse());

  NFMatrix sing(f, 2, 2);
  sing.at(0, 0) = one;
  sing.at(0, 1) = th;
  sing.at(1, 0) = th;
  sing.at(1, 1) = NFElement(f, q(5));
  CHECK(sing.det() == zero);
  CHECK(sing.rank() == 1);
  CHECK_THROWS_AS(sing.inverse(), InvalidInput);

  auto ker = sing.right_kernel();
  REQUIRE(ker.size() == 1);
  for (const auto& x : sing * ker[0]) CHECK(x.is_zero());

  NFMatrix a(f, 2, 2);
  a.at(0, 0) = one;
  a.at(0, 1) = th;
  a.at(1, 1) = one;
  NFVector b{lam, one};
  auto x = a.solve(b);
  REQUIRE(x.has_value());
  CHECK((*x)[0] == lam - th);
  CHECK((*x)[1] == one);
  NFMatrix incon(f, 2, 1);
  incon.at(0, 0) = one;
  incon.at(1, 0) = one;
  CHECK(!incon.solve(NFVector{one, zero}).has_value());

  CHECK(m.to_rational() == std::nullopt);
  NFMatrix ratm = NFMatrix::from_rational(f, RatMatrix{{q(1), q(2)}, {q(3), q(4)}});
  auto back = ratm.to_rational();
  REQUIRE(back.has_value());
  CHECK(back->at(1, 0) == q(3));
}

TEST_CASE("rational coordinate rows expose the rational shadow") {
  FieldPtr f = sqrt5();
  NFVector v{NFElement(f, q(1)), elem(f, 1, 1, 2)};
  RatMatrix rows = rational_coordinate_rows(v);
  REQUIRE(rows.rows() == 2);
  REQUIRE(rows.cols() == 2);
  CHECK(rows.at(0, 0) == q(1));
  CHECK(rows.at(0, 1) == q(1, 2));
  CHECK(rows.at(1, 0) == q(0));
  CHECK(rows.at(1, 1) == q(1, 2));
}

TEST_CASE("vectors with a transcendental part stay linear over the field") {
  FieldPtr f = sqrt5();
  NFElement one(f, q(1)), zero(f, q(0));
  NFElement half_gold = elem(f, 1, 1, 2);
  NFElement lam = elem(f, 3, 1, 2);

  // pi * (1, (1+theta)/2, 0, 0) + (0, 0, 1, (1+theta)/2)
  TransVector v(NFVector{zero, zero, one, half_gold},
                NFVector{one, half_gold, zero, zero});
  CHECK(v.size() == 4);
  CHECK(!v.is_zero());
  CHECK((v - v).is_zero());

  RatMatrix rows = rational_coordinate_rows(v);
  REQUIRE(rows.rows() == 4);
  CHECK(rows.rank() == 4);  // the rational shadow fills Q^4: dense direction

  RatMatrix a0{{q(1), q(1)}, {q(1), q(2)}};
  RatMatrix block(4, 4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      block.at(i, j) = a0.at(i, j);
      block.at(2 + i, 2 + j) = a0.at(i, j);
    }
  CHECK(apply(block, v) == v.scaled(lam));  // eigenvector for the top eigenvalue

  NFVector d = doubled(v);
  REQUIRE(d.size() == 8);
  CHECK(d[2] == one);
  CHECK(d[4] == one);

  CHECK_THROWS_AS(TransVector(NFVector{one}, NFVector{}), InvalidInput);
}
