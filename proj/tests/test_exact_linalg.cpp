#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lcpforge/lattice.hpp"
#include "lcpforge/normal_form.hpp"
#include "lcpforge/poly.hpp"

using namespace lcp;

namespace {

RatMatrix random_int_matrix(std::mt19937_64& rng, int rows, int cols, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  RatMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = d(rng);
  return m;
}

bool is_unimodular(const RatMatrix& u) {
  Rat d = u.det();
  return d == 1 || d == -1;
}

}  // namespace

TEST_CASE("hnf on pinned inputs") {
  // already in normal form
  auto h1 = hnf(RatMatrix{{2, 0}, {0, 3}});
  CHECK(h1.h == RatMatrix{{2, 0}, {0, 3}});
  CHECK(h1.u.is_identity());

  // row swap
  auto h2 = hnf(RatMatrix{{0, 1}, {1, 0}});
  CHECK(h2.h.is_identity());

  // gcd elimination plus reduction above the pivot
  auto h3 = hnf(RatMatrix{{4, 6}, {2, 4}});
  CHECK(h3.h == RatMatrix{{2, 0}, {0, 2}});
  CHECK(h3.u * RatMatrix{{4, 6}, {2, 4}} == h3.h);

  // rectangular shapes
  CHECK(hnf(RatMatrix{{2}, {3}}).h == RatMatrix{{1}, {0}});
  CHECK(hnf(RatMatrix{{1, 2, 3}}).h == RatMatrix{{1, 2, 3}});
}

TEST_CASE("snf on pinned inputs") {
  auto s1 = snf(RatMatrix{{2, 0}, {0, 3}});
  CHECK(s1.d == RatMatrix{{1, 0}, {0, 6}});

  auto s2 = snf(RatMatrix{{1, 2}, {2, 3}});
  CHECK(s2.d.is_identity());

  auto s3 = snf(RatMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
  CHECK(s3.d == RatMatrix{{2, 0, 0}, {0, 6, 0}, {0, 0, 12}});
}

TEST_CASE("hnf/snf random reconstruction") {
  std::mt19937_64 rng(20240817);
  for (int iter = 0; iter < 200; ++iter) {
    int rows = 2 + int(rng() % 5);
    int cols = 2 + int(rng() % 5);
    RatMatrix m = random_int_matrix(rng, rows, cols, -9, 9);

    auto [h, u] = hnf(m);
    CHECK(u * m == h);
    CHECK(is_unimodular(u));
    // canonical: a second pass is the identity transformation
    CHECK(hnf(h).h == h);
    // pivots positive, entries above in [0, pivot)
    int prev_col = -1;
    for (int i = 0; i < h.rows(); ++i) {
      int lead = -1;
      for (int j = 0; j < h.cols(); ++j)
        if (h.at(i, j) != 0) {
          lead = j;
          break;
        }
      if (lead < 0) continue;
      CHECK(lead > prev_col);
      prev_col = lead;
      CHECK(h.at(i, lead) > 0);
      for (int r = 0; r < i; ++r) {
        CHECK(h.at(r, lead) >= 0);
        CHECK(h.at(r, lead) < h.at(i, lead));
      }
    }

    auto s = snf(m);
    CHECK(s.u * m * s.v == s.d);
    CHECK(is_unimodular(s.u));
    CHECK(is_unimodular(s.v));
    for (int i = 0; i < std::min(rows, cols); ++i) {
      CHECK(s.d.at(i, i) >= 0);
      if (i + 1 < std::min(rows, cols) && s.d.at(i + 1, i + 1) != 0) {
        CHECK(s.d.at(i, i) != 0);
        CHECK(is_integer(s.d.at(i + 1, i + 1) / s.d.at(i, i)));
      }
      for (int j = 0; j < cols; ++j)
        if (j != i) CHECK(s.d.at(i, j) == 0);
    }
  }
}

TEST_CASE("solve_integer: no integer point on the shifted holonomy line") {
  // (I - A) x = (1,0) for A = [[-1,1],[1,-2]] has the unique rational
  // solution (3/5, 1/5) and therefore no integer solution.
  RatMatrix m{{2, -1}, {-1, 3}};
  auto r = solve_integer(m, {Rat(1), Rat(0)});
  REQUIRE(r.rational_solution.has_value());
  CHECK((*r.rational_solution)[0] == Rat(3, 5));
  CHECK((*r.rational_solution)[1] == Rat(1, 5));
  CHECK(!r.integer_solution.has_value());
  CHECK(r.kernel_basis.cols() == 0);
}

TEST_CASE("solve_integer basics") {
  auto r1 = solve_integer(RatMatrix{{2, 0}, {0, 2}}, {Rat(2), Rat(4)});
  REQUIRE(r1.integer_solution.has_value());
  CHECK((*r1.integer_solution)[0] == 1);
  CHECK((*r1.integer_solution)[1] == 2);

  auto r2 = solve_integer(RatMatrix{{2}}, {Rat(1)});
  CHECK(!r2.integer_solution.has_value());
  REQUIRE(r2.rational_solution.has_value());
  CHECK((*r2.rational_solution)[0] == Rat(1, 2));

  auto r3 = solve_integer(RatMatrix{{1}, {1}}, {Rat(0), Rat(1)});
  CHECK(!r3.rational_solution.has_value());
  CHECK(!r3.integer_solution.has_value());

  // underdetermined: solution plus one-dimensional kernel
  auto r4 = solve_integer(RatMatrix{{1, 1}}, {Rat(5)});
  REQUIRE(r4.integer_solution.has_value());
  CHECK((*r4.integer_solution)[0] + (*r4.integer_solution)[1] == 5);
  REQUIRE(r4.kernel_basis.cols() == 1);
  CHECK(r4.kernel_basis.at(0, 0) + r4.kernel_basis.at(1, 0) == 0);
  CHECK(r4.kernel_basis.at(0, 0) != 0);

  CHECK_THROWS_AS(solve_integer(RatMatrix{{1, 2}}, {Rat(1), Rat(2)}), InvalidInput);
}

TEST_CASE("solve_integer random round trips") {
  std::mt19937_64 rng(911);
  for (int iter = 0; iter < 100; ++iter) {
    int rows = 1 + int(rng() % 4), cols = 1 + int(rng() % 4);
    RatMatrix m = random_int_matrix(rng, rows, cols, -6, 6);
    RatMatrix xs = random_int_matrix(rng, cols, 1, -10, 10);
    std::vector<Rat> x = xs.col(0);
    auto r = solve_integer(m, m * x);
    REQUIRE(r.integer_solution.has_value());
    CHECK(m * *r.integer_solution == m * x);
    for (int j = 0; j < r.kernel_basis.cols(); ++j) {
      std::vector<Rat> k = r.kernel_basis.col(j);
      for (const auto& v : m * k) CHECK(v == 0);
    }
  }
}

TEST_CASE("characteristic and minimal polynomials") {
  RatMatrix m{{1, 2}, {2, 3}};
  CHECK(char_poly_z(m) == PolyZ{-1, -4, 1});

  RatMatrix a0{{1, 1}, {1, 2}};
  CHECK(char_poly_z(a0) == PolyZ{1, -3, 1});

  CHECK(min_poly_z(RatMatrix{{2, 0}, {0, 2}}) == PolyZ{-2, 1});
  CHECK(min_poly_z(RatMatrix{{2, 1}, {0, 2}}) == PolyZ{4, -4, 1});

  // Cayley-Hamilton and divisibility, on random integer matrices
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 40; ++iter) {
    int n = 2 + int(rng() % 4);
    RatMatrix a = random_int_matrix(rng, n, n, -5, 5);
    PolyQ cp = char_poly(a);
    CHECK(apply_poly(cp, a).is_zero());
    PolyQ mp = min_poly(a);
    CHECK(apply_poly(mp, a).is_zero());
    CHECK(cp.divmod(mp).second.is_zero());
  }
}

TEST_CASE("factor_over_Z pinned examples") {
  // squared irreducible quadratic (the block form of the rank-4 example)
  auto f1 = factor_over_Z(PolyZ{-1, -4, 1} * PolyZ{-1, -4, 1});
  CHECK(f1.content == 1);
  REQUIRE(f1.factors.size() == 1);
  CHECK(f1.factors[0].first == PolyZ{-1, -4, 1});
  CHECK(f1.factors[0].second == 2);

  auto f2 = factor_over_Z(PolyZ{-1, 0, 0, 0, 1});  // x^4 - 1
  REQUIRE(f2.factors.size() == 3);
  CHECK(f2.expand() == PolyZ{-1, 0, 0, 0, 1});

  auto f3 = factor_over_Z(PolyZ{0, 0, 6});  // 6x^2
  CHECK(f3.content == 6);
  REQUIRE(f3.factors.size() == 1);
  CHECK(f3.factors[0].first == PolyZ{0, 1});
  CHECK(f3.factors[0].second == 2);

  auto f4 = factor_over_Z(PolyZ{-5, 0, 1});  // x^2 - 5 irreducible
  REQUIRE(f4.factors.size() == 1);
  CHECK(f4.factors[0].second == 1);

  auto f5 = factor_over_Z(PolyZ{2, 0, -2});  // -2x^2 + 2 = -2 (x-1)(x+1)
  CHECK(f5.content == -2);
  CHECK(f5.factors.size() == 2);
  CHECK(f5.expand() == PolyZ{2, 0, -2});

  // degree 8 with a genuine quartic factor
  PolyZ quartic{1, 0, 1, 0, 1};  // x^4 + x^2 + 1 = (x^2+x+1)(x^2-x+1)
  auto f6 = factor_over_Z(quartic * PolyZ{-1, -1, 1, 1});
  CHECK(f6.expand() == quartic * PolyZ{-1, -1, 1, 1});
  PolyZ product{1};
  for (const auto& [f, m] : f6.factors) {
    CHECK(m >= 1);
    for (int i = 0; i < m; ++i) product = product * f;
  }
  CHECK(product * f6.content == quartic * PolyZ{-1, -1, 1, 1});
}

TEST_CASE("factor_over_Z random products of small irreducibles") {
  std::vector<PolyZ> pool{
      PolyZ{-1, 1},     PolyZ{1, 1},     PolyZ{-2, 1},        PolyZ{3, 1},
      PolyZ{1, 0, 1},   PolyZ{-2, 0, 1}, PolyZ{-1, -1, 1},    PolyZ{1, -1, 1},
      PolyZ{-1, -4, 1}, PolyZ{1, -3, 1}, PolyZ{-1, -1, 0, 1}, PolyZ{2, 0, 0, 1},
  };
  std::mt19937_64 rng(314159);
  for (int iter = 0; iter < 30; ++iter) {
    PolyZ p{1};
    int parts = 2 + int(rng() % 2);
    for (int k = 0; k < parts; ++k) p = p * pool[rng() % pool.size()];
    auto fac = factor_over_Z(p);
    CHECK(fac.expand() == p);
    for (const auto& [f, m] : fac.factors) {
      CHECK(f.lc() > 0);
      CHECK(f.content() == 1);
    }
  }
}

TEST_CASE("resultant and root product polynomial") {
  // res(x^2-1, x^2-4) = prod (r_i - s_j) over roots = (1-2)(1+2)(-1-2)(-1+2) = 9
  CHECK(resultant(PolyZ{-1, 0, 1}, PolyZ{-4, 0, 1}) == 9);
  CHECK(resultant(PolyZ{-1, 1}, PolyZ{-3, 1}) == -2);  // root difference 1 - 3
  // roots of x^2-4x-1 are 2±sqrt5; pairwise products are 4±... and -1
  PolyZ q = root_product_poly(PolyZ{-1, -4, 1});
  // products: (2+s)(2+s)=9+4s, (2-s)^2=9-4s, cross products (2+s)(2-s) = -1 twice
  CHECK(q.degree() == 4);
  CHECK(q.eval(Rat(-1)) == 0);
  // 9+4sqrt5 and 9-4sqrt5 are roots of y^2-18y+1
  PolyZ expected = PolyZ{1, -18, 1} * PolyZ{1, 1} * PolyZ{1, 1};
  CHECK(q.primitive_part() == expected.primitive_part());
}

TEST_CASE("cyclotomic recognition and matrix order") {
  CHECK(cyclotomic_order(PolyZ{-1, 1}) == 1);
  CHECK(cyclotomic_order(PolyZ{1, 1}) == 2);
  CHECK(cyclotomic_order(PolyZ{1, 1, 1}) == 3);
  CHECK(cyclotomic_order(PolyZ{1, 0, 1}) == 4);
  CHECK(cyclotomic_order(PolyZ{1, -1, 1}) == 6);
  CHECK(cyclotomic_order(PolyZ{1, 0, 0, 0, 1}) == 8);
  CHECK(!cyclotomic_order(PolyZ{-1, -4, 1}).has_value());
  CHECK(!cyclotomic_order(PolyZ{-1, 0, 1}).has_value());  // reducible x^2-1

  CHECK(matrix_order(RatMatrix{{-1, 0}, {0, -1}}) == 2);
  CHECK(matrix_order(RatMatrix{{0, -1}, {1, 0}}) == 4);
  CHECK(matrix_order(RatMatrix{{0, -1}, {1, -1}}) == 3);
  CHECK(matrix_order(RatMatrix{{0, -1}, {1, 1}}) == 6);
  CHECK(matrix_order(RatMatrix::identity(3)) == 1);
  CHECK(!matrix_order(RatMatrix{{1, 1}, {0, 1}}).has_value());   // unipotent
  CHECK(!matrix_order(RatMatrix{{1, 2}, {2, 3}}).has_value());   // real spectrum off the unit circle
  CHECK_THROWS_AS(matrix_order(RatMatrix{{2, 0}, {0, 1}}), InvalidInput);
  // order 12 needs two coprime cyclotomic blocks
  RatMatrix m12{{0, -1, 0, 0}, {1, -1, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}};
  CHECK(matrix_order(m12) == 12);
}

TEST_CASE("sturm sequences count real roots") {
  SturmSequence s1(to_polyq(PolyZ{-1, -4, 1}));  // roots 2±sqrt5
  CHECK(s1.count_roots(Rat(-10), Rat(10)) == 2);
  CHECK(s1.count_roots(Rat(0), Rat(10)) == 1);
  CHECK(s1.count_roots(Rat(-10), Rat(0)) == 1);
  CHECK(s1.variations_at_minus_inf() - s1.variations_at_plus_inf() == 2);

  SturmSequence s2(to_polyq(PolyZ{1, 0, 1}));  // x^2+1: no real roots
  CHECK(s2.variations_at_minus_inf() - s2.variations_at_plus_inf() == 0);

  SturmSequence s3(to_polyq(PolyZ{0, -1, 0, 1}));  // x^3 - x
  CHECK(s3.count_roots(Rat(-2), Rat(2)) == 3);
}

TEST_CASE("lattice saturation and quotient order") {
  // saturation of span{(2,4)}: the primitive generator is (1,2)
  Lattice sat = lattice_saturate(RatMatrix{{2, 4}});
  CHECK(sat.basis() == RatMatrix{{1, 2}});

  // rational spans saturate to their integer points
  Lattice half = lattice_saturate(RatMatrix{{1, Rat(1, 2)}});
  CHECK(half.basis() == RatMatrix{{2, 1}});

  // full-dimensional span
  Lattice full = lattice_saturate(RatMatrix{{1, Rat(1, 2)}, {0, Rat(1, 3)}});
  CHECK(full.basis().is_identity());

  Lattice sub = Lattice::from_generators(RatMatrix{{2, 0}, {0, 3}});
  Lattice super = Lattice::standard(2);
  CHECK(quotient_order(sub, super, {Rat(1), Rat(1)}) == 6);
  CHECK(quotient_order(sub, super, {Rat(2), Rat(3)}) == 1);
  CHECK(quotient_order(sub, super, {Rat(1), Rat(0)}) == 2);
  CHECK(super.index_of(sub) == 6);
  CHECK_THROWS_AS(quotient_order(sub, super, {Rat(1, 2), Rat(0)}), InvalidInput);
}

TEST_CASE("saturation restores primitivity after scaling") {
  std::mt19937_64 rng(4242);
  for (int iter = 0; iter < 50; ++iter) {
    int p = 2 + int(rng() % 4);
    int r = 1 + int(rng() % p);
    RatMatrix rows = random_int_matrix(rng, r, p, -5, 5);
    for (int i = 0; i < r; ++i) {
      int s = 1 + int(rng() % 4);
      for (int j = 0; j < p; ++j) rows.at(i, j) *= s;
    }
    Lattice sat = lattice_saturate(rows);
    // every original row lies in the saturation
    for (int i = 0; i < r; ++i) CHECK(sat.contains(rows.row(i)));
    // saturated lattice has the rank of the span
    CHECK(sat.rank() == rows.rank());
    // saturation is idempotent
    CHECK(lattice_saturate(sat.basis()).basis() == sat.basis());
  }
}
