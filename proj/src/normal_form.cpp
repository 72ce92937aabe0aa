#include "lcpforge/normal_form.hpp"

#include <cassert>

namespace lcp {

namespace {

using ZGrid = std::vector<std::vector<Int>>;

ZGrid to_grid(const RatMatrix& m) {
  if (!m.is_integral()) throw InvalidInput("integer matrix required");
  ZGrid g(size_t(m.rows()), std::vector<Int>(size_t(m.cols())));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) g[size_t(i)][size_t(j)] = m.at(i, j).get_num();
  return g;
}

RatMatrix from_grid(const ZGrid& g) {
  RatMatrix m(int(g.size()), g.empty() ? 0 : int(g[0].size()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m.at(i, j) = Rat(g[size_t(i)][size_t(j)]);
  return m;
}

void add_row(ZGrid& a, int dst, int src, const Int& f) {
  for (size_t j = 0; j < a[size_t(dst)].size(); ++j)
    a[size_t(dst)][j] += f * a[size_t(src)][j];
}

void add_col(ZGrid& a, int dst, int src, const Int& f) {
  for (auto& row : a) row[size_t(dst)] += f * row[size_t(src)];
}

void negate_row(ZGrid& a, int i) {
  for (auto& x : a[size_t(i)]) x = -x;
}

Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int trunc_div(const Int& a, const Int& b) {
  Int q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

HermiteForm hnf(const RatMatrix& m) {
  ZGrid a = to_grid(m);
  int rows = m.rows(), cols = m.cols();
  auto u = ZGrid(size_t(rows), std::vector<Int>(size_t(rows)));
  for (int i = 0; i < rows; ++i) u[size_t(i)][size_t(i)] = 1;

  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    // Euclidean elimination below row r in column c.
    while (true) {
      int best = -1;
      for (int i = r; i < rows; ++i) {
        if (a[size_t(i)][size_t(c)] == 0) continue;
        if (best < 0 || abs(a[size_t(i)][size_t(c)]) < abs(a[size_t(best)][size_t(c)]))
          best = i;
      }
      if (best < 0) break;
      if (best != r) {
        std::swap(a[size_t(best)], a[size_t(r)]);
        std::swap(u[size_t(best)], u[size_t(r)]);
      }
      bool cleared = true;
      for (int i = r + 1; i < rows; ++i) {
        if (a[size_t(i)][size_t(c)] == 0) continue;
        Int q = trunc_div(a[size_t(i)][size_t(c)], a[size_t(r)][size_t(c)]);
        if (q != 0) {
          add_row(a, i, r, -q);
          add_row(u, i, r, -q);
        }
        if (a[size_t(i)][size_t(c)] != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (a[size_t(r)][size_t(c)] == 0) continue;
    if (a[size_t(r)][size_t(c)] < 0) {
      negate_row(a, r);
      negate_row(u, r);
    }
    for (int i = 0; i < r; ++i) {
      Int q = floor_div(a[size_t(i)][size_t(c)], a[size_t(r)][size_t(c)]);
      if (q != 0) {
        add_row(a, i, r, -q);
        add_row(u, i, r, -q);
      }
    }
    ++r;
  }
  return {from_grid(a), from_grid(u)};
}

SmithForm snf(const RatMatrix& m) {
  ZGrid a = to_grid(m);
  int rows = m.rows(), cols = m.cols();
  auto u = ZGrid(size_t(rows), std::vector<Int>(size_t(rows)));
  auto v = ZGrid(size_t(cols), std::vector<Int>(size_t(cols)));
  for (int i = 0; i < rows; ++i) u[size_t(i)][size_t(i)] = 1;
  for (int j = 0; j < cols; ++j) v[size_t(j)][size_t(j)] = 1;

  auto swap_cols = [&](int x, int y) {
    for (auto& row : a) std::swap(row[size_t(x)], row[size_t(y)]);
    for (auto& row : v) std::swap(row[size_t(x)], row[size_t(y)]);
  };

  int n = std::min(rows, cols);
  for (int t = 0; t < n; ++t) {
    while (true) {
      // Locate the non-zero entry of least magnitude in the trailing block.
      int bi = -1, bj = -1;
      for (int i = t; i < rows; ++i)
        for (int j = t; j < cols; ++j) {
          const Int& x = a[size_t(i)][size_t(j)];
          if (x == 0) continue;
          if (bi < 0 || abs(x) < abs(a[size_t(bi)][size_t(bj)])) {
            bi = i;
            bj = j;
          }
        }
      if (bi < 0) {
        bi = t;  // trailing block is zero; done with this corner
        break;
      }
      if (bi != t) {
        std::swap(a[size_t(bi)], a[size_t(t)]);
        std::swap(u[size_t(bi)], u[size_t(t)]);
      }
      if (bj != t) swap_cols(bj, t);

      bool dirty = false;
      for (int i = t + 1; i < rows; ++i) {
        if (a[size_t(i)][size_t(t)] == 0) continue;
        Int q = trunc_div(a[size_t(i)][size_t(t)], a[size_t(t)][size_t(t)]);
        if (q != 0) {
          add_row(a, i, t, -q);
          add_row(u, i, t, -q);
        }
        if (a[size_t(i)][size_t(t)] != 0) dirty = true;
      }
      for (int j = t + 1; j < cols; ++j) {
        if (a[size_t(t)][size_t(j)] == 0) continue;
        Int q = trunc_div(a[size_t(t)][size_t(j)], a[size_t(t)][size_t(t)]);
        if (q != 0) {
          add_col(a, j, t, -q);
          add_col(v, j, t, -q);
        }
        if (a[size_t(t)][size_t(j)] != 0) dirty = true;
      }
      if (dirty) continue;

      // Row and column are clear; enforce divisibility into the rest.
      bool fixed = true;
      for (int i = t + 1; i < rows && fixed; ++i)
        for (int j = t + 1; j < cols && fixed; ++j)
          if (a[size_t(i)][size_t(j)] % a[size_t(t)][size_t(t)] != 0) {
            add_row(a, t, i, 1);
            add_row(u, t, i, 1);
            fixed = false;
          }
      if (fixed) break;
    }
    if (a[size_t(t)][size_t(t)] < 0) {
      negate_row(a, t);
      negate_row(u, t);
    }
  }
  return {from_grid(a), from_grid(u), from_grid(v)};
}

RatMatrix integer_kernel(const RatMatrix& m) {
  SmithForm s = snf(m);
  int n = std::min(m.rows(), m.cols());
  int rank = 0;
  for (int i = 0; i < n; ++i)
    if (s.d.at(i, i) != 0) ++rank;
  RatMatrix k(m.cols(), m.cols() - rank);
  for (int j = rank; j < m.cols(); ++j)
    for (int i = 0; i < m.cols(); ++i) k.at(i, j - rank) = s.v.at(i, j);
  return k;
}

IntegerSolveResult solve_integer(const RatMatrix& m, const std::vector<Rat>& b) {
  if (int(b.size()) != m.rows()) throw InvalidInput("solve_integer dimension mismatch");
  SmithForm s = snf(m);
  IntegerSolveResult out;

  int n = std::min(m.rows(), m.cols());
  int rank = 0;
  for (int i = 0; i < n; ++i)
    if (s.d.at(i, i) != 0) ++rank;
  out.kernel_basis = RatMatrix(m.cols(), m.cols() - rank);
  for (int j = rank; j < m.cols(); ++j)
    for (int i = 0; i < m.cols(); ++i) out.kernel_basis.at(i, j - rank) = s.v.at(i, j);

  std::vector<Rat> c = s.u * b;
  for (int i = rank; i < m.rows(); ++i)
    if (c[size_t(i)] != 0) return out;  // inconsistent even over Q

  std::vector<Rat> y(size_t(m.cols()));
  bool integral = true;
  for (int i = 0; i < rank; ++i) {
    y[size_t(i)] = c[size_t(i)] / s.d.at(i, i);
    integral = integral && is_integer(y[size_t(i)]);
  }
  std::vector<Rat> x = s.v * y;
  out.rational_solution = x;
  if (integral) out.integer_solution = x;
  return out;
}

}  // namespace lcp
