#include "lcpforge/matrix.hpp"

#include <cassert>

namespace lcp {

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rat>> init) {
  rows_ = int(init.size());
  cols_ = rows_ ? int(init.begin()->size()) : 0;
  e_.reserve(size_t(rows_) * cols_);
  for (const auto& r : init) {
    if (int(r.size()) != cols_) throw InvalidInput("ragged matrix literal");
    for (const auto& x : r) e_.push_back(x);
  }
}

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_strings(const std::vector<std::vector<std::string>>& rows) {
  if (rows.empty()) return {};
  RatMatrix m(int(rows.size()), int(rows[0].size()));
  for (int i = 0; i < m.rows(); ++i) {
    if (int(rows[i].size()) != m.cols()) throw InvalidInput("ragged matrix data");
    for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rat_from_string(rows[i][j]);
  }
  return m;
}

RatMatrix RatMatrix::operator+(const RatMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InvalidInput("matrix size mismatch in +");
  RatMatrix r(rows_, cols_);
  for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] + o.e_[k];
  return r;
}

RatMatrix RatMatrix::operator-(const RatMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InvalidInput("matrix size mismatch in -");
  RatMatrix r(rows_, cols_);
  for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] - o.e_[k];
  return r;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
  if (cols_ != o.rows_) throw InvalidInput("matrix size mismatch in *");
  RatMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rat& a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
    }
  return r;
}

RatMatrix RatMatrix::operator*(const Rat& s) const {
  RatMatrix r(rows_, cols_);
  for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] * s;
  return r;
}

std::vector<Rat> RatMatrix::operator*(const std::vector<Rat>& v) const {
  if (int(v.size()) != cols_) throw InvalidInput("matrix/vector size mismatch");
  std::vector<Rat> r(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
  return r;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool RatMatrix::is_zero() const {
  for (const auto& x : e_)
    if (x != 0) return false;
  return true;
}

bool RatMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

bool RatMatrix::is_integral() const {
  for (const auto& x : e_)
    if (!is_integer(x)) return false;
  return true;
}

Rat RatMatrix::trace() const {
  Rat t;
  for (int i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

Rat RatMatrix::det() const {
  if (rows_ != cols_) throw InvalidInput("determinant of non-square matrix");
  RatMatrix a = *this;
  Rat d = 1;
  for (int c = 0; c < cols_; ++c) {
    int p = -1;
    for (int r = c; r < rows_; ++r)
      if (a.at(r, c) != 0) {
        p = r;
        break;
      }
    if (p < 0) return 0;
    if (p != c) {
      for (int j = 0; j < cols_; ++j) std::swap(a.at(p, j), a.at(c, j));
      d = -d;
    }
    d *= a.at(c, c);
    Rat inv = 1 / a.at(c, c);
    for (int r = c + 1; r < rows_; ++r) {
      if (a.at(r, c) == 0) continue;
      Rat f = a.at(r, c) * inv;
      for (int j = c; j < cols_; ++j) a.at(r, j) -= f * a.at(c, j);
    }
  }
  return d;
}

RatMatrix RatMatrix::rref(std::vector<int>* pivots) const {
  RatMatrix a = *this;
  int lead = 0;
  for (int c = 0; c < cols_ && lead < rows_; ++c) {
    int p = -1;
    for (int r = lead; r < rows_; ++r)
      if (a.at(r, c) != 0) {
        p = r;
        break;
      }
    if (p < 0) continue;
    if (p != lead)
      for (int j = 0; j < cols_; ++j) std::swap(a.at(p, j), a.at(lead, j));
    Rat inv = 1 / a.at(lead, c);
    for (int j = 0; j < cols_; ++j) a.at(lead, j) *= inv;
    for (int r = 0; r < rows_; ++r) {
      if (r == lead || a.at(r, c) == 0) continue;
      Rat f = a.at(r, c);
      for (int j = 0; j < cols_; ++j) a.at(r, j) -= f * a.at(lead, j);
    }
    if (pivots) pivots->push_back(c);
    ++lead;
  }
  return a;
}

int RatMatrix::rank() const {
  std::vector<int> piv;
  rref(&piv);
  return int(piv.size());
}

RatMatrix RatMatrix::inverse() const {
  if (rows_ != cols_) throw InvalidInput("inverse of non-square matrix");
  RatMatrix aug(rows_, 2 * cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_ + i) = 1;
  }
  std::vector<int> piv;
  RatMatrix r = aug.rref(&piv);
  if (int(piv.size()) != rows_ || piv.back() >= cols_)
    throw InvalidInput("matrix is singular");
  RatMatrix inv(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) inv.at(i, j) = r.at(i, cols_ + j);
  return inv;
}

RatMatrix RatMatrix::right_kernel() const {
  std::vector<int> piv;
  RatMatrix r = rref(&piv);
  std::vector<bool> is_pivot(cols_, false);
  for (int c : piv) is_pivot[c] = true;
  std::vector<int> free;
  for (int c = 0; c < cols_; ++c)
    if (!is_pivot[c]) free.push_back(c);
  RatMatrix k(cols_, int(free.size()));
  for (int t = 0; t < int(free.size()); ++t) {
    int fc = free[t];
    k.at(fc, t) = 1;
    for (int i = 0; i < int(piv.size()); ++i) k.at(piv[i], t) = -r.at(i, fc);
  }
  return k;
}

std::optional<std::vector<Rat>> RatMatrix::solve(const std::vector<Rat>& b) const {
  if (int(b.size()) != rows_) throw InvalidInput("matrix/rhs size mismatch");
  RatMatrix aug(rows_, cols_ + 1);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_) = b[i];
  }
  std::vector<int> piv;
  RatMatrix r = aug.rref(&piv);
  if (!piv.empty() && piv.back() == cols_) return std::nullopt;  // 0 = 1 row
  std::vector<Rat> x(cols_);
  for (int i = 0; i < int(piv.size()); ++i) x[piv[i]] = r.at(i, cols_);
  return x;
}

std::vector<Rat> RatMatrix::row(int i) const {
  std::vector<Rat> r(cols_);
  for (int j = 0; j < cols_; ++j) r[j] = at(i, j);
  return r;
}

std::vector<Rat> RatMatrix::col(int j) const {
  std::vector<Rat> c(rows_);
  for (int i = 0; i < rows_; ++i) c[i] = at(i, j);
  return c;
}

RatMatrix clear_denominators(const RatMatrix& m) {
  RatMatrix r = m;
  for (int i = 0; i < m.rows(); ++i) {
    Int d = 1;
    for (int j = 0; j < m.cols(); ++j) {
      Int l;
      mpz_lcm(l.get_mpz_t(), d.get_mpz_t(), m.at(i, j).get_den().get_mpz_t());
      d = l;
    }
    for (int j = 0; j < m.cols(); ++j) r.at(i, j) = m.at(i, j) * Rat(d);
  }
  return r;
}

RatMatrix matrix_power(const RatMatrix& a, unsigned long k) {
  if (!a.is_square()) throw InvalidInput("power of non-square matrix");
  RatMatrix r = RatMatrix::identity(a.rows());
  RatMatrix base = a;
  while (k) {
    if (k & 1) r = r * base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

}  // namespace lcp
