#include "lcpforge/nf_linalg.hpp"

namespace lcp {

NFMatrix::NFMatrix(FieldPtr field, int rows, int cols)
    : field_(std::move(field)), rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw InvalidInput("negative matrix dimensions");
  e_.assign(size_t(rows) * size_t(cols), NFElement(field_, Rat(0)));
}

NFMatrix NFMatrix::identity(const FieldPtr& field, int n) {
  NFMatrix m(field, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = NFElement(field, Rat(1));
  return m;
}

NFMatrix NFMatrix::from_rational(const FieldPtr& field, const RatMatrix& r) {
  NFMatrix m(field, r.rows(), r.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m.at(i, j) = NFElement(field, r.at(i, j));
  return m;
}

bool NFMatrix::operator==(const NFMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (size_t k = 0; k < e_.size(); ++k)
    if (!(e_[k] == o.e_[k])) return false;
  return true;
}

NFMatrix NFMatrix::operator+(const NFMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InvalidInput("matrix shape mismatch");
  NFMatrix r(field_, rows_, cols_);
  for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] + o.e_[k];
  return r;
}

NFMatrix NFMatrix::operator-(const NFMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InvalidInput("matrix shape mismatch");
  NFMatrix r(field_, rows_, cols_);
  for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] - o.e_[k];
  return r;
}

NFMatrix NFMatrix::operator*(const NFMatrix& o) const {
  if (cols_ != o.rows_) throw InvalidInput("matrix shape mismatch");
  NFMatrix r(field_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const NFElement& a = at(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) r.at(i, j) = r.at(i, j) + a * o.at(k, j);
    }
  return r;
}

NFVector NFMatrix::operator*(const NFVector& v) const {
  if (int(v.size()) != cols_) throw InvalidInput("matrix/vector shape mismatch");
  NFVector r(size_t(rows_), NFElement(field_, Rat(0)));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero()) r[size_t(i)] = r[size_t(i)] + at(i, j) * v[size_t(j)];
  return r;
}

NFMatrix NFMatrix::scaled(const NFElement& s) const {
  NFMatrix r(field_, rows_, cols_);
  for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] * s;
  return r;
}

NFMatrix NFMatrix::transpose() const {
  NFMatrix r(field_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool NFMatrix::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

bool NFMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      NFElement want(field_, Rat(i == j ? 1 : 0));
      if (!(at(i, j) == want)) return false;
    }
  return true;
}

std::optional<RatMatrix> NFMatrix::to_rational() const {
  RatMatrix r(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      if (!at(i, j).is_rational()) return std::nullopt;
      r.at(i, j) = at(i, j).rational_value();
    }
  return r;
}

NFMatrix NFMatrix::rref(std::vector<int>* pivot_cols) const {
  NFMatrix m = *this;
  if (pivot_cols) pivot_cols->clear();
  int row = 0;
  for (int col = 0; col < cols_ && row < rows_; ++col) {
    int pivot = -1;
    for (int i = row; i < rows_; ++i)
      if (!m.at(i, col).is_zero()) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != row)
      for (int j = 0; j < cols_; ++j) std::swap(m.at(pivot, j), m.at(row, j));
    NFElement inv = m.at(row, col).inverse();
    for (int j = 0; j < cols_; ++j) m.at(row, j) = m.at(row, j) * inv;
    for (int i = 0; i < rows_; ++i) {
      if (i == row || m.at(i, col).is_zero()) continue;
      NFElement f = m.at(i, col);
      for (int j = 0; j < cols_; ++j) m.at(i, j) = m.at(i, j) - f * m.at(row, j);
    }
    if (pivot_cols) pivot_cols->push_back(col);
    ++row;
  }
  return m;
}

int NFMatrix::rank() const {
  std::vector<int> p;
  rref(&p);
  return int(p.size());
}

NFElement NFMatrix::det() const {
  if (rows_ != cols_) throw InvalidInput("determinant of a non-square matrix");
  NFMatrix m = *this;
  NFElement d(field_, Rat(1));
  for (int col = 0; col < cols_; ++col) {
    int pivot = -1;
    for (int i = col; i < rows_; ++i)
      if (!m.at(i, col).is_zero()) {
        pivot = i;
        break;
      }
    if (pivot < 0) return NFElement(field_, Rat(0));
    if (pivot != col) {
      for (int j = 0; j < cols_; ++j) std::swap(m.at(pivot, j), m.at(col, j));
      d = -d;
    }
    d = d * m.at(col, col);
    NFElement inv = m.at(col, col).inverse();
    for (int i = col + 1; i < rows_; ++i) {
      if (m.at(i, col).is_zero()) continue;
      NFElement f = m.at(i, col) * inv;
      for (int j = col; j < cols_; ++j) m.at(i, j) = m.at(i, j) - f * m.at(col, j);
    }
  }
  return d;
}

NFMatrix NFMatrix::inverse() const {
  if (rows_ != cols_) throw InvalidInput("inverse of a non-square matrix");
  NFMatrix aug(field_, rows_, 2 * cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_ + i) = NFElement(field_, Rat(1));
  }
  std::vector<int> pivots;
  NFMatrix r = aug.rref(&pivots);
  for (int i = 0; i < rows_; ++i)
    if (int(pivots.size()) <= i || pivots[size_t(i)] != i)
      throw InvalidInput("matrix is singular over the field");
  NFMatrix inv(field_, rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) inv.at(i, j) = r.at(i, cols_ + j);
  return inv;
}

std::vector<NFVector> NFMatrix::right_kernel() const {
  std::vector<int> pivots;
  NFMatrix r = rref(&pivots);
  std::vector<bool> is_pivot(size_t(cols_), false);
  for (int c : pivots) is_pivot[size_t(c)] = true;
  std::vector<NFVector> basis;
  for (int free = 0; free < cols_; ++free) {
    if (is_pivot[size_t(free)]) continue;
    NFVector v(size_t(cols_), NFElement(field_, Rat(0)));
    v[size_t(free)] = NFElement(field_, Rat(1));
    for (size_t pr = 0; pr < pivots.size(); ++pr)
      v[size_t(pivots[pr])] = -r.at(int(pr), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<NFVector> NFMatrix::solve(const NFVector& b) const {
  if (int(b.size()) != rows_) throw InvalidInput("matrix/vector shape mismatch");
  NFMatrix aug(field_, rows_, cols_ + 1);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_) = b[size_t(i)];
  }
  std::vector<int> pivots;
  NFMatrix r = aug.rref(&pivots);
  if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;  // inconsistent
  NFVector x(size_t(cols_), NFElement(field_, Rat(0)));
  for (size_t pr = 0; pr < pivots.size(); ++pr) x[size_t(pivots[pr])] = r.at(int(pr), cols_);
  return x;
}

NFMatrix columns_to_matrix(const FieldPtr& field, const std::vector<NFVector>& cols) {
  if (cols.empty()) return NFMatrix(field, 0, 0);
  NFMatrix m(field, int(cols[0].size()), int(cols.size()));
  for (size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != cols[0].size()) throw InvalidInput("ragged column list");
    for (size_t i = 0; i < cols[j].size(); ++i) m.at(int(i), int(j)) = cols[j][i];
  }
  return m;
}

RatMatrix rational_coordinate_rows(const NFVector& v) {
  if (v.empty()) return RatMatrix(0, 0);
  int d = v[0].field()->degree();
  RatMatrix r(d, int(v.size()));
  for (size_t j = 0; j < v.size(); ++j)
    for (int i = 0; i < d; ++i) r.at(i, int(j)) = v[j].coord(i);
  return r;
}

TransVector::TransVector(NFVector ones, NFVector pis)
    : one_part(std::move(ones)), pi_part(std::move(pis)) {
  if (one_part.size() != pi_part.size()) throw InvalidInput("mismatched part lengths");
}

TransVector TransVector::algebraic(NFVector ones) {
  NFVector pis(ones.size(), NFElement(ones.empty() ? NumberField::rationals() : ones[0].field(),
                                      Rat(0)));
  return TransVector(std::move(ones), std::move(pis));
}

TransVector TransVector::zero(const FieldPtr& field, int n) {
  return TransVector(NFVector(size_t(n), NFElement(field, Rat(0))),
                     NFVector(size_t(n), NFElement(field, Rat(0))));
}

bool TransVector::is_zero() const {
  for (const auto& x : one_part)
    if (!x.is_zero()) return false;
  for (const auto& x : pi_part)
    if (!x.is_zero()) return false;
  return true;
}

bool TransVector::operator==(const TransVector& o) const {
  if (size() != o.size()) return false;
  for (int i = 0; i < size(); ++i)
    if (!(one_part[size_t(i)] == o.one_part[size_t(i)] &&
          pi_part[size_t(i)] == o.pi_part[size_t(i)]))
      return false;
  return true;
}

TransVector TransVector::operator+(const TransVector& o) const {
  if (size() != o.size()) throw InvalidInput("mismatched vector lengths");
  TransVector r = *this;
  for (int i = 0; i < size(); ++i) {
    r.one_part[size_t(i)] = r.one_part[size_t(i)] + o.one_part[size_t(i)];
    r.pi_part[size_t(i)] = r.pi_part[size_t(i)] + o.pi_part[size_t(i)];
  }
  return r;
}

TransVector TransVector::operator-(const TransVector& o) const {
  if (size() != o.size()) throw InvalidInput("mismatched vector lengths");
  TransVector r = *this;
  for (int i = 0; i < size(); ++i) {
    r.one_part[size_t(i)] = r.one_part[size_t(i)] - o.one_part[size_t(i)];
    r.pi_part[size_t(i)] = r.pi_part[size_t(i)] - o.pi_part[size_t(i)];
  }
  return r;
}

TransVector TransVector::scaled(const NFElement& s) const {
  TransVector r = *this;
  for (int i = 0; i < size(); ++i) {
    r.one_part[size_t(i)] = r.one_part[size_t(i)] * s;
    r.pi_part[size_t(i)] = r.pi_part[size_t(i)] * s;
  }
  return r;
}

TransVector apply(const RatMatrix& m, const TransVector& v) {
  if (v.size() == 0) return v;
  FieldPtr f = v.one_part[0].field();
  return apply(NFMatrix::from_rational(f, m), v);
}

TransVector apply(const NFMatrix& m, const TransVector& v) {
  return TransVector(m * v.one_part, m * v.pi_part);
}

NFVector doubled(const TransVector& v) {
  NFVector r = v.one_part;
  r.insert(r.end(), v.pi_part.begin(), v.pi_part.end());
  return r;
}

RatMatrix rational_coordinate_rows(const TransVector& v) {
  RatMatrix ones = rational_coordinate_rows(v.one_part);
  RatMatrix pis = rational_coordinate_rows(v.pi_part);
  RatMatrix r(ones.rows() + pis.rows(), ones.cols());
  for (int i = 0; i < ones.rows(); ++i)
    for (int j = 0; j < ones.cols(); ++j) r.at(i, j) = ones.at(i, j);
  for (int i = 0; i < pis.rows(); ++i)
    for (int j = 0; j < pis.cols(); ++j) r.at(ones.rows() + i, j) = pis.at(i, j);
  return r;
}

}  // namespace lcp
