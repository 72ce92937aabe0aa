#pragma once

#include "lcpforge/matrix.hpp"
#include "lcpforge/number_field.hpp"

namespace lcp {

using NFVector = std::vector<NFElement>;

/// Dense matrix over one number field, with exact Gaussian elimination.
class NFMatrix {
 public:
  NFMatrix() : rows_(0), cols_(0) {}
  NFMatrix(FieldPtr field, int rows, int cols);
  static NFMatrix identity(const FieldPtr& field, int n);
  static NFMatrix from_rational(const FieldPtr& field, const RatMatrix& m);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const FieldPtr& field() const { return field_; }
  NFElement& at(int i, int j) { return e_[size_t(i) * size_t(cols_) + size_t(j)]; }
  const NFElement& at(int i, int j) const { return e_[size_t(i) * size_t(cols_) + size_t(j)]; }

  bool operator==(const NFMatrix& o) const;
  NFMatrix operator+(const NFMatrix& o) const;
  NFMatrix operator-(const NFMatrix& o) const;
  NFMatrix operator*(const NFMatrix& o) const;
  NFVector operator*(const NFVector& v) const;
  NFMatrix scaled(const NFElement& s) const;
  NFMatrix transpose() const;

  bool is_zero() const;
  bool is_identity() const;
  /// Entries as rationals when none involves the generator.
  std::optional<RatMatrix> to_rational() const;

  NFMatrix rref(std::vector<int>* pivot_cols = nullptr) const;
  int rank() const;
  NFElement det() const;
  NFMatrix inverse() const;
  /// Basis of the right kernel, one vector per column of the result.
  std::vector<NFVector> right_kernel() const;
  /// One solution of (*this) x = b, or nullopt when inconsistent.
  std::optional<NFVector> solve(const NFVector& b) const;

 private:
  FieldPtr field_;
  int rows_, cols_;
  std::vector<NFElement> e_;
};

/// Columns stacked side by side.
NFMatrix columns_to_matrix(const FieldPtr& field, const std::vector<NFVector>& cols);

/// d x n rational matrix whose row j holds the theta^j coordinate of every
/// entry — the rational shadow used to take rational spans of field vectors.
RatMatrix rational_coordinate_rows(const NFVector& v);

/// Vector over K + K*pi, the coefficient module for translation parts that
/// mix algebraic and transcendental constants. The transcendental never gets
/// inverted: all linear algebra happens on the doubled K-coordinates.
struct TransVector {
  NFVector one_part, pi_part;

  TransVector() = default;
  TransVector(NFVector ones, NFVector pis);
  /// Purely algebraic vector.
  static TransVector algebraic(NFVector ones);
  static TransVector zero(const FieldPtr& field, int n);

  int size() const { return int(one_part.size()); }
  bool is_zero() const;
  bool operator==(const TransVector& o) const;
  TransVector operator+(const TransVector& o) const;
  TransVector operator-(const TransVector& o) const;
  TransVector scaled(const NFElement& s) const;
};

/// Componentwise image under a rational matrix (acts on both parts).
TransVector apply(const RatMatrix& m, const TransVector& v);
TransVector apply(const NFMatrix& m, const TransVector& v);

/// Doubled coordinates: (one_part, pi_part) stacked into K^(2n).
NFVector doubled(const TransVector& v);

/// 2d x n rational matrix: theta-coordinates of the 1-part rows, then of the
/// pi-part rows.
RatMatrix rational_coordinate_rows(const TransVector& v);

}  // namespace lcp
