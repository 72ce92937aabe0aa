#pragma once

#include <initializer_list>
#include <optional>
#include <vector>

#include "lcpforge/rational.hpp"

namespace lcp {

/// Dense matrix over the rationals. Row-major, exact arithmetic throughout.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(size_t(rows) * cols) {}
  RatMatrix(std::initializer_list<std::initializer_list<Rat>> init);

  static RatMatrix identity(int n);
  /// Parses nested lists of rational literals.
  static RatMatrix from_strings(const std::vector<std::vector<std::string>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rat& at(int i, int j) { return e_[size_t(i) * cols_ + j]; }
  const Rat& at(int i, int j) const { return e_[size_t(i) * cols_ + j]; }

  bool operator==(const RatMatrix& o) const = default;

  RatMatrix operator+(const RatMatrix& o) const;
  RatMatrix operator-(const RatMatrix& o) const;
  RatMatrix operator*(const RatMatrix& o) const;
  RatMatrix operator*(const Rat& s) const;
  std::vector<Rat> operator*(const std::vector<Rat>& v) const;
  RatMatrix transpose() const;

  bool is_zero() const;
  bool is_identity() const;
  bool is_integral() const;
  bool is_square() const { return rows_ == cols_; }

  Rat trace() const;
  Rat det() const;
  int rank() const;

  /// Inverse; throws InvalidInput on singular or non-square input.
  RatMatrix inverse() const;

  /// Basis of the right kernel {v : Mv = 0}, as matrix columns.
  RatMatrix right_kernel() const;

  /// One solution of Mx = b, or nullopt when inconsistent.
  std::optional<std::vector<Rat>> solve(const std::vector<Rat>& b) const;

  /// Reduced row echelon form; pivot column indices appended to `pivots` if given.
  RatMatrix rref(std::vector<int>* pivots = nullptr) const;

  std::vector<Rat> row(int i) const;
  std::vector<Rat> col(int j) const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rat> e_;
};

/// Scales the rows of M by the common denominator so every entry is integral.
RatMatrix clear_denominators(const RatMatrix& m);

RatMatrix matrix_power(const RatMatrix& a, unsigned long k);

}  // namespace lcp
