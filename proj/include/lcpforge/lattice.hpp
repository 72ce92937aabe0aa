#pragma once

#include <optional>

#include "lcpforge/matrix.hpp"

namespace lcp {

/// Finitely generated subgroup of Z^n, stored as a canonical row-style HNF
/// basis (one row per basis vector, zero rows dropped).
class Lattice {
 public:
  Lattice() = default;
  /// Builds the lattice generated by the (integer) rows of `generators`.
  static Lattice from_generators(const RatMatrix& generators);
  static Lattice standard(int n);  // Z^n

  const RatMatrix& basis() const { return basis_; }
  int rank() const { return basis_.rows(); }
  int ambient_dim() const { return basis_.cols(); }

  bool operator==(const Lattice& o) const = default;

  /// Rational coordinates of v in the basis, or nullopt when v is outside the
  /// rational span.
  std::optional<std::vector<Rat>> coordinates(const std::vector<Rat>& v) const;
  bool contains(const std::vector<Rat>& v) const;
  bool contains_lattice(const Lattice& sub) const;

  /// Group index [this : sub]; requires sub within this lattice at equal rank.
  Int index_of(const Lattice& sub) const;

 private:
  RatMatrix basis_;  // HNF rows
};

/// Saturation: Z^n intersected with the rational row span of `span_rows`.
Lattice lattice_saturate(const RatMatrix& span_rows);

/// Order of gamma + sub in super/sub: least r >= 1 with r*gamma in sub.
/// Requires sub within super at equal (full) rank and gamma in super.
unsigned long quotient_order(const Lattice& sub, const Lattice& super,
                             const std::vector<Rat>& gamma);

}  // namespace lcp
