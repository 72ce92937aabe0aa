#pragma once

#include "lcpforge/lattice.hpp"
#include "lcpforge/nf_linalg.hpp"
#include "lcpforge/roots.hpp"

namespace lcp {

/// A hypothesis of the main construction fails with an explicit witness.
struct NotAdmissible : Error {
  using Error::Error;
};
/// A restriction that was supposed to be a similarity is not one.
struct NotSimilarity : Error {
  using Error::Error;
};

// ---------------------------------------------------------------------------
// Linear-part structure
// ---------------------------------------------------------------------------

struct SemisimpleCheck {
  bool semisimple;
  PolyZ min_poly;
  PolyZ gcd_with_derivative;  // constant iff semisimple
};
/// Squarefree minimal polynomial test, with the gcd as witness.
SemisimpleCheck is_semisimple(const RatMatrix& a);

struct Block {
  RatMatrix matrix;   // integer matrix of the restriction in a saturated basis
  PolyZ char_factor;  // irreducible characteristic polynomial of the block
  int multiplicity;   // how many blocks its factor contributes in total
};

struct BlockDecomposition {
  RatMatrix change_of_basis;  // integer columns; conjugation block-diagonalizes
  std::vector<Block> blocks;
  /// change_of_basis * diag(blocks) * change_of_basis^{-1}.
  RatMatrix assemble() const;
};

/// Splits Z^p along the saturated kernels of the irreducible factors of the
/// characteristic polynomial, refining repeated factors into cyclic blocks.
/// Requires A in GL_p(Z) and semisimple.
BlockDecomposition block_decompose(const RatMatrix& a);

/// Roots of the squarefree characteristic polynomial grouped by exact modulus
/// (decided through the root-product polynomial), with factor membership.
struct ModulusClasses {
  PolyZ char_sqfree;
  std::vector<PolyZ> factors;  // irreducible, deterministic order
  std::vector<RootBox> roots;  // isolated roots of char_sqfree, refined
  std::vector<int> factor_of;  // factor index per root
  ModulusPartition partition;  // class ids and certified modulus enclosures
  std::vector<std::vector<int>> classes_of_factor;  // sorted class ids
  int class_count() const { return int(partition.class_modulus.size()); }
};

ModulusClasses modulus_classes(const RatMatrix& a,
                               const Rat& modulus_tol = Rat(1, 10000000000000L));

// ---------------------------------------------------------------------------
// Splittings
// ---------------------------------------------------------------------------

/// Direct decomposition R^p = E + E' carried by explicit spanning vectors.
/// Flat-part vectors may mix the field generator with the declared symbolic
/// transcendental; independence over R is then certified by treating that
/// constant as transcendental over the field.
struct Splitting {
  FieldPtr field;
  int p = 0;
  std::vector<TransVector> basis_flat;  // q vectors
  std::vector<TransVector> basis_rest;  // p - q vectors
  NFMatrix gram;                        // q x q symmetric positive definite

  int q() const { return int(basis_flat.size()); }
  bool pure_algebraic() const;  // no transcendental coefficients anywhere
};

/// Exact structural checks: dimensions, genuine direct decomposition, and a
/// certified positive-definite symmetric gram. Throws InvalidInput.
void validate_splitting(const Splitting& s);

/// Projector onto the flat part parallel to the rest. Defined for purely
/// algebraic splittings; idempotence is asserted.
NFMatrix splitting_projector(const Splitting& s);

/// Does m commute with the projector? Decided as exact invariance of both
/// subspaces, which is equivalent for a direct decomposition and also covers
/// splittings with transcendental coefficients.
bool commutant_check(const RatMatrix& m, const Splitting& s);

/// Flat subspace for one modulus class: the span of real and imaginary parts
/// of the class eigenvectors, with the complement assembled from the other
/// root subspaces. Throws NotAdmissible when some factor misses the class and
/// Unsupported outside the implemented field scope (degree > 2 host fields
/// with split classes, complex roots of factors of degree > 2).
Splitting flat_subspace(const RatMatrix& a, const ModulusClasses& mc, int class_id);

// ---------------------------------------------------------------------------
// Density through the rational hull
// ---------------------------------------------------------------------------

struct RationalHull {
  Lattice lattice;  // saturated: the smallest rational subspace containing V
  int dim = 0;
};

/// Smallest rational subspace containing the span, via the rational
/// coordinate rows of the vectors (field and transcendental coordinates are
/// Q-linearly independent directions).
RationalHull rational_hull(const std::vector<TransVector>& span);

/// Dense in the torus iff no proper rational subspace contains the span.
bool density_check(const std::vector<TransVector>& span, int ambient_dim);

// ---------------------------------------------------------------------------
// Similarity certificates
// ---------------------------------------------------------------------------

/// Matrix of m restricted to the flat part, in the flat basis (coordinates
/// over the field). Throws NotAdmissible when the flat part is not preserved.
NFMatrix restrict_to_flat(const RatMatrix& m, const Splitting& s);

struct Ratio {
  NFElement squared;            // exact rho^2 in the field
  std::optional<NFElement> exact;  // rho itself when the square root exists
  RatInterval enclosure;           // certified enclosure of rho, width <= tol
};

/// rho with RtGR = rho^2 G checked entrywise; throws NotSimilarity otherwise.
Ratio similarity_ratio(const RatMatrix& m, const Splitting& s,
                       const Rat& tol = Rat(1, 10000000000000L));

struct SimilarityCertificate {
  bool ok = false;
  std::string witness;        // failure description when !ok
  NFMatrix gram;              // the certified scalar product
  std::vector<Ratio> ratios;  // per generator, in input order
};

/// Verifies (or, with no gram supplied, declares the basis orthonormal and
/// then verifies) that every generator restricts to a similarity.
SimilarityCertificate similarity_certificate(const std::vector<RatMatrix>& generators,
                                             const Splitting& s,
                                             const std::optional<NFMatrix>& gram,
                                             const Rat& tol = Rat(1, 10000000000000L));

}  // namespace lcp
