#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lcpforge/matrix.hpp"
#include "lcpforge/rational.hpp"

namespace lcp {

class PolyQ;

/// Polynomial with integer coefficients, stored low degree first with no
/// trailing zeros (the zero polynomial has an empty coefficient vector).
class PolyZ {
 public:
  PolyZ() = default;
  PolyZ(std::initializer_list<long> coeffs);
  explicit PolyZ(std::vector<Int> coeffs);

  static PolyZ x_power(int k);

  int degree() const { return int(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Int>& coeffs() const { return c_; }
  Int coeff(int i) const { return i >= 0 && i < int(c_.size()) ? c_[i] : Int(0); }
  Int lc() const { return c_.empty() ? Int(0) : c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  bool operator==(const PolyZ&) const = default;
  PolyZ operator+(const PolyZ& o) const;
  PolyZ operator-(const PolyZ& o) const;
  PolyZ operator*(const PolyZ& o) const;
  PolyZ operator-() const;
  PolyZ operator*(const Int& s) const;

  Int eval(const Int& x) const;
  Rat eval(const Rat& x) const;
  PolyZ derivative() const;

  /// gcd of coefficients (non-negative; 0 only for the zero polynomial).
  Int content() const;
  /// p / content, sign fixed so the leading coefficient is positive.
  PolyZ primitive_part() const;

  std::string to_string(const std::string& var = "x") const;

 private:
  void normalize();
  std::vector<Int> c_;
};

/// Polynomial with rational coefficients; same storage conventions as PolyZ.
class PolyQ {
 public:
  PolyQ() = default;
  explicit PolyQ(std::vector<Rat> coeffs);
  PolyQ(std::initializer_list<Rat> coeffs);

  int degree() const { return int(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat coeff(int i) const { return i >= 0 && i < int(c_.size()) ? c_[i] : Rat(0); }
  Rat lc() const { return c_.empty() ? Rat(0) : c_.back(); }

  bool operator==(const PolyQ&) const = default;
  PolyQ operator+(const PolyQ& o) const;
  PolyQ operator-(const PolyQ& o) const;
  PolyQ operator*(const PolyQ& o) const;
  PolyQ operator*(const Rat& s) const;
  PolyQ operator-() const;

  Rat eval(const Rat& x) const;
  PolyQ derivative() const;
  PolyQ monic() const;

  /// Quotient and remainder with deg rem < deg divisor.
  std::pair<PolyQ, PolyQ> divmod(const PolyQ& divisor) const;

  std::string to_string(const std::string& var = "x") const;

 private:
  void normalize();
  std::vector<Rat> c_;
};

PolyQ to_polyq(const PolyZ& p);
/// Conversion back to integer coefficients; nullopt when any is fractional.
std::optional<PolyZ> to_polyz(const PolyQ& p);

/// Exact division over Z; nullopt when b does not divide a.
std::optional<PolyZ> divide_exact(const PolyZ& a, const PolyZ& b);

/// Monic gcd over Q.
PolyQ gcd_q(PolyQ a, PolyQ b);
/// Primitive gcd over Z with positive leading coefficient.
PolyZ gcd_z(const PolyZ& a, const PolyZ& b);

/// Yun decomposition: p = content * prod(part_i ^ i), parts squarefree,
/// pairwise coprime, primitive with positive leading coefficient.
struct SquarefreePart {
  PolyZ poly;
  int multiplicity;
};
std::vector<SquarefreePart> squarefree_decomposition(const PolyZ& p);
PolyZ squarefree_part(const PolyZ& p);

/// Complete factorization over Z into irreducible primitive factors with
/// positive leading coefficients: input = content * prod(factor^multiplicity).
struct FactorizationZ {
  Int content;
  std::vector<std::pair<PolyZ, int>> factors;  // sorted for determinism
  PolyZ expand() const;
};
FactorizationZ factor_over_Z(const PolyZ& p);

Int resultant(const PolyZ& a, const PolyZ& b);

/// Polynomial of degree d^2 whose roots are all pairwise products r_i * r_j
/// of roots of p (with multiplicity). Requires p(0) != 0. For real-coefficient
/// p this polynomial carries every squared root modulus |r|^2 = r * conj(r).
PolyZ root_product_poly(const PolyZ& p);

/// k such that f is the k-th cyclotomic polynomial, or nullopt.
std::optional<int> cyclotomic_order(const PolyZ& f);

/// Sturm chain of a squarefree rational polynomial.
class SturmSequence {
 public:
  explicit SturmSequence(const PolyQ& p);
  /// Number of distinct real roots in (a, b], requires p(a) != 0 and p(b) != 0.
  int count_roots(const Rat& a, const Rat& b) const;
  int variations(const Rat& x) const;
  int variations_at_plus_inf() const;
  int variations_at_minus_inf() const;

 private:
  std::vector<PolyQ> seq_;
};

/// Strict bound B with every complex root of p inside |z| < B.
Rat cauchy_root_bound(const PolyZ& p);

/// Characteristic polynomial det(xI - A), monic. Over Q for rational input;
/// integer coefficients whenever A is integral.
PolyQ char_poly(const RatMatrix& a);
/// char_poly with the integrality of A (and hence of the result) enforced.
PolyZ char_poly_z(const RatMatrix& a);

/// Monic minimal polynomial of A over Q.
PolyQ min_poly(const RatMatrix& a);
PolyZ min_poly_z(const RatMatrix& a);

/// Multiplicative order of an integer matrix with |det| = 1, nullopt when the
/// order is infinite. The finite result k is verified by computing A^k = I.
std::optional<unsigned long> matrix_order(const RatMatrix& a);

/// p(A) by Horner evaluation.
RatMatrix apply_poly(const PolyQ& p, const RatMatrix& a);
RatMatrix apply_poly(const PolyZ& p, const RatMatrix& a);

}  // namespace lcp
