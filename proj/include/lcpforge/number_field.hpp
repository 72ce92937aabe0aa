#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lcpforge/interval.hpp"
#include "lcpforge/poly.hpp"
#include "lcpforge/roots.hpp"

namespace lcp {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

/// Q[x]/(P) for monic irreducible P, together with one distinguished complex
/// embedding pinned by an isolating box. All arithmetic is exact in the power
/// basis; the box only enters when a sign or a numeric enclosure is needed,
/// and then every answer is certified by refinement.
class NumberField {
 public:
  /// Validates irreducibility and replaces `root` by the canonical isolating
  /// box it selects. Rejects a box that fails to single out one root (a root
  /// on the box boundary cannot be disambiguated; pass a fatter box).
  static FieldPtr create(PolyZ min_poly, const RootBox& root);
  static FieldPtr create(PolyZ min_poly, const RatInterval& real_root);
  static FieldPtr rationals();
  /// Q(sqrt(n)) with the positive embedding; n a positive non-square.
  static FieldPtr real_quadratic(const Int& n);

  int degree() const { return min_.degree(); }
  const PolyZ& min_poly() const { return min_; }
  bool is_real() const { return root_.is_real; }
  /// Enclosure of the distinguished root no wider than `width`.
  RootBox root_box(const Rat& width) const;

 private:
  NumberField() = default;
  PolyZ min_;
  mutable RootBox root_;  // cached, refined on demand
};

/// True when both handles denote the same field with the same embedding
/// (pointer identity, or equal minimal polynomial and certified equal root).
bool same_field(const FieldPtr& a, const FieldPtr& b);

/// Element in the power basis 1, theta, ..., theta^(d-1). Elements of
/// different fields never mix, except that plain rationals promote.
class NFElement {
 public:
  NFElement();  // rational zero
  NFElement(FieldPtr field, std::vector<Rat> coords);
  NFElement(FieldPtr field, const Rat& value);
  static NFElement theta(const FieldPtr& field);

  const FieldPtr& field() const { return field_; }
  const std::vector<Rat>& coords() const { return c_; }
  Rat coord(int i) const { return i >= 0 && i < int(c_.size()) ? c_[i] : Rat(0); }
  bool is_zero() const;
  bool is_rational() const;
  Rat rational_value() const;  // requires is_rational

  bool operator==(const NFElement& o) const;
  NFElement operator-() const;
  NFElement operator+(const NFElement& o) const;
  NFElement operator-(const NFElement& o) const;
  NFElement operator*(const NFElement& o) const;
  NFElement operator/(const NFElement& o) const;
  NFElement inverse() const;
  NFElement pow(long k) const;

  /// Exact sign under the distinguished embedding (real fields only).
  int sign() const;
  /// Enclosure of the embedded value, at most `width` wide (real fields).
  RatInterval enclosure(const Rat& width) const;
  ComplexBox complex_enclosure(const Rat& width) const;

  std::string to_string() const;

 private:
  FieldPtr field_;
  std::vector<Rat> c_;
};

NFElement operator*(const Rat& s, const NFElement& x);

/// Exact square root inside the field when one exists: rational arguments and
/// quadratic fields are decided completely; higher degrees return nullopt.
std::optional<NFElement> sqrt_in_field(const NFElement& x);

/// sqrt of a nonnegative rational when it is again rational.
std::optional<Rat> rational_sqrt(const Rat& x);

}  // namespace lcp
