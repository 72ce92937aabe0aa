#include "lcpforge/lattice.hpp"

#include "lcpforge/normal_form.hpp"

namespace lcp {

Lattice Lattice::from_generators(const RatMatrix& generators) {
  HermiteForm hf = hnf(generators);
  int r = 0;
  for (int i = 0; i < hf.h.rows(); ++i) {
    bool zero = true;
    for (int j = 0; j < hf.h.cols() && zero; ++j) zero = hf.h.at(i, j) == 0;
    if (!zero) ++r;
  }
  Lattice l;
  l.basis_ = RatMatrix(r, hf.h.cols());
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < hf.h.cols(); ++j) l.basis_.at(i, j) = hf.h.at(i, j);
  return l;
}

Lattice Lattice::standard(int n) {
  Lattice l;
  l.basis_ = RatMatrix::identity(n);
  return l;
}

std::optional<std::vector<Rat>> Lattice::coordinates(const std::vector<Rat>& v) const {
  if (int(v.size()) != ambient_dim()) throw InvalidInput("lattice/vector dimension mismatch");
  // v = sum x_i * row_i  <=>  basis^T x = v
  return basis_.transpose().solve(v);
}

bool Lattice::contains(const std::vector<Rat>& v) const {
  auto c = coordinates(v);
  if (!c) return false;
  for (const auto& x : *c)
    if (!is_integer(x)) return false;
  return true;
}

bool Lattice::contains_lattice(const Lattice& sub) const {
  for (int i = 0; i < sub.basis_.rows(); ++i)
    if (!contains(sub.basis_.row(i))) return false;
  return true;
}

Int Lattice::index_of(const Lattice& sub) const {
  if (sub.rank() != rank()) throw InvalidInput("lattice index needs equal ranks");
  if (!contains_lattice(sub)) throw InvalidInput("lattice index needs containment");
  RatMatrix coords(rank(), rank());
  for (int i = 0; i < sub.basis_.rows(); ++i) {
    auto c = coordinates(sub.basis_.row(i));
    for (int j = 0; j < rank(); ++j) coords.at(i, j) = (*c)[size_t(j)];
  }
  Rat d = coords.det();
  if (!is_integer(d)) throw Error("lattice index must be an integer");
  Int n = d.get_num();
  return n < 0 ? Int(-n) : n;
}

Lattice lattice_saturate(const RatMatrix& span_rows) {
  RatMatrix b = clear_denominators(span_rows);
  // x lies in the row span of b iff x is orthogonal to ker(y -> By).
  RatMatrix k = clear_denominators(b.right_kernel().transpose());
  RatMatrix sat = integer_kernel(k);
  return Lattice::from_generators(sat.transpose());
}

unsigned long quotient_order(const Lattice& sub, const Lattice& super,
                             const std::vector<Rat>& gamma) {
  if (sub.rank() != super.rank() || !super.contains_lattice(sub))
    throw InvalidInput("quotient_order needs sub within super at equal rank");
  if (!super.contains(gamma)) throw InvalidInput("quotient_order: element outside super lattice");
  auto c = sub.coordinates(gamma);
  if (!c) throw InvalidInput("quotient_order: element outside the common span");
  Int d = common_denominator(*c);
  if (!d.fits_ulong_p()) throw Unsupported("quotient order exceeds machine range");
  return d.get_ui();
}

}  // namespace lcp
