#include "lcpforge/rational.hpp"

namespace lcp {

Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw InvalidInput("empty rational literal");
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw InvalidInput("bad rational literal: " + s);
  q.canonicalize();
  return q;
}

std::string rat_to_string(const Rat& r) { return r.get_str(); }

Int common_denominator(const std::vector<Rat>& v) {
  Int d = 1;
  for (const auto& r : v) {
    Int l;
    mpz_lcm(l.get_mpz_t(), d.get_mpz_t(), r.get_den().get_mpz_t());
    d = l;
  }
  return d;
}

double to_double(const Rat& r) { return r.get_d(); }

}  // namespace lcp
