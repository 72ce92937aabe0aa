#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace lcp {

using Int = mpz_class;
using Rat = mpq_class;

/// Base class for all input/usage errors raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input data (dimension mismatches, bad strings,
/// reducible field polynomials, ...).
struct InvalidInput : Error {
  using Error::Error;
};

/// Structurally valid input outside the implemented scope.
struct Unsupported : Error {
  using Error::Error;
};

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

/// Parses "123", "-4/5", "0" into a canonical rational.
Rat rat_from_string(const std::string& s);

/// Inverse of rat_from_string: "p/q" with q > 1 omitted when q == 1.
std::string rat_to_string(const Rat& r);

/// Least common multiple of the denominators (1 for an empty range).
Int common_denominator(const std::vector<Rat>& v);

double to_double(const Rat& r);

}  // namespace lcp
