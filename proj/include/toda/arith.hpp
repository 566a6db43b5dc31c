#ifndef TODA_ARITH_HPP
#define TODA_ARITH_HPP

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace toda {

using Rational = mpq_class;
using Integer = mpz_class;

// Error taxonomy shared by every module. The CLI maps these onto exit codes.

/// Malformed or rejected input (non-positive discrete data, bad literal).
struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A quantity needs more initial values than were supplied.
struct DataExhaustedError : std::out_of_range {
  using std::out_of_range::out_of_range;
};

/// Index outside the stored trapezoidal domain.
struct DomainError : std::out_of_range {
  using std::out_of_range::out_of_range;
};

/// Enumeration would exceed its configured cap.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Argument violates a documented precondition (wrong object kind, bad table).
struct ContractViolation : std::logic_error {
  using std::logic_error::logic_error;
};

/// Parses "p/q" or an integer literal. Accepts U+2212 as a minus sign.
Rational parse_rational(std::string_view text);

/// Parses a decimal integer literal. Accepts U+2212 as a minus sign.
Integer parse_integer(std::string_view text);

/// Canonical GMP text: "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

/// Exact binomial coefficient; zero when k > n.
Integer binomial(unsigned long n, unsigned long k);

/// Catalan number C_n.
Integer catalan(unsigned long n);

/// Multiplicative structure of a tau function: the discrete side composes by
/// products and ratios, the ultradiscrete side by sums and differences.
template <class Scalar>
struct TauOps;

template <>
struct TauOps<Rational> {
  static Rational unit() { return Rational(1); }
  static Rational combine(const Rational& x, const Rational& y) { return x * y; }
  static Rational remove(const Rational& x, const Rational& y) {
    if (sgn(y) == 0) {
      throw ContractViolation("zero tau value in a ratio");
    }
    return x / y;
  }
};

template <>
struct TauOps<Integer> {
  static Integer unit() { return Integer(0); }
  static Integer combine(const Integer& x, const Integer& y) { return x + y; }
  static Integer remove(const Integer& x, const Integer& y) { return x - y; }
};

}  // namespace toda

#endif  // TODA_ARITH_HPP
