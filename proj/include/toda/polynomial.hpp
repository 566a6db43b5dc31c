#ifndef TODA_POLYNOMIAL_HPP
#define TODA_POLYNOMIAL_HPP

// Polynomials in a_0, a_1, ... with integer coefficients, stored as a map from
// exponent vectors to coefficients. Used for the symbolic checks on moments
// and tau functions.

#include "toda/arith.hpp"

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace toda {

/// Exponents of a_0, a_1, ...; trailing zeros are trimmed.
using Exponents = std::vector<unsigned>;

class Polynomial {
 public:
  Polynomial() = default;

  static Polynomial constant(const Integer& c);
  static Polynomial variable(std::size_t index);
  static Polynomial monomial(Exponents exponents, const Integer& c = 1);

  const std::map<Exponents, Integer>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  bool is_homogeneous(unsigned degree) const;
  bool has_positive_coefficients() const;
  Rational evaluate(std::span<const Rational> values) const;

  /// e.g. "a0^2*a1 + 2*a0*a2"; "0" for the zero polynomial.
  std::string to_string() const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  bool operator==(const Polynomial&) const = default;

 private:
  void add_term(Exponents exponents, const Integer& c);

  std::map<Exponents, Integer> terms_;
};

/// Total degree of a monomial.
unsigned degree(const Exponents& exponents);

/// f^(0)_n as a polynomial, by the nested sum.
Polynomial symbolic_moment(std::size_t n);

/// tau^(t)_n as a polynomial: sum over P(t,n) of the family monomials.
Polynomial symbolic_tau_gv(std::size_t t, std::size_t n);

/// tau^(t)_n as a polynomial: cofactor expansion of det(f_{t+j+k}) over
/// symbolic moments. Subtractions happen; cancellation is exact.
Polynomial symbolic_tau_hankel(std::size_t t, std::size_t n);

}  // namespace toda

#endif  // TODA_POLYNOMIAL_HPP
