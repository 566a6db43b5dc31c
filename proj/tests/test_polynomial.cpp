#include "oracles.hpp"

#include "toda/hankel.hpp"
#include "toda/paths.hpp"
#include "toda/polynomial.hpp"

#include <doctest.h>

using namespace toda;

namespace {

Polynomial a(std::size_t i) { return Polynomial::variable(i); }

}  // namespace

TEST_CASE("polynomial arithmetic") {
  const Polynomial sum = a(0) + a(1);
  const Polynomial square = sum * sum;
  CHECK(square == a(0) * a(0) + Polynomial::constant(2) * a(0) * a(1) + a(1) * a(1));
  CHECK(square.is_homogeneous(2));
  CHECK_FALSE((square + a(2)).is_homogeneous(2));
  CHECK(square.has_positive_coefficients());
  CHECK_FALSE((square - a(2)).has_positive_coefficients());
  CHECK((square - square).is_zero());
  CHECK(Polynomial().to_string() == "0");
  CHECK(square.to_string() == "a0^2 + 2*a0*a1 + a1^2");
  CHECK(Polynomial::monomial({0, 0, 3}) == a(2) * a(2) * a(2));
  CHECK(degree({2, 0, 1}) == 3);
  const std::vector<Rational> values{Rational(1, 2), Rational(3)};
  CHECK(square.evaluate(values) == Rational(49, 4));
}

TEST_CASE("symbolic moments") {
  CHECK(symbolic_moment(0) == Polynomial::constant(1));
  CHECK(symbolic_moment(1) == a(0));
  CHECK(symbolic_moment(2) == a(0) * a(0) + a(0) * a(1));
  CHECK(symbolic_moment(3) == a(0) * a(0) * a(0) + Polynomial::constant(2) * a(0) * a(0) * a(1) +
                                  a(0) * a(1) * a(1) + a(0) * a(1) * a(2));
  for (std::size_t n = 0; n <= 7; ++n) {
    const auto f = symbolic_moment(n);
    CHECK(f.is_homogeneous(static_cast<unsigned>(n)));
    Integer total = 0;
    for (const auto& [exponents, c] : f.terms()) {
      total += c;
    }
    CHECK(total == catalan(n));
  }
}

TEST_CASE("symbolic tau: determinant expansion equals family sum") {
  CHECK(symbolic_tau_gv(1, 2) == a(0) * a(0) * a(1) * a(2));
  CHECK(symbolic_tau_hankel(1, 2) == a(0) * a(0) * a(1) * a(2));
  CHECK(symbolic_tau_hankel(4, 0) == Polynomial::constant(1));

  std::mt19937_64 rng(31);
  const auto values = oracle::random_rationals(rng, 8);
  const InitialDataDiscrete data(values);
  for (std::size_t t = 0; t <= 3; ++t) {
    for (std::size_t n = 0; n <= 3; ++n) {
      CAPTURE(t);
      CAPTURE(n);
      const auto det = symbolic_tau_hankel(t, n);
      CHECK(det == symbolic_tau_gv(t, n));
      CHECK(det.has_positive_coefficients());
      CHECK(det.is_homogeneous(static_cast<unsigned>(n * (t + n - 1))));
      CHECK(Integer(static_cast<unsigned long>(det.term_count())) <= count_families(t, n, false));
      CHECK(det.evaluate(values) == tau_hankel(data, t, n));
    }
  }
}
