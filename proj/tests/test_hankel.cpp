#include "oracles.hpp"

#include "toda/hankel.hpp"
#include "toda/paths.hpp"

#include <doctest.h>

using namespace toda;

namespace {

InitialDataDiscrete discrete(std::initializer_list<long> values) {
  std::vector<Rational> v;
  for (long x : values) {
    v.emplace_back(x);
  }
  return InitialDataDiscrete(std::move(v));
}

template <class Scalar>
std::vector<std::vector<Scalar>> rows_of(const DenseMatrix<Scalar>& m) {
  std::vector<std::vector<Scalar>> rows(m.size(), std::vector<Scalar>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      rows[i][j] = m(i, j);
    }
  }
  return rows;
}

}  // namespace

TEST_CASE("Bareiss determinant matches Leibniz expansion") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = rng() % 6;
    DenseMatrix<Integer> m(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        // many zeros to force pivoting
        m(i, j) = (rng() % 3 == 0) ? 0 : static_cast<long>(rng() % 21) - 10;
      }
    }
    CHECK(bareiss_determinant(m) == oracle::leibniz(rows_of(m)));
  }
  DenseMatrix<Integer> singular(3);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      singular(i, j) = static_cast<long>(i + j);
    }
  }
  CHECK(bareiss_determinant(singular) == 0);
  DenseMatrix<Integer> swap(2);
  swap(0, 1) = 1;
  swap(1, 0) = 1;
  CHECK(bareiss_determinant(swap) == -1);
}

TEST_CASE("rational determinant matches Leibniz expansion") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = rng() % 5;
    DenseMatrix<Rational> m(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Rational r(static_cast<long>(rng() % 13) - 6, static_cast<long>(1 + rng() % 7));
        r.canonicalize();
        m(i, j) = r;
      }
    }
    CHECK(determinant(m) == oracle::leibniz(rows_of(m)));
  }
}

TEST_CASE("moment table") {
  const auto f = moments_table(discrete({5, 2, 3}));
  REQUIRE(f.size() == 4);
  CHECK(f[0] == 1);
  CHECK(f[1] == 5);
  CHECK_THROWS_AS(f[4], DataExhaustedError);
  const auto catalan_moments = moments_table(discrete({1, 1, 1, 1, 1, 1}));
  CHECK(std::vector<Rational>(catalan_moments.values().begin(), catalan_moments.values().end()) ==
        std::vector<Rational>{1, 1, 2, 5, 14, 42, 132});
  CHECK(moments_table(discrete({2, 1}))[2] == 6);
  CHECK_THROWS_AS(MomentSequence({Rational(2)}), ContractViolation);

  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 5; ++trial) {
    const InitialDataDiscrete a(oracle::random_rationals(rng, 1 + rng() % 12));
    const auto g = moments_table(a);
    for (std::size_t m = 0; m <= std::min<std::size_t>(a.size(), 8); ++m) {
      CHECK(g[m] == moment_f0(a, m));
    }
  }
}

TEST_CASE("Hankel matrix layout") {
  const auto f = moments_table(discrete({1, 2, 3, 4, 5, 6}));
  const auto h = hankel_matrix(f, 2, 3);
  for (std::size_t j = 0; j < 3; ++j) {
    for (std::size_t k = 0; k < 3; ++k) {
      CHECK(h(j, k) == f[2 + j + k]);
      CHECK(h(j, k) == h(k, j));
    }
  }
}

TEST_CASE("tau by Hankel determinants") {
  const auto a = discrete({1, 2, 3});
  CHECK(tau_hankel(a, 5, 0) == 1);
  CHECK(tau_hankel(a, 1, 2) == 6);
  CHECK_THROWS_AS(tau_hankel(a, 2, 2), DataExhaustedError);

  const auto f = moments_table(a);
  for (std::size_t t = 0; t <= 3; ++t) {
    CHECK(tau_hankel(a, t, 1) == f[t]);
  }

  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 10; ++trial) {
    const InitialDataDiscrete b(oracle::random_rationals(rng, 8 + rng() % 5));
    for (std::size_t t = 0; t <= 4; ++t) {
      for (std::size_t n = 0; n <= 3; ++n) {
        const Rational det = tau_hankel(b, t, n);
        CHECK(det > 0);
        CHECK(det == tau_gv(b, t, n));
      }
    }
  }
}

TEST_CASE("shifted determinants recover the initial data") {
  const auto pair0 = shifted_hankel_check(discrete({3, 7}), 0);
  CHECK(pair0.first == 3);
  CHECK(pair0.second == 7);
  const auto pair1 = shifted_hankel_check(discrete({1, 1, 1, 1}), 1);
  CHECK(pair1.first == 1);
  CHECK(pair1.second == 1);
  CHECK_THROWS_AS(shifted_hankel_check(discrete({1, 1, 1}), 1), DataExhaustedError);

  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 10; ++trial) {
    const auto values = oracle::random_rationals(rng, 1 + rng() % 12);
    const InitialDataDiscrete a(values);
    for (std::size_t n = 0; 2 * n + 2 <= values.size(); ++n) {
      const auto [even, odd] = shifted_hankel_check(a, n);
      CHECK(even == values[2 * n]);
      CHECK(odd == values[2 * n + 1]);
    }
  }
}

TEST_CASE("determinant route solves the initial value problem") {
  const auto ones = solve_ivp_discrete(discrete({1, 1, 1, 1, 1}), 4);
  CHECK(ones.q(1, 0) == 2);
  CHECK(ones.e(1, 1) == Rational(1, 2));
  const auto small = solve_ivp_discrete(discrete({1, 2, 3}), 1);
  CHECK(small.q(1, 0) == 3);
  CHECK(small.e(1, 1) == 2);

  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 20; ++trial) {
    const auto values = oracle::random_rationals(rng, 1 + trial % 12);
    const InitialDataDiscrete a(values);
    const auto field = solve_ivp_discrete(a, 100);
    CHECK(field == evolve_discrete(a, 100));
    for (std::size_t n = 0; n < field.q_sites(0); ++n) {
      CHECK(field.q(0, n) == values[2 * n]);
    }
    const auto tau = hankel_tau_table(a, field.t_max() + 1);
    CHECK(tau == tau_from_field(field));
    for (const auto& [t, n] : bilinear_cells(tau)) {
      CHECK(bilinear_residual(tau, t, n) == 0);
    }
  }
}
