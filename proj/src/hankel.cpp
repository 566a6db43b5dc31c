#include "toda/hankel.hpp"

namespace toda {

Integer bareiss_determinant(DenseMatrix<Integer> m) {
  const std::size_t n = m.size();
  if (n == 0) {
    return 1;
  }
  Integer previous_pivot = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m(swap, k) == 0) {
        ++swap;
      }
      if (swap == n) {
        return 0;
      }
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(m(k, c), m(swap, c));
      }
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), num.get_mpz_t(), previous_pivot.get_mpz_t());
      }
    }
    previous_pivot = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

Rational determinant(const DenseMatrix<Rational>& m) {
  const std::size_t n = m.size();
  Integer scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), m(i, j).get_den_mpz_t());
    }
  }
  DenseMatrix<Integer> scaled(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      scaled(i, j) = m(i, j).get_num() * (scale / m(i, j).get_den());
    }
  }
  Integer scale_power;
  mpz_pow_ui(scale_power.get_mpz_t(), scale.get_mpz_t(), n);
  Rational det(bareiss_determinant(std::move(scaled)), scale_power);
  det.canonicalize();
  return det;
}

MomentSequence::MomentSequence(std::vector<Rational> values) : values_(std::move(values)) {
  if (values_.empty() || values_[0] != 1) {
    throw ContractViolation("moment sequences are normalized by f_0 = 1");
  }
}

const Rational& MomentSequence::operator[](std::size_t m) const {
  if (m >= values_.size()) {
    throw DataExhaustedError("moment f_" + std::to_string(m) + " needs " + std::to_string(m) +
                             " initial values, got " + std::to_string(values_.size() - 1));
  }
  return values_[m];
}

MomentSequence moments_table(const InitialDataDiscrete& a) {
  const std::size_t M = a.size();
  std::vector<Rational> f(M + 1);
  // heights never exceed M on a path of 2M steps
  std::vector<Rational> h(M + 2, Rational(0));
  h[0] = 1;
  f[0] = 1;
  for (std::size_t step = 1; step <= 2 * M; ++step) {
    std::vector<Rational> next(M + 2, Rational(0));
    for (std::size_t y = 0; y <= M; ++y) {
      if (sgn(h[y]) == 0) {
        continue;
      }
      if (y < M) {
        next[y + 1] += a[y] * h[y];
      }
      if (y > 0) {
        next[y - 1] += h[y];
      }
    }
    h = std::move(next);
    if (step % 2 == 0) {
      f[step / 2] = h[0];
    }
  }
  return MomentSequence(std::move(f));
}

DenseMatrix<Rational> hankel_matrix(const MomentSequence& f, std::size_t shift, std::size_t n) {
  DenseMatrix<Rational> m(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      m(j, k) = f[shift + j + k];
    }
  }
  return m;
}

Rational tau_hankel(const MomentSequence& f, std::size_t t, std::size_t n) {
  if (n == 0) {
    return 1;
  }
  return determinant(hankel_matrix(f, t, n));
}

Rational tau_hankel(const InitialDataDiscrete& a, std::size_t t, std::size_t n) {
  return tau_hankel(moments_table(a), t, n);
}

DiscreteTau hankel_tau_table(const InitialDataDiscrete& a, std::size_t t_last) {
  const MomentSequence f = moments_table(a);
  return DiscreteTau::tabulate(a.size(), t_last,
                               [&](std::size_t t, std::size_t n) { return tau_hankel(f, t, n); });
}

std::pair<Rational, Rational> shifted_hankel_check(const InitialDataDiscrete& a, std::size_t n) {
  if (2 * n + 2 > a.size()) {
    throw DataExhaustedError("shifted Hankel check at n = " + std::to_string(n) + " needs " +
                             std::to_string(2 * n + 2) + " initial values");
  }
  const MomentSequence f = moments_table(a);
  auto delta = [&](std::size_t size) { return tau_hankel(f, 0, size); };
  auto delta_shifted = [&](std::size_t size) { return tau_hankel(f, 1, size); };
  const Rational d_n = delta(n);
  const Rational d_n1 = delta(n + 1);
  const Rational d_n2 = delta(n + 2);
  const Rational s_n = delta_shifted(n);
  const Rational s_n1 = delta_shifted(n + 1);
  if (sgn(d_n1) == 0 || sgn(s_n) == 0 || sgn(s_n1) == 0) {
    throw ContractViolation("degenerate Hankel determinant in shifted check");
  }
  return {s_n1 * d_n / (s_n * d_n1), s_n * d_n2 / (s_n1 * d_n1)};
}

DiscreteField solve_ivp_discrete(const InitialDataDiscrete& a, std::size_t t_max) {
  const std::size_t horizon = clip_time(a.size(), t_max);
  return qe_from_tau(hankel_tau_table(a, horizon + 1));
}

}  // namespace toda
