#include "toda/lattice.hpp"

#include <cassert>

namespace toda {

InitialDataDiscrete::InitialDataDiscrete(std::vector<Rational> values) : values_(std::move(values)) {
  if (values_.empty()) {
    throw InputError("initial data must contain at least one value");
  }
  for (auto& v : values_) {
    v.canonicalize();
    if (sgn(v) <= 0) {
      throw InputError("initial values must be positive");
    }
  }
}

const Rational& InitialDataDiscrete::operator[](std::size_t k) const {
  if (k >= values_.size()) {
    throw DataExhaustedError("a_" + std::to_string(k) + " needed but only " +
                             std::to_string(values_.size()) + " initial values given");
  }
  return values_[k];
}

InitialDataUltra::InitialDataUltra(std::vector<Integer> values) : values_(std::move(values)) {
  if (values_.empty()) {
    throw InputError("initial data must contain at least one value");
  }
}

const Integer& InitialDataUltra::operator[](std::size_t k) const {
  if (k >= values_.size()) {
    throw DataExhaustedError("A_" + std::to_string(k) + " needed but only " +
                             std::to_string(values_.size()) + " initial values given");
  }
  return values_[k];
}

std::size_t q_site_count(std::size_t data_size, std::size_t t) {
  return t + 1 <= data_size ? (data_size - t - 1) / 2 + 1 : 0;
}

std::size_t e_site_count(std::size_t data_size, std::size_t t) {
  return t + 2 <= data_size ? (data_size - t - 2) / 2 + 1 : 0;
}

std::size_t tau_site_count(std::size_t data_size, std::size_t t) {
  return 1 + (t <= data_size + 2 ? (data_size + 2 - t) / 2 : 0);
}

std::size_t clip_time(std::size_t data_size, std::size_t requested) {
  return data_size == 0 ? 0 : std::min(requested, data_size - 1);
}

namespace {

template <class Field, class Data>
Field initial_slice(const Data& a, std::size_t t_max) {
  Field field(a.size(), clip_time(a.size(), t_max));
  for (std::size_t n = 0; n < field.q_sites(0); ++n) {
    field.set_q(0, n, a[2 * n]);
  }
  for (std::size_t n = 0; n < field.e_sites(0); ++n) {
    field.set_e(0, n + 1, a[2 * n + 1]);
  }
  return field;
}

}  // namespace

DiscreteField evolve_discrete(const InitialDataDiscrete& a, std::size_t t_max) {
  auto field = initial_slice<DiscreteField>(a, t_max);
  for (std::size_t t = 0; t < field.t_max(); ++t) {
    for (std::size_t n = 0; n < field.q_sites(t + 1); ++n) {
      // q^(t+1)_n + e^(t+1)_n = q^(t)_n + e^(t)_{n+1}
      Rational q_next = field.q(t, n) + field.e(t, n + 1) - field.e(t + 1, n);
      assert(sgn(q_next) > 0);
      field.set_q(t + 1, n, q_next);
      if (n < field.e_sites(t + 1)) {
        // q^(t+1)_n e^(t+1)_{n+1} = q^(t)_{n+1} e^(t)_{n+1}
        field.set_e(t + 1, n + 1, field.q(t, n + 1) * field.e(t, n + 1) / q_next);
      }
    }
  }
  return field;
}

UltraField evolve_ultra(const InitialDataUltra& a, std::size_t t_max) {
  auto field = initial_slice<UltraField>(a, t_max);
  for (std::size_t t = 0; t < field.t_max(); ++t) {
    Integer old_sum = 0;  // sum_{k<=n} Q^(t)_k
    Integer new_sum = 0;  // sum_{k<n} Q^(t+1)_k
    for (std::size_t n = 0; n < field.q_sites(t + 1); ++n) {
      old_sum += field.q(t, n);
      Integer q_next = old_sum - new_sum;
      if (field.e(t, n + 1) < q_next) {
        q_next = field.e(t, n + 1);
      }
      field.set_q(t + 1, n, q_next);
      if (n < field.e_sites(t + 1)) {
        field.set_e(t + 1, n + 1, field.q(t, n + 1) - q_next + field.e(t, n + 1));
      }
      new_sum += q_next;
    }
  }
  return field;
}

Rational bilinear_residual(const DiscreteTau& tau, std::size_t t, std::size_t n) {
  if (t == 0) {
    throw DomainError("bilinear residual needs t >= 1");
  }
  const Rational& mid = tau.at(t, n + 1);
  return tau.at(t + 1, n + 1) * tau.at(t - 1, n + 1) - tau.at(t + 1, n) * tau.at(t - 1, n + 2) -
         mid * mid;
}

Integer bilinear_residual(const UltraTau& tau, std::size_t t, std::size_t n) {
  if (t == 0) {
    throw DomainError("bilinear residual needs t >= 1");
  }
  Integer cross = tau.at(t + 1, n) + tau.at(t - 1, n + 2);
  Integer square = 2 * tau.at(t, n + 1);
  return tau.at(t + 1, n + 1) + tau.at(t - 1, n + 1) - (cross < square ? cross : square);
}

}  // namespace toda
