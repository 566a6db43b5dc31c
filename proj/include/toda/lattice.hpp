#ifndef TODA_LATTICE_HPP
#define TODA_LATTICE_HPP

// Discrete and ultradiscrete Toda molecule on the finite domain supported by
// M initial values: field types, direct evolution, tau <-> field transforms
// and the bilinear residuals.

#include "toda/arith.hpp"

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace toda {

/// Positive rational initial values a_0..a_{M-1}; q^(0)_n = a_{2n},
/// e^(0)_{n+1} = a_{2n+1}.
class InitialDataDiscrete {
 public:
  /// Throws InputError when empty or when some value is not positive.
  explicit InitialDataDiscrete(std::vector<Rational> values);

  std::size_t size() const { return values_.size(); }
  const Rational& operator[](std::size_t k) const;
  std::span<const Rational> values() const { return values_; }

 private:
  std::vector<Rational> values_;
};

/// Integer initial values A_0..A_{M-1} of the ultradiscrete molecule.
class InitialDataUltra {
 public:
  /// Throws InputError when empty.
  explicit InitialDataUltra(std::vector<Integer> values);

  std::size_t size() const { return values_.size(); }
  const Integer& operator[](std::size_t k) const;
  std::span<const Integer> values() const { return values_; }

 private:
  std::vector<Integer> values_;
};

// Domain of dependence for M initial values. Moments f_m exist for m <= M, so
//   tau^(t)_n      needs t + 2n - 2 <= M  (n >= 1; n = 0 is the boundary)
//   q^(t)_n        needs t + 2n + 1 <= M
//   e^(t)_{n+1}    needs t + 2n + 2 <= M
// Cells outside are absent.

/// Number of q sites n at time t.
std::size_t q_site_count(std::size_t data_size, std::size_t t);
/// Number of e sites e_{n+1}, n >= 0, at time t (the fixed e_0 excluded).
std::size_t e_site_count(std::size_t data_size, std::size_t t);
/// Number of tau sites n >= 0 at time t, boundary n = 0 included.
std::size_t tau_site_count(std::size_t data_size, std::size_t t);
/// Requested horizon clipped to the last time with any field site (M - 1).
std::size_t clip_time(std::size_t data_size, std::size_t requested);

/// Field q^(t)_n, e^(t)_n (Scalar = Rational) or Q, E (Scalar = Integer) for
/// t = 0..t_max over the trapezoidal domain. e(t, 0) is the fixed boundary 0.
template <class Scalar>
class Field {
 public:
  Field(std::size_t data_size, std::size_t t_max)
      : data_size_(data_size), q_(t_max + 1), e_(t_max + 1) {
    for (std::size_t t = 0; t <= t_max; ++t) {
      q_[t].resize(q_site_count(data_size, t));
      e_[t].resize(e_site_count(data_size, t) + 1);
    }
  }

  std::size_t data_size() const { return data_size_; }
  std::size_t t_max() const { return q_.size() - 1; }
  std::size_t q_sites(std::size_t t) const { return t < q_.size() ? q_[t].size() : 0; }
  /// Stored e_{n+1} count at time t.
  std::size_t e_sites(std::size_t t) const { return t < e_.size() ? e_[t].size() - 1 : 0; }

  bool has_q(std::size_t t, std::size_t n) const { return n < q_sites(t); }
  bool has_e(std::size_t t, std::size_t n) const { return t < e_.size() && n < e_[t].size(); }

  const Scalar& q(std::size_t t, std::size_t n) const {
    if (!has_q(t, n)) {
      throw DomainError("q(" + std::to_string(t) + "," + std::to_string(n) + ") outside domain");
    }
    return q_[t][n];
  }
  const Scalar& e(std::size_t t, std::size_t n) const {
    if (!has_e(t, n)) {
      throw DomainError("e(" + std::to_string(t) + "," + std::to_string(n) + ") outside domain");
    }
    return e_[t][n];
  }

  void set_q(std::size_t t, std::size_t n, Scalar value) {
    static_cast<void>(q(t, n));
    q_[t][n] = std::move(value);
  }
  /// n >= 1; e_0 stays 0.
  void set_e(std::size_t t, std::size_t n, Scalar value) {
    if (n == 0) {
      throw DomainError("e(t,0) is the fixed boundary");
    }
    static_cast<void>(e(t, n));
    e_[t][n] = std::move(value);
  }

  bool operator==(const Field&) const = default;

 private:
  std::size_t data_size_;
  std::vector<std::vector<Scalar>> q_;
  std::vector<std::vector<Scalar>> e_;
};

using DiscreteField = Field<Rational>;
using UltraField = Field<Integer>;

/// tau^(t)_n (Rational) or T^(t)_n (Integer) for t = 0..t_last on the tau
/// domain of M initial values. Row n = 0 holds the boundary (1 resp. 0).
template <class Scalar>
class TauTable {
 public:
  TauTable(std::size_t data_size, std::size_t t_last)
      : data_size_(data_size), rows_(t_last + 1) {
    for (std::size_t t = 0; t <= t_last; ++t) {
      rows_[t].resize(tau_site_count(data_size, t));
      rows_[t][0] = TauOps<Scalar>::unit();
    }
  }

  /// Table whose interior cells are fn(t, n).
  template <class Fn>
  static TauTable tabulate(std::size_t data_size, std::size_t t_last, Fn&& fn) {
    TauTable table(data_size, t_last);
    for (std::size_t t = 0; t <= t_last; ++t) {
      for (std::size_t n = 1; n < table.sites(t); ++n) {
        table.rows_[t][n] = fn(t, n);
      }
    }
    return table;
  }

  std::size_t data_size() const { return data_size_; }
  std::size_t t_last() const { return rows_.size() - 1; }
  std::size_t sites(std::size_t t) const { return t < rows_.size() ? rows_[t].size() : 0; }
  bool contains(std::size_t t, std::size_t n) const { return n < sites(t); }

  const Scalar& at(std::size_t t, std::size_t n) const {
    if (!contains(t, n)) {
      throw DomainError("tau(" + std::to_string(t) + "," + std::to_string(n) + ") outside domain");
    }
    return rows_[t][n];
  }
  void set(std::size_t t, std::size_t n, Scalar value) {
    static_cast<void>(at(t, n));
    rows_[t][n] = std::move(value);
  }

  bool operator==(const TauTable&) const = default;

 private:
  std::size_t data_size_;
  std::vector<std::vector<Scalar>> rows_;
};

using DiscreteTau = TauTable<Rational>;
using UltraTau = TauTable<Integer>;

/// Direct evolution by the qd recurrences; t_max is clipped to M - 1.
DiscreteField evolve_discrete(const InitialDataDiscrete& a, std::size_t t_max);

/// Direct evolution by the min-plus recurrences; t_max is clipped to M - 1.
UltraField evolve_ultra(const InitialDataUltra& a, std::size_t t_max);

namespace detail {

inline void check_tau_value(const Rational& x) {
  if (sgn(x) == 0) {
    throw ContractViolation("tau table has a zero entry");
  }
}
inline void check_tau_value(const Integer&) {}

}  // namespace detail

/// Field recovered from a tau table,
///   q^(t)_n     = tau^(t+1)_{n+1} tau^(t)_n / (tau^(t+1)_n tau^(t)_{n+1}),
///   e^(t)_{n+1} = tau^(t+1)_n tau^(t)_{n+2} / (tau^(t+1)_{n+1} tau^(t)_{n+1}),
/// and its min-plus image (products -> sums, ratios -> differences) for
/// integer tables. The field covers t = 0..min(t_last - 1, M - 1).
template <class Scalar>
Field<Scalar> qe_from_tau(const TauTable<Scalar>& tau) {
  using Ops = TauOps<Scalar>;
  if (tau.t_last() < 1 || tau.data_size() == 0) {
    throw ContractViolation("tau table needs at least two rows and M >= 1");
  }
  for (std::size_t t = 0; t <= tau.t_last(); ++t) {
    if (tau.at(t, 0) != Ops::unit()) {
      throw ContractViolation("tau table boundary row n = 0 is not the unit");
    }
    for (std::size_t n = 0; n < tau.sites(t); ++n) {
      detail::check_tau_value(tau.at(t, n));
    }
  }
  Field<Scalar> field(tau.data_size(), std::min(tau.t_last() - 1, tau.data_size() - 1));
  for (std::size_t t = 0; t <= field.t_max(); ++t) {
    for (std::size_t n = 0; n < field.q_sites(t); ++n) {
      field.set_q(t, n,
                  Ops::remove(Ops::combine(tau.at(t + 1, n + 1), tau.at(t, n)),
                              Ops::combine(tau.at(t + 1, n), tau.at(t, n + 1))));
    }
    for (std::size_t n = 0; n < field.e_sites(t); ++n) {
      field.set_e(t, n + 1,
                  Ops::remove(Ops::combine(tau.at(t + 1, n), tau.at(t, n + 2)),
                              Ops::combine(tau.at(t + 1, n + 1), tau.at(t, n + 1))));
    }
  }
  return field;
}

/// Tau table (rows 0..t_max+1) reconstructed from a field by integrating the
/// ratios r^(t)_n = tau^(t)_{n+1} / tau^(t)_n:
///   r^(0)_{n+1} = e^(0)_{n+1} q^(0)_n r^(0)_n,  r^(t+1)_n = q^(t)_n r^(t)_n.
template <class Scalar>
TauTable<Scalar> tau_from_field(const Field<Scalar>& field) {
  using Ops = TauOps<Scalar>;
  const std::size_t M = field.data_size();
  const std::size_t t_last = field.t_max() + 1;
  std::vector<Scalar> ratios(tau_site_count(M, 0) - 1);
  if (!ratios.empty()) {
    ratios[0] = Ops::unit();
  }
  for (std::size_t n = 0; n + 1 < ratios.size(); ++n) {
    ratios[n + 1] = Ops::combine(Ops::combine(field.e(0, n + 1), field.q(0, n)), ratios[n]);
  }
  TauTable<Scalar> tau(M, t_last);
  for (std::size_t t = 0; t <= t_last; ++t) {
    if (t > 0) {
      ratios.resize(tau.sites(t) - 1);
      for (std::size_t n = 0; n < ratios.size(); ++n) {
        ratios[n] = Ops::combine(field.q(t - 1, n), ratios[n]);
      }
    }
    Scalar acc = Ops::unit();
    for (std::size_t n = 1; n < tau.sites(t); ++n) {
      acc = Ops::combine(acc, ratios[n - 1]);
      tau.set(t, n, acc);
    }
  }
  return tau;
}

/// tau^(t+1)_{n+1} tau^(t-1)_{n+1} - tau^(t+1)_n tau^(t-1)_{n+2} - (tau^(t)_{n+1})^2.
/// Zero iff the bilinear equation holds at (t, n). Throws DomainError when a
/// referenced entry is absent or t = 0.
Rational bilinear_residual(const DiscreteTau& tau, std::size_t t, std::size_t n);

/// T^(t+1)_{n+1} + T^(t-1)_{n+1} - min{T^(t+1)_n + T^(t-1)_{n+2}, 2 T^(t)_{n+1}}.
Integer bilinear_residual(const UltraTau& tau, std::size_t t, std::size_t n);

/// All (t, n) at which every entry referenced by the bilinear equation exists.
template <class Scalar>
std::vector<std::pair<std::size_t, std::size_t>> bilinear_cells(const TauTable<Scalar>& tau) {
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t t = 1; t < tau.t_last(); ++t) {
    for (std::size_t n = 0; tau.contains(t + 1, n + 1) && tau.contains(t - 1, n + 2); ++n) {
      cells.emplace_back(t, n);
    }
  }
  return cells;
}

}  // namespace toda

#endif  // TODA_LATTICE_HPP
