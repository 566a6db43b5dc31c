#ifndef TODA_HANKEL_HPP
#define TODA_HANKEL_HPP

#include "toda/arith.hpp"
#include "toda/lattice.hpp"

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace toda {

/// Row-major dense square matrix over an exact scalar.
template <class Scalar>
class DenseMatrix {
 public:
  explicit DenseMatrix(std::size_t size) : size_(size), entries_(size * size) {}

  std::size_t size() const { return size_; }
  Scalar& operator()(std::size_t row, std::size_t col) { return entries_[row * size_ + col]; }
  const Scalar& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * size_ + col];
  }

 private:
  std::size_t size_;
  std::vector<Scalar> entries_;
};

/// Fraction-free (Bareiss) elimination with row pivoting. Every division is exact.
Integer bareiss_determinant(DenseMatrix<Integer> m);

/// Clears denominators with their lcm L, runs Bareiss on the integer matrix
/// and divides by L^n.
Rational determinant(const DenseMatrix<Rational>& m);

/// f_0..f_M with f_0 = 1; f_m is the weighted count of positive grounded paths
/// (0,0) -> (2m,0). Time evolution is the shift f^(t)_n = f_{t+n}.
class MomentSequence {
 public:
  explicit MomentSequence(std::vector<Rational> values);

  std::size_t size() const { return values_.size(); }
  /// Throws DataExhaustedError past f_M.
  const Rational& operator[](std::size_t m) const;
  std::span<const Rational> values() const { return values_; }

 private:
  std::vector<Rational> values_;
};

/// Moments f_0..f_M by dynamic programming over (step, height):
/// h[s+1][y+1] += a_y h[s][y], h[s+1][y-1] += h[s][y], f_m = h[2m][0].
MomentSequence moments_table(const InitialDataDiscrete& a);

/// (f_{shift+j+k})_{j,k=0}^{n-1}.
DenseMatrix<Rational> hankel_matrix(const MomentSequence& f, std::size_t shift, std::size_t n);

/// tau^(t)_n = det(f_{t+j+k})_{j,k<n}; needs t + 2n - 2 <= M for n >= 1.
Rational tau_hankel(const MomentSequence& f, std::size_t t, std::size_t n);
Rational tau_hankel(const InitialDataDiscrete& a, std::size_t t, std::size_t n);

/// tau table for t = 0..t_last sharing one moment sequence.
DiscreteTau hankel_tau_table(const InitialDataDiscrete& a, std::size_t t_last);

/// (D'_{n+1} D_n / (D'_n D_{n+1}), D'_n D_{n+2} / (D'_{n+1} D_{n+1})) with
/// D_n = det(f_{j+k}), D'_n = det(f_{j+k+1}); equals (a_{2n}, a_{2n+1}).
std::pair<Rational, Rational> shifted_hankel_check(const InitialDataDiscrete& a, std::size_t n);

/// Field by the determinant route: qe_from_tau of the Hankel tau table.
DiscreteField solve_ivp_discrete(const InitialDataDiscrete& a, std::size_t t_max);

}  // namespace toda

#endif  // TODA_HANKEL_HPP
