#ifndef TODA_PATHS_HPP
#define TODA_PATHS_HPP

// Lattice paths with up steps U = (1,1) and down steps D = (1,-1), their
// multiplicative and additive weights, Flajolet moments, non-intersecting
// families, tabular paths and the hook deformations.

#include "toda/arith.hpp"
#include "toda/lattice.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace toda {

enum class Step : char { Up = 'U', Down = 'D' };

struct Point {
  long x = 0;
  long y = 0;
  bool operator==(const Point&) const = default;
};

class LatticePath {
 public:
  LatticePath() = default;
  explicit LatticePath(std::vector<Step> steps, Point origin = {});

  /// Parses a string over {U, D}; throws InputError on any other character.
  static LatticePath parse(std::string_view text, Point origin = {});

  std::span<const Step> steps() const { return steps_; }
  std::size_t size() const { return steps_.size(); }
  bool empty() const { return steps_.empty(); }
  Point origin() const { return origin_; }
  Point end() const;

  /// Heights at x = origin.x + i for i = 0..size().
  std::vector<long> heights() const;
  bool is_positive() const;
  bool is_grounded() const;
  std::size_t down_steps() const;

  std::string to_string() const;

  bool operator==(const LatticePath&) const = default;

 private:
  std::vector<Step> steps_;
  Point origin_;
};

/// Exponent vector of a positive path: entry l counts the up steps that leave
/// the line y = l. The multiplicative weight is prod a_l^{c_l}, the additive
/// weight sum c_l A_l.
std::vector<unsigned> level_profile(const LatticePath& path);

/// w(P): product of labels a_l over up steps (down steps weigh 1).
Rational path_weight(const LatticePath& path, const InitialDataDiscrete& a);
/// W(P): sum of labels A_l over up steps (down steps weigh 0).
Integer path_weight(const LatticePath& path, const InitialDataUltra& a);

/// Practical ceiling for enumerate_positive_grounded.
inline constexpr std::size_t kMaxDyckSemilength = 14;

/// All positive grounded paths (0,0) -> (2n,0) in lexicographic order, U < D.
std::vector<LatticePath> enumerate_positive_grounded(std::size_t n);

/// f^(0)_n by the nested sum over k_1 = 0, 0 <= k_{i+1} <= k_i + 1.
Rational moment_f0(const InitialDataDiscrete& a, std::size_t n);

/// Coefficients 0..N of the S-fraction 1/(1 - a_0 z/(1 - a_1 z/(1 - ...))).
std::vector<Rational> s_fraction_series(const InitialDataDiscrete& a, std::size_t N);

/// An element of P(t,n): P_j runs from (-2j,0) to (2t+2j,0), pairwise
/// non-intersecting, every P_j positive grounded.
struct PathFamily {
  std::size_t t = 0;
  std::size_t n = 0;
  std::vector<LatticePath> paths;

  bool operator==(const PathFamily&) const = default;
};

/// True when no two paths share a lattice point.
bool is_non_intersecting(std::span<const LatticePath> paths);

Rational family_weight(const PathFamily& family, const InitialDataDiscrete& a);
Integer family_weight(const PathFamily& family, const InitialDataUltra& a);

inline constexpr std::size_t kMaxFamilies = 1'000'000;

/// P(t,n), or its tabular subset when tabular_only; lexicographic order.
/// Throws ResourceError when the closed-form count exceeds max_count.
std::vector<PathFamily> enumerate_families(std::size_t t, std::size_t n, bool tabular_only,
                                           std::size_t max_count = kMaxFamilies);

/// Closed forms: prod_{1<=j<=k<t} (2n+j+k)/(j+k) for P(t,n);
/// prod_{1<=j<t} (n+j)/j for the tabular subset.
Integer count_families(std::size_t t, std::size_t n, bool tabular_only);

/// tau^(t)_n as the weighted sum over P(t,n).
Rational tau_gv(const InitialDataDiscrete& a, std::size_t t, std::size_t n,
                std::size_t max_count = kMaxFamilies);

/// All peaks and valleys lie in one strip k <= y <= k+1.
bool is_tabular(const LatticePath& path);

struct Hook {
  enum class Kind { Up, Down };
  Kind kind;
  std::size_t start;  // index of the first step of D U^k D (resp. U D^k U)
  std::size_t run;    // k >= 2
  bool operator==(const Hook&) const = default;
};

/// Up hooks D U^k D and down hooks U D^k U, k >= 2, ordered by start.
std::vector<Hook> find_hooks(const LatticePath& path);

/// Replaces every up hook D U^k D by U^{k-1} D U D.
LatticePath apply_phi(const LatticePath& path);
/// Replaces every up hook D U^k D by D U D U^{k-1}.
LatticePath apply_psi(const LatticePath& path);

struct FamilyMinimum {
  Integer weight;
  PathFamily family;  // lexicographically smallest minimizer
};

/// min over P(t,n) (or its tabular subset) of the additive family weight.
FamilyMinimum min_family_weight(const InitialDataUltra& a, std::size_t t, std::size_t n,
                                bool tabular_only, std::size_t max_count = kMaxFamilies);

/// Family encoding: {"t": t, "n": n, "paths": ["UD...", ...]}.
std::string family_to_json(const PathFamily& family);

}  // namespace toda

#endif  // TODA_PATHS_HPP
