#ifndef TODA_VERIFY_HPP
#define TODA_VERIFY_HPP

// Cross-verification of the four solution routes and the ultradiscrete limit
// experiment. Everything here is exact except LimitExperiment, which works in
// double precision on purpose.

#include "toda/arith.hpp"
#include "toda/lattice.hpp"

#include <json.hpp>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace toda {

inline constexpr std::uint64_t kDefaultSeed = 20140101;

/// Random instances: a_k = p/q with p, q uniform in [1, 9]; A_k uniform in
/// [-20, 20]. Draws use mt19937_64 with modulo reduction so that a seed gives
/// the same instance on every standard library.
class InstanceGenerator {
 public:
  explicit InstanceGenerator(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi);
  long uniform_signed(long lo, long hi);
  InitialDataDiscrete discrete(std::size_t size);
  InitialDataUltra ultra(std::size_t size);

 private:
  std::mt19937_64 engine_;
};

/// Seed of the i-th instance of a suite run with the given base seed.
std::uint64_t instance_seed(std::uint64_t base, std::uint64_t index);

struct CheckRecord {
  std::string id;
  nlohmann::json params;  // t, n, M, seed as applicable
  bool passed = true;
  std::string witness;  // offending values, empty on pass
  std::string detail;   // optional observation (e.g. counts)
};

class VerificationReport {
 public:
  explicit VerificationReport(std::string suite) : suite_(std::move(suite)) {}

  void add(CheckRecord record) { records_.push_back(std::move(record)); }

  const std::string& suite() const { return suite_; }
  const std::vector<CheckRecord>& records() const { return records_; }
  std::size_t passed() const;
  std::size_t failed() const;
  bool ok() const { return failed() == 0; }

  /// Records sorted by id, then by parameters.
  nlohmann::json to_json() const;

 private:
  std::string suite_;
  std::vector<CheckRecord> records_;
};

struct VerifyOptions {
  std::uint64_t seed = kDefaultSeed;
  std::size_t max_t = 4;
  std::size_t max_n = 3;
  std::size_t instances = 20;
  std::size_t discrete_max_size = 12;
  std::size_t ultra_max_size = 40;
  /// Self-test: add 1 to one tau entry before the bilinear checks.
  bool inject_fault = false;
};

/// Runs the full matrix: recurrence vs Hankel, Hankel vs path families, moment
/// routes, S-fraction inversion, family counts, tabular vs all-family minima,
/// shortest paths vs family minima and graph enumeration, the tabular
/// bijection, bilinear residuals, hook deformations, degree/positivity and the
/// limit sandwich.
VerificationReport run_verification(const VerifyOptions& options);

struct LimitRecord {
  double epsilon = 0;
  double soft_min = 0;  // -eps log tau(eps)
  double gap = 0;       // T - soft_min
  double bound = 0;     // eps log N
};

struct LimitExperiment {
  std::vector<Integer> data;
  std::size_t t = 0;
  std::size_t n = 0;
  Integer tau;           // T^(t)_n = min family weight
  Integer family_count;  // N = |P(t,n)|
  std::vector<LimitRecord> records;

  /// 0 <= gap <= eps log N for every record, up to the tolerance.
  bool sandwich_holds(double tolerance = 1e-9) const;
  /// Gap does not grow as eps shrinks.
  bool gaps_monotone(double tolerance = 1e-9) const;
  nlohmann::json to_json() const;
};

/// tau(eps) = sum over P(t,n) of exp(-W/eps), evaluated in the log domain.
/// Throws InputError for a non-positive eps, ResourceError past the cap.
LimitExperiment run_limit(const InitialDataUltra& a, std::size_t t, std::size_t n,
                          const std::vector<double>& epsilons);

}  // namespace toda

#endif  // TODA_VERIFY_HPP
