#include "toda/paths.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <set>
#include <utility>

namespace toda {

LatticePath::LatticePath(std::vector<Step> steps, Point origin)
    : steps_(std::move(steps)), origin_(origin) {}

LatticePath LatticePath::parse(std::string_view text, Point origin) {
  std::vector<Step> steps;
  steps.reserve(text.size());
  for (char c : text) {
    if (c == 'U') {
      steps.push_back(Step::Up);
    } else if (c == 'D') {
      steps.push_back(Step::Down);
    } else {
      throw InputError("path strings use only 'U' and 'D': '" + std::string(text) + "'");
    }
  }
  return LatticePath(std::move(steps), origin);
}

Point LatticePath::end() const {
  const auto h = heights();
  return {origin_.x + static_cast<long>(steps_.size()), h.back()};
}

std::vector<long> LatticePath::heights() const {
  std::vector<long> h;
  h.reserve(steps_.size() + 1);
  h.push_back(origin_.y);
  for (Step s : steps_) {
    h.push_back(h.back() + (s == Step::Up ? 1 : -1));
  }
  return h;
}

bool LatticePath::is_positive() const {
  const auto h = heights();
  return std::all_of(h.begin(), h.end(), [](long y) { return y >= 0; });
}

bool LatticePath::is_grounded() const {
  const auto h = heights();
  return h.front() == 0 && h.back() == 0;
}

std::size_t LatticePath::down_steps() const {
  return static_cast<std::size_t>(std::count(steps_.begin(), steps_.end(), Step::Down));
}

std::string LatticePath::to_string() const {
  std::string s;
  s.reserve(steps_.size());
  for (Step step : steps_) {
    s.push_back(static_cast<char>(step));
  }
  return s;
}

std::vector<unsigned> level_profile(const LatticePath& path) {
  std::vector<unsigned> profile;
  long y = path.origin().y;
  for (Step s : path.steps()) {
    if (s == Step::Up) {
      if (y < 0) {
        throw ContractViolation("level profile of a path below the x-axis");
      }
      if (profile.size() <= static_cast<std::size_t>(y)) {
        profile.resize(y + 1, 0);
      }
      ++profile[y];
      ++y;
    } else {
      --y;
    }
  }
  return profile;
}

Rational path_weight(const LatticePath& path, const InitialDataDiscrete& a) {
  Rational w = 1;
  const auto profile = level_profile(path);
  for (std::size_t l = 0; l < profile.size(); ++l) {
    for (unsigned c = 0; c < profile[l]; ++c) {
      w *= a[l];
    }
  }
  return w;
}

Integer path_weight(const LatticePath& path, const InitialDataUltra& a) {
  Integer w = 0;
  const auto profile = level_profile(path);
  for (std::size_t l = 0; l < profile.size(); ++l) {
    if (profile[l] != 0) {
      w += profile[l] * a[l];
    }
  }
  return w;
}

std::vector<LatticePath> enumerate_positive_grounded(std::size_t n) {
  if (n > kMaxDyckSemilength) {
    throw ResourceError("positive grounded path enumeration is capped at n = " +
                        std::to_string(kMaxDyckSemilength));
  }
  std::vector<LatticePath> out;
  std::vector<Step> steps;
  const long length = static_cast<long>(2 * n);
  std::function<void(long)> extend = [&](long h) {
    const long remaining = length - static_cast<long>(steps.size());
    if (remaining == 0) {
      out.emplace_back(steps);
      return;
    }
    if (h + 1 <= remaining - 1) {
      steps.push_back(Step::Up);
      extend(h + 1);
      steps.pop_back();
    }
    if (h > 0) {
      steps.push_back(Step::Down);
      extend(h - 1);
      steps.pop_back();
    }
  };
  extend(0);
  return out;
}

Rational moment_f0(const InitialDataDiscrete& a, std::size_t n) {
  if (n > a.size()) {
    throw DataExhaustedError("f_" + std::to_string(n) + " needs " + std::to_string(n) +
                             " initial values");
  }
  if (n == 0) {
    return 1;
  }
  // sum_{k_1=0} sum_{k_2=0}^{k_1+1} ... sum_{k_n=0}^{k_{n-1}+1} a_{k_1} ... a_{k_n}
  std::function<Rational(std::size_t, std::size_t)> nested = [&](std::size_t depth,
                                                                 std::size_t prev) {
    if (depth == n) {
      return Rational(1);
    }
    Rational sum = 0;
    for (std::size_t k = 0; k <= prev + 1; ++k) {
      sum += a[k] * nested(depth + 1, k);
    }
    return sum;
  };
  return a[0] * nested(1, 0);
}

std::vector<Rational> s_fraction_series(const InitialDataDiscrete& a, std::size_t N) {
  if (N > a.size()) {
    throw DataExhaustedError("S-fraction coefficient " + std::to_string(N) + " needs " +
                             std::to_string(N) + " initial values");
  }
  // Levels >= N only affect coefficients above N.
  std::vector<Rational> series(N + 1, Rational(0));
  series[0] = 1;
  for (std::size_t level = N; level-- > 0;) {
    // 1 / (1 - a_level z S(z))
    std::vector<Rational> denom(N + 1, Rational(0));
    denom[0] = 1;
    for (std::size_t i = 1; i <= N; ++i) {
      denom[i] = -a[level] * series[i - 1];
    }
    std::vector<Rational> inverse(N + 1, Rational(0));
    inverse[0] = 1;
    for (std::size_t i = 1; i <= N; ++i) {
      Rational acc = 0;
      for (std::size_t j = 1; j <= i; ++j) {
        acc -= denom[j] * inverse[i - j];
      }
      inverse[i] = acc;
    }
    series = std::move(inverse);
  }
  return series;
}

bool is_non_intersecting(std::span<const LatticePath> paths) {
  std::set<std::pair<long, long>> seen;
  for (const auto& path : paths) {
    std::set<std::pair<long, long>> own;
    const auto h = path.heights();
    for (std::size_t i = 0; i < h.size(); ++i) {
      own.emplace(path.origin().x + static_cast<long>(i), h[i]);
    }
    for (const auto& p : own) {
      if (!seen.insert(p).second) {
        return false;
      }
    }
  }
  return true;
}

Rational family_weight(const PathFamily& family, const InitialDataDiscrete& a) {
  Rational w = 1;
  for (const auto& p : family.paths) {
    w *= path_weight(p, a);
  }
  return w;
}

Integer family_weight(const PathFamily& family, const InitialDataUltra& a) {
  Integer w = 0;
  for (const auto& p : family.paths) {
    w += path_weight(p, a);
  }
  return w;
}

Integer count_families(std::size_t t, std::size_t n, bool tabular_only) {
  Rational count = 1;
  if (tabular_only) {
    for (std::size_t j = 1; j < t; ++j) {
      count *= Rational(Integer(n + j), Integer(j));
    }
  } else {
    for (std::size_t k = 1; k < t; ++k) {
      for (std::size_t j = 1; j <= k; ++j) {
        count *= Rational(Integer(2 * n + j + k), Integer(j + k));
      }
    }
  }
  count.canonicalize();
  return count.get_num();
}

namespace {

// Backtracking over P(t,n). Path j is generated step by step; on the overlap
// with path j-1 it must stay strictly above it (same parity, so >= 2 above),
// which is exactly the no-shared-point condition for nested grounded paths.
class FamilyWalker {
 public:
  FamilyWalker(std::size_t t, std::size_t n, bool tabular_only,
               std::function<void(const PathFamily&)> visit)
      : tabular_only_(tabular_only), visit_(std::move(visit)) {
    family_.t = t;
    family_.n = n;
  }

  void run() { place(0); }

 private:
  void place(std::size_t j) {
    if (j == family_.n) {
      if (!is_non_intersecting(family_.paths)) {
        throw ContractViolation("family enumeration produced intersecting paths");
      }
      visit_(family_);
      return;
    }
    steps_.clear();
    heights_.assign(1, 0);
    extend(j, 2 * family_.t + 4 * j);
  }

  void extend(std::size_t j, std::size_t length) {
    const std::size_t i = steps_.size();
    const long h = heights_.back();
    if (i == length) {
      LatticePath path(steps_, {-2 * static_cast<long>(j), 0});
      if (tabular_only_ && !is_tabular(path)) {
        return;
      }
      auto saved_steps = steps_;
      auto saved_heights = heights_;
      family_.paths.push_back(std::move(path));
      below_.push_back(heights_);
      place(j + 1);
      below_.pop_back();
      family_.paths.pop_back();
      steps_ = std::move(saved_steps);
      heights_ = std::move(saved_heights);
      return;
    }
    for (Step s : {Step::Up, Step::Down}) {
      const long next = h + (s == Step::Up ? 1 : -1);
      const long remaining = static_cast<long>(length - i - 1);
      if (next < 0 || next > remaining) {
        continue;
      }
      if (j > 0 && i + 1 >= 2 && i + 1 - 2 < below_.back().size() &&
          next <= below_.back()[i + 1 - 2]) {
        continue;
      }
      steps_.push_back(s);
      heights_.push_back(next);
      extend(j, length);
      heights_.pop_back();
      steps_.pop_back();
    }
  }

  bool tabular_only_;
  std::function<void(const PathFamily&)> visit_;
  PathFamily family_;
  std::vector<Step> steps_;
  std::vector<long> heights_;
  std::vector<std::vector<long>> below_;
};

void for_each_family(std::size_t t, std::size_t n, bool tabular_only, std::size_t max_count,
                     const std::function<void(const PathFamily&)>& visit) {
  const Integer expected = count_families(t, n, tabular_only);
  if (expected > Integer(static_cast<unsigned long>(max_count))) {
    throw ResourceError("|P(" + std::to_string(t) + "," + std::to_string(n) + ")| = " +
                        expected.get_str() + " exceeds the enumeration cap " +
                        std::to_string(max_count));
  }
  FamilyWalker(t, n, tabular_only, visit).run();
}

void require_family_data(std::size_t data_size, std::size_t t, std::size_t n) {
  if (n > 0 && t + 2 * n - 2 > data_size) {
    throw DataExhaustedError("tau(" + std::to_string(t) + "," + std::to_string(n) + ") needs " +
                             std::to_string(t + 2 * n - 2) + " initial values, got " +
                             std::to_string(data_size));
  }
}

}  // namespace

std::vector<PathFamily> enumerate_families(std::size_t t, std::size_t n, bool tabular_only,
                                           std::size_t max_count) {
  std::vector<PathFamily> out;
  for_each_family(t, n, tabular_only, max_count,
                  [&](const PathFamily& f) { out.push_back(f); });
  return out;
}

Rational tau_gv(const InitialDataDiscrete& a, std::size_t t, std::size_t n,
                std::size_t max_count) {
  require_family_data(a.size(), t, n);
  Rational sum = 0;
  for_each_family(t, n, false, max_count,
                  [&](const PathFamily& f) { sum += family_weight(f, a); });
  return sum;
}

bool is_tabular(const LatticePath& path) {
  const auto h = path.heights();
  const auto steps = path.steps();
  std::optional<long> lo;
  std::optional<long> hi;
  for (std::size_t i = 1; i < steps.size(); ++i) {
    if (steps[i - 1] != steps[i]) {  // peak UD or valley DU
      lo = lo ? std::min(*lo, h[i]) : h[i];
      hi = hi ? std::max(*hi, h[i]) : h[i];
    }
  }
  return !lo || *hi - *lo <= 1;
}

std::vector<Hook> find_hooks(const LatticePath& path) {
  std::vector<Hook> hooks;
  const auto steps = path.steps();
  std::size_t i = 0;
  while (i < steps.size()) {
    std::size_t j = i;
    while (j < steps.size() && steps[j] == steps[i]) {
      ++j;
    }
    const std::size_t run = j - i;
    if (run >= 2 && i >= 1 && j < steps.size()) {
      // bounded on both sides by the opposite step
      hooks.push_back({steps[i] == Step::Up ? Hook::Kind::Up : Hook::Kind::Down, i - 1, run});
    }
    i = j;
  }
  return hooks;
}

namespace {

LatticePath rewrite_up_hooks(const LatticePath& path, bool phi) {
  std::vector<Step> out(path.steps().begin(), path.steps().end());
  for (const Hook& hook : find_hooks(path)) {
    if (hook.kind != Hook::Kind::Up) {
      continue;
    }
    const std::size_t k = hook.run;
    if (phi) {
      // D U^k [D] -> U^{k-1} D U [D]; the closing D is untouched.
      for (std::size_t i = 0; i + 1 < k; ++i) {
        out[hook.start + i] = Step::Up;
      }
      out[hook.start + k - 1] = Step::Down;
      out[hook.start + k] = Step::Up;
    } else {
      // [D] U^k D -> [D] U D U^{k-1}; the opening D is untouched.
      out[hook.start + 1] = Step::Up;
      out[hook.start + 2] = Step::Down;
      for (std::size_t i = 3; i <= k + 1; ++i) {
        out[hook.start + i] = Step::Up;
      }
    }
  }
  return LatticePath(std::move(out), path.origin());
}

}  // namespace

LatticePath apply_phi(const LatticePath& path) { return rewrite_up_hooks(path, true); }

LatticePath apply_psi(const LatticePath& path) { return rewrite_up_hooks(path, false); }

FamilyMinimum min_family_weight(const InitialDataUltra& a, std::size_t t, std::size_t n,
                                bool tabular_only, std::size_t max_count) {
  require_family_data(a.size(), t, n);
  std::optional<FamilyMinimum> best;
  for_each_family(t, n, tabular_only, max_count, [&](const PathFamily& f) {
    Integer w = family_weight(f, a);
    if (!best || w < best->weight) {
      best = FamilyMinimum{std::move(w), f};
    }
  });
  // P(t,n) is never empty: the stacked U^{t+2j} D^{t+2j} family always exists.
  return std::move(*best);
}

std::string family_to_json(const PathFamily& family) {
  nlohmann::json j;
  j["t"] = family.t;
  j["n"] = family.n;
  j["paths"] = nlohmann::json::array();
  for (const auto& p : family.paths) {
    j["paths"].push_back(p.to_string());
  }
  return j.dump();
}

}  // namespace toda
