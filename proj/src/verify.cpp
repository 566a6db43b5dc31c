#include "toda/verify.hpp"

#include "toda/hankel.hpp"
#include "toda/paths.hpp"
#include "toda/polynomial.hpp"
#include "toda/tropical.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <set>
#include <sstream>

namespace toda {

std::uint64_t InstanceGenerator::uniform(std::uint64_t lo, std::uint64_t hi) {
  return lo + engine_() % (hi - lo + 1);
}

long InstanceGenerator::uniform_signed(long lo, long hi) {
  return lo + static_cast<long>(uniform(0, static_cast<std::uint64_t>(hi - lo)));
}

InitialDataDiscrete InstanceGenerator::discrete(std::size_t size) {
  std::vector<Rational> values;
  values.reserve(size);
  for (std::size_t i = 0; i < size; ++i) {
    const auto p = uniform(1, 9);
    const auto q = uniform(1, 9);
    Rational v(static_cast<unsigned long>(p), static_cast<unsigned long>(q));
    v.canonicalize();
    values.push_back(v);
  }
  return InitialDataDiscrete(std::move(values));
}

InitialDataUltra InstanceGenerator::ultra(std::size_t size) {
  std::vector<Integer> values;
  values.reserve(size);
  for (std::size_t i = 0; i < size; ++i) {
    values.emplace_back(uniform_signed(-20, 20));
  }
  return InitialDataUltra(std::move(values));
}

std::uint64_t instance_seed(std::uint64_t base, std::uint64_t index) {
  return base + index;
}

std::size_t VerificationReport::passed() const {
  return static_cast<std::size_t>(
      std::count_if(records_.begin(), records_.end(), [](const auto& r) { return r.passed; }));
}

std::size_t VerificationReport::failed() const { return records_.size() - passed(); }

nlohmann::json VerificationReport::to_json() const {
  std::vector<const CheckRecord*> sorted;
  for (const auto& r : records_) {
    sorted.push_back(&r);
  }
  std::stable_sort(sorted.begin(), sorted.end(), [](const CheckRecord* x, const CheckRecord* y) {
    if (x->id != y->id) {
      return x->id < y->id;
    }
    return x->params.dump() < y->params.dump();
  });
  nlohmann::json checks = nlohmann::json::array();
  for (const auto* r : sorted) {
    nlohmann::json entry = {{"id", r->id}, {"params", r->params}, {"status", r->passed ? "pass" : "fail"}};
    if (!r->witness.empty()) {
      entry["witness"] = r->witness;
    }
    if (!r->detail.empty()) {
      entry["detail"] = r->detail;
    }
    checks.push_back(std::move(entry));
  }
  return {{"suite", suite_},
          {"status", ok() ? "pass" : "fail"},
          {"summary", {{"total", records_.size()}, {"passed", passed()}, {"failed", failed()}}},
          {"checks", std::move(checks)}};
}

namespace {

using Params = nlohmann::json;

std::string cell(std::size_t t, std::size_t n) {
  return "(" + std::to_string(t) + "," + std::to_string(n) + ")";
}

// Collects the first few mismatches of one check.
class Witness {
 public:
  void note(const std::string& what) {
    if (++count_ <= kShown) {
      text_ += (text_.empty() ? "" : "; ") + what;
    }
  }
  bool empty() const { return count_ == 0; }
  std::string str() const {
    return count_ > kShown ? text_ + "; ... (" + std::to_string(count_) + " total)" : text_;
  }

 private:
  static constexpr std::size_t kShown = 3;
  std::size_t count_ = 0;
  std::string text_;
};

class Runner {
 public:
  explicit Runner(VerificationReport& report) : report_(report) {}

  // Runs body(witness); exceptions become failures.
  template <class Body>
  void check(std::string id, Params params, Body&& body) {
    CheckRecord record;
    record.id = std::move(id);
    record.params = std::move(params);
    Witness witness;
    try {
      record.detail = body(witness);
    } catch (const std::exception& e) {
      witness.note(std::string("exception: ") + e.what());
    }
    record.passed = witness.empty();
    record.witness = witness.str();
    report_.add(std::move(record));
  }

 private:
  VerificationReport& report_;
};

template <class Scalar>
void compare_fields(const Field<Scalar>& lhs, const Field<Scalar>& rhs, const char* lhs_name,
                    const char* rhs_name, Witness& w) {
  if (lhs.t_max() != rhs.t_max()) {
    w.note(std::string("t_max ") + lhs_name + "=" + std::to_string(lhs.t_max()) + " vs " +
           rhs_name + "=" + std::to_string(rhs.t_max()));
    return;
  }
  for (std::size_t t = 0; t <= lhs.t_max(); ++t) {
    for (std::size_t n = 0; n < lhs.q_sites(t); ++n) {
      if (lhs.q(t, n) != rhs.q(t, n)) {
        w.note("q" + cell(t, n) + ": " + lhs_name + "=" + to_string(lhs.q(t, n)) + " " +
               rhs_name + "=" + to_string(rhs.q(t, n)));
      }
    }
    for (std::size_t n = 1; n <= lhs.e_sites(t); ++n) {
      if (lhs.e(t, n) != rhs.e(t, n)) {
        w.note("e" + cell(t, n) + ": " + lhs_name + "=" + to_string(lhs.e(t, n)) + " " +
               rhs_name + "=" + to_string(rhs.e(t, n)));
      }
    }
  }
}

template <class Scalar>
void compare_taus(const TauTable<Scalar>& lhs, const TauTable<Scalar>& rhs, Witness& w) {
  for (std::size_t t = 0; t <= std::min(lhs.t_last(), rhs.t_last()); ++t) {
    for (std::size_t n = 0; n < lhs.sites(t); ++n) {
      if (lhs.at(t, n) != rhs.at(t, n)) {
        w.note("tau" + cell(t, n) + ": " + to_string(lhs.at(t, n)) + " vs " +
               to_string(rhs.at(t, n)));
      }
    }
  }
}

template <class Scalar>
void check_residuals(const TauTable<Scalar>& tau, Witness& w) {
  for (const auto& [t, n] : bilinear_cells(tau)) {
    const auto r = bilinear_residual(tau, t, n);
    if (sgn(r) != 0) {
      w.note("residual at (t,n)=" + cell(t, n) + " is " + to_string(r));
    }
  }
}

// Positive grounded path of semilength n drawn step by step.
LatticePath random_dyck_path(InstanceGenerator& gen, std::size_t n) {
  std::vector<Step> steps;
  long height = 0;
  std::size_t ups = 0;
  for (std::size_t i = 0; i < 2 * n; ++i) {
    const bool can_up = ups < n;
    const bool can_down = height > 0;
    const bool up = can_up && (!can_down || gen.uniform(0, 1) == 0);
    steps.push_back(up ? Step::Up : Step::Down);
    height += up ? 1 : -1;
    ups += up ? 1 : 0;
  }
  return LatticePath(std::move(steps));
}

std::pair<std::size_t, std::size_t> hook_counts(const LatticePath& p) {
  std::size_t up = 0;
  std::size_t down = 0;
  for (const Hook& h : find_hooks(p)) {
    (h.kind == Hook::Kind::Up ? up : down) += 1;
  }
  return {up, down};
}

Exponents trimmed_sum(const std::vector<unsigned>& x, const std::vector<unsigned>& y) {
  Exponents out(std::max(x.size(), y.size()), 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    out[i] += x[i];
  }
  for (std::size_t i = 0; i < y.size(); ++i) {
    out[i] += y[i];
  }
  while (!out.empty() && out.back() == 0) {
    out.pop_back();
  }
  return out;
}

// phi/psi properties of one path; the mean formula is checked on level
// profiles (valid for every A) and on the given weights.
void check_deformation(const LatticePath& p, const InitialDataUltra& a, Witness& w) {
  const LatticePath phi = apply_phi(p);
  const LatticePath psi = apply_psi(p);
  const std::string name = p.to_string();
  if (!phi.is_positive() || !phi.is_grounded() || phi.size() != p.size() ||
      !psi.is_positive() || !psi.is_grounded() || psi.size() != p.size()) {
    w.note(name + ": endpoints moved (phi=" + phi.to_string() + ", psi=" + psi.to_string() + ")");
    return;
  }
  auto doubled = trimmed_sum(level_profile(p), level_profile(p));
  if (trimmed_sum(level_profile(phi), level_profile(psi)) != doubled) {
    w.note(name + ": profile(phi)+profile(psi) != 2 profile(P)");
  }
  if (path_weight(phi, a) + path_weight(psi, a) != 2 * path_weight(p, a)) {
    w.note(name + ": W(phi)+W(psi) != 2W");
  }
  const auto [up, down] = hook_counts(p);
  for (const LatticePath* image : {&phi, &psi}) {
    const auto [u, d] = hook_counts(*image);
    if (u > up || d > down) {
      w.note(name + ": hook count grew under " + (image == &phi ? "phi" : "psi"));
    }
  }
  if (is_tabular(p) != find_hooks(p).empty()) {
    w.note(name + ": is_tabular disagrees with hook search");
  }
}

std::size_t instance_size(InstanceGenerator& gen, std::size_t wanted, std::size_t max_size) {
  const std::size_t lo = std::clamp<std::size_t>(wanted, 1, std::max<std::size_t>(max_size, 1));
  return static_cast<std::size_t>(gen.uniform(lo, std::max(lo, max_size)));
}

bool tau_feasible(std::size_t data_size, std::size_t t, std::size_t n) {
  return n == 0 || t + 2 * n - 2 <= data_size;
}

void verify_combinatorics(const VerifyOptions& opt, Runner& run) {
  run.check("paths.catalan", {{"n_max", 10}}, [](Witness& w) {
    for (std::size_t n = 0; n <= 10; ++n) {
      const auto count = enumerate_positive_grounded(n).size();
      if (Integer(static_cast<unsigned long>(count)) != catalan(n)) {
        w.note("n=" + std::to_string(n) + ": " + std::to_string(count) + " paths vs C_n=" +
               catalan(n).get_str());
      }
    }
    return std::string();
  });

  for (std::size_t t = 0; t <= opt.max_t; ++t) {
    for (std::size_t n = 0; n <= opt.max_n; ++n) {
      for (bool tabular : {false, true}) {
        run.check("families.count", {{"t", t}, {"n", n}, {"tabular", tabular}},
                  [&](Witness& w) {
                    const auto enumerated = enumerate_families(t, n, tabular).size();
                    const Integer closed = count_families(t, n, tabular);
                    if (Integer(static_cast<unsigned long>(enumerated)) != closed) {
                      w.note(std::to_string(enumerated) + " enumerated vs " + closed.get_str() +
                             " closed-form");
                    }
                    return std::to_string(enumerated) + " enumerated vs " + closed.get_str() +
                           " closed-form";
                  });
      }
    }
  }

  const std::size_t sym_t = std::min<std::size_t>(opt.max_t, 3);
  const std::size_t sym_n = std::min<std::size_t>(opt.max_n, 3);
  for (std::size_t t = 0; t <= sym_t; ++t) {
    for (std::size_t n = 0; n <= sym_n; ++n) {
      run.check("symbolic.degree", {{"t", t}, {"n", n}}, [&](Witness& w) {
        const Polynomial gv = symbolic_tau_gv(t, n);
        const Polynomial det = symbolic_tau_hankel(t, n);
        const unsigned deg = static_cast<unsigned>(n * (t + n) - n);  // total up steps
        if (!(gv == det)) {
          w.note("Hankel expansion " + det.to_string() + " != family sum " + gv.to_string());
        }
        if (!det.is_homogeneous(deg)) {
          w.note("not homogeneous of degree " + std::to_string(deg));
        }
        if (!det.has_positive_coefficients()) {
          w.note("non-positive coefficient in " + det.to_string());
        }
        const Integer families = count_families(t, n, false);
        if (Integer(static_cast<unsigned long>(det.term_count())) > families) {
          w.note(std::to_string(det.term_count()) + " monomials > " + families.get_str() +
                 " families");
        }
        return std::to_string(det.term_count()) + " monomials of degree " + std::to_string(deg);
      });
    }
  }

  const InitialDataUltra labels = InstanceGenerator(opt.seed).ultra(12);
  for (std::size_t half = 0; half <= 6; ++half) {
    run.check("hooks.exhaustive", {{"steps", 2 * half}, {"seed", opt.seed}}, [&](Witness& w) {
      const auto paths = enumerate_positive_grounded(half);
      for (const auto& p : paths) {
        check_deformation(p, labels, w);
      }
      return std::to_string(paths.size()) + " paths";
    });
  }
}

void verify_discrete(const VerifyOptions& opt, Runner& run) {
  const std::size_t wanted = opt.max_t + 2 * opt.max_n;  // covers every GV cell
  for (std::size_t i = 0; i < opt.instances; ++i) {
    const std::uint64_t seed = instance_seed(opt.seed, 2 * i);
    InstanceGenerator gen(seed);
    const auto a = gen.discrete(instance_size(gen, wanted, opt.discrete_max_size));
    const std::size_t M = a.size();
    const Params base = {{"M", M}, {"seed", seed}};

    const auto f = moments_table(a);
    run.check("moments.routes", base, [&](Witness& w) {
      const std::size_t top = std::min<std::size_t>(M, 8);
      const auto series = s_fraction_series(a, top);
      for (std::size_t m = 0; m <= top; ++m) {
        const Rational nested = moment_f0(a, m);
        Rational enumerated = 0;
        for (const auto& p : enumerate_positive_grounded(m)) {
          enumerated += path_weight(p, a);
        }
        if (f[m] != nested || nested != enumerated || series[m] != nested) {
          w.note("f_" + std::to_string(m) + ": table=" + to_string(f[m]) + " nested=" +
                 to_string(nested) + " paths=" + to_string(enumerated) + " series=" +
                 to_string(series[m]));
        }
      }
      return std::string();
    });

    run.check("hankel.shifted_inverse", base, [&](Witness& w) {
      for (std::size_t n = 0; 2 * n + 2 <= M; ++n) {
        const auto [even, odd] = shifted_hankel_check(a, n);
        if (even != a[2 * n] || odd != a[2 * n + 1]) {
          w.note("n=" + std::to_string(n) + ": (" + to_string(even) + ", " + to_string(odd) +
                 ") vs (" + to_string(a[2 * n]) + ", " + to_string(a[2 * n + 1]) + ")");
        }
      }
      return std::string();
    });

    const std::size_t t_max = clip_time(M, M);
    const DiscreteField direct = evolve_discrete(a, t_max);
    run.check("discrete.recurrence_vs_hankel", base, [&](Witness& w) {
      compare_fields(direct, solve_ivp_discrete(a, t_max), "recurrence", "hankel", w);
      return std::string();
    });

    DiscreteTau tau = hankel_tau_table(a, t_max + 1);
    run.check("discrete.recurrence_vs_tau", base, [&](Witness& w) {
      compare_taus(tau_from_field(direct), tau, w);
      return std::string();
    });

    run.check("discrete.positivity", base, [&](Witness& w) {
      for (std::size_t t = 0; t <= direct.t_max(); ++t) {
        for (std::size_t n = 0; n < direct.q_sites(t); ++n) {
          if (sgn(direct.q(t, n)) <= 0) {
            w.note("q" + cell(t, n) + "=" + to_string(direct.q(t, n)));
          }
        }
        for (std::size_t n = 1; n <= direct.e_sites(t); ++n) {
          if (sgn(direct.e(t, n)) <= 0) {
            w.note("e" + cell(t, n) + "=" + to_string(direct.e(t, n)));
          }
        }
      }
      for (std::size_t t = 0; t <= tau.t_last(); ++t) {
        for (std::size_t n = 0; n < tau.sites(t); ++n) {
          if (sgn(tau.at(t, n)) <= 0) {
            w.note("tau" + cell(t, n) + "=" + to_string(tau.at(t, n)));
          }
        }
      }
      return std::string();
    });

    Params bilinear_params = base;
    if (opt.inject_fault && i == 0 && tau.contains(2, 1)) {
      tau.set(2, 1, tau.at(2, 1) + 1);
      bilinear_params["fault"] = {{"t", 2}, {"n", 1}};
    }
    run.check("discrete.bilinear", bilinear_params, [&](Witness& w) {
      check_residuals(tau, w);
      return std::to_string(bilinear_cells(tau).size()) + " cells";
    });

    for (std::size_t t = 0; t <= opt.max_t; ++t) {
      for (std::size_t n = 0; n <= opt.max_n; ++n) {
        if (!tau_feasible(M, t, n)) {
          continue;
        }
        Params p = base;
        p["t"] = t;
        p["n"] = n;
        run.check("discrete.hankel_vs_gv", p, [&](Witness& w) {
          const Rational det = tau_hankel(f, t, n);
          const Rational sum = tau_gv(a, t, n);
          if (det != sum) {
            w.note("hankel=" + to_string(det) + " families=" + to_string(sum));
          }
          return std::string();
        });
      }
    }
  }
}

void verify_ultra(const VerifyOptions& opt, Runner& run) {
  // The graph enumeration check runs one step past the family range.
  const std::size_t wanted = (opt.max_t + 1) + 2 * (opt.max_n + 1);
  for (std::size_t i = 0; i < opt.instances; ++i) {
    const std::uint64_t seed = instance_seed(opt.seed, 2 * i + 1);
    InstanceGenerator gen(seed);
    const auto a = gen.ultra(instance_size(gen, wanted, opt.ultra_max_size));
    const std::size_t M = a.size();
    const Params base = {{"M", M}, {"seed", seed}};

    const std::size_t t_max = clip_time(M, M);
    const UltraField direct = evolve_ultra(a, t_max);
    run.check("ultra.recurrence_vs_shortest", base, [&](Witness& w) {
      compare_fields(direct, solve_ivp_ultra(a, t_max), "recurrence", "shortest", w);
      return std::string();
    });

    UltraTau table = shortest_tau_table(a, t_max + 1);
    run.check("ultra.recurrence_vs_tau", base, [&](Witness& w) {
      compare_taus(tau_from_field(direct), table, w);
      return std::string();
    });

    Params bilinear_params = base;
    if (opt.inject_fault && i == 0 && table.contains(2, 1)) {
      table.set(2, 1, table.at(2, 1) + 1);
      bilinear_params["fault"] = {{"t", 2}, {"n", 1}};
    }
    run.check("ultra.bilinear", bilinear_params, [&](Witness& w) {
      check_residuals(table, w);
      return std::to_string(bilinear_cells(table).size()) + " cells";
    });

    for (std::size_t t = 0; t <= opt.max_t + 1; ++t) {
      for (std::size_t n = 0; n <= opt.max_n + 1; ++n) {
        if (!tau_feasible(M, t, n)) {
          continue;
        }
        Params p = base;
        p["t"] = t;
        p["n"] = n;
        const Integer shortest = shortest_tau(a, t, n);
        run.check("ultra.shortest_vs_graph_paths", p, [&](Witness& w) {
          std::optional<Integer> best;
          for (const auto& path : enumerate_graph_paths(t, n, false)) {
            const Integer weight = graph_path_weight(path, a);
            if (!best || weight < *best) {
              best = weight;
            }
          }
          if (*best != shortest) {
            w.note("dp=" + shortest.get_str() + " enumeration=" + best->get_str());
          }
          if (t >= 1) {
            std::optional<Integer> restricted;
            for (const auto& path : enumerate_graph_paths(t, n, true)) {
              const Integer weight = graph_path_weight(path, a);
              if (!restricted || weight < *restricted) {
                restricted = weight;
              }
            }
            if (*restricted != *best) {
              w.note("min to (t+2n,1)=" + restricted->get_str() + " vs min to (t+2n,0)=" +
                     best->get_str());
            }
          }
          return std::string();
        });

        if (t > opt.max_t || n > opt.max_n) {
          continue;
        }
        run.check("ultra.families_vs_shortest", p, [&](Witness& w) {
          const auto all = min_family_weight(a, t, n, false);
          const auto tabular = min_family_weight(a, t, n, true);
          if (all.weight != tabular.weight || all.weight != shortest) {
            w.note("all families=" + all.weight.get_str() + " tabular=" +
                   tabular.weight.get_str() + " shortest=" + shortest.get_str());
          }
          return std::string();
        });

        if (t >= 1) {
          run.check("ultra.bijection", p, [&](Witness& w) {
            const auto families = enumerate_families(t, n, true);
            const auto targets = enumerate_graph_paths(t, n, true);
            std::set<std::string> image;
            for (const auto& family : families) {
              const GraphPath q = tabular_to_graph_path(family);
              if (!image.insert(q.to_string()).second) {
                w.note("two families map to " + q.to_string());
              }
              if (q.end() != Vertex{static_cast<long>(t + 2 * n), 1}) {
                w.note(q.to_string() + " does not end at (t+2n,1)");
              }
              if (family_weight(family, a) != graph_path_weight(q, a)) {
                w.note(family_to_json(family) + " weighs " + family_weight(family, a).get_str() +
                       " but " + q.to_string() + " weighs " + graph_path_weight(q, a).get_str());
              }
            }
            for (const auto& q : targets) {
              if (!image.count(q.to_string())) {
                w.note(q.to_string() + " is not hit");
              }
            }
            return std::to_string(families.size()) + " families onto " +
                   std::to_string(targets.size()) + " graph paths";
          });
        }
      }
    }

    run.check("hooks.random", base, [&](Witness& w) {
      const std::size_t half_max = std::min<std::size_t>(10, M);
      for (std::size_t k = 0; k < 10; ++k) {
        const auto p = random_dyck_path(gen, gen.uniform(0, half_max - 1));
        check_deformation(p, a, w);
      }
      return std::string();
    });

    for (std::size_t t = 0; t <= opt.max_t; ++t) {
      for (std::size_t n = 0; n <= opt.max_n; ++n) {
        if (!tau_feasible(M, t, n)) {
          continue;
        }
        Params p = base;
        p["t"] = t;
        p["n"] = n;
        run.check("limit.sandwich", p, [&](Witness& w) {
          const auto experiment = run_limit(a, t, n, {1.0, 0.1, 0.01, 0.001});
          if (!experiment.sandwich_holds()) {
            for (const auto& r : experiment.records) {
              w.note("eps=" + std::to_string(r.epsilon) + " gap=" + std::to_string(r.gap) +
                     " bound=" + std::to_string(r.bound));
            }
          }
          if (!experiment.gaps_monotone()) {
            w.note("gap grows as eps shrinks");
          }
          return std::string();
        });
      }
    }
  }
}

}  // namespace

VerificationReport run_verification(const VerifyOptions& options) {
  VerificationReport report("toda-cross-verification");
  Runner run(report);
  verify_combinatorics(options, run);
  verify_discrete(options, run);
  verify_ultra(options, run);
  return report;
}

bool LimitExperiment::sandwich_holds(double tolerance) const {
  return std::all_of(records.begin(), records.end(), [&](const LimitRecord& r) {
    return r.gap >= -tolerance && r.gap <= r.bound + tolerance;
  });
}

bool LimitExperiment::gaps_monotone(double tolerance) const {
  std::vector<LimitRecord> sorted = records;
  std::sort(sorted.begin(), sorted.end(),
            [](const LimitRecord& x, const LimitRecord& y) { return x.epsilon > y.epsilon; });
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i].gap > sorted[i - 1].gap + tolerance) {
      return false;
    }
  }
  return true;
}

nlohmann::json LimitExperiment::to_json() const {
  nlohmann::json values = nlohmann::json::array();
  for (const auto& v : data) {
    values.push_back(v.get_str());
  }
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : records) {
    rows.push_back({{"epsilon", r.epsilon},
                    {"soft_min", r.soft_min},
                    {"gap", r.gap},
                    {"bound", r.bound},
                    {"within_bound", r.gap >= -1e-9 && r.gap <= r.bound + 1e-9}});
  }
  return {{"A", std::move(values)},
          {"t", t},
          {"n", n},
          {"T", tau.fits_slong_p() ? nlohmann::json(tau.get_si()) : nlohmann::json(tau.get_str())},
          {"N", family_count.get_str()},
          {"records", std::move(rows)},
          {"sandwich", sandwich_holds()},
          {"monotone", gaps_monotone()}};
}

LimitExperiment run_limit(const InitialDataUltra& a, std::size_t t, std::size_t n,
                          const std::vector<double>& epsilons) {
  for (double eps : epsilons) {
    if (!(eps > 0) || !std::isfinite(eps)) {
      throw InputError("epsilon values must be positive and finite");
    }
  }
  std::vector<Integer> weights;
  for (const auto& family : enumerate_families(t, n, false)) {
    weights.push_back(family_weight(family, a));
  }
  LimitExperiment out;
  out.data.assign(a.values().begin(), a.values().end());
  out.t = t;
  out.n = n;
  out.tau = *std::min_element(weights.begin(), weights.end());
  out.family_count = static_cast<unsigned long>(weights.size());
  const double log_count = std::log(static_cast<double>(weights.size()));
  for (double eps : epsilons) {
    // Every term is exp(-(W - T)/eps) <= 1 and the minimizer contributes 1.
    double sum = 0;
    for (const auto& wgt : weights) {
      const Integer excess = wgt - out.tau;
      sum += std::exp(-excess.get_d() / eps);
    }
    LimitRecord r;
    r.epsilon = eps;
    r.gap = eps * std::log(sum);
    r.soft_min = out.tau.get_d() - r.gap;
    r.bound = eps * log_count;
    out.records.push_back(r);
  }
  return out;
}

}  // namespace toda
