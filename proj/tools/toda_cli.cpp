// Command-line front end: evolve, tau, verify, count, limit.
//
// Exit codes: 0 success, 1 verification failure, 2 input error,
// 3 resource limit / infeasible route.

#include "toda/hankel.hpp"
#include "toda/lattice.hpp"
#include "toda/paths.hpp"
#include "toda/serialize.hpp"
#include "toda/tropical.hpp"
#include "toda/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using namespace toda;

enum ExitCode { kOk = 0, kVerifyFailed = 1, kInputError = 2, kResource = 3 };

struct Output {
  std::string path;

  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream out(path);
    if (!out) {
      throw InputError("cannot write output file '" + path + "'");
    }
    out << text;
  }
};

std::string dump(const nlohmann::json& doc) { return doc.dump(2) + "\n"; }

std::size_t report_clip(std::size_t data_size, std::size_t requested) {
  const std::size_t realized = clip_time(data_size, requested);
  if (realized != requested) {
    std::cerr << "note: t_max clipped from " << requested << " to " << realized << " (M = "
              << data_size << ")\n";
  }
  return realized;
}

void require_tau_data(std::size_t data_size, std::size_t t, std::size_t n) {
  if (n > 0 && t + 2 * n - 2 > data_size) {
    throw DataExhaustedError("tau(" + std::to_string(t) + "," + std::to_string(n) + ") needs " +
                             std::to_string(t + 2 * n - 2) + " initial values, got " +
                             std::to_string(data_size));
  }
}

struct EvolveArgs {
  std::string kind = "discrete";
  std::string input;
  std::optional<std::size_t> t_max;
  std::string format = "json";
  std::string variable = "q";
  Output output;
};

int run_evolve(const EvolveArgs& args) {
  const FieldVariable variable = args.variable == "q" ? FieldVariable::Q : FieldVariable::E;
  if (args.kind == "discrete") {
    const auto a = load_discrete_data(args.input);
    const auto field = evolve_discrete(a, report_clip(a.size(), args.t_max.value_or(a.size())));
    args.output.write(args.format == "csv" ? to_csv(field, variable) : dump(to_json(field)));
  } else {
    const auto a = load_ultra_data(args.input);
    const auto field = evolve_ultra(a, report_clip(a.size(), args.t_max.value_or(a.size())));
    args.output.write(args.format == "csv" ? to_csv(field, variable) : dump(to_json(field)));
  }
  return kOk;
}

struct TauArgs {
  std::string kind = "discrete";
  std::string route = "hankel";
  std::string input;
  std::size_t t = 0;
  std::size_t n = 0;
  std::string format = "text";
  Output output;
};

template <class Scalar>
Scalar tau_by_recurrence(const Field<Scalar>& field, std::size_t t, std::size_t n) {
  return tau_from_field(field).at(t, n);
}

int run_tau(const TauArgs& args) {
  std::string value;
  if (args.kind == "discrete") {
    const auto a = load_discrete_data(args.input);
    require_tau_data(a.size(), args.t, args.n);
    if (args.route == "recurrence") {
      const std::size_t t_max = std::min(clip_time(a.size(), a.size()), args.t);
      value = to_string(args.n == 0 ? Rational(1)
                                    : tau_by_recurrence(evolve_discrete(a, t_max), args.t, args.n));
    } else if (args.route == "hankel") {
      value = to_string(tau_hankel(a, args.t, args.n));
    } else if (args.route == "paths") {
      value = to_string(tau_gv(a, args.t, args.n));
    } else {
      throw InputError("route 'shortest' computes the ultradiscrete T; use --kind ultra");
    }
  } else {
    const auto a = load_ultra_data(args.input);
    require_tau_data(a.size(), args.t, args.n);
    if (args.route == "recurrence") {
      const std::size_t t_max = std::min(clip_time(a.size(), a.size()), args.t);
      value = to_string(args.n == 0 ? Integer(0)
                                    : tau_by_recurrence(evolve_ultra(a, t_max), args.t, args.n));
    } else if (args.route == "shortest") {
      value = to_string(shortest_tau(a, args.t, args.n));
    } else if (args.route == "paths") {
      value = to_string(min_family_weight(a, args.t, args.n, false).weight);
    } else {
      throw InputError("route 'hankel' computes the discrete tau; use --kind discrete");
    }
  }
  if (args.format == "json") {
    args.output.write(dump({{"kind", args.kind},
                            {"route", args.route},
                            {"t", args.t},
                            {"n", args.n},
                            {"value", value}}));
  } else {
    args.output.write(value + "\n");
  }
  return kOk;
}

struct VerifyArgs {
  VerifyOptions options;
  Output output;
};

int run_verify(const VerifyArgs& args) {
  const auto report = run_verification(args.options);
  args.output.write(dump(report.to_json()));
  if (!report.ok()) {
    for (const auto& r : report.records()) {
      if (!r.passed) {
        std::cerr << "FAIL " << r.id << " " << r.params.dump() << ": " << r.witness << "\n";
      }
    }
    return kVerifyFailed;
  }
  return kOk;
}

struct CountArgs {
  std::size_t t = 0;
  std::size_t n = 0;
  bool tabular = false;
  Output output;
};

int run_count(const CountArgs& args) {
  const Integer closed = count_families(args.t, args.n, args.tabular);
  nlohmann::json doc = {{"t", args.t},
                        {"n", args.n},
                        {"tabular", args.tabular},
                        {"closed_form", closed.get_str()}};
  if (closed <= Integer(static_cast<unsigned long>(kMaxFamilies))) {
    const auto enumerated = enumerate_families(args.t, args.n, args.tabular).size();
    doc["enumerated"] = enumerated;
    doc["agree"] = Integer(static_cast<unsigned long>(enumerated)) == closed;
  } else {
    doc["enumerated"] = nullptr;
  }
  args.output.write(dump(doc));
  return kOk;
}

struct LimitArgs {
  std::string input;
  std::size_t t = 0;
  std::size_t n = 0;
  std::vector<double> epsilons{1.0, 0.1, 0.01, 0.001};
  Output output;
};

int run_limit_cmd(const LimitArgs& args) {
  const auto a = load_ultra_data(args.input);
  require_tau_data(a.size(), args.t, args.n);
  const auto experiment = run_limit(a, args.t, args.n, args.epsilons);
  args.output.write(dump(experiment.to_json()));
  return experiment.sandwich_holds() && experiment.gaps_monotone() ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Discrete and ultradiscrete Toda molecule: solvers and cross-checks"};
  app.require_subcommand(1);

  const std::vector<std::string> kinds{"discrete", "ultra"};

  EvolveArgs evolve;
  auto* evolve_cmd = app.add_subcommand("evolve", "Evolve initial data by the recurrences");
  evolve_cmd->add_option("--kind", evolve.kind, "discrete | ultra")
      ->check(CLI::IsMember(kinds));
  evolve_cmd->add_option("--input", evolve.input, "Initial data file")->required();
  evolve_cmd->add_option("--tmax", evolve.t_max, "Last time step (clipped to M - 1)");
  evolve_cmd->add_option("--format", evolve.format, "json | csv")
      ->check(CLI::IsMember({"json", "csv"}));
  evolve_cmd->add_option("--var", evolve.variable, "Table for csv output: q | e")
      ->check(CLI::IsMember({"q", "e"}));
  evolve_cmd->add_option("--output", evolve.output.path, "Write to file instead of stdout");

  TauArgs tau;
  auto* tau_cmd = app.add_subcommand("tau", "Compute one tau value by a chosen route");
  tau_cmd->add_option("--kind", tau.kind, "discrete | ultra")->check(CLI::IsMember(kinds));
  tau_cmd->add_option("--route", tau.route, "recurrence | hankel | paths | shortest")
      ->check(CLI::IsMember({"recurrence", "hankel", "paths", "shortest"}));
  tau_cmd->add_option("--input", tau.input, "Initial data file")->required();
  tau_cmd->add_option("--t", tau.t, "Time index")->required();
  tau_cmd->add_option("--n", tau.n, "Size index")->required();
  tau_cmd->add_option("--format", tau.format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));
  tau_cmd->add_option("--output", tau.output.path, "Write to file instead of stdout");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run the cross-verification matrix");
  verify_cmd->add_option("--seed", verify.options.seed, "Base seed");
  verify_cmd->add_option("--instances", verify.options.instances, "Random instances per suite");
  verify_cmd->add_option("--max-t", verify.options.max_t, "Largest t for family checks");
  verify_cmd->add_option("--max-n", verify.options.max_n, "Largest n for family checks");
  verify_cmd->add_flag("--inject-fault", verify.options.inject_fault,
                       "Perturb one tau entry to exercise failure reporting");
  verify_cmd->add_option("--output", verify.output.path, "Write to file instead of stdout");

  CountArgs count;
  auto* count_cmd = app.add_subcommand("count", "Count non-intersecting path families");
  count_cmd->add_option("--t", count.t, "Time index")->required();
  count_cmd->add_option("--n", count.n, "Number of paths")->required();
  count_cmd->add_flag("--tabular", count.tabular, "Count tabular families only");
  count_cmd->add_option("--output", count.output.path, "Write to file instead of stdout");

  LimitArgs limit;
  auto* limit_cmd = app.add_subcommand("limit", "Soft-min gap as eps goes to 0");
  limit_cmd->add_option("--input", limit.input, "Ultradiscrete initial data file")->required();
  limit_cmd->add_option("--t", limit.t, "Time index")->required();
  limit_cmd->add_option("--n", limit.n, "Number of paths")->required();
  limit_cmd->add_option("--epsilons", limit.epsilons, "Comma separated eps values")
      ->delimiter(',');
  limit_cmd->add_option("--output", limit.output.path, "Write to file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*evolve_cmd) {
      return run_evolve(evolve);
    }
    if (*tau_cmd) {
      return run_tau(tau);
    }
    if (*verify_cmd) {
      return run_verify(verify);
    }
    if (*count_cmd) {
      return run_count(count);
    }
    return run_limit_cmd(limit);
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what()
              << "\nhint: the enumeration route is infeasible at this size; try --route "
                 "hankel (discrete) or --route shortest (ultra)\n";
    return kResource;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const DataExhaustedError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::logic_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kResource;
  }
}
