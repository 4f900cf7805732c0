#include "atomsched/cli.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <iostream>
#include <limits>
#include <optional>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "atomsched/catalog.hpp"
#include "atomsched/errors.hpp"
#include "atomsched/generator.hpp"
#include "atomsched/instance_io.hpp"
#include "atomsched/oracle.hpp"
#include "atomsched/results.hpp"
#include "atomsched/scr.hpp"
#include "atomsched/sweep.hpp"

namespace atomsched {
namespace {

using nlohmann::json;

std::int64_t parse_integer(std::string_view token, std::string_view what) {
  std::int64_t value = 0;
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end || token.empty()) {
    throw ValidationError(fmt::format("{}: '{}' is not an integer", what, token));
  }
  return value;
}

// Comma-separated integers and inclusive "a:b" ranges, e.g. "1,5" or "2:8".
std::vector<std::int64_t> parse_integer_set(std::string_view text, std::string_view what) {
  std::vector<std::int64_t> values;
  while (true) {
    const auto comma = text.find(',');
    const std::string_view token = text.substr(0, comma);
    const auto colon = token.find(':');
    if (colon == std::string_view::npos) {
      values.push_back(parse_integer(token, what));
    } else {
      const auto lo = parse_integer(token.substr(0, colon), what);
      const auto hi = parse_integer(token.substr(colon + 1), what);
      if (hi < lo) throw ValidationError(fmt::format("{}: empty range '{}'", what, token));
      if (hi - lo >= 1'000'000) throw ValidationError(fmt::format("{}: range '{}' too long", what, token));
      for (auto v = lo; v <= hi; ++v) values.push_back(v);
    }
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return values;
}

std::vector<int> to_ints(const std::vector<std::int64_t>& values, std::string_view what, int min) {
  std::vector<int> out;
  for (auto v : values) {
    if (v < min || v > std::numeric_limits<int>::max()) {
      throw ValidationError(fmt::format("{}: {} is out of range", what, v));
    }
    out.push_back(static_cast<int>(v));
  }
  return out;
}

std::string csv_field(std::string_view text) {
  if (text.find_first_of(",\"\n") == std::string_view::npos) return std::string(text);
  std::string out = "\"";
  for (char ch : text) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

void emit(const std::optional<std::string>& path, const std::string& content, std::ostream& out) {
  if (path) {
    write_file_atomic(*path, content);
  } else {
    out << content;
  }
}

json schedule_json(const ProblemInstance& instance, const Schedule& schedule) {
  json list = json::array();
  for (int n = 0; n < instance.size(); ++n) {
    const int start = schedule.starts[static_cast<std::size_t>(n)];
    list.push_back({{"appliance", n},
                    {"name", instance.appliance(n).name},
                    {"start", start},
                    {"time", clock_time(start, instance.slots())}});
  }
  return list;
}

std::string schedule_text(const ProblemInstance& instance, const Schedule& schedule) {
  std::size_t width = 4;
  for (const auto& a : instance.appliances()) width = std::max(width, a.name.size());
  std::string text = fmt::format("  {:>3}  {:<{}}  {:>5}  {}\n", "#", "name", width, "start", "time");
  for (int n = 0; n < instance.size(); ++n) {
    const int start = schedule.starts[static_cast<std::size_t>(n)];
    text += fmt::format("  {:>3}  {:<{}}  {:>5}  {}\n", n, instance.appliance(n).name, width, start,
                        clock_time(start, instance.slots()));
  }
  return text;
}

std::string schedule_csv(const ProblemInstance& instance, const Schedule& schedule,
                         std::string_view summary_header, std::string_view summary) {
  std::string text = fmt::format("appliance,name,start,time,{}\n", summary_header);
  for (int n = 0; n < instance.size(); ++n) {
    const int start = schedule.starts[static_cast<std::size_t>(n)];
    text += fmt::format("{},{},{},{},{}\n", n, csv_field(instance.appliance(n).name), start,
                        clock_time(start, instance.slots()), summary);
  }
  return text;
}

std::string_view unit_of(ObjectiveKind kind) { return kind == ObjectiveKind::Cost ? " cents" : ""; }

struct SolveOptions {
  std::string instance;
  std::string objective = "cost";
  double theta_d = 0.1;
  int n_d = 1;
  std::optional<int> max_iterations;
  std::string format = "text";
};

void run_solve(const SolveOptions& o, std::ostream& out) {
  const ObjectiveKind kind = parse_objective(o.objective);
  const ProblemInstance instance = load_instance(o.instance);
  ScrConfig config;
  config.theta_d = o.theta_d;
  config.n_d = o.n_d;
  config.max_iterations = o.max_iterations;
  const ScrResult r = successive_convex_relaxation(instance, kind, config);

  if (o.format == "json") {
    const json doc = {{"objective", std::string(to_string(kind))},
                      {"lb", r.lower_bound},
                      {"ub", r.upper_bound},
                      {"gap", r.gap()},
                      {"iterations", r.iterations},
                      {"schedule", schedule_json(instance, r.schedule)}};
    out << doc.dump(2) << '\n';
  } else if (o.format == "csv") {
    out << schedule_csv(instance, r.schedule, "objective,lb,ub,gap,iterations",
                        fmt::format("{},{},{},{},{}", to_string(kind), r.lower_bound,
                                    r.upper_bound, r.gap(), r.iterations));
  } else {
    out << fmt::format("objective    {}\n", to_string(kind));
    out << fmt::format("lower bound  {:.6f}{}\n", r.lower_bound, unit_of(kind));
    out << fmt::format("upper bound  {:.6f}{}\n", r.upper_bound, unit_of(kind));
    out << fmt::format("gap          {:.6f}{}\n", r.gap(), unit_of(kind));
    out << fmt::format("iterations   {}\n", r.iterations);
    out << "schedule\n" << schedule_text(instance, r.schedule);
  }
}

struct EnumerateOptions {
  std::string instance;
  std::string objective = "cost";
  std::uint64_t limit = kDefaultEnumerationLimit;
  int workers = 0;
  std::string format = "text";
};

void run_enumerate(const EnumerateOptions& o, std::ostream& out) {
  const ObjectiveKind kind = parse_objective(o.objective);
  const ProblemInstance instance = load_instance(o.instance);
  const OracleResult r = brute_force(instance, kind, o.limit, o.workers);
  const std::string evaluations = r.evaluations.str();

  if (o.format == "json") {
    const json doc = {{"objective", std::string(to_string(kind))},
                      {"optimum", r.objective_value},
                      {"evaluations", evaluations},
                      {"schedule", schedule_json(instance, r.schedule)}};
    out << doc.dump(2) << '\n';
  } else if (o.format == "csv") {
    out << schedule_csv(instance, r.schedule, "objective,optimum,evaluations",
                        fmt::format("{},{},{}", to_string(kind), r.objective_value, evaluations));
  } else {
    out << fmt::format("objective       {}\n", to_string(kind));
    out << fmt::format("global optimum  {:.6f}{}\n", r.objective_value, unit_of(kind));
    out << fmt::format("evaluations     {}\n", evaluations);
    out << "schedule\n" << schedule_text(instance, r.schedule);
  }
}

struct GenOptions {
  int users = 0;
  std::uint64_t seed = 0;
  std::optional<std::string> path;
};

void run_gen(const GenOptions& o, std::ostream& out) {
  emit(o.path, serialize_instance(generate_instance(o.users, o.seed)), out);
}

struct BenchOptions {
  std::string n_range = "2:8";
  std::string n_d_list = "1,5";
  std::string seeds = "1:20";
  std::string objective = "cost";
  double theta_d = 0.1;
  std::optional<std::string> path;
  std::string format = "csv";
  bool no_timing = false;
  int workers = 0;
};

void run_bench(const BenchOptions& o, std::ostream& out) {
  SweepSpec spec;
  spec.sizes = to_ints(parse_integer_set(o.n_range, "--n-range"), "--n-range", 1);
  spec.n_d_list = to_ints(parse_integer_set(o.n_d_list, "--n-d-list"), "--n-d-list", 1);
  for (auto s : parse_integer_set(o.seeds, "--seeds")) {
    if (s < 0) throw ValidationError(fmt::format("--seeds: {} is negative", s));
    spec.seeds.push_back(static_cast<std::uint64_t>(s));
  }
  spec.objective = parse_objective(o.objective);
  spec.base.theta_d = o.theta_d;
  spec.record_wall_time = !o.no_timing;
  spec.workers = o.workers;
  const auto rows = scr_sweep(spec);
  emit(o.path, o.format == "json" ? results_to_json(rows) : results_to_csv(rows), out);
}

}  // namespace

std::string clock_time(int slot, int slots) {
  if (slots <= 0 || slot < 0) throw ValidationError("clock_time needs a non-negative slot");
  const long long minutes = static_cast<long long>(slot % slots) * 1440 / slots;
  return fmt::format("{:02}:{:02}", minutes / 60, minutes % 60);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Atomic appliance scheduling by successive convex relaxation", "atomsched"};
  app.require_subcommand(1);
  const auto formats = CLI::IsMember({"text", "json", "csv"});
  const auto objectives = CLI::IsMember({"cost", "par"});

  SolveOptions solve;
  auto* solve_cmd = app.add_subcommand("solve", "Schedule an instance with successive relaxation");
  solve_cmd->add_option("instance", solve.instance, "Instance file")->required();
  solve_cmd->add_option("--objective", solve.objective, "cost or par")->check(objectives);
  solve_cmd->add_option("--theta-d", solve.theta_d, "Drop threshold");
  solve_cmd->add_option("--n-d", solve.n_d, "Drops per iteration");
  solve_cmd->add_option("--max-iterations", solve.max_iterations, "Relaxation cap (default: total start count)");
  solve_cmd->add_option("--format", solve.format, "text, json or csv")->check(formats);

  EnumerateOptions enumerate;
  auto* enum_cmd = app.add_subcommand("enumerate", "Global optimum by direct enumeration");
  enum_cmd->add_option("instance", enumerate.instance, "Instance file")->required();
  enum_cmd->add_option("--objective", enumerate.objective, "cost or par")->check(objectives);
  enum_cmd->add_option("--limit", enumerate.limit, "Largest feasible set to enumerate");
  enum_cmd->add_option("--workers", enumerate.workers, "Worker threads (0 = default)");
  enum_cmd->add_option("--format", enumerate.format, "text, json or csv")->check(formats);

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random catalog instance");
  gen_cmd->add_option("--n", gen.users, "Number of appliances")->required();
  gen_cmd->add_option("--seed", gen.seed, "Random seed")->required();
  gen_cmd->add_option("--out", gen.path, "Output file (default stdout)");

  BenchOptions bench;
  auto* bench_cmd = app.add_subcommand("bench", "Bound, gap and iteration sweep over random instances");
  bench_cmd->add_option("--n-range", bench.n_range, "Instance sizes, e.g. 2:8");
  bench_cmd->add_option("--n-d-list", bench.n_d_list, "Drop budgets, e.g. 1,5");
  bench_cmd->add_option("--seeds", bench.seeds, "Seeds, e.g. 1:20");
  bench_cmd->add_option("--objective", bench.objective, "cost or par")->check(objectives);
  bench_cmd->add_option("--theta-d", bench.theta_d, "Drop threshold");
  bench_cmd->add_option("--out", bench.path, "Output file (default stdout)");
  bench_cmd->add_option("--format", bench.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  bench_cmd->add_flag("--no-timing", bench.no_timing, "Write wall_ms as 0 for reproducible output");
  bench_cmd->add_option("--workers", bench.workers, "Worker threads (0 = default)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (*solve_cmd) run_solve(solve, out);
    if (*enum_cmd) run_enumerate(enumerate, out);
    if (*gen_cmd) run_gen(gen, out);
    if (*bench_cmd) run_bench(bench, out);
  } catch (const TooLargeError& e) {
    err << "error: enumeration too large: " << e.what() << '\n';
    return kExitTooLarge;
  } catch (const SolverError& e) {
    err << "error: " << e.what() << '\n';
    return kExitSolver;
  } catch (const IterationLimitError& e) {
    err << "error: " << e.what() << '\n';
    return kExitSolver;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  return kExitOk;
}

}  // namespace atomsched
