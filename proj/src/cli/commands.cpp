#include "harmonic/cli/commands.hpp"

#include <algorithm>
#include <iomanip>
#include <cstdint>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "harmonic/bigmath/format.hpp"
#include "harmonic/bounds/catalog.hpp"
#include "harmonic/cli/render.hpp"
#include "harmonic/error.hpp"
#include "harmonic/specfun/harmonic_numbers.hpp"
#include "harmonic/verify/checks.hpp"
#include "harmonic/verify/verify_all.hpp"

namespace harmonic::cli {

namespace {

struct Flags {
  std::uint64_t n = 0;
  bool exact = false;
  std::uint32_t precision = Precision::kDefaultBits;
  std::string bound = "all";
  std::string format = "table";
  std::uint64_t max_n = 1000;
  std::vector<std::string> checks;
  unsigned jobs = 1;
};

void add_precision(CLI::App* cmd, Flags& f) {
  cmd->add_option("--precision", f.precision, "Midpoint precision in bits")
      ->check(CLI::Range(Precision::kMinBits, Precision::kCapBits));
}

void add_format(CLI::App* cmd, Flags& f) {
  cmd->add_option("--format", f.format, "Output format")
      ->check(CLI::IsMember({"table", "json", "csv"}));
}

int cmd_eval(const Flags& f, std::ostream& out) {
  if (f.exact) {
    out << harmonic_exact(f.n).to_string() << '\n';
  } else {
    const Precision p(f.precision);
    out << format_ball(Ball::from_rational(harmonic_exact(f.n), p)) << '\n';
  }
  return kExitOk;
}

int cmd_bounds(const Flags& f, std::ostream& out, std::ostream& err) {
  std::vector<std::string> ids;
  if (f.bound == "all") {
    for (const BoundSpec& spec : catalog()) ids.push_back(spec.id);
  } else {
    try {
      ids.push_back(find_bound(f.bound).id);
    } catch (const UnknownBound& e) {
      err << "error: " << e.what() << '\n';
      return kExitUsage;
    }
  }
  const Precision p(f.precision);
  std::vector<BoundCheck> checks;
  for (const std::string& id : ids) {
    if (f.n < find_bound(id).domain_min) continue;
    checks.push_back(check_bound(id, f.n, p));
  }
  out << render_bound_checks(checks, parse_format(f.format));
  VerificationReport report;
  for (const BoundCheck& c : checks) report.add(to_record(c));
  return exit_code_for(report.summary());
}

int cmd_verify(const Flags& f, std::ostream& out, std::ostream& err) {
  VerifyOptions options;
  options.max_n = f.max_n;
  options.precision = Precision(f.precision);
  options.jobs = f.jobs;
  if (!f.checks.empty() && std::find(f.checks.begin(), f.checks.end(), "all") == f.checks.end()) {
    options.checks.clear();
    try {
      for (const std::string& name : f.checks) options.checks.push_back(parse_check_group(name));
    } catch (const std::invalid_argument& e) {
      err << "error: " << e.what() << '\n';
      return kExitUsage;
    }
  }
  const VerificationReport report = verify(options);
  out << render_report(report, parse_format(f.format));
  return exit_code_for(report.summary());
}

int cmd_compare(const Flags& f, std::ostream& out) {
  const Precision p(f.precision);
  const VerificationReport report = refinement_check(f.max_n, p);
  const OutputFormat format = parse_format(f.format);
  if (format != OutputFormat::table) {
    out << render_report(report, format);
    return exit_code_for(report.summary());
  }

  // Per bound: how many indices certify containment, and the implied H(n)
  // intervals at the largest index.
  out << "H(" << f.max_n << ") intervals implied by each bound:\n";
  const BoundEnclosures inner = implied_harmonic_interval("main", f.max_n, p);
  out << "  main        [" << format_ball(inner.lower) << ", " << format_ball(inner.upper) << "]\n";
  for (const std::string& id : refinement_targets()) {
    const BoundEnclosures outer = implied_harmonic_interval(id, f.max_n, p);
    out << "  " << std::left << std::setw(11) << id << " [" << format_ball(outer.lower) << ", "
        << format_ball(outer.upper) << "]\n";
  }
  out << "main interval inside each for n in [2, " << f.max_n << "]:\n";
  for (const std::string& id : refinement_targets()) {
    VerificationReport part;
    for (const Record& r : report.records()) {
      if (std::get<std::string>(r.params.front().value) == id) part.add(r);
    }
    const Summary s = part.summary();
    out << "  " << std::left << std::setw(11) << id << ' ' << s.pass << '/' << s.total()
        << " certified";
    if (s.fail > 0) out << ", " << s.fail << " fail";
    if (s.undecided > 0) out << ", " << s.undecided << " undecided";
    out << '\n';
  }
  return exit_code_for(report.summary());
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certified harmonic-number bounds and verification sweeps", "harmonic"};
  app.require_subcommand(1);
  Flags f;

  CLI::App* eval = app.add_subcommand("eval", "Evaluate H(n)");
  eval->add_option("n", f.n, "Index n >= 1")->required()->check(CLI::PositiveNumber);
  eval->add_flag("--exact", f.exact, "Print the exact fraction");
  add_precision(eval, f);

  CLI::App* bounds = app.add_subcommand("bounds", "Check catalog bounds at one index");
  bounds->add_option("n", f.n, "Index n >= 1")->required()->check(CLI::PositiveNumber);
  bounds->add_option("--bound", f.bound, "Bound id, or all");
  add_format(bounds, f);
  add_precision(bounds, f);

  CLI::App* verify_cmd = app.add_subcommand("verify", "Run verification sweeps");
  verify_cmd->add_option("--max-n", f.max_n, "Largest index swept")->check(CLI::Range(3, 100000000));
  verify_cmd->add_option("--checks", f.checks, "Comma-separated check groups, or all")
      ->delimiter(',');
  verify_cmd->add_option("--jobs", f.jobs, "Worker threads")->check(CLI::Range(1, 1024));
  add_format(verify_cmd, f);
  add_precision(verify_cmd, f);

  CLI::App* compare = app.add_subcommand("compare", "Check that the main bound refines the others");
  compare->add_option("--max-n", f.max_n, "Largest index compared")->check(CLI::Range(2, 100000000));
  add_format(compare, f);
  add_precision(compare, f);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (eval->parsed()) return cmd_eval(f, out);
    if (bounds->parsed()) return cmd_bounds(f, out, err);
    if (verify_cmd->parsed()) return cmd_verify(f, out, err);
    if (compare->parsed()) return cmd_compare(f, out);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace harmonic::cli
