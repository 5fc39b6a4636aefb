#include "harmonic/verify/verify_all.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <thread>

#include "harmonic/bounds/catalog.hpp"
#include "harmonic/error.hpp"
#include "harmonic/verify/checks.hpp"

namespace harmonic {

namespace {

using Task = std::function<VerificationReport()>;

// Bound sweeps are cut into blocks of indices so they spread across workers.
constexpr std::uint64_t kBoundBlock = 500;

const std::vector<Rational>& g_grid() {
  static const std::vector<Rational> grid{3, 4, 5, 10, 50, 100};
  return grid;
}

void add_bound_tasks(std::vector<Task>& tasks, std::uint64_t max_n, Precision p,
                     const std::shared_ptr<const HarmonicSums>& sums) {
  for (const BoundSpec& spec : catalog()) {
    for (std::uint64_t first = spec.domain_min; first <= max_n; first += kBoundBlock) {
      const std::uint64_t last = std::min(max_n, first + kBoundBlock - 1);
      tasks.push_back([id = spec.id, first, last, p, sums] {
        VerificationReport r;
        for (std::uint64_t n = first; n <= last; ++n) r.add(to_record(check_bound(id, n, p, sums.get())));
        return r;
      });
    }
  }
}

void add_group_tasks(std::vector<Task>& tasks, CheckGroup group, std::uint64_t max_n, Precision p) {
  switch (group) {
    case CheckGroup::bounds: break;  // handled by add_bound_tasks
    case CheckGroup::sharpness:
      tasks.push_back([=] { return sharpness_main(max_n, p); });
      break;
    case CheckGroup::g:
      tasks.push_back([=] { return g_positivity(g_grid(), p); });
      break;
    case CheckGroup::epsilon:
      tasks.push_back([=] { return epsilon_window(max_n, p); });
      break;
    case CheckGroup::refinement:
      tasks.push_back([=] { return refinement_check(max_n, p); });
      break;
    case CheckGroup::alt_tail:
      tasks.push_back([=] { return alt_tail_constants(max_n, p); });
      break;
    case CheckGroup::cm: {
      const Grid grid{Rational(1), Rational(1), 20};
      tasks.push_back([=] { return cm_spotcheck(StirlingKind::F, 2, grid, 4, p); });
      tasks.push_back([=] { return cm_spotcheck(StirlingKind::G, 1, grid, 4, p); });
      break;
    }
    case CheckGroup::algebra:
      tasks.push_back([] { return equality_algebra(); });
      break;
  }
}

std::vector<VerificationReport> run_tasks(const std::vector<Task>& tasks, unsigned jobs) {
  std::vector<VerificationReport> results(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        results[i] = tasks[i]();
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(tasks.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

}  // namespace

const std::vector<CheckGroup>& all_check_groups() {
  static const std::vector<CheckGroup> groups{
      CheckGroup::bounds,     CheckGroup::sharpness, CheckGroup::g,  CheckGroup::epsilon,
      CheckGroup::refinement, CheckGroup::alt_tail,  CheckGroup::cm, CheckGroup::algebra};
  return groups;
}

std::string_view check_group_name(CheckGroup g) {
  switch (g) {
    case CheckGroup::bounds: return "bounds";
    case CheckGroup::sharpness: return "sharpness";
    case CheckGroup::g: return "g";
    case CheckGroup::epsilon: return "epsilon";
    case CheckGroup::refinement: return "refinement";
    case CheckGroup::alt_tail: return "alt_tail";
    case CheckGroup::cm: return "cm";
    case CheckGroup::algebra: return "algebra";
  }
  return "?";
}

CheckGroup parse_check_group(std::string_view name) {
  for (CheckGroup g : all_check_groups()) {
    if (check_group_name(g) == name) return g;
  }
  throw std::invalid_argument("unknown check group: " + std::string(name));
}

VerificationReport verify(const VerifyOptions& options) {
  if (options.max_n < 3) throw DomainError("verification needs max_n >= 3");
  const Precision p = options.precision;

  // Groups run in canonical order whatever order they were requested in.
  std::vector<Task> tasks;
  for (CheckGroup group : all_check_groups()) {
    if (std::find(options.checks.begin(), options.checks.end(), group) == options.checks.end()) {
      continue;
    }
    if (group == CheckGroup::bounds) {
      const auto sums = std::make_shared<const HarmonicSums>(options.max_n, p);
      add_bound_tasks(tasks, options.max_n, p, sums);
    } else {
      add_group_tasks(tasks, group, options.max_n, p);
    }
  }

  VerificationReport report;
  for (VerificationReport& part : run_tasks(tasks, options.jobs)) report.append(std::move(part));
  return report;
}

VerificationReport verify_all(std::uint64_t max_n, Precision p) {
  VerifyOptions options;
  options.max_n = max_n;
  options.precision = p;
  return verify(options);
}

}  // namespace harmonic
