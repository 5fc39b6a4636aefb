#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "harmonic/bigmath/precision.hpp"
#include "harmonic/verify/report.hpp"

namespace harmonic {

enum class CheckGroup { bounds, sharpness, g, epsilon, refinement, alt_tail, cm, algebra };

/// All groups in report order.
const std::vector<CheckGroup>& all_check_groups();
std::string_view check_group_name(CheckGroup g);
/// Throws std::invalid_argument for an unknown name.
CheckGroup parse_check_group(std::string_view name);

struct VerifyOptions {
  std::uint64_t max_n = 1000;
  Precision precision{};
  std::vector<CheckGroup> checks = all_check_groups();
  unsigned jobs = 1;
};

/// Runs the selected groups. Work is split into independent items that may run
/// on `jobs` threads; the report is assembled in item order, so its content
/// does not depend on the thread count. Requires max_n >= 3.
VerificationReport verify(const VerifyOptions& options);

/// Every group at the given size and precision, single-threaded.
VerificationReport verify_all(std::uint64_t max_n, Precision p);

}  // namespace harmonic
