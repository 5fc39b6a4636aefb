#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "harmonic/bounds/catalog.hpp"
#include "harmonic/verify/report.hpp"

namespace harmonic::cli {

enum class OutputFormat { table, json, csv };

/// Throws std::invalid_argument for anything but table, json, csv.
OutputFormat parse_format(std::string_view name);

/// Fixed CSV header of the bounds command.
inline constexpr std::string_view kBoundsCsvHeader =
    "bound_id,n,lower_mid,lower_rad,target_mid,target_rad,upper_mid,upper_rad,verdict,"
    "lower_margin_mid,lower_margin_rad,upper_margin_mid,upper_margin_rad";

/// Fixed CSV header of report renderings.
inline constexpr std::string_view kReportCsvHeader =
    "check,params,verdict,detail,margin_mid,margin_rad,value_mid,value_rad,precision_bits";

std::string render_bound_checks(const std::vector<BoundCheck>& checks, OutputFormat format);
std::string render_report(const VerificationReport& report, OutputFormat format);

/// 0 when everything passed or met a declared equality, 1 on any fail,
/// otherwise 3 on any undecided.
int exit_code_for(const Summary& summary);

}  // namespace harmonic::cli
