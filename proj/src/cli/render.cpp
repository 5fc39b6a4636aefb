#include "harmonic/cli/render.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <variant>

#include <json.hpp>

#include "harmonic/bigmath/format.hpp"

namespace harmonic::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string param_value(const Param& p) {
  return std::visit(
      [](const auto& v) -> std::string {
        if constexpr (std::is_same_v<std::decay_t<decltype(v)>, std::string>) {
          return v;
        } else {
          return std::to_string(v);
        }
      },
      p.value);
}

std::string params_text(const std::vector<Param>& params) {
  std::string out;
  for (const Param& p : params) {
    if (!out.empty()) out += ';';
    out += p.key + "=" + param_value(p);
  }
  return out;
}

Json params_json(const std::vector<Param>& params) {
  Json obj = Json::object();
  for (const Param& p : params) {
    std::visit([&](const auto& v) { obj[p.key] = v; }, p.value);
  }
  return obj;
}

Json optional_decimal(const std::optional<Ball>& b, bool mid) {
  if (!b) return nullptr;
  const DecimalBall d = to_decimal(*b);
  return mid ? d.mid : d.rad;
}

std::string csv_decimal(const std::optional<Ball>& b, bool mid) {
  if (!b) return "";
  const DecimalBall d = to_decimal(*b);
  return mid ? d.mid : d.rad;
}

Json summary_json(const Summary& s) {
  Json j = Json::object();
  j["pass"] = s.pass;
  j["equality"] = s.equality;
  j["fail"] = s.fail;
  j["undecided"] = s.undecided;
  return j;
}

std::string verdict_text(const Record& r) {
  std::string v(verdict_name(r.verdict));
  if (!r.detail.empty() && r.check == "bound") v += "(" + r.detail + ")";
  return v;
}

std::string summary_line(const Summary& s) {
  std::ostringstream out;
  out << "summary: pass " << s.pass << ", equality " << s.equality << ", fail " << s.fail
      << ", undecided " << s.undecided << '\n';
  return out.str();
}

// Quotes a CSV field only when it needs it.
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

}  // namespace

OutputFormat parse_format(std::string_view name) {
  if (name == "table") return OutputFormat::table;
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  throw std::invalid_argument("unknown format: " + std::string(name));
}

int exit_code_for(const Summary& summary) {
  if (summary.fail > 0) return 1;
  if (summary.undecided > 0) return 3;
  return 0;
}

std::string render_bound_checks(const std::vector<BoundCheck>& checks, OutputFormat format) {
  std::ostringstream out;
  switch (format) {
    case OutputFormat::csv: {
      out << kBoundsCsvHeader << '\n';
      for (const BoundCheck& c : checks) {
        const DecimalBall lo = to_decimal(c.lower);
        const DecimalBall t = to_decimal(c.target);
        const DecimalBall up = to_decimal(c.upper);
        const DecimalBall lm = to_decimal(c.lower_margin);
        const DecimalBall um = to_decimal(c.upper_margin);
        out << c.id << ',' << c.n << ',' << lo.mid << ',' << lo.rad << ',' << t.mid << ',' << t.rad
            << ',' << up.mid << ',' << up.rad << ',' << csv_field(c.label()) << ',' << lm.mid
            << ',' << lm.rad << ',' << um.mid << ',' << um.rad << '\n';
      }
      break;
    }
    case OutputFormat::json: {
      VerificationReport report;
      Json records = Json::array();
      for (const BoundCheck& c : checks) {
        Record r = to_record(c);
        Json j = Json::object();
        j["check"] = r.check;
        j["params"] = params_json(r.params);
        j["verdict"] = verdict_name(r.verdict);
        j["label"] = c.label();
        j["margin_mid"] = optional_decimal(r.margin, true);
        j["margin_rad"] = optional_decimal(r.margin, false);
        j["precision_bits"] = r.precision_bits;
        j["target"] = target_name(find_bound(c.id).target);
        for (const auto& [key, ball] : {std::pair{"lower", &c.lower}, std::pair{"target_value", &c.target},
                                        std::pair{"upper", &c.upper},
                                        std::pair{"lower_margin", &c.lower_margin},
                                        std::pair{"upper_margin", &c.upper_margin}}) {
          const DecimalBall d = to_decimal(*ball);
          j[std::string(key) + "_mid"] = d.mid;
          j[std::string(key) + "_rad"] = d.rad;
        }
        records.push_back(std::move(j));
        report.add(std::move(r));
      }
      Json doc = Json::object();
      doc["summary"] = summary_json(report.summary());
      doc["records"] = std::move(records);
      out << doc.dump(2) << '\n';
      break;
    }
    case OutputFormat::table: {
      VerificationReport report;
      for (const BoundCheck& c : checks) {
        out << c.id << "  n = " << c.n << "  [" << c.label() << "]  (" << c.precision_used.bits()
            << " bits)\n";
        out << "  lower         " << format_ball(c.lower) << '\n';
        out << "  target        " << format_ball(c.target) << '\n';
        out << "  upper         " << format_ball(c.upper) << '\n';
        out << "  lower margin  " << format_ball(c.lower_margin) << '\n';
        out << "  upper margin  " << format_ball(c.upper_margin) << '\n';
        report.add(to_record(c));
      }
      out << summary_line(report.summary());
      break;
    }
  }
  return out.str();
}

std::string render_report(const VerificationReport& report, OutputFormat format) {
  std::ostringstream out;
  switch (format) {
    case OutputFormat::csv:
      out << kReportCsvHeader << '\n';
      for (const Record& r : report.records()) {
        out << r.check << ',' << csv_field(params_text(r.params)) << ',' << verdict_name(r.verdict)
            << ',' << csv_field(r.detail) << ',' << csv_decimal(r.margin, true) << ','
            << csv_decimal(r.margin, false) << ',' << csv_decimal(r.value, true) << ','
            << csv_decimal(r.value, false) << ',' << r.precision_bits << '\n';
      }
      break;
    case OutputFormat::json: {
      Json records = Json::array();
      for (const Record& r : report.records()) {
        Json j = Json::object();
        j["check"] = r.check;
        j["params"] = params_json(r.params);
        j["verdict"] = verdict_name(r.verdict);
        j["margin_mid"] = optional_decimal(r.margin, true);
        j["margin_rad"] = optional_decimal(r.margin, false);
        j["precision_bits"] = r.precision_bits;
        if (!r.detail.empty()) j["detail"] = r.detail;
        if (r.value) {
          j["value_mid"] = optional_decimal(r.value, true);
          j["value_rad"] = optional_decimal(r.value, false);
        }
        records.push_back(std::move(j));
      }
      Json doc = Json::object();
      doc["summary"] = summary_json(report.summary());
      doc["records"] = std::move(records);
      out << doc.dump(2) << '\n';
      break;
    }
    case OutputFormat::table:
      for (const Record& r : report.records()) {
        out << std::left << std::setw(20) << r.check << ' ' << std::setw(28)
            << params_text(r.params) << ' ' << std::setw(16) << verdict_text(r);
        if (r.value) out << "  value " << format_ball(*r.value);
        if (r.margin) out << "  margin " << format_ball(*r.margin);
        if (!r.detail.empty() && r.check != "bound") out << "  " << r.detail;
        out << '\n';
      }
      out << summary_line(report.summary());
      break;
  }
  return out.str();
}

}  // namespace harmonic::cli
