#include "harmonic/verify/report.hpp"

#include <iterator>

namespace harmonic {

void VerificationReport::append(VerificationReport&& other) {
  records_.insert(records_.end(), std::make_move_iterator(other.records_.begin()),
                  std::make_move_iterator(other.records_.end()));
  other.records_.clear();
}

Summary VerificationReport::summary() const {
  Summary s;
  for (const Record& r : records_) {
    switch (r.verdict) {
      case Verdict::pass: ++s.pass; break;
      case Verdict::equality: ++s.equality; break;
      case Verdict::fail: ++s.fail; break;
      case Verdict::undecided: ++s.undecided; break;
    }
  }
  return s;
}

bool VerificationReport::overall_pass() const {
  const Summary s = summary();
  return s.fail == 0 && s.undecided == 0;
}

Record to_record(const BoundCheck& check) {
  Record r;
  r.check = "bound";
  r.params = {{"id", check.id}, {"n", static_cast<std::int64_t>(check.n)}};
  r.verdict = check.verdict;
  const std::string label = check.label();
  if (const auto open = label.find('('); open != std::string::npos) {
    r.detail = label.substr(open + 1, label.size() - open - 2);
  }
  r.margin = check.binding_margin();
  r.precision_bits = check.precision_used.bits();
  return r;
}

}  // namespace harmonic
