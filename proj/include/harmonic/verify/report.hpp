#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "harmonic/bigmath/ball.hpp"
#include "harmonic/bounds/catalog.hpp"

namespace harmonic {

struct Param {
  std::string key;
  std::variant<std::int64_t, std::string> value;
};

/// One certified (or not) claim.
struct Record {
  std::string check;
  std::vector<Param> params;
  Verdict verdict = Verdict::undecided;
  std::string detail;          // e.g. "lower" for which side attained equality
  std::optional<Ball> margin;  // positive when the claim holds with room to spare
  std::optional<Ball> value;   // the quantity the claim is about, when useful to show
  std::uint32_t precision_bits = 0;
};

struct Summary {
  std::size_t pass = 0;
  std::size_t equality = 0;
  std::size_t fail = 0;
  std::size_t undecided = 0;

  std::size_t total() const { return pass + equality + fail + undecided; }
};

class VerificationReport {
 public:
  void add(Record record) { records_.push_back(std::move(record)); }
  void append(VerificationReport&& other);

  const std::vector<Record>& records() const { return records_; }
  Summary summary() const;
  /// No fail and no undecided records.
  bool overall_pass() const;

 private:
  std::vector<Record> records_;
};

/// Record for a bound check; params are {id, n}.
Record to_record(const BoundCheck& check);

}  // namespace harmonic
