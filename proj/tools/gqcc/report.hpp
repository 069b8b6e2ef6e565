#pragma once

#include <cstddef>
#include <ostream>
#include <string>

#include <nlohmann/json.hpp>

namespace gqcc::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "qcc-report/1";

/// One check: pass/fail is decidable from the record alone.
struct Record {
  std::string name;
  Json inputs = Json::object();
  std::string mode;
  Json observed;
  Json expected;
  bool pass = true;
};

class Report {
 public:
  explicit Report(Json config) : config_(std::move(config)) {}

  void add(Record r) { records_.push_back(std::move(r)); }
  const std::vector<Record>& records() const { return records_; }
  std::size_t failed() const;
  bool all_passed() const { return failed() == 0; }

  Json to_json() const;
  /// name,mode,pass,observed,expected with JSON-encoded value columns.
  void write_csv(std::ostream& os) const;

 private:
  Json config_;
  std::vector<Record> records_;
};

}  // namespace gqcc::cli
