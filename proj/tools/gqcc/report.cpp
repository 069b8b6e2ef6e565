#include "gqcc/report.hpp"

#include <algorithm>

namespace gqcc::cli {
namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::size_t Report::failed() const {
  return static_cast<std::size_t>(std::count_if(records_.begin(), records_.end(), [](const Record& r) { return !r.pass; }));
}

Json Report::to_json() const {
  Json out;
  out["schema"] = kReportSchema;
  out["config"] = config_;
  Json recs = Json::array();
  for (const auto& r : records_) {
    Json j;
    j["name"] = r.name;
    j["inputs"] = r.inputs;
    j["mode"] = r.mode;
    j["observed"] = r.observed;
    j["expected"] = r.expected;
    j["pass"] = r.pass;
    recs.push_back(std::move(j));
  }
  out["records"] = std::move(recs);
  out["summary"] = {{"records", records_.size()}, {"passed", records_.size() - failed()}, {"failed", failed()}};
  return out;
}

void Report::write_csv(std::ostream& os) const {
  os << "name,mode,pass,observed,expected\n";
  for (const auto& r : records_)
    os << csv_field(r.name) << ',' << csv_field(r.mode) << ',' << (r.pass ? "true" : "false") << ','
       << csv_field(r.observed.dump()) << ',' << csv_field(r.expected.dump()) << '\n';
}

}  // namespace gqcc::cli
