#include <nlohmann/json.hpp>
#include <string>

#include "t2/io.hpp"

namespace t2 {

// Insertion-ordered JSON keeps the byte layout fixed across runs; deviations
// are printed as exact rational strings so no rounding sneaks in.
std::string export_report_json(const Report& report) {
  nlohmann::ordered_json root;
  root["schema"] = "t2/1";
  root["entries"] = nlohmann::ordered_json::array();
  for (const ReportEntry& entry : report.entries) {
    nlohmann::ordered_json row;
    row["id"] = entry.index;
    row["schema"] = entry.schema;
    row["pass"] = entry.pass;
    row["maxDeviation"] = entry.max_deviation.get_str();
    root["entries"].push_back(std::move(row));
  }
  root["summary"] = {{"pass", report.passed}, {"fail", report.failed}};
  return root.dump();
}

}  // namespace t2
