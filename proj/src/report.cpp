#include "vwb/report.hpp"

#include <stdexcept>

namespace vwb {

Json Report::to_json() const {
  Json j;
  j["schema"] = "vwb/1";
  j["command"] = command;
  j["inputs"] = inputs;
  j["outputs"] = outputs;
  Json ds = Json::array();
  for (const auto& d : discrepancies) {
    Json e;
    e["location"] = d.location;
    e["paper_value"] = d.paper_value;
    e["derived_value"] = d.derived_value;
    ds.push_back(e);
  }
  j["discrepancies"] = ds;
  j["status"] = status;
  return j;
}

std::string Report::to_text() const { return to_json().dump(2) + "\n"; }

Report Report::from_json(const Json& j) {
  if (j.value("schema", "") != "vwb/1")
    throw std::invalid_argument("Report: unsupported schema");
  Report r;
  r.command = j.at("command").get<std::string>();
  r.inputs = j.at("inputs");
  r.outputs = j.at("outputs");
  for (const auto& e : j.at("discrepancies"))
    r.discrepancies.push_back({e.at("location").get<std::string>(), e.at("paper_value"),
                               e.at("derived_value")});
  r.status = j.at("status").get<std::string>();
  return r;
}

Json rational_json(const Rational& q) {
  Json j;
  j["num"] = num(q).str();
  j["den"] = den(q).str();
  return j;
}

Rational rational_from_json(const Json& j) {
  Integer n(j.at("num").get<std::string>());
  Integer d(j.at("den").get<std::string>());
  if (d == 0) throw std::invalid_argument("rational_from_json: zero denominator");
  return make_rational(n, d);
}

int exit_code_for_status(const std::string& status) {
  if (status == "pass") return 0;
  if (status == "fail") return 1;
  if (status == "unknown") return 3;
  throw std::invalid_argument("exit_code_for_status: unknown status " + status);
}

}  // namespace vwb
