#pragma once

#include "vwb/rational.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace vwb {

using Json = nlohmann::ordered_json;

/// One cell where the two h^1 conventions disagree.
struct Discrepancy {
  std::string location;
  Json paper_value;
  Json derived_value;
};

/// Machine-readable result of one command, schema "vwb/1". Keys are
/// snake_case; integers are JSON numbers; rationals are {"num", "den"} string
/// pairs. `discrepancies` is nonempty exactly when a dual-convention
/// computation disagreed; `status` is "fail" only for violated invariants and
/// "unknown" for underdetermined answers.
struct Report {
  std::string command;
  Json inputs = Json::object();
  Json outputs = Json::object();
  std::vector<Discrepancy> discrepancies;
  std::string status = "pass";

  Json to_json() const;
  std::string to_text() const;  // dump with 2-space indent, trailing newline
  static Report from_json(const Json& j);
};

/// {"num": "...", "den": "..."} with decimal strings, exact at any size.
Json rational_json(const Rational& q);
Rational rational_from_json(const Json& j);

/// pass -> 0, fail -> 1, unknown -> 3 (2 is reserved for usage errors).
int exit_code_for_status(const std::string& status);

}  // namespace vwb
