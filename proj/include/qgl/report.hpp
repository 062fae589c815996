#pragma once
// Deterministic check reports: stable key order, canonical scalar strings,
// byte-identical output for identical (config, seed).

#include <json.hpp>
#include <string>
#include <vector>

namespace qgl {

struct Check {
  std::string name;
  std::string ref;      // stable identity label for the verified statement
  std::string status;   // pass | fail | resolved-with-convention
  int residual_nonzeros = 0;
  double residual = 0.0;          // numeric-mode magnitude, 0 for exact checks
  std::string convention;         // populated for resolved-with-convention rows
  bool passed() const { return status != "fail"; }
};

struct Report {
  int n = 2;
  std::string mode = "both";
  unsigned seed = 0;
  std::string version;
  nlohmann::ordered_json conventions = nlohmann::ordered_json::object();
  std::vector<Check> checks;
  nlohmann::ordered_json artifacts = nlohmann::ordered_json::object();

  bool all_passed() const;
  nlohmann::ordered_json to_json() const;
  std::string text() const;
};

extern const char* kVersion;

}  // namespace qgl
