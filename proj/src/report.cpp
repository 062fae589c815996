#include "qgl/report.hpp"

#include <sstream>

namespace qgl {

const char* kVersion = "1.0.0";

bool Report::all_passed() const {
  for (const Check& c : checks)
    if (!c.passed()) return false;
  return true;
}

nlohmann::ordered_json Report::to_json() const {
  nlohmann::ordered_json j;
  j["meta"] = {{"n", n},
               {"mode", mode},
               {"seed", seed},
               {"version", version},
               {"conventions", conventions}};
  auto rows = nlohmann::ordered_json::array();
  for (const Check& c : checks) {
    nlohmann::ordered_json row;
    row["name"] = c.name;
    row["ref"] = c.ref;
    row["status"] = c.status;
    row["residual_nonzeros"] = c.residual_nonzeros;
    if (c.residual != 0.0) row["residual"] = c.residual;
    if (!c.convention.empty()) row["convention"] = c.convention;
    row["runtime_ms"] = 0;  // fixed for byte-reproducible reports
    rows.push_back(std::move(row));
  }
  j["checks"] = std::move(rows);
  j["artifacts"] = artifacts;
  return j;
}

std::string Report::text() const {
  std::ostringstream os;
  os << "verification report (n=" << n << ", mode=" << mode << ", seed=" << seed
     << ", version=" << version << ")\n";
  int passed = 0;
  for (const Check& c : checks) {
    os << "  [" << (c.passed() ? "PASS" : "FAIL") << "] " << c.name;
    if (c.status == "resolved-with-convention") os << " (convention: " << c.convention << ")";
    if (!c.passed()) os << " residual_nonzeros=" << c.residual_nonzeros;
    os << "\n";
    if (c.passed()) ++passed;
  }
  os << passed << "/" << checks.size() << " checks passed\n";
  return os.str();
}

}  // namespace qgl
