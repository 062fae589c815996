#pragma once
// Named verification suites producing deterministic check lists, and the
// top-level runner that assembles them into a report.

#include "qgl/connection.hpp"
#include "qgl/involution.hpp"
#include "qgl/ncpoly.hpp"
#include "qgl/report.hpp"

namespace qgl {

struct RunConfig {
  int n = 2;
  std::string mode = "both";        // exact | numeric | both
  unsigned seed = 0;
  std::vector<std::string> suites;  // empty means all
  bool allow_heavy = false;         // opt into the slowest optional checks
};

// Seeded generalized-permutation parameters: small nonzero rational
// functions of q (degree <= 2 numerators, monomial denominators).
std::vector<GPParams> random_gp_params(unsigned seed, int count);

// Shared per-n caches (the geometry is expensive to rebuild).
const Geometry& cached_geometry(int n);
const Projectors& cached_projectors(int n);

std::vector<Check> run_rmatrix_suite(const RunConfig& cfg);
std::vector<Check> run_bimodule_suite(const RunConfig& cfg);
std::vector<Check> run_calculus_suite(const RunConfig& cfg);
std::vector<Check> run_connection_suite(const RunConfig& cfg,
                                        nlohmann::ordered_json* artifacts);
std::vector<Check> run_ncpoly_suite(const RunConfig& cfg);
std::vector<Check> run_involution_suite(const RunConfig& cfg);

nlohmann::ordered_json default_conventions();

// Validates the config (throws std::invalid_argument) and runs the selected
// suites in a fixed order.
Report run_verify(const RunConfig& cfg);

}  // namespace qgl
