// Command-line front end: verification suites, connection/limit/metric
// inspection, the numeric star-structure checks, and normal ordering.
//
// Exit codes: 0 success, 1 a verification check failed, 2 bad input,
// 3 structural singularity encountered.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "qgl/suites.hpp"

namespace {

using namespace qgl;

void write_json(const std::string& path, const nlohmann::ordered_json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file: " + path);
  out << j.dump(2) << "\n";
}

nlohmann::ordered_json meta_json(int n, const std::string& mode, unsigned seed) {
  return {{"n", n},
          {"mode", mode},
          {"seed", seed},
          {"version", kVersion},
          {"conventions", default_conventions()}};
}

GPParams parse_params(const std::string& l1, const std::string& l2) {
  return {Scalar::parse(l1), Scalar::parse(l2)};
}

nlohmann::ordered_json matrix_entries(const Mat& m) {
  auto entries = nlohmann::ordered_json::array();
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      if (!m.at(r, c).is_zero()) entries.push_back({r, c, m.at(r, c).str()});
  return entries;
}

int run_verify_cmd(const RunConfig& cfg, const std::string& json_path) {
  Report rep = run_verify(cfg);
  std::cout << rep.text();
  if (!json_path.empty()) write_json(json_path, rep.to_json());
  return rep.all_passed() ? 0 : 1;
}

int run_connection_cmd(int n, const std::string& l1, const std::string& l2,
                       const std::string& json_path) {
  if (n < 1 || n > 3) throw std::invalid_argument("n must be between 1 and 3");
  GPParams p = parse_params(l1, l2);
  const Geometry& g = cached_geometry(n);
  Mat sw = g.sigma_omega(p);
  Mat nb = nabla0(g, sw);
  int torsion_nz = torsion(g, nb).nonzero_count();
  std::cout << "canonical connection (n=" << n << ", parameters " << p.lambda1.str() << ", "
            << p.lambda2.str() << ")\n";
  std::cout << "nonzero coefficients (row = 2-tensor index, col = form index):\n";
  for (int r = 0; r < nb.rows(); ++r)
    for (int c = 0; c < nb.cols(); ++c)
      if (!nb.at(r, c).is_zero())
        std::cout << "  [" << r << "," << c << "] " << nb.at(r, c).str() << "\n";
  std::cout << "torsion residual nonzeros: " << torsion_nz << "\n";
  if (!json_path.empty()) {
    nlohmann::ordered_json j;
    j["meta"] = meta_json(n, "exact", 0);
    j["connection"] = {{"parameters", {p.lambda1.str(), p.lambda2.str()}},
                       {"nonzeros", matrix_entries(nb)},
                       {"torsion_residual_nonzeros", torsion_nz}};
    write_json(json_path, j);
  }
  return torsion_nz == 0 ? 0 : 1;
}

int run_limit_cmd(int n, const std::string& l1, const std::string& l2,
                  const std::string& json_path) {
  if (n < 1 || n > 3) throw std::invalid_argument("n must be between 1 and 3");
  GPParams p = parse_params(l1, l2);
  const Geometry& g = cached_geometry(n);
  LimitResult lr = commutative_limit(g, p);
  if (!lr.finite) {
    std::cerr << "limit does not exist: " << lr.singular_reason << "\n";
    return 3;
  }
  std::cout << "q -> 1 limit (n=" << n << ")\n";
  std::cout << "mu1=" << lr.mu1 << " mu2=" << lr.mu2 << " gamma0=" << lr.gamma0
            << " mu0=" << lr.mu0 << "\n";
  std::cout << "closed form matches entrywise evaluation: " << (lr.match ? "yes" : "no") << "\n";
  if (!json_path.empty()) {
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : lr.evaluated) {
      auto jr = nlohmann::ordered_json::array();
      for (const Rat& v : row) jr.push_back(v.str());
      rows.push_back(jr);
    }
    nlohmann::ordered_json j;
    j["meta"] = meta_json(n, "exact", 0);
    j["limit"] = {{"parameters", {p.lambda1.str(), p.lambda2.str()}},
                  {"mu1", lr.mu1.str()},
                  {"mu2", lr.mu2.str()},
                  {"gamma0", lr.gamma0.str()},
                  {"mu0", lr.mu0.str()},
                  {"match", lr.match},
                  {"matrix", rows}};
    write_json(json_path, j);
  }
  return lr.match ? 0 : 1;
}

int run_metric_cmd(int n, const std::string& l1, const std::string& l2,
                   const std::string& json_path) {
  if (n < 1 || n > 2) throw std::invalid_argument("n must be 1 or 2 for the metric solver");
  GPParams p = parse_params(l1, l2);
  const Geometry& g = cached_geometry(n);
  Mat sw = g.sigma_omega(p);
  Mat nb = nabla0(g, sw);
  MetricSolution ms = metric_solver(g, sw, nb);
  std::cout << "invariant symmetric compatible metrics (n=" << n << ", parameters "
            << p.lambda1.str() << ", " << p.lambda2.str() << ")\n";
  std::cout << "solution space dimension: " << ms.dimension() << "\n";
  for (int i = 0; i < ms.dimension(); ++i)
    std::cout << "  basis " << i << ": "
              << (ms.nondegenerate[i] ? "nondegenerate" : "degenerate") << "\n";
  if (!json_path.empty()) {
    auto basis = nlohmann::ordered_json::array();
    for (int i = 0; i < ms.dimension(); ++i) {
      auto row = nlohmann::ordered_json::array();
      for (const Scalar& s : ms.basis[i]) row.push_back(s.str());
      basis.push_back({{"coefficients", row}, {"nondegenerate", bool(ms.nondegenerate[i])}});
    }
    nlohmann::ordered_json j;
    j["meta"] = meta_json(n, "exact", 0);
    j["metric"] = {{"parameters", {p.lambda1.str(), p.lambda2.str()}},
                   {"dimension", ms.dimension()},
                   {"basis", basis}};
    write_json(json_path, j);
  }
  return 0;
}

int run_involution_cmd(int n, const std::string& json_path) {
  RunConfig cfg;
  cfg.n = n;
  cfg.mode = "numeric";
  cfg.suites = {"involution"};
  return run_verify_cmd(cfg, json_path);
}

Word parse_word(const std::string& text) {
  Word w;
  size_t i = 0;
  auto fail = [&](const std::string& msg) { throw ParseError(msg, i); };
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    int kind = 0;
    if (text.compare(i, 2, "dT") == 0) {
      kind = 1;
      i += 2;
    } else if (text[i] == 'T') {
      kind = 0;
      i += 1;
    } else {
      fail("expected T or dT");
    }
    if (i >= text.size() || text[i] != '[') fail("expected [");
    ++i;
    auto read_int = [&]() {
      size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (i == start) fail("expected index");
      return std::stoi(text.substr(start, i - start));
    };
    int a = read_int();
    if (i >= text.size() || text[i] != ',') fail("expected ,");
    ++i;
    int b = read_int();
    if (i >= text.size() || text[i] != ']') fail("expected ]");
    ++i;
    if (a < 1 || b < 1) fail("indices are 1-based");
    w.push_back({kind, a - 1, b - 1});
  }
  return w;
}

int run_rewrite_cmd(int n, const std::string& word_text, const std::string& mode,
                    long budget, const std::string& json_path) {
  if (n < 1 || n > 3) throw std::invalid_argument("n must be between 1 and 3");
  RuleMode rm;
  if (mode == "t")
    rm = RuleMode::t_only;
  else if (mode == "t-dt")
    rm = RuleMode::t_and_dt;
  else
    throw std::invalid_argument("mode must be t or t-dt");
  Word w = parse_word(word_text);
  for (const Letter& l : w) {
    if (l.i >= n || l.j >= n) throw std::invalid_argument("generator index exceeds n");
    if (l.kind == 1 && rm == RuleMode::t_only)
      throw std::invalid_argument("dT letters require mode t-dt");
  }
  RewriteSystem rs = RewriteSystem::derive(n, rm);
  NCPoly nf = rs.normal_order(NCPoly::monomial(w, Scalar(1)), budget);
  std::cout << nf.str() << "\n";
  if (!json_path.empty()) {
    nlohmann::ordered_json j;
    j["meta"] = meta_json(n, "exact", 0);
    j["rewrite"] = {{"input", word_text}, {"normal_form", nf.str()}};
    write_json(json_path, j);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification toolkit for a q-deformed matrix-group geometry"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string json_path;
  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--n", cfg.n, "matrix size (1-3)")->default_val(2);
  verify->add_option("--mode", cfg.mode, "exact | numeric | both")->default_val("both");
  verify->add_option("--seed", cfg.seed, "seed for randomized members")->default_val(0);
  verify->add_option("--suites", cfg.suites,
                     "suites to run (rmatrix, bimodule, calculus, connection, ncpoly, involution, all)")
      ->delimiter(',');
  verify->add_flag("--allow-heavy", cfg.allow_heavy, "enable the slowest optional checks");
  verify->add_option("--json", json_path, "write the JSON report to this path");

  int cn = 2;
  std::string l1 = "q^-2", l2 = "q^2", cjson;
  auto* conn = app.add_subcommand("connection", "print the canonical connection");
  conn->add_option("--n", cn)->default_val(2);
  conn->add_option("--lambda1", l1)->default_val("q^-2");
  conn->add_option("--lambda2", l2)->default_val("q^2");
  conn->add_option("--json", cjson);

  int ln = 2;
  std::string ll1 = "1", ll2 = "1", ljson;
  auto* limit = app.add_subcommand("limit", "q -> 1 limit of the canonical connection");
  limit->add_option("--n", ln)->default_val(2);
  limit->add_option("--lambda1", ll1)->default_val("1");
  limit->add_option("--lambda2", ll2)->default_val("1");
  limit->add_option("--json", ljson);

  int mn = 2;
  std::string ml1 = "q^-2", ml2 = "q^2", mjson;
  auto* metric = app.add_subcommand("metric", "solve for invariant compatible metrics");
  metric->add_option("--n", mn)->default_val(2);
  metric->add_option("--lambda1", ml1)->default_val("q^-2");
  metric->add_option("--lambda2", ml2)->default_val("q^2");
  metric->add_option("--json", mjson);

  int in_ = 2;
  std::string ijson;
  auto* inv = app.add_subcommand("involution", "numeric star-structure checks on the unit circle");
  inv->add_option("--n", in_)->default_val(2);
  inv->add_option("--json", ijson);

  int rn = 2;
  std::string word, rmode = "t-dt", rjson;
  long budget = 2'000'000;
  auto* rewrite = app.add_subcommand("rewrite", "normal-order a word in the generators");
  rewrite->add_option("--n", rn)->default_val(2);
  rewrite->add_option("--word", word, "e.g. \"dT[1,1] T[2,1]\" (1-based)")->required();
  rewrite->add_option("--mode", rmode, "t | t-dt")->default_val("t-dt");
  rewrite->add_option("--budget", budget, "rewriting step budget")->default_val(2'000'000);
  rewrite->add_option("--json", rjson);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (verify->parsed()) return run_verify_cmd(cfg, json_path);
    if (conn->parsed()) return run_connection_cmd(cn, l1, l2, cjson);
    if (limit->parsed()) return run_limit_cmd(ln, ll1, ll2, ljson);
    if (metric->parsed()) return run_metric_cmd(mn, ml1, ml2, mjson);
    if (inv->parsed()) return run_involution_cmd(in_, ijson);
    if (rewrite->parsed()) return run_rewrite_cmd(rn, word, rmode, budget, rjson);
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const NonTermination& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const SingularMatrix& e) {
    std::cerr << "structural singularity: " << e.what() << "\n";
    return 3;
  } catch (const SingularLimit& e) {
    std::cerr << "structural singularity: " << e.what() << "\n";
    return 3;
  } catch (const SingularAntipodeSystem& e) {
    std::cerr << "structural singularity: " << e.what() << "\n";
    return 3;
  } catch (const SingularBasisChange& e) {
    std::cerr << "structural singularity: " << e.what() << "\n";
    return 3;
  } catch (const NotAutomorphism& e) {
    std::cerr << "structural singularity: " << e.what() << "\n";
    return 3;
  } catch (const PoleAtPoint& e) {
    std::cerr << "structural singularity: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
