// Python bindings for the main operations: exact scalars, the R-matrix,
// verification runs, the canonical connection, limits, and normal ordering.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qgl/suites.hpp"

namespace py = pybind11;
using namespace qgl;

namespace {

std::vector<std::vector<std::string>> mat_strings(const Mat& m) {
  std::vector<std::vector<std::string>> out(m.rows());
  for (int r = 0; r < m.rows(); ++r) {
    out[r].reserve(m.cols());
    for (int c = 0; c < m.cols(); ++c) out[r].push_back(m.at(r, c).str());
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(pyqgl, m) {
  m.doc() = "exact verification toolkit for a q-deformed matrix-group geometry";

  py::class_<Scalar>(m, "Scalar")
      .def(py::init([](const std::string& text) { return Scalar::parse(text); }))
      .def("__str__", &Scalar::str)
      .def("__repr__", [](const Scalar& s) { return "Scalar('" + s.str() + "')"; })
      .def("__add__", [](const Scalar& a, const Scalar& b) { return a + b; })
      .def("__sub__", [](const Scalar& a, const Scalar& b) { return a - b; })
      .def("__mul__", [](const Scalar& a, const Scalar& b) { return a * b; })
      .def("__truediv__", [](const Scalar& a, const Scalar& b) { return a / b; })
      .def("__neg__", [](const Scalar& a) { return -a; })
      .def("__eq__", [](const Scalar& a, const Scalar& b) { return a == b; })
      .def("inverse", &Scalar::inverse)
      .def("pow", &Scalar::pow)
      .def("is_zero", &Scalar::is_zero)
      .def("evaluate",
           [](const Scalar& s, std::complex<double> q0) { return s.evaluate(q0); })
      .def("evaluate_rational",
           [](const Scalar& s, long num, long den) {
             return s.evaluate(Rat(num, den)).str();
           })
      .def("limit_at_one", [](const Scalar& s) { return s.limit_at_one().str(); })
      .def("finite_at_one", &Scalar::finite_at_one);

  m.def("q", [](int power) { return Scalar::q(power); }, py::arg("power") = 1);
  m.def("lam", [] { return Scalar::lambda(); });

  m.def("r_matrix", [](int n) { return mat_strings(build_r(n)); });
  m.def("r_matrix_inverse", [](int n) { return mat_strings(r_inverse(build_r(n))); });

  m.def(
      "verify_json",
      [](int n, const std::string& mode, unsigned seed,
         const std::vector<std::string>& suites, bool allow_heavy) {
        RunConfig cfg;
        cfg.n = n;
        cfg.mode = mode;
        cfg.seed = seed;
        cfg.suites = suites;
        cfg.allow_heavy = allow_heavy;
        return run_verify(cfg).to_json().dump(2);
      },
      py::arg("n") = 2, py::arg("mode") = "both", py::arg("seed") = 0,
      py::arg("suites") = std::vector<std::string>{}, py::arg("allow_heavy") = false);

  m.def(
      "connection",
      [](int n, const std::string& l1, const std::string& l2) {
        GPParams p{Scalar::parse(l1), Scalar::parse(l2)};
        const Geometry& g = cached_geometry(n);
        return mat_strings(nabla0(g, g.sigma_omega(p)));
      },
      py::arg("n") = 2, py::arg("lambda1") = "q^-2", py::arg("lambda2") = "q^2");

  m.def(
      "limit",
      [](int n, const std::string& l1, const std::string& l2) {
        GPParams p{Scalar::parse(l1), Scalar::parse(l2)};
        LimitResult lr = commutative_limit(cached_geometry(n), p);
        py::dict d;
        d["finite"] = lr.finite;
        if (!lr.finite) {
          d["reason"] = lr.singular_reason;
          return d;
        }
        d["mu1"] = lr.mu1.str();
        d["mu2"] = lr.mu2.str();
        d["gamma0"] = lr.gamma0.str();
        d["mu0"] = lr.mu0.str();
        d["match"] = lr.match;
        std::vector<std::vector<std::string>> rows;
        for (const auto& row : lr.evaluated) {
          std::vector<std::string> jr;
          for (const Rat& v : row) jr.push_back(v.str());
          rows.push_back(std::move(jr));
        }
        d["matrix"] = rows;
        return d;
      },
      py::arg("n") = 2, py::arg("lambda1") = "1", py::arg("lambda2") = "1");

  m.def(
      "normal_form",
      [](int n, const std::vector<std::tuple<std::string, int, int>>& word) {
        Word w;
        for (const auto& [kind, i, j] : word) {
          if (kind != "T" && kind != "dT") throw std::invalid_argument("kind must be T or dT");
          if (i < 1 || j < 1 || i > n || j > n)
            throw std::invalid_argument("indices are 1-based and bounded by n");
          w.push_back({kind == "dT" ? 1 : 0, i - 1, j - 1});
        }
        RewriteSystem rs = RewriteSystem::derive(n, RuleMode::t_and_dt);
        return rs.normal_order(NCPoly::monomial(w, Scalar(1))).str();
      },
      py::arg("n") = 2, py::arg("word") = std::vector<std::tuple<std::string, int, int>>{});

  m.def("anchor_residual",
        [](int n) { return anchor_residual_nonzeros(cached_geometry(n)); });
}
