#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "qes/models.hpp"
#include "qes/repspace.hpp"
#include "qes/separation.hpp"
#include "qes/verify.hpp"

namespace py = pybind11;
using namespace qes;

namespace {

std::vector<Rational> parse_vec(const std::vector<std::string>& v) {
  std::vector<Rational> out;
  for (const auto& s : v) out.push_back(parse_rational(s));
  return out;
}

std::vector<std::string> str_vec(const std::vector<Rational>& v) {
  std::vector<std::string> out;
  for (const auto& r : v) out.push_back(to_string(r));
  return out;
}

py::dict root_dict(const RealRoot& r, int multiplicity) {
  py::dict d;
  d["rational"] = r.is_rational;
  if (r.is_rational) {
    d["value"] = to_string(r.value);
  } else {
    d["value"] = py::none();
    d["lo"] = to_string(r.lo);
    d["hi"] = to_string(r.hi);
    d["approx"] = to_double(r.value);
  }
  d["multiplicity"] = multiplicity;
  return d;
}

py::list py_spectrum(const std::string& space, int n, long k,
                     const std::vector<std::string>& gamma,
                     const std::string& a, const std::string& omega,
                     const std::string& b, int precision) {
  Spectrum s;
  if (space == "sphere") {
    SphereParams p(n, parse_vec(gamma), parse_rational(a), k);
    s = spectrum(matrix_rep(build_qes_sphere(p), n, k), precision);
  } else if (space == "euclid") {
    EuclidParams p(n, parse_vec(gamma), parse_rational(omega),
                   parse_rational(b), k);
    s = spectrum(matrix_rep(build_euclid(p, EuclidStage::h_hat_QES), n, k),
                 precision);
  } else {
    throw std::invalid_argument("space must be sphere or euclid");
  }
  py::list out;
  for (auto it = s.lines.rbegin(); it != s.lines.rend(); ++it)
    out.append(root_dict(it->value, it->multiplicity));
  return out;
}

std::string py_verify(const std::string& suite, int n, long k,
                      std::uint64_t seed, int precision) {
  return report_json(run_suite(suite, n, k, seed, precision));
}

py::list py_separate(int n, long k, const std::vector<std::string>& gamma,
                     const std::string& a, int precision) {
  if (n < 2) throw std::invalid_argument("separate requires n >= 2");
  SphereParams p(n, parse_vec(gamma), parse_rational(a), k);
  py::list out;
  for (const auto& ch : separate(p, precision)) {
    py::dict d;
    d["q"] = ch.q;
    d["A"] = str_vec(ch.A);
    d["c"] = str_vec(ch.c);
    d["m"] = ch.m;
    d["radial_charpoly"] = ch.radial_charpoly.monic().str("E");
    py::list en;
    for (const auto& rt : ch.energies.roots)
      en.append(root_dict(rt, rt.multiplicity));
    d["energies"] = en;
    py::list efs;
    for (const auto& ef : ch.eigenfunctions) {
      py::dict e;
      e["E"] = to_string(ef.E);
      py::list degs;
      for (const auto& f : ef.factors) degs.append(f.total_degree());
      e["factor_degrees"] = degs;
      efs.append(e);
    }
    d["eigenfunctions"] = efs;
    d["irrational_verified"] = ch.irrational_verified;
    out.append(d);
  }
  return out;
}

py::list py_contract(int n, long k, const std::vector<std::string>& gamma_p,
                     const std::string& omega, const std::string& b,
                     const std::vector<std::string>& eps) {
  EuclidParams p(n, parse_vec(gamma_p), parse_rational(omega),
                 parse_rational(b), k);
  py::list out;
  for (const auto& pr : contraction_probes(p, parse_vec(eps))) {
    py::dict d;
    d["eps"] = to_string(pr.eps);
    d["printed_diff"] = to_string(pr.diff_printed);
    d["corrected_diff"] = to_string(pr.diff_corrected);
    out.append(d);
  }
  return out;
}

py::list py_es_spectrum(int n, long k, const std::string& G) {
  py::list out;
  for (const auto& [e, m] : es_closed_spectrum(n, k, parse_rational(G)))
    out.append(py::make_tuple(to_string(e), m));
  return out;
}

}  // namespace

PYBIND11_MODULE(_qeslab, m) {
  m.doc() =
      "Exact spectra, separation chains and conformance checks for "
      "quasi-exactly-solvable models on S^n and E^n";
  m.def("spectrum", &py_spectrum, py::arg("space"), py::arg("n"), py::arg("k"),
        py::arg("gamma"), py::arg("a") = "0", py::arg("omega") = "0",
        py::arg("b") = "0", py::arg("precision") = 128,
        "Exact spectrum of the model operator on P_k, descending; rationals "
        "as 'p/q' strings.");
  m.def("verify", &py_verify, py::arg("suite") = "all", py::arg("n") = 2,
        py::arg("k") = 1, py::arg("seed") = 0, py::arg("precision") = 128,
        "Run a conformance suite; returns the JSON report.");
  m.def("separate", &py_separate, py::arg("n"), py::arg("k"), py::arg("gamma"),
        py::arg("a") = "0", py::arg("precision") = 128,
        "Multi-spectral separation chains on the sphere.");
  m.def("contract", &py_contract, py::arg("n"), py::arg("k"),
        py::arg("gamma_p"), py::arg("omega"), py::arg("b"),
        py::arg("eps") = std::vector<std::string>{"1/2", "1/4", "1/8", "1/16"},
        "Entrywise sphere-to-Euclidean contraction probes.");
  m.def("basis_dim", [](int n, long k) { return Basis::build(n, k).size(); },
        py::arg("n"), py::arg("k"), "dim P_k^(n) = C(n+k, n).");
  m.def("es_spectrum", &py_es_spectrum, py::arg("n"), py::arg("k"),
        py::arg("G"),
        "Closed-form exactly-solvable spectrum with multiplicities.");
}
