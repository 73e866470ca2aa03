#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qes/models.hpp"
#include "qes/repspace.hpp"
#include "qes/separation.hpp"
#include "qes/verify.hpp"

using Json = nlohmann::ordered_json;
using namespace qes;

namespace {

struct Config {
  std::string space = "sphere";
  int n = 1;
  long k = 1;
  std::string gamma;  // comma-separated rationals
  std::string a = "0", omega = "0", b = "0";
  int precision = 128;
  std::uint64_t seed = 0;
  std::string format = "json";
  std::string out;
  std::string suite = "all";
};

void add_common(CLI::App* sub, Config& c) {
  sub->add_option("--space", c.space)->check(CLI::IsMember({"sphere", "euclid"}));
  sub->add_option("--n", c.n);
  sub->add_option("--k", c.k);
  sub->add_option("--gamma", c.gamma);
  sub->add_option("--a", c.a);
  sub->add_option("--omega", c.omega);
  sub->add_option("--b", c.b);
  sub->add_option("--precision", c.precision);
  sub->add_option("--seed", c.seed);
  sub->add_option("--format", c.format)->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("--out", c.out);
}

std::vector<Rational> parse_gamma(const std::string& s, size_t want) {
  std::vector<Rational> out;
  if (!s.empty()) {
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(parse_rational(tok));
  }
  if (out.empty()) out.assign(want, Rational(0));
  if (out.size() != want)
    throw std::invalid_argument("expected " + std::to_string(want) +
                                " gamma entries, got " +
                                std::to_string(out.size()));
  return out;
}

void validate(const Config& c) {
  if (c.n < 1) throw std::invalid_argument("n must be >= 1");
  if (c.k < 0) throw std::invalid_argument("k must be >= 0");
  if (c.precision < 8) throw std::invalid_argument("precision must be >= 8");
}

SphereParams sphere_params(const Config& c) {
  return SphereParams(c.n, parse_gamma(c.gamma, c.n + 1),
                      parse_rational(c.a), c.k);
}

EuclidParams euclid_params(const Config& c) {
  return EuclidParams(c.n, parse_gamma(c.gamma, c.n), parse_rational(c.omega),
                      parse_rational(c.b), c.k);
}

// Deterministic textual approximation for irrational values.
std::string approx_str(const Rational& r) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.15g", to_double(r));
  return buf;
}

Json root_json(const RealRoot& r, int multiplicity) {
  Json j;
  j["rational"] = r.is_rational;
  if (r.is_rational) {
    j["value"] = to_string(r.value);
  } else {
    j["value"] = nullptr;
    j["lo"] = to_string(r.lo);
    j["hi"] = to_string(r.hi);
    j["approx"] = approx_str(r.value);
  }
  j["multiplicity"] = multiplicity;
  return j;
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + "\"";
}

void root_csv(std::ostream& os, const RealRoot& r, int multiplicity) {
  if (r.is_rational)
    os << to_string(r.value) << ",1,,,";
  else
    os << ",0," << to_string(r.lo) << "," << to_string(r.hi) << ","
       << approx_str(r.value);
  os << "," << multiplicity;
}

void emit(const Config& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open output path: " + c.out);
  f << text;
}

std::string join_rats(const std::vector<Rational>& v, const char* sep = ",") {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i)
    s += (i ? sep : "") + to_string(v[i]);
  return s;
}

Json rats_json(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& r : v) a.push_back(to_string(r));
  return a;
}

int cmd_spectrum(const Config& c) {
  validate(c);
  Json doc;
  doc["command"] = "spectrum";
  doc["space"] = c.space;
  doc["n"] = c.n;
  doc["k"] = c.k;
  Spectrum sp;
  // Separation-constant labels per rational eigenvalue (sphere, n >= 2).
  std::map<Rational, std::vector<std::vector<Rational>>> labels;
  if (c.space == "sphere") {
    SphereParams p = sphere_params(c);
    doc["params"] = {{"gamma", rats_json(p.gamma)}, {"a", to_string(p.a)}};
    sp = spectrum(matrix_rep(build_qes_sphere(p), c.n, c.k), c.precision);
    if (c.n >= 2) {
      try {
        JointDecomposition jd = joint_eigenbasis(p, c.precision);
        for (const auto& bl : jd.blocks)
          for (const auto& rt : bl.roots.roots)
            if (rt.is_rational) labels[rt.value].push_back(bl.c);
      } catch (const std::exception&) {
        // Chain labels unavailable (irrational separation constants); the
        // spectrum itself is still exact.
      }
    }
  } else {
    EuclidParams p = euclid_params(c);
    doc["params"] = {{"gamma_p", rats_json(p.gamma_p)},
                     {"omega", to_string(p.omega)},
                     {"b", to_string(p.b)}};
    sp = spectrum(matrix_rep(build_euclid(p, EuclidStage::h_hat_QES), c.n, c.k),
                  c.precision);
  }
  // Descending by value; spectrum() returns ascending order.
  std::vector<SpectralLine> lines(sp.lines.rbegin(), sp.lines.rend());
  if (c.format == "csv") {
    std::ostringstream os;
    os << "value,rational,lo,hi,approx,multiplicity,c_labels\n";
    for (const auto& l : lines) {
      if (l.value.is_rational)
        os << to_string(l.value.value) << ",1,,,";
      else
        os << ",0," << to_string(l.value.lo) << "," << to_string(l.value.hi)
           << "," << approx_str(l.value.value);
      os << "," << l.multiplicity << ",";
      std::string lab;
      if (l.value.is_rational && labels.count(l.value.value)) {
        for (const auto& t : labels.at(l.value.value))
          lab += (lab.empty() ? "" : ";") + join_rats(t, ":");
      }
      os << csv_quote(lab) << "\n";
    }
    emit(c, os.str());
    return 0;
  }
  Json values = Json::array();
  Json jl = Json::array();
  for (const auto& l : lines) {
    for (int i = 0; i < l.multiplicity; ++i)
      values.push_back(l.value.is_rational ? Json(to_string(l.value.value))
                                           : Json(approx_str(l.value.value)));
    Json j = root_json(l.value, l.multiplicity);
    if (l.value.is_rational && labels.count(l.value.value)) {
      Json cl = Json::array();
      for (const auto& t : labels.at(l.value.value)) cl.push_back(rats_json(t));
      j["c_labels"] = cl;
    }
    jl.push_back(j);
  }
  doc["values"] = values;
  doc["lines"] = jl;
  doc["complex_pairs"] = sp.complex_pairs;
  doc["charpoly"] = sp.charpoly.monic().str("E");
  emit(c, doc.dump(2) + "\n");
  return 0;
}

int cmd_verify(const Config& c) {
  validate(c);
  VerifyReport r = run_suite(c.suite, c.n, c.k, c.seed, c.precision);
  if (c.format == "csv") {
    std::ostringstream os;
    os << "id,status,anchor,residual,corrected,draws\n";
    for (const auto& it : r.items)
      os << csv_quote(it.id) << "," << to_string(it.status) << ","
         << csv_quote(it.anchor) << "," << csv_quote(it.residual) << ","
         << csv_quote(it.corrected) << "," << csv_quote(it.draws) << "\n";
    emit(c, os.str());
  } else {
    emit(c, report_json(r));
  }
  return r.inconclusive() ? 1 : 0;
}

int cmd_separate(const Config& c) {
  validate(c);
  if (c.space != "sphere")
    throw std::invalid_argument("separation chains exist on the sphere only");
  if (c.n < 2) throw std::invalid_argument("separate requires n >= 2");
  SphereParams p = sphere_params(c);
  std::vector<ChainSolution> chains = separate(p, c.precision);
  // Completeness: the radial characteristic polynomials tile the one of the
  // full operator on P_k.
  UPoly prod({Rational(1)});
  long total = 0;
  for (const auto& ch : chains) {
    prod = prod * ch.radial_charpoly;
    total += static_cast<long>(ch.energies.roots.size()) +
             2 * ch.energies.complex_pairs;
  }
  OperatorMatrix M = matrix_rep(build_qes_sphere(p), c.n, c.k);
  bool complete = (prod.monic() == M.mat.charpoly().monic());
  if (c.format == "csv") {
    std::ostringstream os;
    os << "q,c,A,m,value,rational,lo,hi,approx,multiplicity\n";
    for (const auto& ch : chains) {
      std::string q;
      for (size_t i = 0; i < ch.q.size(); ++i)
        q += (i ? ":" : "") + std::to_string(ch.q[i]);
      for (const auto& rt : ch.energies.roots) {
        os << csv_quote(q) << "," << csv_quote(join_rats(ch.c, ":")) << ","
           << csv_quote(join_rats(ch.A, ":")) << "," << ch.m << ",";
        root_csv(os, rt, rt.multiplicity);
        os << "\n";
      }
    }
    emit(c, os.str());
    return 0;
  }
  Json doc;
  doc["command"] = "separate";
  doc["space"] = c.space;
  doc["n"] = c.n;
  doc["k"] = c.k;
  doc["params"] = {{"gamma", rats_json(p.gamma)}, {"a", to_string(p.a)}};
  doc["chains"] = Json::array();
  for (const auto& ch : chains) {
    Json jc;
    jc["q"] = ch.q;
    jc["A"] = rats_json(ch.A);
    jc["c"] = rats_json(ch.c);
    jc["m"] = ch.m;
    jc["radial_charpoly"] = ch.radial_charpoly.monic().str("E");
    Json en = Json::array();
    for (const auto& rt : ch.energies.roots)
      en.push_back(root_json(rt, rt.multiplicity));
    jc["energies"] = en;
    Json fd = Json::array();
    for (const auto& ef : ch.eigenfunctions) {
      Json one;
      one["E"] = to_string(ef.E);
      Json degs = Json::array();
      for (const auto& f : ef.factors) degs.push_back(f.total_degree());
      one["factor_degrees"] = degs;
      fd.push_back(one);
    }
    jc["eigenfunctions"] = fd;
    jc["irrational_verified"] = ch.irrational_verified;
    doc["chains"].push_back(jc);
  }
  doc["energy_count"] = total;
  doc["complete"] = complete;
  emit(c, doc.dump(2) + "\n");
  return 0;
}

int cmd_contract(const Config& c) {
  validate(c);
  EuclidParams p = euclid_params(c);
  std::vector<Rational> eps = {rat(1, 2), rat(1, 4), rat(1, 8), rat(1, 16)};
  std::vector<ContractionProbe> probes = contraction_probes(p, eps);
  if (c.format == "csv") {
    std::ostringstream os;
    os << "eps,printed_diff,corrected_diff\n";
    for (const auto& pr : probes)
      os << to_string(pr.eps) << "," << to_string(pr.diff_printed) << ","
         << to_string(pr.diff_corrected) << "\n";
    emit(c, os.str());
    return 0;
  }
  Json doc;
  doc["command"] = "contract";
  doc["n"] = c.n;
  doc["k"] = c.k;
  doc["params"] = {{"gamma_p", rats_json(p.gamma_p)},
                   {"omega", to_string(p.omega)},
                   {"b", to_string(p.b)}};
  doc["probes"] = Json::array();
  for (const auto& pr : probes)
    doc["probes"].push_back({{"eps", to_string(pr.eps)},
                             {"printed_diff", to_string(pr.diff_printed)},
                             {"corrected_diff", to_string(pr.diff_corrected)}});
  Json ratios = Json::array();
  for (size_t i = 0; i + 1 < probes.size(); ++i)
    if (probes[i + 1].diff_corrected != 0)
      ratios.push_back(
          to_string(probes[i].diff_corrected / probes[i + 1].diff_corrected));
  doc["corrected_halving_ratios"] = ratios;
  emit(c, doc.dump(2) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact spectra, separation chains and conformance checks for "
      "quasi-exactly-solvable models on S^n and E^n"};
  app.require_subcommand(1);
  Config c;
  CLI::App* s_spec = app.add_subcommand("spectrum", "Exact spectrum on P_k");
  CLI::App* s_ver =
      app.add_subcommand("verify", "Run the conformance suite");
  CLI::App* s_sep =
      app.add_subcommand("separate", "Multi-spectral separation chains");
  CLI::App* s_con =
      app.add_subcommand("contract", "Sphere-to-Euclidean contraction probes");
  for (CLI::App* s : {s_spec, s_ver, s_sep, s_con}) add_common(s, c);
  s_ver->add_option("--suite", c.suite);
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  try {
    if (app.got_subcommand(s_spec)) return cmd_spectrum(c);
    if (app.got_subcommand(s_ver)) return cmd_verify(c);
    if (app.got_subcommand(s_sep)) return cmd_separate(c);
    return cmd_contract(c);
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 3;
  } catch (const std::out_of_range& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 3;
  }
}
