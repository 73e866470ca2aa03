#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qes/models.hpp"
#include "qes/repspace.hpp"

namespace qes {

enum class CheckStatus { pass, deviation, inconclusive };
std::string to_string(CheckStatus s);

// One verified identity: either it holds exactly (pass), or the exact
// residual is recorded together with the machine-measured corrected form
// (deviation). inconclusive marks a failure of the toolchain, never an
// acceptable outcome.
struct ConformanceItem {
  std::string id;         // stable identifier, e.g. "S34-N2-K1-EPM"
  std::string anchor;     // the claim being checked, in words
  CheckStatus status = CheckStatus::inconclusive;
  std::string residual;   // exact residual ("0" when the identity holds)
  std::string corrected;  // measured corrected form, empty when none needed
  std::string draws;      // parameter draws used for the check
};

// Matrix-level contraction probe at one epsilon: entrywise max-abs norms of
// the printed-map difference and of the corrected-map difference.
struct ContractionProbe {
  Rational eps;
  Rational diff_printed;    // |4 e^2 M_S(e) - M_E|, a = -b/e^4
  Rational diff_corrected;  // |4 e^2 M_S(e) + M_E|, a = -b/(4 e^4)
};

// Entrywise contraction probes for explicit Euclidean parameters, one per
// epsilon (ascending input order preserved).
std::vector<ContractionProbe> contraction_probes(
    const EuclidParams& p, const std::vector<Rational>& eps_list);

// Commutation, decomposition and independence of the integrals I_ij, I_i
// and the L chain. Requires n >= 2.
std::vector<ConformanceItem> check_integrals(int n, Rng& rng, int draws = 5);

// The n=3 quadratic symmetry algebra: single-commutator claim, structure
// equations and Casimir, each checked exactly and re-derived where the
// printed form fails.
std::vector<ConformanceItem> check_quadratic_algebra_n3(Rng& rng,
                                                        int draws = 3);

enum class GaugeSpace { sphere_ES, sphere_QES, euclid };
std::vector<ConformanceItem> check_gauge(GaugeSpace space, int n, Rng& rng,
                                         long k = 1);

// Mechanical radial splits vs the printed ones, both spaces; n >= 2.
std::vector<ConformanceItem> check_radial_splits(int n, Rng& rng);

// Sphere-to-Euclidean contraction at matrix level on P_k; empty eps_list
// defaults to {1/2, 1/4, 1/8, 1/16}.
std::vector<ConformanceItem> check_contraction(
    int n, long k, Rng& rng, std::vector<Rational> eps_list = {});

// Two-stage comparison of exact spectra against the printed closed-form
// catalog; (n, k) must lie in the catalog range {1,2,3} x {0,1,2}.
std::vector<ConformanceItem> check_closed_forms(int n, long k, Rng& rng,
                                                int precision_bits = 128);

std::vector<ConformanceItem> check_geometry(int n);

struct VerifyReport {
  std::uint64_t seed = 0;
  std::string suite;
  std::vector<ConformanceItem> items;

  bool inconclusive() const;
};

// selector in {integrals, algebra, gauge, radial, contraction, closedforms,
// geometry, all}; throws std::invalid_argument on an unknown selector or a
// selector/parameter mismatch (e.g. integrals with n < 2).
VerifyReport run_suite(const std::string& selector, int n, long k,
                       std::uint64_t seed, int precision_bits = 128);

// Deterministic JSON serialization of a report.
std::string report_json(const VerifyReport& r);

}  // namespace qes
