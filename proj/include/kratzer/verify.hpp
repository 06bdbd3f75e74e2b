#pragma once

// Seeded randomized cross-checks of the closed forms against the numeric
// EQR pipeline, the wavefunction normalization and the Numerov oracle.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "kratzer/constants.hpp"
#include "kratzer/eqr.hpp"
#include "kratzer/molecules.hpp"
#include "kratzer/numerov.hpp"
#include "kratzer/spectrum.hpp"
#include "kratzer/wavefunction.hpp"

namespace kratzer {

struct VerifyTolerances {
  double qc_abs = 1e-9;
  double eqr_rel = 1e-10;
  double oracle_rel = 1e-7;
  double norm_abs = 1e-8;
};

struct VerifyOptions {
  std::uint64_t seed = 42;
  int count = 100;
  int n_max = 5;
  /// Oracle solves are run for n <= oracle_n_max; negative disables them.
  int oracle_n_max = 0;
  VerifyTolerances tol;
  PhysicalConstants constants;
};

struct VerificationRow {
  std::string molecule;
  PotentialKind potential = PotentialKind::kratzer;
  double De = 0.0, re = 0.0, mu = 0.0;
  QuantumState state;
  double E_closed = 0.0;
  double E_eqr_numeric = 0.0;
  std::optional<double> E_oracle;
  double Q_c_numeric = 0.0;
  double Q_c_analytic = 0.0;
  double normalization = 0.0;
  std::optional<double> reference_value;

  double qc_residual = 0.0;    ///< absolute
  double eqr_residual = 0.0;   ///< relative
  std::optional<double> oracle_residual;  ///< relative
  double norm_residual = 0.0;  ///< absolute
};

struct CriterionResult {
  std::string name;
  double max_residual = 0.0;
  double tolerance = 0.0;
  int checked = 0;
  int errors = 0;
  bool pass = true;
};

struct VerificationReport {
  std::uint64_t seed = 0;
  int count = 0;
  std::vector<VerificationRow> rows;
  std::vector<CriterionResult> criteria;
  std::vector<std::string> errors;

  bool pass() const {
    for (const auto& c : criteria) {
      if (!c.pass) return false;
    }
    return true;
  }
};

namespace detail {

/// Uniform on [0, 1) from the top 53 bits; stable across standard libraries.
inline double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double log_uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::exp(std::log(lo) + unit_uniform(rng) * (std::log(hi) - std::log(lo)));
}

inline int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline void track(CriterionResult& c, double residual) {
  ++c.checked;
  c.max_residual = std::max(c.max_residual, residual);
}

}  // namespace detail

struct RandomConfig {
  std::string name;
  PotentialKind potential;
  double De, re, mu;
  int M, D, l;
};

/// Configuration i of the seeded stream: De in [0.1, 20] eV, re in
/// [0.5, 3] A, mu in [0.5, 100] amu (all log-uniform), M in [2, 12].
inline std::vector<RandomConfig> random_configs(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::vector<RandomConfig> out;
  for (int i = 0; i < count; ++i) {
    RandomConfig cfg;
    char name[32];
    std::snprintf(name, sizeof name, "rand-%03d", i);
    cfg.name = name;
    cfg.De = detail::log_uniform(rng, 0.1, 20.0);
    cfg.re = detail::log_uniform(rng, 0.5, 3.0);
    cfg.mu = detail::log_uniform(rng, 0.5, 100.0);
    cfg.M = detail::uniform_int(rng, 2, 12);
    const int choices = (cfg.M - 2) / 2 + 1;  // D = M, M-2, ..., >= 2
    cfg.D = cfg.M - 2 * detail::uniform_int(rng, 0, choices - 1);
    cfg.l = (cfg.M - cfg.D) / 2;
    cfg.potential = (rng() & 1u) ? PotentialKind::modified : PotentialKind::kratzer;
    out.push_back(cfg);
  }
  return out;
}

inline VerificationReport run_verification(const VerifyOptions& opt) {
  if (opt.count < 0) throw DomainError("count must be >= 0");
  if (opt.n_max < 0) throw DomainError("n_max must be >= 0");
  VerificationReport rep;
  rep.seed = opt.seed;
  rep.count = opt.count;
  CriterionResult qc{"quantum-correction", 0.0, opt.tol.qc_abs};
  CriterionResult eqr{"eqr-energy", 0.0, opt.tol.eqr_rel};
  CriterionResult norm{"normalization", 0.0, opt.tol.norm_abs};
  CriterionResult oracle{"numerov-oracle", 0.0, opt.tol.oracle_rel};
  const PhysicalConstants& c = opt.constants;

  for (const RandomConfig& cfg : random_configs(opt.seed, opt.count)) {
    MoleculeRecord rec{cfg.name, cfg.De, cfg.re, cfg.mu, MoleculeSource::user, std::nullopt};
    const PotentialSpec spec = rec.potential(cfg.potential);
    const double lam = lambda_param(spec, cfg.mu, cfg.M, c);
    double qn = 0.0;
    const double qa = quantum_correction_analytic(lam);
    try {
      qn = quantum_correction_numeric(spec, cfg.mu, cfg.M, {}, c);
      detail::track(qc, std::abs(qn - qa));
    } catch (const Error& e) {
      ++qc.errors;
      rep.errors.push_back(cfg.name + ": quantum correction: " + e.what());
      continue;
    }
    for (int n = 0; n <= opt.n_max; ++n) {
      VerificationRow row;
      row.molecule = cfg.name;
      row.potential = cfg.potential;
      row.De = cfg.De;
      row.re = cfg.re;
      row.mu = cfg.mu;
      row.state = {n, cfg.l, cfg.D};
      row.Q_c_numeric = qn;
      row.Q_c_analytic = qa;
      row.qc_residual = std::abs(qn - qa);
      row.E_closed = energy_level(spec, cfg.mu, row.state, c).energy;
      try {
        row.E_eqr_numeric = solve_energy_eqr(spec, cfg.mu, cfg.M, n, {}, c);
        row.eqr_residual = std::abs(row.E_eqr_numeric - row.E_closed) / std::abs(row.E_closed);
        row.normalization = normalization_integral(wavefunction_params(spec, cfg.mu, row.state, c));
        row.norm_residual = std::abs(row.normalization - 1.0);
        if (n <= opt.oracle_n_max) {
          row.E_oracle = solve_numerov(spec, cfg.mu, cfg.M, n, {}, c);
          row.oracle_residual = std::abs(*row.E_oracle - row.E_closed) / std::abs(row.E_closed);
        }
      } catch (const Error& e) {
        rep.errors.push_back(cfg.name + " n=" + std::to_string(n) + ": " + e.what());
        ++(row.E_eqr_numeric == 0.0 ? eqr : row.normalization == 0.0 ? norm : oracle).errors;
        continue;
      }
      detail::track(eqr, row.eqr_residual);
      detail::track(norm, row.norm_residual);
      if (row.oracle_residual) detail::track(oracle, *row.oracle_residual);
      rep.rows.push_back(std::move(row));
    }
  }

  for (CriterionResult* cr : {&qc, &eqr, &norm, &oracle}) {
    cr->pass = cr->errors == 0 && (cr->checked == 0 || cr->max_residual < cr->tolerance);
    rep.criteria.push_back(*cr);
  }
  return rep;
}

}  // namespace kratzer
