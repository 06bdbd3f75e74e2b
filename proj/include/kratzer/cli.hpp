#pragma once

// Command-line front end. Exit codes: 0 success, 1 verification failure,
// 2 usage or input error.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kratzer/constants.hpp"
#include "kratzer/errors.hpp"
#include "kratzer/format.hpp"
#include "kratzer/molecules.hpp"
#include "kratzer/spectrum.hpp"
#include "kratzer/tables.hpp"
#include "kratzer/verify.hpp"

namespace kratzer::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

struct Environment {
  /// Path of a constants JSON (the KRATZER_CONSTANTS variable).
  std::optional<std::string> constants_path;

  static Environment from_process() {
    Environment env;
    if (const char* p = std::getenv("KRATZER_CONSTANTS"); p && *p) env.constants_path = p;
    return env;
  }
};

namespace detail {

inline nlohmann::json constants_json(const PhysicalConstants& c) {
  nlohmann::json j;
  j["hbar_c"] = c.hbar_c;
  j["amu_c2"] = c.amu_c2;
  j["ev_per_wavenumber"] = c.wavenumber_factor();
  return j;
}

inline void warn_range(const QuantumState& s, std::ostream& err) {
  if (s.n > kMaxSupportedQuantum || s.l > kMaxSupportedQuantum)
    err << "warning: n=" << s.n << ", l=" << s.l << " exceeds the supported range (<= "
        << kMaxSupportedQuantum << "); results are computed but untested\n";
  if (s.D > kMaxSupportedDimension)
    err << "warning: D=" << s.D << " exceeds the supported range (<= " << kMaxSupportedDimension
        << "); results are computed but untested\n";
}

struct Context {
  PhysicalConstants constants;
  std::vector<MoleculeRecord> molecules;
};

inline const MoleculeRecord& resolve_molecule(const Context& ctx, const std::string& name,
                                              const std::string& source, PotentialKind kind) {
  std::optional<MoleculeSource> src;
  if (!source.empty()) {
    src = parse_source(source);
    if (!src) throw InputError("unknown source '" + source + "'", "source");
  }
  const MoleculeRecord* r = nullptr;
  if (src) {
    r = find_molecule(ctx.molecules, name, src);
  } else {
    r = find_molecule(ctx.molecules, name,
                      kind == PotentialKind::kratzer ? MoleculeSource::table1 : MoleculeSource::table6);
    if (!r) r = find_molecule(ctx.molecules, name);
  }
  if (!r) throw InputError("unknown molecule '" + name + "'", "molecule");
  return *r;
}

inline PotentialKind parse_potential(const std::string& s) {
  if (s == "kratzer") return PotentialKind::kratzer;
  if (s == "modified" || s == "modified-kratzer") return PotentialKind::modified;
  throw InputError("unknown potential '" + s + "'", "potential");
}

// ---------------------------------------------------------------- spectrum

struct SpectrumArgs {
  std::string molecule;
  std::string source;
  std::string potential = "kratzer";
  int n_max = 0;
  int l_max = 0;
  int dim = 3;
  std::string format = "csv";
};

inline int cmd_spectrum(const Context& ctx, const SpectrumArgs& a, std::ostream& out,
                        std::ostream& err) {
  const PotentialKind kind = parse_potential(a.potential);
  const auto format = fmt::parse_format(a.format);
  if (a.n_max < 0) throw InputError("--n-max must be >= 0", "n-max");
  if (a.l_max < 0) throw InputError("--l-max must be >= 0", "l-max");
  if (a.dim < kMinDimension) throw InputError("--dim must be >= 2", "dim");
  const MoleculeRecord& rec = resolve_molecule(ctx, a.molecule, a.source, kind);
  warn_range({a.n_max, a.l_max, a.dim}, err);
  const PotentialSpec spec = rec.potential(kind);

  std::vector<EnergyLevel> levels;
  for (int n = 0; n <= a.n_max; ++n)
    for (int l = 0; l <= a.l_max; ++l) levels.push_back(energy_level(spec, rec.mu, {n, l, a.dim}, ctx.constants));

  switch (format) {
    case fmt::Format::csv:
      fmt::csv_row(out, {"molecule", "source", "potential", "n", "l", "D", "M", "energy_eV"});
      for (const auto& lv : levels)
        fmt::csv_row(out, {rec.name, to_string(rec.source), to_string(kind), std::to_string(lv.state.n),
                           std::to_string(lv.state.l), std::to_string(lv.state.D),
                           std::to_string(lv.state.M()), fmt::sci(lv.energy)});
      break;
    case fmt::Format::json: {
      nlohmann::json doc;
      doc["molecule"] = rec.name;
      doc["source"] = to_string(rec.source);
      doc["potential"] = to_string(kind);
      doc["constants"] = constants_json(ctx.constants);
      doc["levels"] = nlohmann::json::array();
      for (const auto& lv : levels)
        doc["levels"].push_back({{"n", lv.state.n}, {"l", lv.state.l}, {"D", lv.state.D},
                                 {"M", lv.state.M()}, {"energy_eV", fmt::rounded(lv.energy)}});
      out << doc.dump(2) << '\n';
      break;
    }
    case fmt::Format::markdown:
      out << "### " << rec.name << " (" << to_string(rec.source) << "), " << to_string(kind)
          << " potential, D = " << a.dim << "\n\n";
      fmt::markdown_header(out, {"n", "l", "E (eV)"});
      for (const auto& lv : levels)
        fmt::markdown_row(out, {std::to_string(lv.state.n), std::to_string(lv.state.l), fmt::plain(lv.energy)});
      break;
  }
  return kExitOk;
}

// ------------------------------------------------------------------ tables

struct TablesArgs {
  std::string id;
  bool calibrate = false;
  std::string format = "csv";
};

inline std::string state_label(const QuantumState& s) {
  return "(" + std::to_string(s.n) + "," + std::to_string(s.l) + "," + std::to_string(s.D) + ")";
}

inline void emit_table(const TableReport& r, fmt::Format format, std::ostream& out) {
  auto flag = [](const TableEntry& e) { return e.malformed ? std::string("malformed-corrected") : std::string(); };
  switch (format) {
    case fmt::Format::csv:
      fmt::csv_row(out, {"table", "molecule", "method", "n", "l", "D", "reference_printed", "reference",
                         "computed", "deviation", "deviation_kind", "flag"});
      for (const auto& e : r.entries)
        fmt::csv_row(out, {std::to_string(r.id), e.molecule, e.method, std::to_string(e.state.n),
                           std::to_string(e.state.l), std::to_string(e.state.D), e.reference_text,
                           fmt::sci(e.reference), fmt::sci(e.computed), fmt::short_sci(e.deviation),
                           e.method == "EQR" ? "relative" : "absolute", flag(e)});
      out << "# table " << r.id << (r.calibrated ? " calibrated" : " default")
          << " max_rel_eqr=" << fmt::short_sci(r.max_rel_eqr) << " tolerance=" << fmt::short_sci(r.tolerance);
      for (const auto& [m, v] : r.max_abs_comparison) out << " max_abs_" << m << "=" << fmt::short_sci(v);
      if (!r.partners.empty())
        out << " partners=" << r.partners.size() << " partners_identical=" << (r.partners_pass() ? "yes" : "no");
      out << " malformed=" << r.malformed_count << " status=" << (r.pass() ? "PASS" : "FAIL") << '\n';
      break;
    case fmt::Format::json: {
      nlohmann::json doc;
      doc["table"] = r.id;
      doc["title"] = r.title;
      doc["potential"] = to_string(r.potential);
      doc["calibrated"] = r.calibrated;
      doc["constants"] = constants_json(r.constants);
      doc["tolerance"] = r.tolerance;
      doc["entries"] = nlohmann::json::array();
      for (const auto& e : r.entries) {
        nlohmann::json j = {{"molecule", e.molecule}, {"method", e.method}, {"n", e.state.n},
                            {"l", e.state.l}, {"D", e.state.D}, {"reference_printed", e.reference_text},
                            {"reference", e.reference}, {"computed", fmt::rounded(e.computed)},
                            {"deviation", e.deviation},
                            {"deviation_kind", e.method == "EQR" ? "relative" : "absolute"},
                            {"malformed", e.malformed}};
        doc["entries"].push_back(std::move(j));
      }
      doc["partners"] = nlohmann::json::array();
      for (const auto& p : r.partners)
        doc["partners"].push_back({{"molecule", p.molecule}, {"low", state_label(p.low_dim)},
                                   {"high", state_label(p.high_dim)},
                                   {"energy", fmt::rounded(p.low_energy)},
                                   {"computed_identical", p.computed_identical},
                                   {"printed_identical", p.printed_identical}});
      nlohmann::json summary;
      summary["max_rel_eqr"] = r.max_rel_eqr;
      for (const auto& [m, v] : r.max_abs_comparison) summary["max_abs_" + m] = v;
      summary["malformed"] = r.malformed_count;
      summary["pass"] = r.pass();
      doc["summary"] = summary;
      out << doc.dump(2) << '\n';
      break;
    }
    case fmt::Format::markdown:
      out << "## Table " << r.id << ": " << r.title << (r.calibrated ? " (calibrated)" : "") << "\n\n";
      fmt::markdown_header(out, {"molecule", "method", "n", "l", "D", "printed", "computed", "deviation", "flag"});
      for (const auto& e : r.entries)
        fmt::markdown_row(out, {e.molecule, e.method, std::to_string(e.state.n), std::to_string(e.state.l),
                                std::to_string(e.state.D), e.reference_text, fmt::plain(e.computed),
                                fmt::short_sci(e.deviation), flag(e)});
      if (!r.partners.empty()) {
        out << "\n";
        fmt::markdown_header(out, {"molecule", "(n,l,D)", "partner", "energy", "bit-identical", "printed equal"});
        for (const auto& p : r.partners)
          fmt::markdown_row(out, {p.molecule, state_label(p.low_dim), state_label(p.high_dim),
                                  fmt::plain(p.low_energy), p.computed_identical ? "yes" : "no",
                                  p.printed_identical ? "yes" : "no"});
      }
      out << "\nmax relative deviation (EQR): " << fmt::short_sci(r.max_rel_eqr) << " (tolerance "
          << fmt::short_sci(r.tolerance) << ")\n";
      for (const auto& [m, v] : r.max_abs_comparison)
        out << "max absolute deviation (" << m << "): " << fmt::short_sci(v) << "\n";
      for (const auto& e : r.entries)
        if (e.malformed)
          out << "malformed entry " << e.molecule << " " << state_label(e.state) << ": printed \""
              << e.reference_text << "\", read as " << fmt::plain(e.reference) << ", recomputed "
              << fmt::plain(e.computed) << "\n";
      out << "status: " << (r.pass() ? "PASS" : "FAIL") << "\n";
      break;
  }
}

inline int cmd_tables(const Context& ctx, const TablesArgs& a, std::ostream& out) {
  const auto format = fmt::parse_format(a.format);
  std::vector<int> ids;
  if (a.id == "all") {
    ids.assign(std::begin(kTableIds), std::end(kTableIds));
  } else {
    int id = 0;
    try {
      std::size_t pos = 0;
      id = std::stoi(a.id, &pos);
      if (pos != a.id.size()) throw std::invalid_argument(a.id);
    } catch (const std::exception&) {
      throw InputError("table id must be one of 2, 3, 4, 5, 7, 8 or all", "table");
    }
    if (std::find(std::begin(kTableIds), std::end(kTableIds), id) == std::end(kTableIds))
      throw InputError("table id must be one of 2, 3, 4, 5, 7, 8 or all", "table");
    ids.push_back(id);
  }
  bool pass = true;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    TableRunOptions opt;
    opt.calibrate = a.calibrate;
    opt.constants = ctx.constants;
    const TableReport r = reproduce_table(ids[i], opt);
    if (i && format == fmt::Format::markdown) out << "\n";
    emit_table(r, format, out);
    pass = pass && r.pass();
  }
  return pass ? kExitOk : kExitFailure;
}

// ------------------------------------------------------------------ verify

struct VerifyArgs {
  std::uint64_t seed = 42;
  int count = 100;
  int n_max = 5;
  int oracle_n_max = 0;
  VerifyTolerances tol;
  std::string format = "csv";
};

inline void emit_verification(const VerificationReport& r, fmt::Format format, std::ostream& out) {
  auto opt_sci = [](std::optional<double> x) { return x ? fmt::sci(*x) : std::string(); };
  switch (format) {
    case fmt::Format::csv:
      fmt::csv_row(out, {"molecule", "potential", "De", "re", "mu", "n", "l", "D", "E_closed", "E_eqr_numeric",
                         "E_oracle", "Q_c_numeric", "Q_c_analytic", "normalization", "reference_value",
                         "qc_residual", "eqr_residual", "oracle_residual", "norm_residual"});
      for (const auto& w : r.rows)
        fmt::csv_row(out, {w.molecule, to_string(w.potential), fmt::sci(w.De), fmt::sci(w.re), fmt::sci(w.mu),
                           std::to_string(w.state.n), std::to_string(w.state.l), std::to_string(w.state.D),
                           fmt::sci(w.E_closed), fmt::sci(w.E_eqr_numeric), opt_sci(w.E_oracle),
                           fmt::sci(w.Q_c_numeric), fmt::sci(w.Q_c_analytic), fmt::sci(w.normalization),
                           opt_sci(w.reference_value), fmt::short_sci(w.qc_residual),
                           fmt::short_sci(w.eqr_residual),
                           w.oracle_residual ? fmt::short_sci(*w.oracle_residual) : std::string(),
                           fmt::short_sci(w.norm_residual)});
      for (const auto& e : r.errors) out << "# error " << e << '\n';
      for (const auto& c : r.criteria)
        out << "# " << c.name << " max=" << fmt::short_sci(c.max_residual) << " tolerance="
            << fmt::short_sci(c.tolerance) << " checked=" << c.checked << " errors=" << c.errors << " "
            << (c.pass ? "PASS" : "FAIL") << '\n';
      out << "# seed=" << r.seed << " count=" << r.count << " status=" << (r.pass() ? "PASS" : "FAIL") << '\n';
      break;
    case fmt::Format::json: {
      nlohmann::json doc;
      doc["seed"] = r.seed;
      doc["count"] = r.count;
      doc["rows"] = nlohmann::json::array();
      for (const auto& w : r.rows)
        doc["rows"].push_back({{"molecule", w.molecule}, {"potential", to_string(w.potential)},
                               {"De", w.De}, {"re", w.re}, {"mu", w.mu},
                               {"n", w.state.n}, {"l", w.state.l}, {"D", w.state.D},
                               {"E_closed", fmt::rounded(w.E_closed)},
                               {"E_eqr_numeric", fmt::rounded(w.E_eqr_numeric)},
                               {"E_oracle", fmt::json_number(w.E_oracle)},
                               {"Q_c_numeric", fmt::rounded(w.Q_c_numeric)},
                               {"Q_c_analytic", fmt::rounded(w.Q_c_analytic)},
                               {"normalization", fmt::rounded(w.normalization)},
                               {"reference_value", fmt::json_number(w.reference_value)},
                               {"residuals",
                                {{"qc", w.qc_residual}, {"eqr", w.eqr_residual},
                                 {"oracle", w.oracle_residual ? nlohmann::json(*w.oracle_residual) : nlohmann::json(nullptr)},
                                 {"normalization", w.norm_residual}}}});
      doc["summary"]["criteria"] = nlohmann::json::array();
      for (const auto& c : r.criteria)
        doc["summary"]["criteria"].push_back({{"name", c.name}, {"max_residual", c.max_residual},
                                              {"tolerance", c.tolerance}, {"checked", c.checked},
                                              {"errors", c.errors}, {"pass", c.pass}});
      doc["summary"]["errors"] = r.errors;
      doc["summary"]["pass"] = r.pass();
      out << doc.dump(2) << '\n';
      break;
    }
    case fmt::Format::markdown:
      out << "## Verification (seed " << r.seed << ", " << r.count << " configurations)\n\n";
      fmt::markdown_header(out, {"criterion", "max residual", "tolerance", "checked", "errors", "status"});
      for (const auto& c : r.criteria)
        fmt::markdown_row(out, {c.name, fmt::short_sci(c.max_residual), fmt::short_sci(c.tolerance),
                                std::to_string(c.checked), std::to_string(c.errors), c.pass ? "PASS" : "FAIL"});
      for (const auto& e : r.errors) out << "\n- error: " << e;
      out << "\nstatus: " << (r.pass() ? "PASS" : "FAIL") << "\n";
      break;
  }
}

inline int cmd_verify(const Context& ctx, const VerifyArgs& a, std::ostream& out) {
  const auto format = fmt::parse_format(a.format);
  if (a.count < 0) throw InputError("--count must be >= 0", "count");
  if (a.n_max < 0) throw InputError("--n-max must be >= 0", "n-max");
  VerifyOptions opt;
  opt.seed = a.seed;
  opt.count = a.count;
  opt.n_max = a.n_max;
  opt.oracle_n_max = a.oracle_n_max;
  opt.tol = a.tol;
  opt.constants = ctx.constants;
  const VerificationReport r = run_verification(opt);
  emit_verification(r, format, out);
  return r.pass() ? kExitOk : kExitFailure;
}

// -------------------------------------------------------------- degeneracy

struct DegeneracyArgs {
  int n = 0;
  int l = 0;
  int dim = 3;
  int d_max = kMaxSupportedDimension;
  std::string direction = "both";
  std::string molecule = "I2";
  std::string source;
  std::string potential = "kratzer";
  std::string format = "csv";
};

inline int cmd_degeneracy(const Context& ctx, const DegeneracyArgs& a, std::ostream& out,
                          std::ostream& err) {
  const auto format = fmt::parse_format(a.format);
  const PotentialKind kind = parse_potential(a.potential);
  const QuantumState state{a.n, a.l, a.dim};
  state.validate();
  if (a.d_max < kMinDimension) throw InputError("--d-max must be >= 2", "d-max");
  if (a.direction != "both" && a.direction != "up" && a.direction != "down")
    throw InputError("--direction must be both, up or down", "direction");
  warn_range(state, err);
  const MoleculeRecord& rec = resolve_molecule(ctx, a.molecule, a.source, kind);
  const PotentialSpec spec = rec.potential(kind);

  std::vector<QuantumState> partners;
  for (const auto& p : degenerate_partners(state, kMinDimension, std::max(a.d_max, a.dim))) {
    if (p == state) continue;
    if (p.D > a.d_max) continue;
    if (a.direction == "up" && p.D < state.D) continue;
    if (a.direction == "down" && p.D > state.D) continue;
    partners.push_back(p);
  }
  const double E = energy_level(spec, rec.mu, state, ctx.constants).energy;
  std::vector<double> energies;
  for (const auto& p : partners) energies.push_back(energy_level(spec, rec.mu, p, ctx.constants).energy);

  switch (format) {
    case fmt::Format::csv:
      fmt::csv_row(out, {"role", "n", "l", "D", "M", "energy_eV", "bit_identical"});
      fmt::csv_row(out, {"state", std::to_string(state.n), std::to_string(state.l), std::to_string(state.D),
                         std::to_string(state.M()), fmt::sci(E), "yes"});
      for (std::size_t i = 0; i < partners.size(); ++i)
        fmt::csv_row(out, {"partner", std::to_string(partners[i].n), std::to_string(partners[i].l),
                           std::to_string(partners[i].D), std::to_string(partners[i].M()),
                           fmt::sci(energies[i]), energies[i] == E ? "yes" : "no"});
      break;
    case fmt::Format::json: {
      nlohmann::json doc;
      doc["molecule"] = rec.name;
      doc["source"] = to_string(rec.source);
      doc["potential"] = to_string(kind);
      doc["state"] = {{"n", state.n}, {"l", state.l}, {"D", state.D}, {"M", state.M()},
                      {"energy_eV", fmt::rounded(E)}};
      doc["partners"] = nlohmann::json::array();
      for (std::size_t i = 0; i < partners.size(); ++i)
        doc["partners"].push_back({{"n", partners[i].n}, {"l", partners[i].l}, {"D", partners[i].D},
                                   {"energy_eV", fmt::rounded(energies[i])},
                                   {"bit_identical", energies[i] == E}});
      out << doc.dump(2) << '\n';
      break;
    }
    case fmt::Format::markdown:
      out << "### Partners of " << state_label(state) << " for " << rec.name << ", M = " << state.M() << "\n\n";
      fmt::markdown_header(out, {"(n,l,D)", "E (eV)", "bit-identical"});
      fmt::markdown_row(out, {state_label(state), fmt::plain(E), "-"});
      for (std::size_t i = 0; i < partners.size(); ++i)
        fmt::markdown_row(out, {state_label(partners[i]), fmt::plain(energies[i]), energies[i] == E ? "yes" : "no"});
      if (partners.empty()) out << "\nno partners in range\n";
      break;
  }
  return kExitOk;
}

}  // namespace detail

/// Runs the command line. Output goes to `out`, diagnostics to `err`.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
               const Environment& env = Environment::from_process()) {
  CLI::App app{"Kratzer-family bound-state spectra, table reproduction and verification", "kratzer"};
  app.require_subcommand(1);

  std::optional<double> hbar_c, amu_c2, ev_per_wavenumber;
  std::string molecules_path;
  app.add_option("--hbar-c", hbar_c, "hbar*c in eV*Angstrom (default 1973.29)");
  app.add_option("--amu-c2", amu_c2, "atomic mass unit rest energy in eV (default 9.31494028e8)");
  app.add_option("--ev-per-wavenumber", ev_per_wavenumber, "eV per cm^-1 (default 2*pi*hbar_c*1e-8)");
  app.add_option("--molecules", molecules_path, "JSON file with additional molecules");

  const std::vector<std::string> formats{"csv", "json", "markdown"};

  detail::SpectrumArgs sa;
  auto* sp = app.add_subcommand("spectrum", "bound-state energies of one molecule");
  sp->add_option("--molecule", sa.molecule, "molecule name")->required();
  sp->add_option("--source", sa.source, "table1, table6 or user");
  sp->add_option("--potential", sa.potential, "kratzer or modified")->capture_default_str();
  sp->add_option("--n-max", sa.n_max, "largest n")->capture_default_str();
  sp->add_option("--l-max", sa.l_max, "largest l")->capture_default_str();
  sp->add_option("--dim", sa.dim, "dimension D >= 2")->capture_default_str();
  sp->add_option("--format", sa.format, "csv, json or markdown")->capture_default_str();

  detail::TablesArgs ta;
  auto* tp = app.add_subcommand("tables", "reproduce a reference table (2, 3, 4, 5, 7, 8 or all)");
  tp->add_option("table", ta.id, "table id")->required();
  tp->add_flag("--calibrate", ta.calibrate, "fit amu_c2 and eV/cm^-1 to the reference data first");
  tp->add_option("--format", ta.format, "csv, json or markdown")->capture_default_str();

  detail::VerifyArgs va;
  auto* vp = app.add_subcommand("verify", "seeded randomized verification suite");
  vp->add_option("--seed", va.seed, "RNG seed")->capture_default_str();
  vp->add_option("--count", va.count, "number of random configurations")->capture_default_str();
  vp->add_option("--n-max", va.n_max, "largest n per configuration")->capture_default_str();
  vp->add_option("--oracle-n-max", va.oracle_n_max, "largest n checked by the Numerov oracle (-1: off)")
      ->capture_default_str();
  vp->add_option("--tol-qc", va.tol.qc_abs, "quantum-correction tolerance (absolute)")->capture_default_str();
  vp->add_option("--tol-eqr", va.tol.eqr_rel, "EQR energy tolerance (relative)")->capture_default_str();
  vp->add_option("--tol-oracle", va.tol.oracle_rel, "oracle tolerance (relative)")->capture_default_str();
  vp->add_option("--tol-norm", va.tol.norm_abs, "normalization tolerance (absolute)")->capture_default_str();
  vp->add_option("--format", va.format, "csv, json or markdown")->capture_default_str();

  detail::DegeneracyArgs da;
  auto* dp = app.add_subcommand("degeneracy", "interdimensional partners of a state");
  dp->add_option("--n", da.n, "radial quantum number")->capture_default_str();
  dp->add_option("--l", da.l, "angular quantum number")->capture_default_str();
  dp->add_option("--dim", da.dim, "dimension D")->capture_default_str();
  dp->add_option("--d-max", da.d_max, "largest partner dimension")->capture_default_str();
  dp->add_option("--direction", da.direction, "both, up or down")->capture_default_str();
  dp->add_option("--molecule", da.molecule, "molecule name")->capture_default_str();
  dp->add_option("--source", da.source, "table1, table6 or user");
  dp->add_option("--potential", da.potential, "kratzer or modified")->capture_default_str();
  dp->add_option("--format", da.format, "csv, json or markdown")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    detail::Context ctx;
    if (env.constants_path) ctx.constants = load_constants(*env.constants_path).apply(ctx.constants);
    MoleculeFile file;
    if (!molecules_path.empty()) {
      file = load_molecule_file(molecules_path, ctx.constants);
      ctx.constants = file.constants.apply(ctx.constants);
    }
    if (hbar_c) ctx.constants.hbar_c = *hbar_c;
    if (amu_c2) ctx.constants.amu_c2 = *amu_c2;
    if (ev_per_wavenumber) ctx.constants.ev_per_wavenumber = *ev_per_wavenumber;
    ctx.constants.validate();
    ctx.molecules = builtin_registry(ctx.constants);
    for (MoleculeRecord r : file.molecules) {
      if (r.De_wavenumber) r.De = wavenumber_to_ev(*r.De_wavenumber, ctx.constants);
      ctx.molecules.push_back(std::move(r));
    }

    if (*sp) return detail::cmd_spectrum(ctx, sa, out, err);
    if (*tp) return detail::cmd_tables(ctx, ta, out);
    if (*vp) return detail::cmd_verify(ctx, va, out);
    if (*dp) return detail::cmd_degeneracy(ctx, da, out, err);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace kratzer::cli
