#pragma once

// Reproduction of the reference energy tables from the built-in registry.

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "kratzer/constants.hpp"
#include "kratzer/errors.hpp"
#include "kratzer/molecules.hpp"
#include "kratzer/reference_data.hpp"
#include "kratzer/spectrum.hpp"

namespace kratzer {

struct ReferenceCell {
  double value = 0.0;
  std::string text;        ///< as printed
  bool malformed = false;  ///< printed without its decimal point
};

struct ReferenceColumn {
  std::string molecule;
  std::string method;  ///< "EQR", "AIM" or "NU"
};

struct ReferenceRow {
  QuantumState state;
  std::vector<std::optional<ReferenceCell>> cells;
};

struct ReferenceTable {
  int id = 0;
  PotentialKind potential = PotentialKind::kratzer;
  MoleculeSource source = MoleculeSource::table1;
  std::string title;
  std::vector<ReferenceColumn> columns;
  std::vector<ReferenceRow> rows;
};

inline constexpr int kTableIds[] = {2, 3, 4, 5, 7, 8};

/// Parses one printed value. A value with no decimal point and a leading
/// zero digit ("0543...") is read as "0.543..." and flagged.
inline ReferenceCell parse_reference_cell(const std::string& text) {
  ReferenceCell cell;
  cell.text = text;
  std::string t = text;
  const bool negative = !t.empty() && t[0] == '-';
  std::string digits = negative ? t.substr(1) : t;
  if (digits.empty()) throw InputError("empty reference value", "value");
  if (digits.find('.') == std::string::npos && digits.size() > 1 && digits[0] == '0') {
    cell.malformed = true;
    digits = "0." + digits.substr(1);
  }
  const std::string normalized = (negative ? "-" : "") + digits;
  char* end = nullptr;
  cell.value = std::strtod(normalized.c_str(), &end);
  if (end != normalized.c_str() + normalized.size())
    throw InputError("invalid reference value '" + text + "'", "value");
  return cell;
}

namespace detail {
inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}
}  // namespace detail

inline ReferenceTable load_reference_table(int id) {
  const reference::TableAsset* asset = nullptr;
  for (const auto& a : reference::kTables) {
    if (a.id == id) asset = &a;
  }
  if (!asset) throw DomainError("unknown table id " + std::to_string(id));

  ReferenceTable table;
  table.id = id;
  table.potential = asset->potential == "kratzer" ? PotentialKind::kratzer : PotentialKind::modified;
  table.source = table.potential == PotentialKind::kratzer ? MoleculeSource::table1 : MoleculeSource::table6;
  table.title = std::string(asset->title);

  std::istringstream in{std::string(asset->csv)};
  std::string line;
  std::getline(in, line);
  const auto header = detail::split_csv_line(line);
  int idx_n = -1, idx_l = -1, idx_d = -1;
  std::vector<int> value_idx;
  for (int i = 0; i < static_cast<int>(header.size()); ++i) {
    const std::string& h = header[i];
    if (h == "n") idx_n = i;
    else if (h == "l") idx_l = i;
    else if (h == "D") idx_d = i;
    else {
      const auto colon = h.find(':');
      table.columns.push_back({h.substr(0, colon), h.substr(colon + 1)});
      value_idx.push_back(i);
    }
  }
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = detail::split_csv_line(line);
    ReferenceRow row;
    row.state = {std::stoi(f[idx_n]), std::stoi(f[idx_l]), idx_d >= 0 ? std::stoi(f[idx_d]) : 3};
    for (int i : value_idx) {
      if (i < static_cast<int>(f.size()) && !f[i].empty())
        row.cells.emplace_back(parse_reference_cell(f[i]));
      else
        row.cells.emplace_back(std::nullopt);
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

/// Constants fitted to the tables: amu_c2 from the LiH ground state of
/// table 2, eV per cm^-1 from the species listed in both eV and cm^-1.
inline PhysicalConstants calibrated_constants(const PhysicalConstants& base = {}) {
  const ReferenceTable t2 = load_reference_table(2);
  const auto registry = builtin_registry(base);
  const MoleculeRecord* lih = find_molecule(registry, "LiH", MoleculeSource::table1);
  std::optional<double> anchor;
  for (std::size_t c = 0; c < t2.columns.size(); ++c) {
    if (t2.columns[c].molecule != "LiH" || t2.columns[c].method != "EQR") continue;
    for (const auto& row : t2.rows) {
      if (row.state == QuantumState{0, 0, 3} && row.cells[c]) anchor = row.cells[c]->value;
    }
  }
  if (!lih || !anchor) throw CalibrationFailure("calibration anchor missing");
  PhysicalConstants c = base;
  c.amu_c2 = calibrate_amu(*lih, *anchor, {0, 0, 3}, PotentialKind::kratzer, base);
  c.ev_per_wavenumber = calibrate_wavenumber(registry);
  return c;
}

struct TableEntry {
  QuantumState state;
  std::string molecule;
  std::string method;
  std::string reference_text;
  double reference = 0.0;
  double computed = 0.0;
  /// Relative deviation for EQR columns, absolute for comparison columns.
  double deviation = 0.0;
  bool malformed = false;
};

/// A (D=2, l+1) / (D=4, l) pair sharing M.
struct PartnerCheck {
  std::string molecule;
  QuantumState low_dim;
  QuantumState high_dim;
  double low_energy = 0.0;
  double high_energy = 0.0;
  bool computed_identical = false;
  std::string low_text;
  std::string high_text;
  bool printed_identical = false;
};

struct TableRunOptions {
  bool calibrate = false;
  PhysicalConstants constants;
  double default_tolerance = 2e-5;
  double calibrated_tolerance = 1e-7;
  double nu_abs_tolerance = 1e-4;
};

struct TableReport {
  int id = 0;
  std::string title;
  PotentialKind potential = PotentialKind::kratzer;
  bool calibrated = false;
  PhysicalConstants constants;
  double tolerance = 0.0;
  double nu_abs_tolerance = 0.0;
  std::vector<TableEntry> entries;
  std::vector<PartnerCheck> partners;
  double max_rel_eqr = 0.0;
  std::map<std::string, double> max_abs_comparison;  ///< by method
  int malformed_count = 0;

  bool eqr_pass() const { return max_rel_eqr <= tolerance; }
  bool comparison_pass() const {
    const auto it = max_abs_comparison.find("NU");
    return it == max_abs_comparison.end() || it->second <= nu_abs_tolerance;
  }
  bool partners_pass() const {
    return std::all_of(partners.begin(), partners.end(),
                       [](const PartnerCheck& p) { return p.computed_identical && p.printed_identical; });
  }
  bool pass() const { return eqr_pass() && comparison_pass() && partners_pass(); }
};

inline TableReport reproduce_table(int id, const TableRunOptions& opt = {}) {
  const ReferenceTable table = load_reference_table(id);
  TableReport rep;
  rep.id = id;
  rep.title = table.title;
  rep.potential = table.potential;
  rep.calibrated = opt.calibrate;
  rep.constants = opt.calibrate ? calibrated_constants(opt.constants) : opt.constants;
  rep.tolerance = opt.calibrate ? opt.calibrated_tolerance : opt.default_tolerance;
  rep.nu_abs_tolerance = opt.nu_abs_tolerance;
  const auto registry = builtin_registry(rep.constants);

  std::map<std::pair<std::string, std::tuple<int, int, int>>, std::pair<double, std::string>> eqr;
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
      if (!row.cells[c]) continue;
      const auto& col = table.columns[c];
      const MoleculeRecord* rec = find_molecule(registry, col.molecule, table.source);
      if (!rec) throw DomainError("molecule " + col.molecule + " missing from registry");
      const double E = energy_level(rec->potential(table.potential), rec->mu, row.state, rep.constants).energy;
      const ReferenceCell& cell = *row.cells[c];
      TableEntry e{row.state, col.molecule, col.method, cell.text, cell.value, E, 0.0, cell.malformed};
      if (col.method == "EQR") {
        e.deviation = std::abs(E - cell.value) / std::abs(cell.value);
        rep.max_rel_eqr = std::max(rep.max_rel_eqr, e.deviation);
        eqr[{col.molecule, {row.state.n, row.state.l, row.state.D}}] = {E, cell.text};
      } else {
        e.deviation = std::abs(E - cell.value);
        double& m = rep.max_abs_comparison[col.method];
        m = std::max(m, e.deviation);
      }
      if (cell.malformed) ++rep.malformed_count;
      rep.entries.push_back(std::move(e));
    }
  }

  for (const auto& [key, low] : eqr) {
    const auto& [mol, st] = key;
    const auto [n, l, D] = st;
    if (D != 2 || l < 1) continue;
    const auto it = eqr.find({mol, {n, l - 1, 4}});
    if (it == eqr.end()) continue;
    PartnerCheck p;
    p.molecule = mol;
    p.low_dim = {n, l, 2};
    p.high_dim = {n, l - 1, 4};
    p.low_energy = low.first;
    p.high_energy = it->second.first;
    p.computed_identical = p.low_energy == p.high_energy;
    p.low_text = low.second;
    p.high_text = it->second.second;
    p.printed_identical = p.low_text == p.high_text;
    rep.partners.push_back(std::move(p));
  }
  return rep;
}

}  // namespace kratzer
