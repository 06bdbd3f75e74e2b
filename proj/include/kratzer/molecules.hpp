#pragma once

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "kratzer/constants.hpp"
#include "kratzer/errors.hpp"
#include "kratzer/potential.hpp"
#include "kratzer/spectrum.hpp"

namespace kratzer {

enum class MoleculeSource { table1, table6, user };

inline const char* to_string(MoleculeSource s) {
  switch (s) {
    case MoleculeSource::table1: return "table1";
    case MoleculeSource::table6: return "table6";
    case MoleculeSource::user: return "user";
  }
  return "user";
}

inline std::optional<MoleculeSource> parse_source(const std::string& s) {
  if (s == "table1") return MoleculeSource::table1;
  if (s == "table6") return MoleculeSource::table6;
  if (s == "user") return MoleculeSource::user;
  return std::nullopt;
}

enum class PotentialKind { kratzer, modified };

inline const char* to_string(PotentialKind k) {
  return k == PotentialKind::kratzer ? "kratzer" : "modified";
}

struct MoleculeRecord {
  std::string name;
  double De = 0.0;  ///< eV
  double re = 0.0;  ///< Angstrom
  double mu = 0.0;  ///< amu
  MoleculeSource source = MoleculeSource::user;
  std::optional<double> De_wavenumber;  ///< cm^-1, when De was given in wavenumbers

  void validate() const {
    if (name.empty()) throw InputError("molecule name must not be empty", "name");
    if (!(De > 0.0) || !std::isfinite(De)) throw InputError("De must be positive", "De");
    if (!(re > 0.0) || !std::isfinite(re)) throw InputError("re must be positive", "re");
    if (!(mu > 0.0) || !std::isfinite(mu)) throw InputError("mu must be positive", "mu");
  }

  PotentialSpec potential(PotentialKind kind) const {
    return kind == PotentialKind::kratzer ? from_kratzer(De, re) : from_modified_kratzer(De, re);
  }

  friend bool operator==(const MoleculeRecord&, const MoleculeRecord&) = default;
};

namespace detail {
inline MoleculeRecord wavenumber_record(std::string name, double w, double re, double mu,
                                        MoleculeSource src, const PhysicalConstants& c) {
  return {std::move(name), wavenumber_to_ev(w, c), re, mu, src, w};
}
}  // namespace detail

/// The ten built-in records: six in eV, four given in cm^-1 and converted
/// with `c`. CO and NO appear once per source.
inline std::vector<MoleculeRecord> builtin_registry(const PhysicalConstants& c = {}) {
  using S = MoleculeSource;
  return {
      {"LiH", 2.515283695, 1.5956, 0.8801221, S::table1, std::nullopt},
      {"I2", 1.581791863, 2.662, 63.45223502, S::table1, std::nullopt},
      {"O2", 5.156658828, 1.208, 7.997457504, S::table1, std::nullopt},
      {"HCl", 4.619061175, 1.2746, 0.9801045, S::table1, std::nullopt},
      {"NO", 8.043782568, 1.1508, 7.468441000, S::table1, std::nullopt},
      {"CO", 10.84514471, 1.1282, 6.860586000, S::table1, std::nullopt},
      detail::wavenumber_record("N2", 96288.03528, 1.0940, 7.00335, S::table6, c),
      detail::wavenumber_record("CO", 87471.42567, 1.1282, 6.860586, S::table6, c),
      detail::wavenumber_record("NO", 64877.06229, 1.1508, 7.468441, S::table6, c),
      detail::wavenumber_record("CH", 31838.08149, 1.1198, 0.929931, S::table6, c),
  };
}

namespace detail {
inline std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char ch) { return std::tolower(ch); });
  return s;
}
}  // namespace detail

/// Case-insensitive lookup; `source` disambiguates species listed twice.
inline const MoleculeRecord* find_molecule(const std::vector<MoleculeRecord>& records,
                                           const std::string& name,
                                           std::optional<MoleculeSource> source = std::nullopt) {
  const std::string key = detail::lower(name);
  for (const auto& r : records) {
    if (detail::lower(r.name) == key && (!source || r.source == *source)) return &r;
  }
  return nullptr;
}

/// Overrides read from a `constants` block. Unset fields keep the caller's
/// values.
struct ConstantOverrides {
  std::optional<double> hbar_c;
  std::optional<double> amu_c2;
  std::optional<double> ev_per_wavenumber;

  PhysicalConstants apply(PhysicalConstants c) const {
    if (hbar_c) c.hbar_c = *hbar_c;
    if (amu_c2) c.amu_c2 = *amu_c2;
    if (ev_per_wavenumber) c.ev_per_wavenumber = *ev_per_wavenumber;
    return c;
  }

  bool empty() const { return !hbar_c && !amu_c2 && !ev_per_wavenumber; }
};

struct MoleculeFile {
  ConstantOverrides constants;
  std::vector<MoleculeRecord> molecules;
};

namespace detail {

inline int line_of(const std::string& text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<int>(std::count(text.begin(), text.begin() + offset, '\n'));
}

/// Line on which each object of the top-level "molecules" array starts.
inline std::vector<int> record_lines(const std::string& text) {
  std::vector<int> lines;
  int depth = 0;
  int line = 1;
  bool in_string = false;
  bool escaped = false;
  bool in_array = false;
  int array_depth = -1;
  std::string token, last_key;
  for (char ch : text) {
    if (ch == '\n') ++line;
    if (in_string) {
      if (escaped) {
        escaped = false;
      } else if (ch == '\\') {
        escaped = true;
      } else if (ch == '"') {
        in_string = false;
        if (depth == 1) last_key = token;
      } else {
        token += ch;
      }
      continue;
    }
    switch (ch) {
      case '"':
        in_string = true;
        token.clear();
        break;
      case '{':
        if (in_array && depth == array_depth) lines.push_back(line);
        ++depth;
        break;
      case '[':
        if (depth == 1 && last_key == "molecules" && !in_array) {
          in_array = true;
          array_depth = depth + 1;
        }
        ++depth;
        break;
      case '}':
      case ']':
        --depth;
        if (in_array && depth < array_depth) in_array = false;
        break;
      default:
        break;
    }
  }
  return lines;
}

inline double positive_number(const nlohmann::json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key)) throw InputError(where + ": missing field '" + key + "'", key);
  const auto& v = obj.at(key);
  if (!v.is_number()) throw InputError(where + ": field '" + std::string(key) + "' must be a number", key);
  const double x = v.get<double>();
  if (!(x > 0.0) || !std::isfinite(x)) {
    std::ostringstream os;
    os << where << ": field '" << key << "' must be positive (got " << x << ")";
    throw InputError(os.str(), key);
  }
  return x;
}

inline ConstantOverrides parse_constants_block(const nlohmann::json& block, const std::string& where) {
  if (!block.is_object()) throw InputError(where + ": 'constants' must be an object", "constants");
  ConstantOverrides o;
  if (block.contains("hbar_c")) o.hbar_c = positive_number(block, "hbar_c", where);
  if (block.contains("amu_c2")) o.amu_c2 = positive_number(block, "amu_c2", where);
  if (block.contains("ev_per_wavenumber"))
    o.ev_per_wavenumber = positive_number(block, "ev_per_wavenumber", where);
  return o;
}

inline nlohmann::json parse_json_text(const std::string& text, const std::string& path) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(path + ":" + std::to_string(line_of(text, e.byte)) + ": JSON parse error: " +
                         e.what(),
                     "json");
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'", "path");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace detail

/// Parses a molecule document. `base` supplies the constants for cm^-1
/// conversion before the document's own `constants` block is applied.
inline MoleculeFile parse_molecule_document(const std::string& text,
                                            const std::string& path = "<input>",
                                            const PhysicalConstants& base = {}) {
  const nlohmann::json doc = detail::parse_json_text(text, path);
  if (!doc.is_object()) throw InputError(path + ":1: top level must be an object", "json");
  MoleculeFile file;
  if (doc.contains("constants"))
    file.constants = detail::parse_constants_block(doc.at("constants"), path + ": constants");
  const PhysicalConstants c = file.constants.apply(base);
  c.validate();

  if (!doc.contains("molecules") || !doc.at("molecules").is_array())
    throw InputError(path + ": missing 'molecules' array", "molecules");
  const auto lines = detail::record_lines(text);
  const auto& arr = doc.at("molecules");
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const int line = i < lines.size() ? lines[i] : 0;
    std::string where = path + ":" + std::to_string(line) + ": molecule #" + std::to_string(i + 1);
    const auto& obj = arr[i];
    if (!obj.is_object()) throw InputError(where + ": record must be an object", "molecules");
    if (!obj.contains("name") || !obj.at("name").is_string() ||
        obj.at("name").get<std::string>().empty())
      throw InputError(where + ": field 'name' must be a non-empty string", "name");
    MoleculeRecord r;
    r.name = obj.at("name").get<std::string>();
    where += " '" + r.name + "'";

    std::string unit = "eV";
    if (obj.contains("De_unit")) {
      if (!obj.at("De_unit").is_string())
        throw InputError(where + ": field 'De_unit' must be \"eV\" or \"cm-1\"", "De_unit");
      unit = obj.at("De_unit").get<std::string>();
    }
    if (unit != "eV" && unit != "cm-1")
      throw InputError(where + ": field 'De_unit' must be \"eV\" or \"cm-1\" (got \"" + unit + "\")",
                       "De_unit");
    const double de = detail::positive_number(obj, "De", where);
    if (unit == "cm-1") {
      r.De_wavenumber = de;
      r.De = wavenumber_to_ev(de, c);
    } else {
      r.De = de;
    }
    r.re = detail::positive_number(obj, "re", where);
    r.mu = detail::positive_number(obj, "mu", where);
    if (obj.contains("source")) {
      const auto& s = obj.at("source");
      const auto parsed = s.is_string() ? parse_source(s.get<std::string>()) : std::nullopt;
      if (!parsed)
        throw InputError(where + ": field 'source' must be table1, table6 or user", "source");
      r.source = *parsed;
    }
    file.molecules.push_back(std::move(r));
  }
  return file;
}

inline MoleculeFile load_molecule_file(const std::string& path, const PhysicalConstants& base = {}) {
  return parse_molecule_document(detail::read_file(path), path, base);
}

inline std::vector<MoleculeRecord> load_molecules(const std::string& path,
                                                  const PhysicalConstants& base = {}) {
  return load_molecule_file(path, base).molecules;
}

/// Reads a constants JSON: either a bare object or one with a `constants` block.
inline ConstantOverrides load_constants(const std::string& path) {
  const std::string text = detail::read_file(path);
  const nlohmann::json doc = detail::parse_json_text(text, path);
  if (doc.is_object() && doc.contains("constants"))
    return detail::parse_constants_block(doc.at("constants"), path);
  return detail::parse_constants_block(doc, path);
}

/// Document accepted by parse_molecule_document. Wavenumber records are
/// written in cm^-1 so reloading with the same constants reproduces them.
inline nlohmann::json to_json(const std::vector<MoleculeRecord>& records,
                              const ConstantOverrides& constants = {}) {
  nlohmann::json doc;
  if (!constants.empty()) {
    nlohmann::json block = nlohmann::json::object();
    if (constants.hbar_c) block["hbar_c"] = *constants.hbar_c;
    if (constants.amu_c2) block["amu_c2"] = *constants.amu_c2;
    if (constants.ev_per_wavenumber) block["ev_per_wavenumber"] = *constants.ev_per_wavenumber;
    doc["constants"] = block;
  }
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : records) {
    nlohmann::json o;
    o["name"] = r.name;
    if (r.De_wavenumber) {
      o["De"] = *r.De_wavenumber;
      o["De_unit"] = "cm-1";
    } else {
      o["De"] = r.De;
      o["De_unit"] = "eV";
    }
    o["re"] = r.re;
    o["mu"] = r.mu;
    o["source"] = to_string(r.source);
    arr.push_back(std::move(o));
  }
  doc["molecules"] = std::move(arr);
  return doc;
}

inline constexpr double kAmuSearchLow = 9.0e8;
inline constexpr double kAmuSearchHigh = 9.6e8;

/// amu_c2 for which the closed-form level of `state` equals
/// `reference_energy`, by bisection on [9.0e8, 9.6e8] eV.
inline double calibrate_amu(const MoleculeRecord& record, double reference_energy,
                            const QuantumState& state, PotentialKind potential,
                            const PhysicalConstants& base = {}) {
  record.validate();
  state.validate();
  const PotentialSpec spec = record.potential(potential);
  auto residual = [&](double amu) {
    PhysicalConstants c = base;
    c.amu_c2 = amu;
    return energy_level(spec, record.mu, state, c).energy - reference_energy;
  };
  double lo = kAmuSearchLow, hi = kAmuSearchHigh;
  double f_lo = residual(lo);
  const double f_hi = residual(hi);
  if (f_lo == 0.0) return lo;
  if (f_hi == 0.0) return hi;
  if ((f_lo > 0.0) == (f_hi > 0.0))
    throw CalibrationFailure("no amu_c2 in [9.0e8, 9.6e8] eV reproduces the reference energy");
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double f = residual(mid);
    if (f == 0.0) return mid;
    if ((f > 0.0) == (f_lo > 0.0)) {
      lo = mid;
      f_lo = f;
    } else {
      hi = mid;
    }
  }
  return std::abs(residual(lo)) <= std::abs(residual(hi)) ? lo : hi;
}

/// eV per cm^-1 implied by species present in both the eV and the cm^-1
/// listings. The per-species ratios must agree to 1e-8.
inline double calibrate_wavenumber(const std::vector<MoleculeRecord>& records) {
  std::vector<double> ratios;
  for (const auto& w : records) {
    if (w.source != MoleculeSource::table6 || !w.De_wavenumber) continue;
    const MoleculeRecord* e = find_molecule(records, w.name, MoleculeSource::table1);
    if (e) ratios.push_back(e->De / *w.De_wavenumber);
  }
  if (ratios.empty()) throw CalibrationFailure("no species listed in both eV and cm^-1");
  double sum = 0.0;
  for (double r : ratios) sum += r;
  const double mean = sum / ratios.size();
  for (double r : ratios) {
    if (std::abs(r - mean) > 1e-8 * mean)
      throw CalibrationFailure("eV/cm^-1 ratios disagree between species");
  }
  return mean;
}

}  // namespace kratzer
