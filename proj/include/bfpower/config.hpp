#pragma once

// Run configuration in flat sectioned key = value text:
//
//   [components]          p_lna = 39 mW, p_ps = 19.5 mW, ... (power units)
//   [adc.<name>]          c = 494 fJ, label = LPADC          (energy units)
//   [defaults]            adc = lpadc, epsilon_db = 0.3, precision = 4,
//                         workers = 0, output = -
//
// '#' and ';' start comments. Omitted component powers keep their defaults;
// the lpadc and hpadc profiles are always present unless redefined.
//
// Sweep spec files use the same syntax with an additional [sweep] section:
//
//   architectures = abf, hbf, dbf
//   n_ant = 16, 64
//   n_rf = 4            (or n_rf_ratio = 8)
//   bits = 1..10
//   bandwidth = 100 MHz, 1 GHz
//   adc = lpadc, hpadc
//   gamma_db = 10       (optional)

#include <cctype>
#include <charconv>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "bfpower/errors.hpp"
#include "bfpower/format.hpp"
#include "bfpower/power_model.hpp"
#include "bfpower/sweep.hpp"
#include "bfpower/units.hpp"

namespace bfpower {

struct RunDefaults {
  std::string adc = "lpadc";
  double epsilon_db = 0.3;
  unsigned workers = 0;  // 0 = hardware concurrency
  std::optional<std::string> output;  // absent = standard output
  int precision = 4;                  // significant digits; 0 = full precision

  friend bool operator==(const RunDefaults&, const RunDefaults&) = default;
};

struct RunConfig {
  ComponentPowerTable components = ComponentPowerTable::defaults();
  std::map<std::string, AdcModel> adcs{{"hpadc", AdcModel::hpadc()},
                                       {"lpadc", AdcModel::lpadc()}};
  RunDefaults defaults;

  const AdcModel& adc(std::string_view name) const {
    std::string key(name);
    for (auto& ch : key) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    const auto it = adcs.find(key);
    if (it == adcs.end()) {
      std::string known;
      for (const auto& [k, v] : adcs) known += (known.empty() ? "" : ", ") + k;
      throw DomainError("unknown ADC profile '" + std::string(name) + "' (known: " + known + ")");
    }
    return it->second;
  }

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

namespace detail {

struct ConfigEntry {
  std::string section;
  std::string key;
  std::string value;
  int line;
};

inline bool valid_name(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!(std::islower(static_cast<unsigned char>(ch)) ||
          std::isdigit(static_cast<unsigned char>(ch)) || ch == '_' || ch == '-')) {
      return false;
    }
  }
  return true;
}

inline std::vector<ConfigEntry> tokenize_config(std::string_view text) {
  std::vector<ConfigEntry> entries;
  std::set<std::pair<std::string, std::string>> seen;
  std::string section;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    if (const auto c = line.find_first_of("#;"); c != std::string_view::npos) {
      line = line.substr(0, c);
    }
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError(line_no, "unterminated section header");
      section = std::string(trim(line.substr(1, line.size() - 2)));
      if (section.empty()) throw ConfigError(line_no, "empty section name");
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError(line_no, "expected 'key = value', got '" + std::string(line) + "'");
    }
    std::string key(trim(line.substr(0, eq)));
    std::string value(trim(line.substr(eq + 1)));
    if (key.empty()) throw ConfigError(line_no, "missing key before '='");
    if (section.empty()) throw ConfigError(line_no, "key '" + key + "' outside any section");
    if (value.empty()) throw ConfigError(line_no, "missing value for '" + key + "'");
    if (!seen.emplace(section, key).second) {
      throw ConfigError(line_no, "duplicate key '" + key + "' in [" + section + "]");
    }
    entries.push_back({section, std::move(key), std::move(value), line_no});
  }
  return entries;
}

inline double parse_real(const ConfigEntry& e) {
  double v = 0.0;
  const char* first = e.value.data();
  const char* last = first + e.value.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last) {
    throw ConfigError(e.line, e.key + ": expected a number, got '" + e.value + "'");
  }
  return v;
}

inline long long parse_integer(const ConfigEntry& e, std::string_view text) {
  long long v = 0;
  const std::string_view t = trim(text);
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc{} || ptr != t.data() + t.size() || t.empty()) {
    throw ConfigError(e.line, e.key + ": expected an integer, got '" + std::string(t) + "'");
  }
  return v;
}

inline std::vector<std::string_view> split_list(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    const auto comma = s.find(',', pos);
    out.push_back(trim(s.substr(pos, comma == std::string_view::npos ? s.npos : comma - pos)));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

inline double parse_nonnegative(const ConfigEntry& e, Quantity q) {
  double v = 0.0;
  try {
    v = parse_quantity(e.value, q);
  } catch (const UnitError& err) {
    throw ConfigError(e.line, e.key + ": " + err.what());
  }
  if (v < 0.0) throw ConfigError(e.line, e.key + ": negative value '" + e.value + "'");
  return v;
}

// Applies one [components] / [adc.*] / [defaults] entry; false if the
// section is not one of those.
inline bool apply_config_entry(RunConfig& cfg, const ConfigEntry& e,
                               std::set<std::string>& redefined_adcs) {
  if (e.section == "components") {
    for (const auto& [name, member] : ComponentPowerTable::fields()) {
      if (e.key == name) {
        cfg.components.*member = parse_nonnegative(e, Quantity::power);
        return true;
      }
    }
    throw ConfigError(e.line, "unknown key '" + e.key + "' in [components]");
  }

  if (e.section.rfind("adc.", 0) == 0) {
    const std::string name = e.section.substr(4);
    if (!valid_name(name)) {
      throw ConfigError(e.line, "ADC name '" + name + "' must be lowercase [a-z0-9_-]");
    }
    if (redefined_adcs.insert(name).second) {
      std::string upper = name;
      for (auto& ch : upper) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
      const auto it = cfg.adcs.find(name);
      cfg.adcs[name] = it != cfg.adcs.end() ? it->second : AdcModel{upper, 0.0};
    }
    auto& adc = cfg.adcs[name];
    if (e.key == "c") {
      adc.energy_per_step = parse_nonnegative(e, Quantity::energy);
      if (adc.energy_per_step == 0.0) throw ConfigError(e.line, "c: must be positive");
    } else if (e.key == "label") {
      adc.label = e.value;
    } else {
      throw ConfigError(e.line, "unknown key '" + e.key + "' in [" + e.section + "]");
    }
    return true;
  }

  if (e.section == "defaults") {
    auto& d = cfg.defaults;
    if (e.key == "adc") {
      d.adc = e.value;
    } else if (e.key == "epsilon_db") {
      d.epsilon_db = parse_real(e);
      if (!(d.epsilon_db > 0.0)) throw ConfigError(e.line, "epsilon_db: must be positive");
    } else if (e.key == "workers") {
      const auto w = parse_integer(e, e.value);
      if (w < 0 || w > 4096) throw ConfigError(e.line, "workers: must be in [0, 4096]");
      d.workers = static_cast<unsigned>(w);
    } else if (e.key == "output") {
      d.output = e.value == "-" ? std::nullopt : std::optional<std::string>(e.value);
    } else if (e.key == "precision") {
      const auto p = parse_integer(e, e.value);
      if (p < 0 || p > 17) throw ConfigError(e.line, "precision: must be in [0, 17]");
      d.precision = static_cast<int>(p);
    } else {
      throw ConfigError(e.line, "unknown key '" + e.key + "' in [defaults]");
    }
    return true;
  }
  return false;
}

inline void check_adc_profiles(const RunConfig& cfg) {
  for (const auto& [name, adc] : cfg.adcs) {
    if (!(adc.energy_per_step > 0.0)) {
      throw ConfigError(0, "[adc." + name + "] needs a positive c");
    }
  }
}

}  // namespace detail

inline RunConfig parse_config(std::string_view text) {
  RunConfig cfg;
  std::set<std::string> redefined;
  for (const auto& e : detail::tokenize_config(text)) {
    if (!detail::apply_config_entry(cfg, e, redefined)) {
      throw ConfigError(e.line, "unknown section [" + e.section + "]");
    }
  }
  detail::check_adc_profiles(cfg);
  return cfg;
}

// Canonical text form; parse_config(render_config(c)) == c.
inline std::string render_config(const RunConfig& cfg) {
  std::ostringstream out;
  out << "[components]\n";
  for (const auto& [name, member] : ComponentPowerTable::fields()) {
    out << name << " = " << render_quantity(cfg.components.*member, Quantity::power) << "\n";
  }
  for (const auto& [name, adc] : cfg.adcs) {
    out << "\n[adc." << name << "]\n";
    out << "label = " << adc.label << "\n";
    out << "c = " << render_quantity(adc.energy_per_step, Quantity::energy) << "\n";
  }
  const auto& d = cfg.defaults;
  out << "\n[defaults]\n";
  out << "adc = " << d.adc << "\n";
  out << "epsilon_db = " << shortest(d.epsilon_db) << "\n";
  out << "workers = " << d.workers << "\n";
  out << "output = " << d.output.value_or("-") << "\n";
  out << "precision = " << d.precision << "\n";
  return out.str();
}

struct SweepFile {
  RunConfig config;
  SweepSpec spec;
};

// Reads a sweep spec file on top of `base`. [components] / [adc.*] /
// [defaults] sections in the file override the base configuration.
inline SweepFile parse_sweep_file(std::string_view text, const RunConfig& base) {
  SweepFile out{base, {}};
  std::set<std::string> redefined;
  std::vector<detail::ConfigEntry> sweep_entries;
  for (auto& e : detail::tokenize_config(text)) {
    if (e.section == "sweep") {
      sweep_entries.push_back(std::move(e));
    } else if (!detail::apply_config_entry(out.config, e, redefined)) {
      throw ConfigError(e.line, "unknown section [" + e.section + "]");
    }
  }
  detail::check_adc_profiles(out.config);

  auto& spec = out.spec;
  bool have_n_rf = false;
  std::vector<std::string> adc_names;
  for (const auto& e : sweep_entries) {
    if (e.key == "architectures") {
      for (auto item : detail::split_list(e.value)) {
        try {
          spec.architectures.push_back(parse_architecture(item));
        } catch (const DomainError& err) {
          throw ConfigError(e.line, err.what());
        }
      }
    } else if (e.key == "n_ant") {
      for (auto item : detail::split_list(e.value)) {
        const auto v = detail::parse_integer(e, item);
        if (v < 1 || v > 1'000'000) throw ConfigError(e.line, "n_ant: out of range");
        spec.n_ant_values.push_back(static_cast<int>(v));
      }
    } else if (e.key == "n_rf" || e.key == "n_rf_ratio") {
      if (have_n_rf) throw ConfigError(e.line, "give either n_rf or n_rf_ratio, not both");
      have_n_rf = true;
      if (e.key == "n_rf") {
        std::vector<int> values;
        for (auto item : detail::split_list(e.value)) {
          const auto v = detail::parse_integer(e, item);
          if (v < 1 || v > 1'000'000) throw ConfigError(e.line, "n_rf: out of range");
          values.push_back(static_cast<int>(v));
        }
        spec.n_rf_rule = std::move(values);
      } else {
        const auto k = detail::parse_integer(e, e.value);
        if (k < 1 || k > 1'000'000) throw ConfigError(e.line, "n_rf_ratio: out of range");
        spec.n_rf_rule = RatioRule{static_cast<int>(k)};
      }
    } else if (e.key == "bits") {
      const std::string_view v = e.value;
      if (const auto dots = v.find(".."); dots != std::string_view::npos) {
        spec.bits_min = static_cast<int>(detail::parse_integer(e, v.substr(0, dots)));
        spec.bits_max = static_cast<int>(detail::parse_integer(e, v.substr(dots + 2)));
      } else {
        spec.bits_min = spec.bits_max = static_cast<int>(detail::parse_integer(e, v));
      }
      if (spec.bits_min < kMinBits || spec.bits_max > kMaxBits || spec.bits_min > spec.bits_max) {
        throw ConfigError(e.line, "bits: expected a range within 1..20");
      }
    } else if (e.key == "bandwidth") {
      for (auto item : detail::split_list(e.value)) {
        double bw = 0.0;
        try {
          bw = parse_frequency(item);
        } catch (const UnitError& err) {
          throw ConfigError(e.line, "bandwidth: " + std::string(err.what()));
        }
        if (!(bw > 0.0)) throw ConfigError(e.line, "bandwidth: must be positive");
        spec.bandwidth_values.push_back(bw);
      }
    } else if (e.key == "adc") {
      for (auto item : detail::split_list(e.value)) adc_names.emplace_back(item);
    } else if (e.key == "gamma_db") {
      spec.gamma_db = detail::parse_real(e);
    } else {
      throw ConfigError(e.line, "unknown key '" + e.key + "' in [sweep]");
    }
  }

  if (adc_names.empty()) adc_names.push_back(out.config.defaults.adc);
  for (const auto& name : adc_names) {
    try {
      spec.adc_models.push_back(out.config.adc(name));
    } catch (const DomainError& err) {
      throw ConfigError(0, err.what());
    }
  }
  try {
    spec.validate();
  } catch (const DomainError& err) {
    throw ConfigError(0, err.what());
  }
  return out;
}

}  // namespace bfpower
