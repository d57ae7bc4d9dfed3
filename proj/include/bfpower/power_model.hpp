#pragma once

// Total receiver power for analog, hybrid and digital beamforming front ends.
//
// All quantities are in base SI units: watts, joules per conversion step,
// hertz. Component powers other than the ADC do not depend on bandwidth;
// ADC power scales linearly with bandwidth and with the number of
// quantization levels 2^bits (Nyquist sampling, one ADC each for I and Q).

#include <array>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bfpower/errors.hpp"

namespace bfpower {

inline constexpr int kMinBits = 1;
inline constexpr int kMaxBits = 20;

inline void check_bits(int bits) {
  if (bits < kMinBits || bits > kMaxBits) {
    throw DomainError("ADC resolution must be in [1, 20] bits, got " + std::to_string(bits));
  }
}

inline void check_bandwidth(double bandwidth) {
  if (!(bandwidth > 0.0) || !std::isfinite(bandwidth)) {
    throw DomainError("bandwidth must be positive and finite");
  }
}

// Per-component power draw in watts.
struct ComponentPowerTable {
  double p_lna = 0.0;
  double p_ps = 0.0;  // one phase shifter
  double p_combiner = 0.0;
  double p_splitter = 0.0;
  double p_mixer = 0.0;
  double p_lo = 0.0;
  double p_lpf = 0.0;
  double p_bb_amp = 0.0;

  // Reference 60 GHz-class front end. The combiner has no published figure
  // and is set equal to the splitter.
  static constexpr ComponentPowerTable defaults() {
    return {.p_lna = 0.039,
            .p_ps = 0.0195,
            .p_combiner = 0.0195,
            .p_splitter = 0.0195,
            .p_mixer = 0.0168,
            .p_lo = 0.005,
            .p_lpf = 0.014,
            .p_bb_amp = 0.005};
  }

  // (config key, member) pairs in canonical order.
  static constexpr std::array<std::pair<std::string_view, double ComponentPowerTable::*>, 8>
  fields() {
    return {{{"p_lna", &ComponentPowerTable::p_lna},
             {"p_ps", &ComponentPowerTable::p_ps},
             {"p_combiner", &ComponentPowerTable::p_combiner},
             {"p_splitter", &ComponentPowerTable::p_splitter},
             {"p_mixer", &ComponentPowerTable::p_mixer},
             {"p_lo", &ComponentPowerTable::p_lo},
             {"p_lpf", &ComponentPowerTable::p_lpf},
             {"p_bb_amp", &ComponentPowerTable::p_bb_amp}}};
  }

  void validate() const {
    for (const auto& [name, member] : fields()) {
      const double v = this->*member;
      if (!(v >= 0.0) || !std::isfinite(v)) {
        throw DomainError("component power " + std::string(name) +
                          " must be a non-negative finite number of watts");
      }
    }
  }

  friend bool operator==(const ComponentPowerTable&, const ComponentPowerTable&) = default;
};

// ADC described by its figure of merit: energy per conversion step.
struct AdcModel {
  std::string label;
  double energy_per_step = 0.0;  // joules

  static AdcModel lpadc() { return {"LPADC", 494e-15}; }
  static AdcModel hpadc() { return {"HPADC", 12.5e-12}; }

  void validate() const {
    if (!(energy_per_step > 0.0) || !std::isfinite(energy_per_step)) {
      throw DomainError("ADC '" + label + "': energy per conversion step must be positive");
    }
  }

  friend bool operator==(const AdcModel&, const AdcModel&) = default;
};

enum class Architecture { abf, hbf, dbf };

inline constexpr std::array<Architecture, 3> kAllArchitectures{Architecture::abf,
                                                               Architecture::hbf,
                                                               Architecture::dbf};

inline std::string_view to_string(Architecture a) {
  switch (a) {
    case Architecture::abf: return "abf";
    case Architecture::hbf: return "hbf";
    case Architecture::dbf: return "dbf";
  }
  return "?";
}

inline Architecture parse_architecture(std::string_view s) {
  std::string lower(s);
  for (auto& ch : lower) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  for (auto a : kAllArchitectures) {
    if (to_string(a) == lower) return a;
  }
  throw DomainError("unknown architecture '" + std::string(s) + "' (expected abf, hbf or dbf)");
}

// One point in the design space. n_rf only matters for HBF; ABF and DBF
// designs always carry n_rf == 1.
class ReceiverDesign {
 public:
  static ReceiverDesign make(Architecture arch, int n_ant, int n_rf, int bits, double bandwidth) {
    if (n_ant < 1) throw DomainError("n_ant must be >= 1");
    check_bits(bits);
    check_bandwidth(bandwidth);
    if (arch == Architecture::hbf) {
      if (n_rf < 1 || n_rf > n_ant) {
        throw DomainError("hybrid design needs 1 <= n_rf <= n_ant, got n_rf=" +
                          std::to_string(n_rf) + ", n_ant=" + std::to_string(n_ant));
      }
    } else {
      n_rf = 1;
    }
    return ReceiverDesign(arch, n_ant, n_rf, bits, bandwidth);
  }

  Architecture arch() const { return arch_; }
  int n_ant() const { return n_ant_; }
  int n_rf() const { return n_rf_; }
  int bits() const { return bits_; }
  double bandwidth() const { return bandwidth_; }
  std::int64_t quantization_levels() const { return std::int64_t{1} << bits_; }

  friend bool operator==(const ReceiverDesign&, const ReceiverDesign&) = default;

 private:
  ReceiverDesign(Architecture arch, int n_ant, int n_rf, int bits, double bandwidth)
      : arch_(arch), n_ant_(n_ant), n_rf_(n_rf), bits_(bits), bandwidth_(bandwidth) {}

  Architecture arch_;
  int n_ant_;
  int n_rf_;
  int bits_;
  double bandwidth_;
};

struct PowerBreakdown {
  double total = 0.0;
  std::vector<std::pair<std::string, double>> per_component;

  // Contribution of one labelled group, 0 if absent.
  double component(std::string_view label) const {
    for (const auto& [name, watts] : per_component) {
      if (name == label) return watts;
    }
    return 0.0;
  }
};

inline double adc_power(const AdcModel& adc, double bandwidth, int bits) {
  adc.validate();
  check_bandwidth(bandwidth);
  check_bits(bits);
  return adc.energy_per_step * bandwidth * std::ldexp(1.0, bits);
}

// Mixer, local oscillator, low-pass filter and baseband amplifier.
inline double rf_chain_power(const ComponentPowerTable& table) {
  return table.p_mixer + table.p_lo + table.p_lpf + table.p_bb_amp;
}

inline PowerBreakdown total_power(const ReceiverDesign& design, const ComponentPowerTable& table,
                                  const AdcModel& adc) {
  table.validate();
  const double n_ant = design.n_ant();
  const double n_rf = design.n_rf();
  const double p_rf = rf_chain_power(table);
  const double p_adc_pair = 2.0 * adc_power(adc, design.bandwidth(), design.bits());

  double lna = n_ant * table.p_lna;
  double phase_shifters = 0.0;
  double splitters = 0.0;
  double combiners = 0.0;
  double rf_chains = 0.0;
  double adcs = 0.0;
  switch (design.arch()) {
    case Architecture::abf:
      phase_shifters = n_ant * table.p_ps;
      combiners = table.p_combiner;
      rf_chains = p_rf;
      adcs = p_adc_pair;
      break;
    case Architecture::hbf:
      splitters = n_ant * table.p_splitter;
      phase_shifters = n_ant * n_rf * table.p_ps;
      combiners = n_rf * table.p_combiner;
      rf_chains = n_rf * p_rf;
      adcs = n_rf * p_adc_pair;
      break;
    case Architecture::dbf:
      rf_chains = n_ant * p_rf;
      adcs = n_ant * p_adc_pair;
      break;
  }

  PowerBreakdown out;
  out.per_component = {{"lna", lna},           {"phase_shifters", phase_shifters},
                       {"splitters", splitters}, {"combiners", combiners},
                       {"rf_chains", rf_chains}, {"adcs", adcs}};
  out.total = std::accumulate(out.per_component.begin(), out.per_component.end(), 0.0,
                              [](double acc, const auto& kv) { return acc + kv.second; });
  return out;
}

}  // namespace bfpower
