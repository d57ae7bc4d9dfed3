#pragma once

// Plot-ready datasets for the standard comparison figures.
//
//   ptot-vs-bits-100MHz    total power vs ADC bits, B = 100 MHz
//   ptot-vs-bits-1GHz      total power vs ADC bits, B = 1 GHz
//   bstar-vs-bandwidth     DBF/HBF break-even resolution vs bandwidth
//   bwstar-vs-bits         DBF/HBF break-even bandwidth vs resolution
//   snr-eff-vs-bits        effective SNR vs ADC bits
//   power-vs-snreff-lpadc  total power vs effective SNR, low-power ADC
//   power-vs-snreff-hpadc  total power vs effective SNR, high-power ADC

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bfpower/crossover.hpp"
#include "bfpower/dataset.hpp"
#include "bfpower/errors.hpp"
#include "bfpower/power_model.hpp"
#include "bfpower/quantization.hpp"
#include "bfpower/sweep.hpp"

namespace bfpower {

enum class FigureId {
  ptot_vs_bits_100mhz,
  ptot_vs_bits_1ghz,
  bstar_vs_bandwidth,
  bwstar_vs_bits,
  snr_eff_vs_bits,
  power_vs_snreff_lpadc,
  power_vs_snreff_hpadc,
};

inline constexpr std::array<std::pair<FigureId, std::string_view>, 7> kFigureNames{{
    {FigureId::ptot_vs_bits_100mhz, "ptot-vs-bits-100MHz"},
    {FigureId::ptot_vs_bits_1ghz, "ptot-vs-bits-1GHz"},
    {FigureId::bstar_vs_bandwidth, "bstar-vs-bandwidth"},
    {FigureId::bwstar_vs_bits, "bwstar-vs-bits"},
    {FigureId::snr_eff_vs_bits, "snr-eff-vs-bits"},
    {FigureId::power_vs_snreff_lpadc, "power-vs-snreff-lpadc"},
    {FigureId::power_vs_snreff_hpadc, "power-vs-snreff-hpadc"},
}};

inline std::string_view to_string(FigureId id) {
  for (const auto& [fig, name] : kFigureNames) {
    if (fig == id) return name;
  }
  return "?";
}

inline FigureId parse_figure_id(std::string_view name) {
  for (const auto& [fig, text] : kFigureNames) {
    if (text == name) return fig;
  }
  std::string known;
  for (const auto& [fig, text] : kFigureNames) {
    known += known.empty() ? "" : ", ";
    known += text;
  }
  throw DomainError("unknown figure id '" + std::string(name) + "' (known: " + known + ")");
}

// Anything left empty keeps the figure's standard parameterization.
struct FigureOverrides {
  std::optional<std::vector<int>> n_ant;
  std::optional<int> n_rf;          // power figures
  std::optional<int> n_rf_divisor;  // crossover figures: n_rf = n_ant / divisor
  std::optional<std::pair<int, int>> bits;
  std::optional<std::vector<double>> bandwidth;
  std::optional<std::vector<double>> gamma_db;
  std::optional<std::vector<AdcModel>> adcs;
};

namespace detail {

inline std::vector<double> bandwidth_grid_100mhz_to_2ghz() {
  std::vector<double> grid;
  for (int k = 1; k <= 20; ++k) grid.push_back(k * 1e8);
  return grid;
}

inline Dataset power_vs_bits(double bandwidth, const ComponentPowerTable& table,
                             const FigureOverrides& o) {
  SweepSpec spec;
  spec.architectures = {kAllArchitectures.begin(), kAllArchitectures.end()};
  spec.n_ant_values = o.n_ant.value_or(std::vector<int>{16, 64});
  spec.n_rf_rule = std::vector<int>{o.n_rf.value_or(4)};
  spec.bits_min = o.bits ? o.bits->first : 1;
  spec.bits_max = o.bits ? o.bits->second : 10;
  spec.bandwidth_values = o.bandwidth.value_or(std::vector<double>{bandwidth});
  spec.adc_models = o.adcs.value_or(std::vector<AdcModel>{AdcModel::lpadc()});
  const auto result = run_sweep(spec, table, 1);
  if (!result.errors.empty()) throw DomainError(result.errors.front().message);
  return sweep_dataset(result, false);
}

inline Dataset power_vs_snr(const AdcModel& default_adc, int default_max_bits,
                            const ComponentPowerTable& table, const FigureOverrides& o) {
  const auto gammas = o.gamma_db.value_or(std::vector<double>{10.0});
  if (gammas.size() != 1) throw DomainError("power-vs-snreff figures take a single gamma_db");
  SweepSpec spec;
  spec.architectures = {kAllArchitectures.begin(), kAllArchitectures.end()};
  spec.n_ant_values = o.n_ant.value_or(std::vector<int>{16});
  spec.n_rf_rule = std::vector<int>{o.n_rf.value_or(4)};
  spec.bits_min = o.bits ? o.bits->first : 1;
  spec.bits_max = o.bits ? o.bits->second : default_max_bits;
  spec.bandwidth_values = o.bandwidth.value_or(std::vector<double>{1e8, 1e9});
  spec.adc_models = o.adcs.value_or(std::vector<AdcModel>{default_adc});
  spec.gamma_db = gammas.front();
  const auto result = run_sweep(spec, table, 1);
  if (!result.errors.empty()) throw DomainError(result.errors.front().message);

  const auto front = pareto_front(result.points);
  auto on_front = [&](const TradeoffPoint& p) {
    for (const auto& f : front.points) {
      if (f.design == p.design && f.adc_label == p.adc_label) return true;
    }
    return false;
  };

  Dataset data({"arch", "adc", "n_ant", "n_rf", "bandwidth_hz", "bits", "p_tot_w", "gamma_db",
                "gamma_ef_db", "pareto"});
  for (const auto& p : result.points) {
    data.add_row({std::string(to_string(p.design.arch())), p.adc_label,
                  std::int64_t{p.design.n_ant()}, std::int64_t{p.design.n_rf()},
                  p.design.bandwidth(), std::int64_t{p.design.bits()}, p.total_power,
                  gammas.front(), *p.gamma_ef_db, std::int64_t{on_front(p) ? 1 : 0}});
  }
  return data;
}

inline int hybrid_chains(int n_ant, int divisor) {
  if (divisor < 1 || n_ant % divisor != 0) {
    throw DomainError("n_ant=" + std::to_string(n_ant) + " is not divisible by n_rf divisor " +
                      std::to_string(divisor));
  }
  return n_ant / divisor;
}

inline std::vector<AdcModel> crossover_adcs(const FigureOverrides& o) {
  return o.adcs.value_or(std::vector<AdcModel>{AdcModel::hpadc(), AdcModel::lpadc()});
}

}  // namespace detail

inline Dataset figure_dataset(FigureId id, const ComponentPowerTable& table,
                              const FigureOverrides& o = {}) {
  switch (id) {
    case FigureId::ptot_vs_bits_100mhz:
      return detail::power_vs_bits(1e8, table, o);
    case FigureId::ptot_vs_bits_1ghz:
      return detail::power_vs_bits(1e9, table, o);

    case FigureId::bstar_vs_bandwidth: {
      Dataset data({"adc", "n_ant", "n_rf", "bandwidth_hz", "raw_levels", "b_star"});
      const auto n_ants = detail::sorted_unique(o.n_ant.value_or(std::vector<int>{64, 128, 256}));
      const auto bandwidths =
          detail::sorted_unique(o.bandwidth.value_or(detail::bandwidth_grid_100mhz_to_2ghz()));
      for (const auto& adc : detail::crossover_adcs(o)) {
        for (int n_ant : n_ants) {
          const int n_rf = detail::hybrid_chains(n_ant, o.n_rf_divisor.value_or(8));
          const CrossoverQuery q{n_ant, n_rf, table, adc};
          for (double bw : bandwidths) {
            const auto r = bits_star(q, bw);
            data.add_row({adc.label, std::int64_t{n_ant}, std::int64_t{n_rf}, bw, r.raw_levels,
                          r.bits ? Cell{std::int64_t{*r.bits}} : Cell{}});
          }
        }
      }
      return data;
    }

    case FigureId::bwstar_vs_bits: {
      Dataset data({"adc", "n_ant", "n_rf", "bits", "bandwidth_star_hz"});
      const auto n_ants = detail::sorted_unique(o.n_ant.value_or(std::vector<int>{64, 128, 256}));
      const int lo = o.bits ? o.bits->first : 1;
      const int hi = o.bits ? o.bits->second : 10;
      for (const auto& adc : detail::crossover_adcs(o)) {
        for (int n_ant : n_ants) {
          const int n_rf = detail::hybrid_chains(n_ant, o.n_rf_divisor.value_or(8));
          const CrossoverQuery q{n_ant, n_rf, table, adc};
          for (int b = lo; b <= hi; ++b) {
            const auto r = bandwidth_star(q, b);
            data.add_row({adc.label, std::int64_t{n_ant}, std::int64_t{n_rf}, std::int64_t{b},
                          r.bandwidth ? Cell{*r.bandwidth} : Cell{}});
          }
        }
      }
      return data;
    }

    case FigureId::snr_eff_vs_bits: {
      Dataset data({"gamma_db", "bits", "eta", "gamma_ef_db"});
      const auto gammas = o.gamma_db.value_or(std::vector<double>{-10.0, 0.0, 10.0, 20.0});
      const int lo = o.bits ? o.bits->first : 1;
      const int hi = o.bits ? o.bits->second : 10;
      for (double g : gammas) {
        for (int b = lo; b <= hi; ++b) {
          data.add_row({g, std::int64_t{b}, eta(b), to_db(effective_snr(from_db(g), b))});
        }
      }
      return data;
    }

    case FigureId::power_vs_snreff_lpadc:
      return detail::power_vs_snr(AdcModel::lpadc(), 6, table, o);
    case FigureId::power_vs_snreff_hpadc:
      return detail::power_vs_snr(AdcModel::hpadc(), 5, table, o);
  }
  throw DomainError("unknown figure id");
}

}  // namespace bfpower
