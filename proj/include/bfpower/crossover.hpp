#pragma once

// Break-even points between fully digital and hybrid receivers.
//
// Equating the DBF and HBF totals and solving for the ADC term gives
//
//     2 (N_ANT - N_RF) c B R = N_ANT (N_RF P_PS + P_SP) + N_RF P_C - (N_ANT - N_RF) P_RF
//
// from which the largest resolution b* (fixed B) or bandwidth B* (fixed b)
// with P_DBF <= P_HBF follows. Ties favour DBF. The closed forms require
// N_RF < N_ANT. As N_ANT grows they tend to a limit that is also a lower
// bound for every finite array.

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "bfpower/errors.hpp"
#include "bfpower/power_model.hpp"

namespace bfpower {

struct CrossoverQuery {
  int n_ant = 0;
  int n_rf = 0;
  ComponentPowerTable table = ComponentPowerTable::defaults();
  AdcModel adc = AdcModel::lpadc();
};

struct BitsCrossover {
  std::optional<int> bits;  // absent when no b >= 1 keeps DBF at or below HBF
  double raw_levels = 0.0;  // unfloored R

  bool exists() const { return bits.has_value(); }
};

struct BandwidthCrossover {
  std::optional<double> bandwidth;  // Hz, absent when B* <= 0
  double raw_bandwidth = 0.0;

  bool exists() const { return bandwidth.has_value(); }
};

namespace detail {

inline void check_query(const CrossoverQuery& q) {
  if (q.n_rf < 1) throw DomainError("n_rf must be >= 1");
  if (q.n_rf >= q.n_ant) {
    throw DomainError("closed-form crossover holds only for n_rf < n_ant (got n_rf=" +
                      std::to_string(q.n_rf) + ", n_ant=" + std::to_string(q.n_ant) + ")");
  }
  q.table.validate();
  q.adc.validate();
}

// Power HBF spends beyond DBF excluding ADCs, i.e. the budget DBF's extra
// ADCs may consume before it loses.
inline double excess_hybrid_power(const CrossoverQuery& q) {
  const double n_ant = q.n_ant;
  const double n_rf = q.n_rf;
  return n_ant * (n_rf * q.table.p_ps + q.table.p_splitter) + n_rf * q.table.p_combiner -
         (n_ant - n_rf) * rf_chain_power(q.table);
}

inline double asymptotic_excess(int n_rf, const ComponentPowerTable& table) {
  return n_rf * table.p_ps + table.p_splitter - rf_chain_power(table);
}

// floor(log2(levels)) clamped to the bit cap; levels >= 2.
inline int floor_log2_bits(double levels) {
  if (std::isinf(levels)) return kMaxBits;
  return std::min(std::ilogb(levels), kMaxBits);
}

inline BitsCrossover bits_from_levels(double levels) {
  BitsCrossover out;
  out.raw_levels = levels;
  if (levels >= 2.0) out.bits = floor_log2_bits(levels);
  return out;
}

inline BandwidthCrossover bandwidth_from_raw(double raw) {
  BandwidthCrossover out;
  out.raw_bandwidth = raw;
  if (raw > 0.0) out.bandwidth = raw;
  return out;
}

}  // namespace detail

inline BitsCrossover bits_star(const CrossoverQuery& q, double bandwidth) {
  detail::check_query(q);
  check_bandwidth(bandwidth);
  const double denom = 2.0 * (q.n_ant - q.n_rf) * q.adc.energy_per_step * bandwidth;
  return detail::bits_from_levels(detail::excess_hybrid_power(q) / denom);
}

inline BandwidthCrossover bandwidth_star(const CrossoverQuery& q, int bits) {
  detail::check_query(q);
  check_bits(bits);
  const double denom =
      2.0 * (q.n_ant - q.n_rf) * q.adc.energy_per_step * std::ldexp(1.0, bits);
  return detail::bandwidth_from_raw(detail::excess_hybrid_power(q) / denom);
}

// N_ANT -> infinity limits of bits_star / bandwidth_star.
inline BitsCrossover asymptotic_bits_star(int n_rf, const ComponentPowerTable& table,
                                          const AdcModel& adc, double bandwidth) {
  if (n_rf < 1) throw DomainError("n_rf must be >= 1");
  table.validate();
  adc.validate();
  check_bandwidth(bandwidth);
  const double excess = detail::asymptotic_excess(n_rf, table);
  if (!(excess > 0.0)) return {std::nullopt, excess / (2.0 * adc.energy_per_step * bandwidth)};
  return detail::bits_from_levels(excess / (2.0 * adc.energy_per_step * bandwidth));
}

inline BandwidthCrossover asymptotic_bandwidth_star(int n_rf, const ComponentPowerTable& table,
                                                    const AdcModel& adc, int bits) {
  if (n_rf < 1) throw DomainError("n_rf must be >= 1");
  table.validate();
  adc.validate();
  check_bits(bits);
  const double excess = detail::asymptotic_excess(n_rf, table);
  return detail::bandwidth_from_raw(excess / (2.0 * adc.energy_per_step * std::ldexp(1.0, bits)));
}

// Direct scan of b = 1..20 comparing full DBF and HBF totals. Shares no
// algebra with bits_star; used to cross-check it.
inline BitsCrossover brute_force_bits_star(const CrossoverQuery& q, double bandwidth) {
  detail::check_query(q);
  BitsCrossover out;
  for (int b = kMinBits; b <= kMaxBits; ++b) {
    const auto dbf = ReceiverDesign::make(Architecture::dbf, q.n_ant, 1, b, bandwidth);
    const auto hbf = ReceiverDesign::make(Architecture::hbf, q.n_ant, q.n_rf, b, bandwidth);
    if (total_power(dbf, q.table, q.adc).total <= total_power(hbf, q.table, q.adc).total) {
      out.bits = b;
    }
  }
  return out;
}

}  // namespace bfpower
