#pragma once

// Grid evaluation of receiver designs and power / effective-SNR trade-offs.
//
// run_sweep evaluates the Cartesian product of a SweepSpec. Output order is
// fixed (architecture name, ADC label, n_ant, n_rf, bandwidth, bits) no
// matter how many worker threads are used. Points that cannot be evaluated
// are reported next to the results instead of aborting the sweep.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <thread>
#include <tuple>
#include <variant>
#include <vector>

#include "bfpower/dataset.hpp"
#include "bfpower/errors.hpp"
#include "bfpower/format.hpp"
#include "bfpower/power_model.hpp"
#include "bfpower/quantization.hpp"

namespace bfpower {

// n_rf = n_ant / divisor for hybrid designs.
struct RatioRule {
  int divisor = 8;

  friend bool operator==(const RatioRule&, const RatioRule&) = default;
};

using NrfRule = std::variant<std::vector<int>, RatioRule>;

struct SweepSpec {
  std::vector<Architecture> architectures;
  std::vector<int> n_ant_values;
  NrfRule n_rf_rule = std::vector<int>{1};
  int bits_min = 1;
  int bits_max = 10;
  std::vector<double> bandwidth_values;
  std::vector<AdcModel> adc_models;
  std::optional<double> gamma_db;

  void validate() const {
    if (architectures.empty()) throw DomainError("sweep needs at least one architecture");
    if (n_ant_values.empty()) throw DomainError("sweep needs at least one n_ant value");
    if (bandwidth_values.empty()) throw DomainError("sweep needs at least one bandwidth");
    if (adc_models.empty()) throw DomainError("sweep needs at least one ADC model");
    if (const auto* list = std::get_if<std::vector<int>>(&n_rf_rule); list && list->empty()) {
      throw DomainError("sweep needs at least one n_rf value");
    }
    if (const auto* ratio = std::get_if<RatioRule>(&n_rf_rule); ratio && ratio->divisor < 1) {
      throw DomainError("n_rf ratio divisor must be >= 1");
    }
    check_bits(bits_min);
    check_bits(bits_max);
    if (bits_min > bits_max) throw DomainError("bits range is empty");
  }
};

struct TradeoffPoint {
  ReceiverDesign design;
  std::string adc_label;
  double total_power = 0.0;
  std::optional<double> gamma_ef_db;
};

struct SkippedPoint {
  Architecture arch;
  int n_ant;
  int divisor;
};

struct PointError {
  std::string where;
  std::string message;
};

struct SweepResult {
  std::vector<TradeoffPoint> points;
  std::vector<SkippedPoint> skipped;
  std::vector<PointError> errors;
};

namespace detail {

struct SweepTask {
  Architecture arch;
  std::size_t adc;
  int n_ant;
  int n_rf;
  double bandwidth;
  int bits;
};

template <typename T>
std::vector<T> sorted_unique(std::vector<T> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

inline std::string describe(const SweepTask& t, const std::vector<AdcModel>& adcs) {
  return std::string(to_string(t.arch)) + " adc=" + adcs[t.adc].label +
         " n_ant=" + std::to_string(t.n_ant) + " n_rf=" + std::to_string(t.n_rf) +
         " bandwidth=" + shortest(t.bandwidth) + " bits=" + std::to_string(t.bits);
}

}  // namespace detail

inline SweepResult run_sweep(const SweepSpec& spec, const ComponentPowerTable& table,
                             unsigned workers = 0) {
  spec.validate();
  table.validate();

  std::vector<Architecture> archs(spec.architectures.begin(), spec.architectures.end());
  std::sort(archs.begin(), archs.end(),
            [](Architecture a, Architecture b) { return to_string(a) < to_string(b); });
  archs.erase(std::unique(archs.begin(), archs.end()), archs.end());

  std::vector<std::size_t> adc_order(spec.adc_models.size());
  for (std::size_t i = 0; i < adc_order.size(); ++i) adc_order[i] = i;
  std::stable_sort(adc_order.begin(), adc_order.end(), [&](std::size_t a, std::size_t b) {
    return spec.adc_models[a].label < spec.adc_models[b].label;
  });

  const auto n_ants = detail::sorted_unique(spec.n_ant_values);
  const auto bandwidths = detail::sorted_unique(spec.bandwidth_values);

  SweepResult result;
  std::vector<detail::SweepTask> tasks;
  for (auto arch : archs) {
    for (auto adc : adc_order) {
      for (int n_ant : n_ants) {
        std::vector<int> n_rfs{1};
        if (arch == Architecture::hbf) {
          if (const auto* ratio = std::get_if<RatioRule>(&spec.n_rf_rule)) {
            if (n_ant % ratio->divisor != 0) {
              // Reported once per (arch, n_ant), not per ADC.
              if (adc == adc_order.front()) result.skipped.push_back({arch, n_ant, ratio->divisor});
              continue;
            }
            n_rfs = {n_ant / ratio->divisor};
          } else {
            n_rfs = detail::sorted_unique(std::get<std::vector<int>>(spec.n_rf_rule));
          }
        }
        for (int n_rf : n_rfs) {
          for (double bw : bandwidths) {
            for (int b = spec.bits_min; b <= spec.bits_max; ++b) {
              tasks.push_back({arch, adc, n_ant, n_rf, bw, b});
            }
          }
        }
      }
    }
  }

  std::vector<std::optional<TradeoffPoint>> slots(tasks.size());
  std::vector<std::string> failures(tasks.size());
  const std::optional<double> gamma =
      spec.gamma_db ? std::optional<double>(from_db(*spec.gamma_db)) : std::nullopt;

  auto evaluate = [&](std::size_t begin, std::size_t stride) {
    for (std::size_t i = begin; i < tasks.size(); i += stride) {
      const auto& t = tasks[i];
      try {
        const auto& adc = spec.adc_models[t.adc];
        auto design = ReceiverDesign::make(t.arch, t.n_ant, t.n_rf, t.bits, t.bandwidth);
        TradeoffPoint p{design, adc.label, total_power(design, table, adc).total, std::nullopt};
        if (gamma) p.gamma_ef_db = to_db(effective_snr(*gamma, t.bits));
        slots[i] = std::move(p);
      } catch (const DomainError& e) {
        failures[i] = e.what();
      }
    }
  };

  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(1, tasks.size())));
  if (workers <= 1) {
    evaluate(0, 1);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(evaluate, w, workers);
  }

  for (std::size_t i = 0; i < tasks.size(); ++i) {
    if (slots[i]) {
      result.points.push_back(std::move(*slots[i]));
    } else {
      result.errors.push_back({detail::describe(tasks[i], spec.adc_models), failures[i]});
    }
  }
  return result;
}

// Points sorted by ascending power with strictly increasing gamma_ef_db.
struct ParetoSet {
  std::vector<TradeoffPoint> points;
};

// Non-dominated subset under (minimize power, maximize effective SNR).
// Points with identical power and SNR collapse to one, preferring fewer
// bits and then the architecture name.
inline ParetoSet pareto_front(const std::vector<TradeoffPoint>& points) {
  for (const auto& p : points) {
    if (!p.gamma_ef_db) throw DomainError("pareto_front needs effective SNR on every point");
  }
  std::vector<const TradeoffPoint*> order;
  order.reserve(points.size());
  for (const auto& p : points) order.push_back(&p);
  std::stable_sort(order.begin(), order.end(), [](const TradeoffPoint* a, const TradeoffPoint* b) {
    return std::make_tuple(a->total_power, -*a->gamma_ef_db, a->design.bits(),
                           to_string(a->design.arch())) <
           std::make_tuple(b->total_power, -*b->gamma_ef_db, b->design.bits(),
                           to_string(b->design.arch()));
  });

  ParetoSet front;
  for (const auto* p : order) {
    if (front.points.empty() || *p->gamma_ef_db > *front.points.back().gamma_ef_db) {
      front.points.push_back(*p);
    }
  }
  return front;
}

// Tabular form of a sweep; the gamma_ef_db column appears when the sweep
// carried an SNR.
inline Dataset sweep_dataset(const SweepResult& result, bool with_snr) {
  std::vector<std::string> columns{"arch", "adc", "n_ant", "n_rf", "bandwidth_hz", "bits",
                                   "p_tot_w"};
  if (with_snr) columns.push_back("gamma_ef_db");
  Dataset data(std::move(columns));
  for (const auto& p : result.points) {
    std::vector<Cell> row{std::string(to_string(p.design.arch())), p.adc_label,
                          std::int64_t{p.design.n_ant()}, std::int64_t{p.design.n_rf()},
                          p.design.bandwidth(), std::int64_t{p.design.bits()}, p.total_power};
    if (with_snr) {
      row.push_back(p.gamma_ef_db ? Cell{*p.gamma_ef_db} : Cell{});
    }
    data.add_row(std::move(row));
  }
  return data;
}

// Sidecar report of hybrid points dropped because n_ant % divisor != 0.
inline Dataset skipped_dataset(const SweepResult& result) {
  Dataset data({"arch", "n_ant", "n_rf_divisor", "reason"});
  for (const auto& s : result.skipped) {
    data.add_row({std::string(to_string(s.arch)), std::int64_t{s.n_ant}, std::int64_t{s.divisor},
                  std::string("n_ant not divisible by n_rf divisor")});
  }
  return data;
}

}  // namespace bfpower
