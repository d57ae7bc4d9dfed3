#include <gtest/gtest.h>

#include <cmath>

#include "bfpower/power_model.hpp"

namespace bfpower {
namespace {

const ComponentPowerTable kDefaults = ComponentPowerTable::defaults();

double rel_err(double a, double b) { return std::fabs(a - b) / std::fabs(b); }

PowerBreakdown power(Architecture arch, int n_ant, int n_rf, int bits, double bw,
                     const AdcModel& adc = AdcModel::lpadc()) {
  return total_power(ReceiverDesign::make(arch, n_ant, n_rf, bits, bw), kDefaults, adc);
}

TEST(ComponentPowerTable, DefaultsMatchReferenceFrontEnd) {
  EXPECT_EQ(kDefaults.p_lna, 0.039);
  EXPECT_EQ(kDefaults.p_ps, 0.0195);
  EXPECT_EQ(kDefaults.p_mixer, 0.0168);
  EXPECT_EQ(kDefaults.p_lo, 0.005);
  EXPECT_EQ(kDefaults.p_lpf, 0.014);
  EXPECT_EQ(kDefaults.p_bb_amp, 0.005);
  EXPECT_EQ(kDefaults.p_splitter, 0.0195);
  EXPECT_EQ(kDefaults.p_combiner, 0.0195);
  EXPECT_NO_THROW(kDefaults.validate());
}

TEST(ComponentPowerTable, RejectsNegativeField) {
  auto t = kDefaults;
  t.p_lo = -1e-3;
  EXPECT_THROW(t.validate(), DomainError);
  t.p_lo = NAN;
  EXPECT_THROW(t.validate(), DomainError);
}

TEST(AdcModel, Profiles) {
  EXPECT_EQ(AdcModel::lpadc().energy_per_step, 494e-15);
  EXPECT_EQ(AdcModel::hpadc().energy_per_step, 12.5e-12);
  EXPECT_THROW((AdcModel{"bad", 0.0}).validate(), DomainError);
}

TEST(AdcPower, Examples) {
  EXPECT_NEAR(adc_power(AdcModel::lpadc(), 1e9, 4), 7.904e-3, 7.904e-3 * 1e-12);
  EXPECT_EQ(adc_power(AdcModel{"unit", 1.0}, 1.0, 1), 2.0);
  EXPECT_NEAR(adc_power(AdcModel::hpadc(), 1e9, 2), 0.05, 0.05 * 1e-12);
}

TEST(AdcPower, DomainErrors) {
  EXPECT_THROW(adc_power(AdcModel::lpadc(), 0.0, 4), DomainError);
  EXPECT_THROW(adc_power(AdcModel::lpadc(), -1e9, 4), DomainError);
  EXPECT_THROW(adc_power(AdcModel::lpadc(), 1e9, 0), DomainError);
  EXPECT_THROW(adc_power(AdcModel::lpadc(), 1e9, 21), DomainError);
  EXPECT_NO_THROW(adc_power(AdcModel::lpadc(), 1e9, 20));
}

TEST(AdcPower, DoublesPerExtraBit) {
  for (int b = 1; b < kMaxBits; ++b) {
    for (double bw : {1e8, 1e9, 2.5e9}) {
      const double lo = adc_power(AdcModel::hpadc(), bw, b);
      EXPECT_LE(rel_err(adc_power(AdcModel::hpadc(), bw, b + 1), 2.0 * lo), 1e-12);
    }
  }
}

TEST(RfChainPower, Examples) {
  EXPECT_NEAR(rf_chain_power(kDefaults), 0.0408, 1e-15);
  EXPECT_EQ(rf_chain_power(ComponentPowerTable{}), 0.0);
  EXPECT_EQ(rf_chain_power(ComponentPowerTable{.p_mixer = 1.0}), 1.0);
}

TEST(ReceiverDesign, NormalizesChainsOutsideHybrid) {
  EXPECT_EQ(ReceiverDesign::make(Architecture::dbf, 16, 7, 4, 1e9).n_rf(), 1);
  EXPECT_EQ(ReceiverDesign::make(Architecture::abf, 16, 99, 4, 1e9).n_rf(), 1);
  EXPECT_EQ(ReceiverDesign::make(Architecture::hbf, 16, 4, 4, 1e9).n_rf(), 4);
  EXPECT_EQ(ReceiverDesign::make(Architecture::hbf, 16, 4, 10, 1e9).quantization_levels(), 1024);
}

TEST(ReceiverDesign, RejectsInvalid) {
  EXPECT_THROW(ReceiverDesign::make(Architecture::hbf, 16, 17, 4, 1e9), DomainError);
  EXPECT_THROW(ReceiverDesign::make(Architecture::hbf, 16, 0, 4, 1e9), DomainError);
  EXPECT_THROW(ReceiverDesign::make(Architecture::dbf, 0, 1, 4, 1e9), DomainError);
  EXPECT_THROW(ReceiverDesign::make(Architecture::dbf, 8, 1, 0, 1e9), DomainError);
  EXPECT_THROW(ReceiverDesign::make(Architecture::dbf, 8, 1, 4, 0.0), DomainError);
}

TEST(Architecture, ParseIsCaseInsensitive) {
  EXPECT_EQ(parse_architecture("HBF"), Architecture::hbf);
  EXPECT_EQ(parse_architecture("dbf"), Architecture::dbf);
  EXPECT_THROW(parse_architecture("sbf"), DomainError);
}

// Expected totals frozen from hand evaluation of the three closed forms.
TEST(TotalPower, Examples) {
  EXPECT_LE(rel_err(power(Architecture::dbf, 16, 1, 4, 1e9).total, 1.529728), 1e-12);
  EXPECT_LE(rel_err(power(Architecture::abf, 16, 1, 4, 1e9).total, 1.012108), 1e-12);
  EXPECT_LE(rel_err(power(Architecture::hbf, 16, 4, 4, 1e9).total, 2.488432), 1e-12);
}

TEST(TotalPower, SingleChainHybridIsDigitalPlusAnalogParts) {
  for (int b : {1, 5, 12}) {
    for (double bw : {1e8, 1e9}) {
      const double hbf = power(Architecture::hbf, 1, 1, b, bw).total;
      const double dbf = power(Architecture::dbf, 1, 1, b, bw).total;
      const double extra = kDefaults.p_ps + kDefaults.p_splitter + kDefaults.p_combiner;
      EXPECT_LE(rel_err(hbf, dbf + extra), 1e-12);
    }
  }
}

TEST(TotalPower, BreakdownIsAdditiveAndNonNegative) {
  for (auto arch : kAllArchitectures) {
    for (int n : {1, 7, 64, 256}) {
      for (int b : {1, 6, 20}) {
        const auto r = power(arch, n, arch == Architecture::hbf ? std::max(1, n / 4) : 1, b, 1e9);
        double sum = 0.0;
        for (const auto& [label, watts] : r.per_component) {
          EXPECT_GE(watts, 0.0) << label;
          sum += watts;
        }
        EXPECT_LE(rel_err(sum, r.total), 1e-12);
        EXPECT_EQ(r.per_component.size(), 6u);
      }
    }
  }
}

TEST(TotalPower, BreakdownGroups) {
  const auto r = power(Architecture::hbf, 16, 4, 4, 1e9);
  EXPECT_NEAR(r.component("lna"), 16 * 0.039, 1e-12);
  EXPECT_NEAR(r.component("splitters"), 16 * 0.0195, 1e-12);
  EXPECT_NEAR(r.component("phase_shifters"), 64 * 0.0195, 1e-12);
  EXPECT_NEAR(r.component("combiners"), 4 * 0.0195, 1e-12);
  EXPECT_NEAR(r.component("rf_chains"), 4 * 0.0408, 1e-12);
  EXPECT_NEAR(r.component("adcs"), 8 * 7.904e-3, 1e-12);
  EXPECT_EQ(power(Architecture::dbf, 16, 1, 4, 1e9).component("phase_shifters"), 0.0);
}

TEST(TotalPower, StrictlyIncreasingInEachAxis) {
  const std::array<double, 2> bws{1e8, 1e9};
  for (auto arch : kAllArchitectures) {
    auto p = [&](int n, int b, double bw) {
      return power(arch, n, 1, b, bw).total;
    };
    for (double bw : bws) {
      for (int b = 1; b <= 12; ++b) {
        for (int n = 1; n < 256; ++n) {
          ASSERT_LT(p(n, b, bw), p(n + 1, b, bw)) << to_string(arch) << " n=" << n;
        }
      }
      for (int n : {1, 16, 64, 256}) {
        for (int b = 1; b < 12; ++b) ASSERT_LT(p(n, b, bw), p(n, b + 1, bw));
      }
    }
    for (int n : {1, 16, 256}) {
      for (int b = 1; b <= 12; ++b) ASSERT_LT(p(n, b, bws[0]), p(n, b, bws[1]));
    }
  }
}

TEST(TotalPower, HybridIncreasingInAntennasWithFixedChains) {
  for (int b = 1; b <= 12; ++b) {
    for (int n = 4; n < 256; ++n) {
      ASSERT_LT(power(Architecture::hbf, n, 4, b, 1e9).total,
                power(Architecture::hbf, n + 1, 4, b, 1e9).total);
    }
  }
}

TEST(TotalPower, AdcCountRatioDigitalOverHybrid) {
  for (int n : {8, 16, 64}) {
    for (int m : {1, 2, 4}) {
      for (int b : {2, 8}) {
        const double dbf = power(Architecture::dbf, n, 1, b, 1e9).component("adcs");
        const double hbf = power(Architecture::hbf, n, m, b, 1e9).component("adcs");
        EXPECT_LE(rel_err(dbf, hbf * n / m), 1e-12);
      }
    }
  }
}

// ADC share of the DBF total is independent of n_ant; it stays under 5% up to
// 5 bits at <= 100 MHz and reaches 7.34% at 6 bits.
TEST(TotalPower, AdcShareOfDigitalTotalAtLowResolution) {
  for (int n : {1, 16, 64, 256}) {
    for (double bw : {1e7, 5e7, 1e8}) {
      for (int b = 1; b <= 5; ++b) {
        const auto r = power(Architecture::dbf, n, 1, b, bw);
        EXPECT_LT(r.component("adcs") / r.total, 0.05) << "n=" << n << " b=" << b;
      }
    }
    const auto r6 = power(Architecture::dbf, n, 1, 6, 1e8);
    EXPECT_NEAR(r6.component("adcs") / r6.total, 0.07342040240028237, 1e-12);
  }
}

}  // namespace
}  // namespace bfpower
