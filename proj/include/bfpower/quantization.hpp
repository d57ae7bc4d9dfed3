#pragma once

// Additive quantization noise model: a b-bit ADC adds noise with inverse
// signal-to-quantization-noise ratio eta(b), reducing a linear SNR gamma to
//
//     gamma_ef = (1 - eta) * gamma / (1 + eta * gamma).
//
// SNR is linear in every signature here; dB conversion lives at the edges.

#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>

#include "bfpower/errors.hpp"
#include "bfpower/power_model.hpp"

namespace bfpower {

// eta for a Gaussian input and an optimal non-uniform quantizer, b = 1..5.
inline constexpr std::array<double, 5> kEtaTable{0.3634, 0.1175, 0.03454, 0.009497, 0.002499};

inline double to_db(double linear) { return 10.0 * std::log10(linear); }
inline double from_db(double db) { return std::pow(10.0, db / 10.0); }

// Tabulated for b <= 5; (pi*sqrt(3)/2) * 2^(-2b) above. No blending at the seam.
inline double eta(int bits) {
  check_bits(bits);
  if (bits <= static_cast<int>(kEtaTable.size())) return kEtaTable[bits - 1];
  return std::numbers::pi * std::numbers::sqrt3 / 2.0 * std::ldexp(1.0, -2 * bits);
}

inline double effective_snr(double gamma, int bits) {
  if (!(gamma >= 0.0)) throw DomainError("SNR must be non-negative (linear)");
  const double e = eta(bits);
  return (1.0 - e) * gamma / (1.0 + e * gamma);
}

// SNR lost to quantization, in dB. gamma must be > 0.
inline double quantization_loss_db(double gamma, int bits) {
  if (!(gamma > 0.0)) throw DomainError("SNR must be positive to express a dB loss");
  return to_db(gamma) - to_db(effective_snr(gamma, bits));
}

struct SnrPoint {
  double gamma = 0.0;
  double gamma_ef = 0.0;

  static SnrPoint at(double gamma, int bits) { return {gamma, effective_snr(gamma, bits)}; }
};

// Smallest resolution whose quantization loss is within epsilon_db of the
// unquantized SNR.
inline int min_adequate_bits(double gamma, double epsilon_db) {
  if (!(gamma > 0.0)) throw DomainError("SNR must be positive (linear)");
  if (!(epsilon_db > 0.0)) throw DomainError("loss tolerance epsilon_db must be positive");
  for (int b = kMinBits; b <= kMaxBits; ++b) {
    if (quantization_loss_db(gamma, b) <= epsilon_db) return b;
  }
  throw DomainError("loss tolerance not attainable within 20 bits");
}

}  // namespace bfpower
