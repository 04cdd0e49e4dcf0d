#pragma once

// Deterministic sampling. Every sample is derived from (seed, index) through a
// splitmix64 mix, so campaigns can be partitioned across workers in any way
// and still produce identical draws. The uniform-double construction is
// spelled out here because std::uniform_real_distribution is
// implementation-defined; mt19937_64 itself is fully specified.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include "hankel/caratheodory.hpp"

namespace hankel {

inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// per-sample generator seed; mixing twice keeps seed and index lanes apart
inline uint64_t mix_seed(uint64_t seed, uint64_t index) {
  return splitmix64(splitmix64(seed) ^ (0x632be59bd9b4e019ULL + index));
}

class SampleStream {
 public:
  explicit SampleStream(uint64_t seed) : gen_(seed) {}

  // uniform on [0, 1) with 53 random bits
  double unit() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double range(double lo, double hi) { return lo + (hi - lo) * unit(); }

  std::complex<double> unit_circle() {
    return std::polar(1.0, 2.0 * std::numbers::pi * unit());
  }

  // rejection from the enclosing square; acceptance ratio pi/4
  std::complex<double> unit_disk() {
    for (;;) {
      const double re = range(-1.0, 1.0);
      const double im = range(-1.0, 1.0);
      if (re * re + im * im <= 1.0) return {re, im};
    }
  }

  // modulus Beta(4,1)-distributed (density 4 t^3, mass near 1), uniform angle
  std::complex<double> unit_disk_boundary_biased() {
    const double modulus = std::pow(unit(), 0.25);
    return std::polar(modulus, 2.0 * std::numbers::pi * unit());
  }

 private:
  std::mt19937_64 gen_;
};

enum class DiskBias { uniform, boundary };

inline CaratheodoryParams sample_params(uint64_t seed, uint64_t index,
                                        DiskBias bias = DiskBias::uniform) {
  SampleStream s(mix_seed(seed, index));
  const double c1 = s.range(0.0, 2.0);
  const auto draw = [&] {
    return bias == DiskBias::uniform ? s.unit_disk() : s.unit_disk_boundary_biased();
  };
  const auto delta = draw();
  const auto eta = draw();
  const auto rho = draw();
  return CaratheodoryParams(c1, delta, eta, rho);
}

inline HerglotzMeasure sample_measure(uint64_t seed, uint64_t index, int atoms) {
  if (atoms < 1 || atoms > 64)
    throw std::invalid_argument("sample_measure: atom count must lie in [1, 64]");
  SampleStream s(mix_seed(seed, index));
  std::vector<HerglotzAtom> out(static_cast<size_t>(atoms));
  double total = 0.0;
  for (auto& a : out) {
    a.weight = s.unit() + 1e-9;  // keep away from an all-zero draw
    total += a.weight;
  }
  for (auto& a : out) a.weight /= total;
  // renormalization leaves the sum one ulp off occasionally; pin it exactly
  double acc = 0.0;
  for (size_t i = 0; i + 1 < out.size(); ++i) acc += out[i].weight;
  out.back().weight = 1.0 - acc;
  for (auto& a : out) a.point = s.unit_circle();
  return HerglotzMeasure(std::move(out));
}

}  // namespace hankel
