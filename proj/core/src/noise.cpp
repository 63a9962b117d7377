#include "dyson/noise.hpp"

#include <cmath>
#include <stdexcept>

namespace dyson {

namespace {

// 64-bit finalizer (Murmur3 / SplitMix64 style bijective mix).
inline std::uint64_t fmix64(std::uint64_t x) {
  x ^= x >> 33;
  x *= 0xff51afd7ed558ccdULL;
  x ^= x >> 33;
  x *= 0xc4ceb9fe1a85ec53ULL;
  x ^= x >> 33;
  return x;
}

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

}  // namespace

NoiseStream::NoiseStream(std::uint64_t seed, std::uint64_t trajectory)
    : seed_(seed),
      trajectory_(trajectory),
      key_(fmix64(seed ^ fmix64(trajectory * kGolden + 0x1d8e4e27c47d124fULL))) {
}

std::uint64_t NoiseStream::next_u64() {
  const std::uint64_t z = key_ + kGolden * ++counter_;
  return fmix64(z ^ (z >> 31));
}

double NoiseStream::uniform() {
  // 53-bit mantissa, shifted into the open interval.
  return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double NoiseStream::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  const double u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double t = 2.0 * M_PI * u2;
  spare_ = r * std::sin(t);
  have_spare_ = true;
  return r * std::cos(t);
}

Eigen::VectorXd NoiseStream::gaussian_increments(int count, double dt) {
  if (dt <= 0.0) throw std::invalid_argument("gaussian_increments: dt <= 0");
  const double s = std::sqrt(dt);
  Eigen::VectorXd v(count);
  for (int i = 0; i < count; ++i) v[i] = s * normal();
  return v;
}

}  // namespace dyson
