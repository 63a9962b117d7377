#pragma once

#include <cstdint>

#include <Eigen/Dense>

namespace dyson {

// Counter-based Gaussian stream. Every draw is a pure function of
// (seed, trajectory index, draw counter), so a trajectory sees the same
// noise sequence no matter how the ensemble is scheduled across workers.
class NoiseStream {
 public:
  explicit NoiseStream(std::uint64_t seed, std::uint64_t trajectory = 0);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t trajectory() const { return trajectory_; }
  std::uint64_t counter() const { return counter_; }

  std::uint64_t next_u64();
  double uniform();  // open interval (0, 1)
  double normal();   // N(0, 1), Box-Muller

  // count independent N(0, dt) increments.
  Eigen::VectorXd gaussian_increments(int count, double dt);

 private:
  std::uint64_t seed_;
  std::uint64_t trajectory_;
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace dyson
