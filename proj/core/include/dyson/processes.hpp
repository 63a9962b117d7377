#pragma once

#include <optional>

#include "dyson/geometry.hpp"
#include "dyson/hermitian.hpp"
#include "dyson/noise.hpp"
#include "dyson/sde.hpp"

namespace dyson {

// sqrt(2/beta); 0 when beta is infinite.
double normal_noise_scale(double beta);

// One Euler-Maruyama step of the projected matrix Brownian motion
//   dM = P_M dX + sqrt(2/beta) Pperp_M dX,
// with dX expanded over the Hermitian basis with the given n^2 increments.
// Throws DegenerateSpectrum when the spectrum gap is at or below delta_gap.
Matrix projected_bm_step(const Matrix& m, double beta, double dt,
                         const RealVector& noise, double delta_gap = 1e-8);

// One Euler-Maruyama step of the eigenvalue SDE
//   dlambda_j = sqrt(2/beta) dB_j + sum_{k != j} dt / (lambda_j - lambda_k).
// Returns nullopt when the stepped values are no longer strictly ascending
// with gap above delta_gap (collision / swap).
std::optional<RealVector> dyson_eigen_step(const RealVector& lambda,
                                           double beta, double dt,
                                           const RealVector& noise,
                                           double delta_gap = 1e-8);

// Deterministic Coulomb repulsion step (the beta = infinity drift alone).
std::optional<RealVector> coulomb_ode_step(const RealVector& lambda, double dt,
                                           double delta_gap = 1e-8);

// Max-norm discrepancy between the Coulomb drift vector and minus half the
// mean curvature at lambda; identically zero up to roundoff.
double mcf_velocity_check(const RealVector& lambda);

// Ito projection step on the sphere: Z' = Z + (I - Z Z^T / |Z|^2) xi.
Eigen::VectorXd sphere_ito_step(const Eigen::VectorXd& z, double dt,
                                const Eigen::VectorXd& noise);

// Heun (explicit midpoint) step of the Stratonovich projection equation;
// preserves |Z| up to O(dt) per unit time.
Eigen::VectorXd sphere_stratonovich_step(const Eigen::VectorXd& z, double dt,
                                         const Eigen::VectorXd& noise);

// Inward mean-curvature drift -((q-1)/(2|Z|)) Z/|Z| that converts the bare
// Ito projection into Brownian motion on the sphere.
Eigen::VectorXd mean_curvature_force_sphere(const Eigen::VectorXd& z);

// --- step models for the generic integrator ---

struct MatrixState {
  Matrix m;
  EigenFrame frame;  // eigh(m), refreshed every step
};

class ProjectedMatrixModel {
 public:
  using State = MatrixState;

  ProjectedMatrixModel(double beta, double delta_gap)
      : beta_(beta), delta_gap_(delta_gap) {}

  static State make_state(const Matrix& m) { return {hermitize(m), eigh(m)}; }

  std::optional<State> step(const State& s, double dt, NoiseStream& stream) const;
  RealVector observe(const State& s) const { return s.frame.lambda; }

 private:
  double beta_;
  double delta_gap_;
};

class DysonEigenModel {
 public:
  using State = RealVector;

  DysonEigenModel(double beta, double delta_gap)
      : beta_(beta), delta_gap_(delta_gap) {}

  std::optional<State> step(const State& s, double dt, NoiseStream& stream) const {
    const int n = static_cast<int>(s.size());
    const RealVector noise = stream.gaussian_increments(n, dt);
    return dyson_eigen_step(s, beta_, dt, noise, delta_gap_);
  }
  RealVector observe(const State& s) const { return s; }

 private:
  double beta_;
  double delta_gap_;
};

class CoulombOdeModel {
 public:
  using State = RealVector;

  explicit CoulombOdeModel(double delta_gap) : delta_gap_(delta_gap) {}

  std::optional<State> step(const State& s, double dt, NoiseStream&) const {
    return coulomb_ode_step(s, dt, delta_gap_);
  }
  RealVector observe(const State& s) const { return s; }

 private:
  double delta_gap_;
};

enum class SphereScheme { ito_projection, stratonovich };

class SphereModel {
 public:
  using State = Eigen::VectorXd;

  explicit SphereModel(SphereScheme scheme) : scheme_(scheme) {}

  std::optional<State> step(const State& s, double dt, NoiseStream& stream) const {
    const int q = static_cast<int>(s.size());
    const Eigen::VectorXd noise = stream.gaussian_increments(q, dt);
    if (scheme_ == SphereScheme::ito_projection) {
      return sphere_ito_step(s, dt, noise);
    }
    return sphere_stratonovich_step(s, dt, noise);
  }
  // Observation is the radius; the radial law is the quantity of interest.
  RealVector observe(const State& s) const {
    RealVector r(1);
    r[0] = s.norm();
    return r;
  }

 private:
  SphereScheme scheme_;
};

// Default initial spectrum: n equally spaced values in [-1, 1].
RealVector default_initial_spectrum(int n);

}  // namespace dyson
