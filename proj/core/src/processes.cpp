#include "dyson/processes.hpp"

#include <cmath>
#include <limits>

namespace dyson {

double normal_noise_scale(double beta) {
  if (std::isinf(beta)) return 0.0;
  return std::sqrt(2.0 / beta);
}

namespace {

// M + dX + (c - 1) * Q D(Q* dX Q) Q*  with c the normal noise scale.
Matrix projected_step_with_frame(const Matrix& m, const EigenFrame& frame,
                                 double beta, const Matrix& dx) {
  const double c = normal_noise_scale(beta);
  const Matrix y = frame.q.adjoint() * dx * frame.q;
  const RealVector d = y.diagonal().real();
  Matrix next = m + dx +
                (c - 1.0) * (frame.q * d.asDiagonal() * frame.q.adjoint());
  return hermitize(next);
}

}  // namespace

Matrix projected_bm_step(const Matrix& m, double beta, double dt,
                         const RealVector& noise, double delta_gap) {
  (void)dt;  // increments already carry the sqrt(dt) scale
  const int n = static_cast<int>(m.rows());
  if (noise.size() != static_cast<Eigen::Index>(n) * n) {
    throw std::invalid_argument("projected_bm_step: need n^2 increments");
  }
  const EigenFrame frame = eigh(m);
  if (n > 1 && frame.min_gap() <= delta_gap) {
    throw DegenerateSpectrum("projected_bm_step: collision threshold reached");
  }
  const Matrix dx = hermitian_from_coeffs(n, noise);
  return projected_step_with_frame(m, frame, beta, dx);
}

std::optional<MatrixState> ProjectedMatrixModel::step(const MatrixState& s,
                                                      double dt,
                                                      NoiseStream& stream) const {
  const int n = s.frame.n();
  if (n > 1 && s.frame.min_gap() <= delta_gap_) return std::nullopt;
  const RealVector noise = stream.gaussian_increments(n * n, dt);
  const Matrix dx = hermitian_from_coeffs(n, noise);
  MatrixState next;
  next.m = projected_step_with_frame(s.m, s.frame, beta_, dx);
  next.frame = eigh(next.m);
  return next;
}

std::optional<RealVector> dyson_eigen_step(const RealVector& lambda,
                                           double beta, double dt,
                                           const RealVector& noise,
                                           double delta_gap) {
  const int n = static_cast<int>(lambda.size());
  if (noise.size() != n) {
    throw std::invalid_argument("dyson_eigen_step: need n increments");
  }
  const double c = normal_noise_scale(beta);
  RealVector next(n);
  for (int j = 0; j < n; ++j) {
    double drift = 0.0;
    for (int k = 0; k < n; ++k) {
      if (k == j) continue;
      drift += 1.0 / (lambda[j] - lambda[k]);
    }
    next[j] = lambda[j] + c * noise[j] + dt * drift;
  }
  for (int j = 0; j + 1 < n; ++j) {
    if (next[j + 1] - next[j] <= delta_gap) return std::nullopt;
  }
  return next;
}

std::optional<RealVector> coulomb_ode_step(const RealVector& lambda, double dt,
                                           double delta_gap) {
  const RealVector zero = RealVector::Zero(lambda.size());
  return dyson_eigen_step(lambda, std::numeric_limits<double>::infinity(), dt,
                          zero, delta_gap);
}

double mcf_velocity_check(const RealVector& lambda) {
  require_simple(lambda);
  const int n = static_cast<int>(lambda.size());
  const RealVector h = mean_curvature(lambda);
  double worst = 0.0;
  for (int j = 0; j < n; ++j) {
    double drift = 0.0;
    for (int k = 0; k < n; ++k) {
      if (k == j) continue;
      drift += 1.0 / (lambda[j] - lambda[k]);
    }
    worst = std::max(worst, std::abs(drift - (-0.5 * h[j])));
  }
  return worst;
}

namespace {

Eigen::VectorXd tangential(const Eigen::VectorXd& z,
                           const Eigen::VectorXd& v) {
  const double nz2 = z.squaredNorm();
  if (nz2 == 0.0) throw ZeroVector("sphere step: |Z| = 0");
  return v - z * (z.dot(v) / nz2);
}

}  // namespace

Eigen::VectorXd sphere_ito_step(const Eigen::VectorXd& z, double dt,
                                const Eigen::VectorXd& noise) {
  (void)dt;
  return z + tangential(z, noise);
}

Eigen::VectorXd sphere_stratonovich_step(const Eigen::VectorXd& z, double dt,
                                         const Eigen::VectorXd& noise) {
  (void)dt;
  const Eigen::VectorXd predictor = z + tangential(z, noise);
  return z + 0.5 * (tangential(z, noise) + tangential(predictor, noise));
}

Eigen::VectorXd mean_curvature_force_sphere(const Eigen::VectorXd& z) {
  const double r = z.norm();
  if (r == 0.0) throw ZeroVector("mean_curvature_force_sphere: |Z| = 0");
  const double q = static_cast<double>(z.size());
  return -((q - 1.0) / (2.0 * r)) * (z / r);
}

RealVector default_initial_spectrum(int n) {
  RealVector lambda(n);
  if (n == 1) {
    lambda[0] = 0.0;
    return lambda;
  }
  for (int j = 0; j < n; ++j) {
    lambda[j] = -1.0 + 2.0 * static_cast<double>(j) / (n - 1);
  }
  return lambda;
}

}  // namespace dyson
