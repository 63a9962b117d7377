#pragma once

#include <random>

#include "dyson/hermitian.hpp"

namespace dyson::test {

inline Matrix random_hermitian(int n, std::mt19937_64& rng, double scale = 1.0) {
  std::normal_distribution<double> g(0.0, scale);
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m(i, j) = Complex(g(rng), g(rng));
  }
  return hermitize(m);
}

inline Matrix random_unitary(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Matrix z(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) z(i, j) = Complex(g(rng), g(rng));
  }
  Eigen::HouseholderQR<Matrix> qr(z);
  Matrix q = qr.householderQ();
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j) {
    const Complex d = r(j, j);
    if (std::abs(d) > 0) q.col(j) *= d / std::abs(d);
  }
  return q;
}

// Spectrum with all gaps >= min_separation, random offsets.
inline RealVector random_simple_spectrum(int n, std::mt19937_64& rng,
                                         double min_separation = 0.2) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  RealVector lam(n);
  double x = -1.0 + u(rng);
  for (int j = 0; j < n; ++j) {
    lam[j] = x;
    x += min_separation + u(rng);
  }
  return lam;
}

inline Matrix random_simple_hermitian(int n, std::mt19937_64& rng,
                                      double min_separation = 0.2) {
  const RealVector lam = random_simple_spectrum(n, rng, min_separation);
  const Matrix q = random_unitary(n, rng);
  return hermitize(q * lam.cast<Complex>().asDiagonal() * q.adjoint());
}

}  // namespace dyson::test
