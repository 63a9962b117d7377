#include "dyson/geometry.hpp"

#include <cmath>
#include <limits>

namespace dyson {

double min_gap(const RealVector& lambda) {
  const int n = static_cast<int>(lambda.size());
  if (n < 2) return std::numeric_limits<double>::infinity();
  double g = std::numeric_limits<double>::infinity();
  for (int j = 0; j + 1 < n; ++j) g = std::min(g, lambda[j + 1] - lambda[j]);
  return g;
}

void require_simple(const RealVector& lambda, double delta_gap) {
  const double gap =
      (delta_gap >= 0.0) ? delta_gap : 1e-8 * (1.0 + lambda.norm());
  if (min_gap(lambda) <= gap) {
    throw DegenerateSpectrum("spectrum gap at or below threshold");
  }
}

std::vector<Matrix> orbit_tangent_basis(const EigenFrame& frame) {
  require_simple_spectrum(frame, -1.0);
  const int n = frame.n();
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  std::vector<Matrix> basis;
  basis.reserve(static_cast<std::size_t>(n) * (n - 1));
  for (int k = 0; k < n; ++k) {
    for (int l = k + 1; l < n; ++l) {
      Matrix s = Matrix::Zero(n, n);
      s(k, l) = inv_sqrt2;
      s(l, k) = inv_sqrt2;
      basis.push_back(hermitize(frame.q * s * frame.q.adjoint()));
      Matrix a = Matrix::Zero(n, n);
      a(k, l) = Complex(0.0, inv_sqrt2);
      a(l, k) = Complex(0.0, -inv_sqrt2);
      basis.push_back(hermitize(frame.q * a * frame.q.adjoint()));
    }
  }
  return basis;
}

Matrix second_fundamental_form(const EigenFrame& frame, const Matrix& a) {
  require_simple_spectrum(frame, -1.0);
  const int n = frame.n();
  if (a.rows() != n || a.cols() != n) {
    throw std::invalid_argument("second_fundamental_form: size mismatch");
  }
  if ((a + a.adjoint()).norm() > 1e-10 * (1.0 + a.norm()) ||
      a.diagonal().norm() > 1e-10 * (1.0 + a.norm())) {
    throw std::invalid_argument(
        "second_fundamental_form: generator must be anti-Hermitian with zero "
        "diagonal");
  }
  const Matrix lam = frame.lambda.cast<Complex>().asDiagonal();
  const Matrix x = a * lam - lam * a;
  const Matrix dbl = a * x - x * a;
  RealVector d = dbl.diagonal().real();
  return hermitize(frame.q * d.asDiagonal() * frame.q.adjoint());
}

RealVector mean_curvature(const RealVector& lambda) {
  require_simple(lambda);
  const int n = static_cast<int>(lambda.size());
  RealVector h = RealVector::Zero(n);
  for (int k = 0; k < n; ++k) {
    for (int l = 0; l < n; ++l) {
      if (l == k) continue;
      h[k] += 2.0 / (lambda[l] - lambda[k]);
    }
  }
  return h;
}

RealVector mean_curvature_via_trace(const EigenFrame& frame) {
  require_simple_spectrum(frame, -1.0);
  const int n = frame.n();
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  RealVector h = RealVector::Zero(n);
  // Sum II(X, X) over the orbit tangent basis, each element generated by an
  // anti-Hermitian A with X = [A, Lambda]; work in the eigenbasis where the
  // base point is diagonal and read off the diagonal of [A, [A, Lambda]].
  for (int k = 0; k < n; ++k) {
    for (int l = k + 1; l < n; ++l) {
      const double gap = frame.lambda[l] - frame.lambda[k];
      // Generator of the symmetric basis element e_kl.
      Matrix a1 = Matrix::Zero(n, n);
      a1(k, l) = inv_sqrt2 / gap;
      a1(l, k) = -inv_sqrt2 / gap;
      // Generator of the antisymmetric basis element iE_kl.
      Matrix a2 = Matrix::Zero(n, n);
      a2(k, l) = Complex(0.0, 1.0) * inv_sqrt2 / gap;
      a2(l, k) = Complex(0.0, 1.0) * inv_sqrt2 / gap;
      const Matrix lam = frame.lambda.cast<Complex>().asDiagonal();
      for (const Matrix& a : {a1, a2}) {
        const Matrix x = a * lam - lam * a;
        const Matrix dbl = a * x - x * a;
        h += dbl.diagonal().real();
      }
    }
  }
  return h;
}

RealVector log_volume_gradient(const RealVector& lambda) {
  require_simple(lambda);
  const int n = static_cast<int>(lambda.size());
  RealVector g = RealVector::Zero(n);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      if (k == j) continue;
      g[j] -= 2.0 / (lambda[j] - lambda[k]);
    }
  }
  return g;
}

}  // namespace dyson
