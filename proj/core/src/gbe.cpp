#include "dyson/gbe.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace dyson {

Matrix TridiagonalMatrix::dense() const {
  const int nn = n();
  Matrix m = Matrix::Zero(nn, nn);
  for (int i = 0; i < nn; ++i) m(i, i) = diagonal[i];
  for (int i = 0; i + 1 < nn; ++i) {
    m(i, i + 1) = offdiagonal[i];
    m(i + 1, i) = offdiagonal[i];
  }
  return m;
}

double gamma_sample(double shape, NoiseStream& stream) {
  if (!(shape > 0.0)) throw std::invalid_argument("gamma_sample: shape <= 0");
  if (shape < 1.0) {
    const double u = stream.uniform();
    return gamma_sample(shape + 1.0, stream) * std::pow(u, 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x;
    double v;
    do {
      x = stream.normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = stream.uniform();
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
  }
}

double chi_sample(double dof, NoiseStream& stream) {
  return std::sqrt(2.0 * gamma_sample(0.5 * dof, stream));
}

TridiagonalMatrix sample_gbe(int n, double beta, NoiseStream& stream) {
  if (n < 1) throw std::invalid_argument("sample_gbe: n < 1");
  if (!(beta > 0.0) || std::isinf(beta)) {
    throw std::invalid_argument("sample_gbe: beta must be positive and finite");
  }
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  TridiagonalMatrix t;
  t.diagonal.resize(n);
  t.offdiagonal.resize(std::max(0, n - 1));
  for (int i = 0; i < n; ++i) {
    t.diagonal[i] = std::sqrt(2.0) * stream.normal() * inv_sqrt2;
  }
  for (int k = 1; k <= n - 1; ++k) {
    t.offdiagonal[k - 1] = chi_sample(beta * (n - k), stream) * inv_sqrt2;
  }
  return t;
}

RealVector tridiag_eigenvalues(const TridiagonalMatrix& t, int max_iter) {
  const int n = t.n();
  RealVector d = t.diagonal;
  RealVector e(n);
  for (int i = 0; i + 1 < n; ++i) e[i] = t.offdiagonal[i];
  if (n > 0) e[n - 1] = 0.0;

  // Implicit QL with Wilkinson shift (eigenvalues only).
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= std::numeric_limits<double>::epsilon() * dd) break;
      }
      if (m != l) {
        if (iter++ == max_iter) {
          throw EigensolverFailure("tridiag_eigenvalues: QL did not converge");
        }
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0;
        double c = 1.0;
        double p = 0.0;
        bool underflow = false;
        for (int i = m - 1; i >= l; --i) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            underflow = true;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
        }
        if (underflow) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
  std::sort(d.data(), d.data() + n);
  return d;
}

Matrix sample_gue(int n, double variance, NoiseStream& stream) {
  if (!(variance >= 0.0)) throw std::invalid_argument("sample_gue: variance < 0");
  const double s_diag = std::sqrt(variance);
  const double s_off = std::sqrt(0.5 * variance);
  Matrix m = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = s_diag * stream.normal();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      m(i, j) = Complex(s_off * stream.normal(), s_off * stream.normal());
      m(j, i) = std::conj(m(i, j));
    }
  }
  return m;
}

}  // namespace dyson
