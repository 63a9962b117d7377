#include "dyson/hermitian.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace dyson {

double frobenius_inner(const Matrix& a, const Matrix& b) {
  return (a.cwiseProduct(b.conjugate())).sum().real();
}

double frobenius_norm(const Matrix& a) { return a.norm(); }

bool is_hermitian(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return (m - m.adjoint()).norm() <= tol * std::max(1.0, m.norm());
}

Matrix hermitize(const Matrix& m) { return 0.5 * (m + m.adjoint()); }

std::vector<Matrix> hermitian_basis(int n) {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  std::vector<Matrix> basis;
  basis.reserve(static_cast<std::size_t>(n) * n);
  for (int j = 0; j < n; ++j) {
    Matrix e = Matrix::Zero(n, n);
    e(j, j) = 1.0;
    basis.push_back(e);
  }
  for (int k = 0; k < n; ++k) {
    for (int l = k + 1; l < n; ++l) {
      Matrix s = Matrix::Zero(n, n);
      s(k, l) = inv_sqrt2;
      s(l, k) = inv_sqrt2;
      basis.push_back(s);
      Matrix a = Matrix::Zero(n, n);
      a(k, l) = Complex(0.0, inv_sqrt2);
      a(l, k) = Complex(0.0, -inv_sqrt2);
      basis.push_back(a);
    }
  }
  return basis;
}

Matrix hermitian_from_coeffs(int n, const RealVector& coeffs) {
  if (coeffs.size() != static_cast<Eigen::Index>(n) * n) {
    throw std::invalid_argument("hermitian_from_coeffs: need n^2 coefficients");
  }
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  Matrix m = Matrix::Zero(n, n);
  for (int j = 0; j < n; ++j) m(j, j) = coeffs[j];
  int idx = n;
  for (int k = 0; k < n; ++k) {
    for (int l = k + 1; l < n; ++l) {
      const double cs = coeffs[idx++];
      const double ca = coeffs[idx++];
      m(k, l) = Complex(cs * inv_sqrt2, ca * inv_sqrt2);
      m(l, k) = std::conj(m(k, l));
    }
  }
  return m;
}

RealVector hermitian_to_coeffs(const Matrix& m) {
  const int n = static_cast<int>(m.rows());
  const double sqrt2 = std::sqrt(2.0);
  RealVector coeffs(static_cast<Eigen::Index>(n) * n);
  for (int j = 0; j < n; ++j) coeffs[j] = m(j, j).real();
  int idx = n;
  for (int k = 0; k < n; ++k) {
    for (int l = k + 1; l < n; ++l) {
      coeffs[idx++] = m(k, l).real() * sqrt2;
      coeffs[idx++] = m(k, l).imag() * sqrt2;
    }
  }
  return coeffs;
}

double EigenFrame::min_gap() const {
  const int nn = n();
  if (nn < 2) return std::numeric_limits<double>::infinity();
  double g = std::numeric_limits<double>::infinity();
  for (int j = 0; j + 1 < nn; ++j) g = std::min(g, lambda[j + 1] - lambda[j]);
  return g;
}

Matrix EigenFrame::reconstruct() const {
  return q * lambda.asDiagonal() * q.adjoint();
}

namespace {

double offdiag_norm(const Matrix& a) {
  double s = 0.0;
  const int n = static_cast<int>(a.rows());
  for (int p = 0; p < n; ++p) {
    for (int r = p + 1; r < n; ++r) s += std::norm(a(p, r));
  }
  return std::sqrt(2.0 * s);
}

// One complex Jacobi rotation annihilating a(p,r). The unitary is the
// product of a phase alignment and a real plane rotation; it is applied to
// a from both sides and accumulated into q.
void jacobi_rotate(Matrix& a, Matrix& q, int p, int r) {
  const Complex apr = a(p, r);
  const double abs_apr = std::abs(apr);
  if (abs_apr == 0.0) return;
  const Complex phase = apr / abs_apr;
  const double app = a(p, p).real();
  const double arr = a(r, r).real();
  // After aligning the phase the 2x2 block is [[app, |apr|], [|apr|, arr]];
  // the rotation angle zeroes its off-diagonal.
  const double theta = 0.5 * std::atan2(2.0 * abs_apr, app - arr);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  // U restricted to (p, r): col p = (c, s*conj(phase)), col r = (-s, c*conj(phase)).
  const Complex upp = c;
  const Complex urp = s * std::conj(phase);
  const Complex upr = -s;
  const Complex urr = c * std::conj(phase);

  const int n = static_cast<int>(a.rows());
  for (int i = 0; i < n; ++i) {  // A <- A U
    const Complex aip = a(i, p);
    const Complex air = a(i, r);
    a(i, p) = aip * upp + air * urp;
    a(i, r) = aip * upr + air * urr;
  }
  for (int i = 0; i < n; ++i) {  // A <- U* A
    const Complex api = a(p, i);
    const Complex ari = a(r, i);
    a(p, i) = std::conj(upp) * api + std::conj(urp) * ari;
    a(r, i) = std::conj(upr) * api + std::conj(urr) * ari;
  }
  a(p, r) = 0.0;
  a(r, p) = 0.0;
  a(p, p) = Complex(a(p, p).real(), 0.0);
  a(r, r) = Complex(a(r, r).real(), 0.0);
  for (int i = 0; i < n; ++i) {  // Q <- Q U
    const Complex qip = q(i, p);
    const Complex qir = q(i, r);
    q(i, p) = qip * upp + qir * urp;
    q(i, r) = qip * upr + qir * urr;
  }
}

}  // namespace

EigenFrame eigh(const Matrix& m, const EighOptions& opts) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("eigh: matrix must be square");
  }
  const int n = static_cast<int>(m.rows());
  Matrix a = hermitize(m);
  Matrix q = Matrix::Identity(n, n);
  const double scale = a.norm();
  const double tol = opts.tol_factor * std::max(scale, 1e-300);

  bool converged = (n < 2);
  for (int sweep = 0; sweep < opts.max_sweeps && !converged; ++sweep) {
    if (offdiag_norm(a) <= tol) {
      converged = true;
      break;
    }
    for (int p = 0; p < n; ++p) {
      for (int r = p + 1; r < n; ++r) {
        if (std::abs(a(p, r)) > tol / (n * n)) jacobi_rotate(a, q, p, r);
      }
    }
  }
  if (!converged && offdiag_norm(a) > tol) {
    throw EigensolverFailure("eigh: Jacobi sweeps did not converge");
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return a(i, i).real() < a(j, j).real(); });

  EigenFrame frame;
  frame.lambda.resize(n);
  frame.q.resize(n, n);
  for (int j = 0; j < n; ++j) {
    frame.lambda[j] = a(order[j], order[j]).real();
    frame.q.col(j) = q.col(order[j]);
    // Phase convention: largest-modulus entry real positive, ties to the
    // smallest row index.
    int imax = 0;
    double best = -1.0;
    for (int i = 0; i < n; ++i) {
      const double v = std::abs(frame.q(i, j));
      if (v > best) {
        best = v;
        imax = i;
      }
    }
    const Complex z = frame.q(imax, j);
    if (std::abs(z) > 0.0) frame.q.col(j) *= std::conj(z) / std::abs(z);
  }
  return frame;
}

double default_gap_tol(const EigenFrame& frame) {
  return 1e-8 * (1.0 + frame.lambda.norm());
}

void require_simple_spectrum(const EigenFrame& frame, double delta_gap) {
  const double gap = (delta_gap >= 0.0) ? delta_gap : default_gap_tol(frame);
  if (frame.min_gap() <= gap) {
    throw DegenerateSpectrum("spectrum gap " + std::to_string(frame.min_gap()) +
                             " at or below threshold " + std::to_string(gap));
  }
}

Matrix spectral_projector(const EigenFrame& frame, int j) {
  if (j < 0 || j >= frame.n()) {
    throw std::out_of_range("spectral_projector: index out of range");
  }
  const auto v = frame.q.col(j);
  return v * v.adjoint();
}

Matrix normal_projection(const EigenFrame& frame, const Matrix& n,
                         double delta_gap) {
  require_simple_spectrum(frame, delta_gap);
  const Matrix y = frame.q.adjoint() * n * frame.q;
  RealVector d = y.diagonal().real();
  return hermitize(frame.q * d.asDiagonal() * frame.q.adjoint());
}

Matrix tangent_projection(const EigenFrame& frame, const Matrix& n,
                          double delta_gap) {
  return n - normal_projection(frame, n, delta_gap);
}

double hadamard_first(const EigenFrame& frame, const Matrix& a, int j) {
  require_simple_spectrum(frame, -1.0);
  const auto v = frame.q.col(j);
  return (v.adjoint() * a * v)(0, 0).real();
}

double hadamard_second(const EigenFrame& frame, const Matrix& a,
                       const Matrix& b, int j) {
  require_simple_spectrum(frame, -1.0);
  const int n = frame.n();
  const Eigen::VectorXcd acol = frame.q.adjoint() * (a * frame.q.col(j));
  const Eigen::VectorXcd bcol = frame.q.adjoint() * (b * frame.q.col(j));
  double sum = 0.0;
  for (int k = 0; k < n; ++k) {
    if (k == j) continue;
    sum += 2.0 * (acol[k] * std::conj(bcol[k])).real() /
           (frame.lambda[j] - frame.lambda[k]);
  }
  return sum;
}

}  // namespace dyson
