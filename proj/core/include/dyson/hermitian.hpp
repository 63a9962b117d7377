#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "dyson/errors.hpp"

namespace dyson {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

// Frobenius inner product Re Tr(A B*).
double frobenius_inner(const Matrix& a, const Matrix& b);
double frobenius_norm(const Matrix& a);

bool is_hermitian(const Matrix& m, double tol = 1e-12);

// (M + M*)/2, restores exact Hermiticity after arithmetic.
Matrix hermitize(const Matrix& m);

// Orthonormal basis of the n x n Hermitian matrices under the Frobenius
// inner product, in fixed order: the n diagonal units e_j e_j^T first, then
// for each pair k < l (lexicographic) the symmetric unit
// (e_k e_l^T + e_l e_k^T)/sqrt(2) followed by the antisymmetric unit
// i (e_k e_l^T - e_l e_k^T)/sqrt(2).
std::vector<Matrix> hermitian_basis(int n);

// sum_a coeffs[a] E_a without materializing the basis. coeffs.size() == n*n.
Matrix hermitian_from_coeffs(int n, const RealVector& coeffs);

// Inverse of hermitian_from_coeffs: Frobenius coordinates of a Hermitian M.
RealVector hermitian_to_coeffs(const Matrix& m);

// Eigendecomposition M = Q diag(lambda) Q* with lambda ascending and the
// phase of each eigenvector fixed so its largest-modulus entry is real and
// positive (deterministic output).
struct EigenFrame {
  RealVector lambda;
  Matrix q;

  int n() const { return static_cast<int>(lambda.size()); }
  double min_gap() const;
  Matrix reconstruct() const;
};

struct EighOptions {
  int max_sweeps = 100;
  double tol_factor = 1e-13;  // off-diagonal tolerance, relative to ||M||_F
};

// Cyclic Jacobi for complex Hermitian matrices. Throws EigensolverFailure
// if the off-diagonal norm has not dropped below tol after max_sweeps.
EigenFrame eigh(const Matrix& m, const EighOptions& opts = {});

// Collision threshold below which the orbit projections are undefined.
double default_gap_tol(const EigenFrame& frame);

void require_simple_spectrum(const EigenFrame& frame, double delta_gap);

// Rank-one spectral projector P_j = (Q e_j)(Q e_j)*, j zero-based.
Matrix spectral_projector(const EigenFrame& frame, int j);

// Projection onto the normal space of the isospectral orbit at M:
// sum_j Tr(N P_j) P_j. delta_gap < 0 selects the default threshold.
Matrix normal_projection(const EigenFrame& frame, const Matrix& n,
                         double delta_gap = -1.0);

// N - normal_projection(N); a commutator direction tangent to the orbit.
Matrix tangent_projection(const EigenFrame& frame, const Matrix& n,
                          double delta_gap = -1.0);

// First directional derivative of the ordered eigenvalue lambda_j along the
// Hermitian direction A: (Q* A Q)_jj.
double hadamard_first(const EigenFrame& frame, const Matrix& a, int j);

// Second directional derivative of lambda_j along (A, B):
//   2 sum_{k != j} Re[(Q* A Q)_{kj} conj((Q* B Q)_{kj})] / (lambda_j - lambda_k).
// The Hermitian-symmetric real convention; for A = B this is
// 2 sum |(Q* A Q)_{kj}|^2 / (lambda_j - lambda_k), verified against finite
// differences in the test suite.
double hadamard_second(const EigenFrame& frame, const Matrix& a,
                       const Matrix& b, int j);

}  // namespace dyson
