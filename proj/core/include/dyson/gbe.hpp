#pragma once

#include "dyson/hermitian.hpp"
#include "dyson/noise.hpp"

namespace dyson {

struct TridiagonalMatrix {
  RealVector diagonal;
  RealVector offdiagonal;  // size n-1, nonnegative by sampler convention

  int n() const { return static_cast<int>(diagonal.size()); }
  Matrix dense() const;
};

// Gamma(shape, 1) via Marsaglia-Tsang squeeze-rejection; shape < 1 handled
// with the boost Gamma(a) = Gamma(a+1) U^{1/a}.
double gamma_sample(double shape, NoiseStream& stream);

// chi distribution with (possibly fractional) dof degrees of freedom.
double chi_sample(double dof, NoiseStream& stream);

// Dumitriu-Edelman tridiagonal model of the Gaussian beta ensemble:
// diagonal entries N(0, 2)/sqrt(2), off-diagonal entry k (1-based) a
// chi_{beta (n-k)} variate scaled by 1/sqrt(2). At beta = 2 the eigenvalue
// law matches the dense GUE below with variance parameter 1.
TridiagonalMatrix sample_gbe(int n, double beta, NoiseStream& stream);

// Ascending eigenvalues of a real symmetric tridiagonal matrix via implicit
// shift QL iteration (eigenvalues only).
RealVector tridiag_eigenvalues(const TridiagonalMatrix& t, int max_iter = 60);

// Dense GUE draw: Hermitian with diagonal N(0, variance) and off-diagonal
// real/imaginary parts N(0, variance/2), i.e. standard Brownian motion on
// the Hermitian matrices run for time `variance`.
Matrix sample_gue(int n, double variance, NoiseStream& stream);

}  // namespace dyson
