#pragma once

#include <vector>

#include "dyson/hermitian.hpp"

namespace dyson {

// Orthonormal basis of the tangent space to the isospectral orbit at the
// frame's base point: {Q e_kl Q*, Q iE_kl Q* : k < l} in lexicographic
// (k, l) order, symmetric element before antisymmetric. Size n^2 - n.
std::vector<Matrix> orbit_tangent_basis(const EigenFrame& frame);

// Second fundamental form of the orbit evaluated on the tangent vector
// X = [A, Lambda], where A is anti-Hermitian with zero diagonal expressed in
// the eigenbasis coordinates of the frame. Returns Q D([A, [A, Lambda]]) Q*,
// the diagonal part of the double commutator conjugated back to the ambient
// frame.
Matrix second_fundamental_form(const EigenFrame& frame, const Matrix& a);

// Closed-form mean curvature of the orbit through diag(lambda):
// H_k = 2 sum_{l != k} 1 / (lambda_l - lambda_k).
RealVector mean_curvature(const RealVector& lambda);

// Brute-force oracle: trace of the second fundamental form over the orbit
// tangent basis, returned as the diagonal entries in the eigenframe.
RealVector mean_curvature_via_trace(const EigenFrame& frame);

// Gradient of -log prod_{j<k} (lambda_k - lambda_j)^2; identical to
// mean_curvature componentwise.
RealVector log_volume_gradient(const RealVector& lambda);

double min_gap(const RealVector& lambda);
void require_simple(const RealVector& lambda, double delta_gap = -1.0);

}  // namespace dyson
