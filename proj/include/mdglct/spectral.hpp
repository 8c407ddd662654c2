#pragma once

#include "mdglct/graph.hpp"
#include "mdglct/types.hpp"

namespace mdglct {

/// Orthonormal eigenbasis of a real symmetric GSO. Columns of `vectors` are
/// the eigenvectors u_i, `values` ascending. Each eigenvector has its first
/// nonzero component positive.
struct SpectralBasis {
  Matrix vectors;
  Vector values;
  GsoKind kind = GsoKind::Laplacian;
};

/// Unitary eigendecomposition F = P diag(mu) P^H of a real orthogonal GFT
/// matrix. The eigenvalues are unimodular and sorted by principal argument
/// in (-pi, pi]; equal arguments are ordered by the lexicographic order of
/// their eigenvectors, normalized so the first nonzero entry is positive real.
struct FourierEigen {
  CMatrix vectors;
  CVector values;
  Matrix source;
};

SpectralBasis eig_sym(const Matrix& z, GsoKind kind = GsoKind::Laplacian);

/// F = V^{-H}, which is V^T for a real orthonormal basis.
Matrix gft_matrix(const SpectralBasis& basis);

FourierEigen eig_unitary(const Matrix& f);

/// Principal argument in (-pi, pi].
double principal_arg(Complex z);

/// exp(t * Log mu_k) with the principal logarithm.
CVector frac_diag_power(const CVector& mu, double t);

/// F^t = P diag(mu^t) P^H.
CMatrix frac_operator(const FourierEigen& fe, double t);

}  // namespace mdglct
