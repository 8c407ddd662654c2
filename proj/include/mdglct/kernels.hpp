#pragma once

#include "mdglct/graph.hpp"
#include "mdglct/lct_params.hpp"
#include "mdglct/spectral.hpp"

namespace mdglct {

enum class GlctVariant { Cddhfs, CmCcCm };

/// Everything the one-dimensional operators need about a single graph:
/// its GSO, the GSO eigenbasis, the GFT matrix and the GFT eigenstructure.
struct FactorSpectrum {
  Matrix gso;
  SpectralBasis basis;
  Matrix fourier;
  FourierEigen fourier_eigen;

  static FactorSpectrum build(const Graph& g, GsoKind kind);
  static FactorSpectrum from_gso(const Matrix& z, GsoKind kind);

  std::size_t size() const { return static_cast<std::size_t>(gso.rows()); }
};

CVector gft(const CVector& x, const SpectralBasis& basis);
CVector igft(const CVector& xhat, const SpectralBasis& basis);

CVector gfrft(const CVector& x, double alpha_norm, const FourierEigen& fe);

/// Vertex-domain multiplication by the xi-th power of the GFT eigenvalue
/// diagonal, in canonical eigenvalue order.
CVector gcm(const CVector& x, double xi, const FourierEigen& fe);

/// (1/sigma) Z x.
CVector gscale(const CVector& x, double sigma, const Matrix& z);

CVector glct_1d(const CVector& x, const LctParams& p, GlctVariant variant, const FactorSpectrum& spectrum,
                ZeroBVariant zero_b = ZeroBVariant::Eq30);

}  // namespace mdglct
