#include "mdglct/kernels.hpp"

#include <string>

namespace mdglct {

namespace {

void require_size(const CVector& x, Eigen::Index n, const char* op) {
  if (x.size() != n) {
    throw ShapeMismatchError(std::string(op) + ": signal has " + std::to_string(x.size()) +
                             " entries, graph has " + std::to_string(n) + " vertices");
  }
}

}  // namespace

FactorSpectrum FactorSpectrum::from_gso(const Matrix& z, GsoKind kind) {
  FactorSpectrum s;
  s.gso = z;
  s.basis = eig_sym(z, kind);
  s.fourier = gft_matrix(s.basis);
  s.fourier_eigen = eig_unitary(s.fourier);
  return s;
}

FactorSpectrum FactorSpectrum::build(const Graph& g, GsoKind kind) { return from_gso(mdglct::gso(g, kind), kind); }

CVector gft(const CVector& x, const SpectralBasis& basis) {
  require_size(x, basis.vectors.rows(), "gft");
  return basis.vectors.transpose().cast<Complex>() * x;
}

CVector igft(const CVector& xhat, const SpectralBasis& basis) {
  require_size(xhat, basis.vectors.rows(), "igft");
  return basis.vectors.cast<Complex>() * xhat;
}

CVector gfrft(const CVector& x, double alpha_norm, const FourierEigen& fe) {
  require_size(x, fe.vectors.rows(), "gfrft");
  return frac_operator(fe, alpha_norm) * x;
}

CVector gcm(const CVector& x, double xi, const FourierEigen& fe) {
  require_size(x, fe.values.size(), "gcm");
  return frac_diag_power(fe.values, xi).cwiseProduct(x);
}

CVector gscale(const CVector& x, double sigma, const Matrix& z) {
  if (sigma == 0.0) throw DomainError("gscale: sigma must be nonzero");
  require_size(x, z.rows(), "gscale");
  return (z.cast<Complex>() * x) / sigma;
}

CVector glct_1d(const CVector& x, const LctParams& p, GlctVariant variant, const FactorSpectrum& s,
                ZeroBVariant zero_b) {
  validate(p);
  require_size(x, static_cast<Eigen::Index>(s.size()), "glct");
  const auto& fe = s.fourier_eigen;
  if (variant == GlctVariant::Cddhfs) {
    const CddhfsParams q = cddhfs_decompose(p);
    return gcm(gscale(gfrft(x, q.alpha_norm, fe), q.delta, s.gso), q.xi, fe);
  }
  const CmCcCmParams q = cmccm_decompose(p, zero_b);
  const auto& xi = q.chirps;
  switch (q.branch) {
    case CmCcCmBranch::GeneralB:
      return gcm(igft(gcm(gft(gcm(x, xi[2], fe), s.basis), xi[1], fe), s.basis), xi[0], fe);
    case CmCcCmBranch::ZeroBEq30:
      return q.phase * gft(gcm(igft(gcm(gft(gcm(x, xi[2], fe), s.basis), xi[1], fe), s.basis), xi[0], fe), s.basis);
    case CmCcCmBranch::ZeroBEq31:
      return q.phase * gcm(igft(gcm(gft(gcm(igft(x, s.basis), xi[2], fe), s.basis), xi[1], fe), s.basis), xi[0], fe);
  }
  return x;
}

}  // namespace mdglct
