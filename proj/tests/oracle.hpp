#pragma once

// Dense reference constructions for the tests. Everything here is built from
// explicit Kronecker products and plain matrix algebra, independent of the
// mode-wise code paths in the library.

#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

#include "mdglct/experiments.hpp"

namespace oracle {

using namespace mdglct;

template <typename M>
M kron(const M& a, const M& b) {
  M out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      for (Eigen::Index k = 0; k < b.rows(); ++k)
        for (Eigen::Index l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

// Column-major linearization with axis 0 fastest means the full operator is
// A_m ⊗ … ⊗ A_1.
template <typename M>
M kron_all(const std::vector<M>& per_axis) {
  M out = per_axis.back();
  for (std::size_t k = per_axis.size() - 1; k-- > 0;) out = kron(out, per_axis[k]);
  return out;
}

inline Matrix kron_sum(const std::vector<Matrix>& z) {
  std::vector<Matrix> ids;
  for (const auto& m : z) ids.push_back(Matrix::Identity(m.rows(), m.cols()));
  Matrix out;
  for (std::size_t k = 0; k < z.size(); ++k) {
    auto terms = ids;
    terms[k] = z[k];
    Matrix t = kron_all(terms);
    out = k == 0 ? t : Matrix(out + t);
  }
  return out;
}

// std::arg returns -pi for -1 - 0i; the transforms use (-pi, pi].
inline double arg_principal(Complex z) {
  const double a = std::arg(z);
  return a <= -std::numbers::pi ? std::numbers::pi : a;
}

inline std::vector<CMatrix> per_axis(const ProductSpectrum& ps, const std::function<CMatrix(const FactorSpectrum&)>& f) {
  std::vector<CMatrix> out;
  for (const auto& fs : ps.factors()) out.push_back(f(fs));
  return out;
}

inline CMatrix fourier(const ProductSpectrum& ps) {
  return kron_all(per_axis(ps, [](const FactorSpectrum& fs) { return CMatrix(fs.fourier.cast<Complex>()); }));
}

inline CMatrix inverse_fourier(const ProductSpectrum& ps) {
  return kron_all(
      per_axis(ps, [](const FactorSpectrum& fs) { return CMatrix(fs.basis.vectors.cast<Complex>()); }));
}

inline CMatrix frac_fourier(const ProductSpectrum& ps, double alpha) {
  return kron_all(per_axis(ps, [&](const FactorSpectrum& fs) {
    const auto& fe = fs.fourier_eigen;
    CVector pw(fe.values.size());
    for (Eigen::Index k = 0; k < pw.size(); ++k) pw(k) = std::exp(Complex(0.0, alpha * arg_principal(fe.values(k))));
    return CMatrix(fe.vectors * pw.asDiagonal() * fe.vectors.adjoint());
  }));
}

inline CMatrix chirp(const ProductSpectrum& ps, double xi) {
  return kron_all(per_axis(ps, [&](const FactorSpectrum& fs) {
    const auto& mu = fs.fourier_eigen.values;
    CMatrix d = CMatrix::Zero(mu.size(), mu.size());
    for (Eigen::Index k = 0; k < mu.size(); ++k) d(k, k) = std::exp(Complex(0.0, xi * arg_principal(mu(k))));
    return d;
  }));
}

inline CMatrix scaling(const ProductSpectrum& ps, double sigma) {
  std::vector<Matrix> z;
  for (const auto& fs : ps.factors()) z.push_back(fs.gso);
  return (kron_sum(z) / sigma).cast<Complex>();
}

inline CMatrix glct_cddhfs(const ProductSpectrum& ps, const LctParams& p) {
  const double delta = std::hypot(p.a, p.b);
  const double xi = (p.a * p.c + p.b * p.d) / (p.a * p.a + p.b * p.b);
  const double alpha = 2.0 / std::numbers::pi * std::atan2(p.b, p.a);
  return chirp(ps, xi) * scaling(ps, delta) * frac_fourier(ps, alpha);
}

inline CMatrix glct_cmccm(const ProductSpectrum& ps, const LctParams& p, ZeroBVariant zero_b) {
  const CMatrix f = fourier(ps);
  const CMatrix v = inverse_fourier(ps);
  if (std::abs(p.b) > 1e-9) {
    return chirp(ps, (p.d - 1) / p.b) * v * chirp(ps, -p.b) * f * chirp(ps, (p.a - 1) / p.b);
  }
  if (zero_b == ZeroBVariant::Eq30) {
    return std::exp(Complex(0.0, -std::numbers::pi / 4)) * f * chirp(ps, 1 / p.d) * v * chirp(ps, p.d) * f *
           chirp(ps, (p.c + 1) / p.d);
  }
  return std::exp(Complex(0.0, std::numbers::pi / 4)) * chirp(ps, (p.c - 1) / p.a) * v * chirp(ps, -p.a) * f *
         chirp(ps, -1 / p.a) * v;
}

inline CMatrix operator_of(const TransformDescriptor& d, const ProductSpectrum& ps) {
  switch (d.op) {
    case TransformOp::Gft: return fourier(ps);
    case TransformOp::Igft: return inverse_fourier(ps);
    case TransformOp::Gfrft: return frac_fourier(ps, d.alpha);
    case TransformOp::Gcm: return chirp(ps, d.xi);
    case TransformOp::Gscale: return scaling(ps, d.sigma);
    case TransformOp::GlctCddhfs: return glct_cddhfs(ps, d.params);
    case TransformOp::GlctCmCcCm: return glct_cmccm(ps, d.params, d.zero_b);
  }
  return {};
}

inline CVector random_complex(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  CVector v(static_cast<Eigen::Index>(n));
  for (Eigen::Index k = 0; k < v.size(); ++k) v(k) = Complex(u(rng), u(rng));
  return v;
}

inline double max_abs(const CMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

}  // namespace oracle
