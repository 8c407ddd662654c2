#include "mdglct/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace mdglct {

namespace {

constexpr double kSymmetryTol = 1e-10;
constexpr double kOrthogonalityTol = 1e-8;
constexpr double kUnimodularTol = 1e-8;
// Eigenvalues of (F + F^T)/2 closer than this are treated as one eigenspace.
constexpr double kClusterGap = 1e-9;
// Restricted skew parts below this mean the eigenspace belongs to +1 or -1.
constexpr double kSkewZeroTol = 1e-10;
// Components smaller than this do not count as the "first nonzero" entry.
constexpr double kLeadingTol = 1e-10;
// Eigenvalues with |Im| below this are snapped onto +1 or -1.
constexpr double kRealSnapTol = 1e-12;
// Arguments closer than this are ordered by eigenvector instead.
constexpr double kArgTieTol = 1e-9;

template <class Vec>
Eigen::Index leading_index(const Vec& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) > kLeadingTol) return i;
  }
  return 0;
}

bool lexicographic_less(const CVector& x, const CVector& y) {
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    if (x(i).real() != y(i).real()) return x(i).real() < y(i).real();
    if (x(i).imag() != y(i).imag()) return x(i).imag() < y(i).imag();
  }
  return false;
}

}  // namespace

SpectralBasis eig_sym(const Matrix& z, GsoKind kind) {
  if (z.rows() != z.cols()) throw DomainError("eig_sym: matrix must be square");
  if (z.size() > 0 && (z - z.transpose()).cwiseAbs().maxCoeff() > kSymmetryTol) {
    throw DomainError("eig_sym: matrix is not symmetric");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(z);
  if (solver.info() != Eigen::Success) throw NumericalError("eig_sym: eigensolver did not converge");

  SpectralBasis basis;
  basis.kind = kind;
  basis.values = solver.eigenvalues();
  basis.vectors = solver.eigenvectors();
  for (Eigen::Index k = 0; k < basis.vectors.cols(); ++k) {
    auto col = basis.vectors.col(k);
    if (col(leading_index(col)) < 0.0) col = -col;
  }
  return basis;
}

Matrix gft_matrix(const SpectralBasis& basis) { return basis.vectors.transpose(); }

double principal_arg(Complex z) {
  const double theta = std::arg(z);
  return theta <= -std::numbers::pi ? std::numbers::pi : theta;
}

FourierEigen eig_unitary(const Matrix& f) {
  if (f.rows() != f.cols()) throw DomainError("eig_unitary: matrix must be square");
  const Eigen::Index n = f.rows();
  if (n == 0) return FourierEigen{CMatrix(0, 0), CVector(0), f};
  if ((f.transpose() * f - Matrix::Identity(n, n)).cwiseAbs().maxCoeff() > kOrthogonalityTol) {
    throw DomainError("eig_unitary: matrix is not orthogonal");
  }

  // F is normal, so its symmetric part H = (F + F^T)/2 and skew part
  // K = (F - F^T)/2 commute. Diagonalize H, then split every H-eigenspace
  // with the Hermitian matrix -iK restricted to it.
  const Matrix sym = 0.5 * (f + f.transpose());
  const Matrix skew = 0.5 * (f - f.transpose());
  Eigen::SelfAdjointEigenSolver<Matrix> outer(sym);
  if (outer.info() != Eigen::Success) throw NumericalError("eig_unitary: eigensolver did not converge");
  const Vector& cosines = outer.eigenvalues();
  const Matrix& q = outer.eigenvectors();

  CMatrix vectors(n, n);
  CVector values(n);
  Eigen::Index start = 0;
  while (start < n) {
    Eigen::Index stop = start + 1;
    while (stop < n && cosines(stop) - cosines(stop - 1) <= kClusterGap) ++stop;
    const Eigen::Index k = stop - start;
    const Matrix qc = q.middleCols(start, k);
    const Matrix kc = qc.transpose() * skew * qc;

    CMatrix pc;
    if (kc.cwiseAbs().maxCoeff() < kSkewZeroTol) {
      pc = qc.cast<Complex>();
    } else {
      const CMatrix herm = Complex(0.0, -1.0) * kc.cast<Complex>();
      Eigen::SelfAdjointEigenSolver<CMatrix> inner(herm);
      if (inner.info() != Eigen::Success) throw NumericalError("eig_unitary: eigensolver did not converge");
      pc = qc.cast<Complex>() * inner.eigenvectors();
    }
    for (Eigen::Index j = 0; j < k; ++j) {
      CVector p = pc.col(j);
      p.normalize();
      Complex mu = p.dot(f.cast<Complex>() * p);  // Rayleigh quotient p^H F p
      mu /= std::abs(mu);
      if (std::abs(mu.imag()) < kRealSnapTol) mu = Complex(mu.real() > 0.0 ? 1.0 : -1.0, 0.0);
      const Complex lead = p(leading_index(p));
      p *= std::conj(lead) / std::abs(lead);
      vectors.col(start + j) = p;
      values(start + j) = mu;
    }
    start = stop;
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::vector<double> args(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) args[static_cast<std::size_t>(i)] = principal_arg(values(i));
  std::sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
    const double da = args[static_cast<std::size_t>(a)];
    const double db = args[static_cast<std::size_t>(b)];
    return da != db ? da < db : a < b;
  });
  // Runs of (numerically) equal arguments are reordered by eigenvector.
  for (std::size_t s = 0; s < order.size();) {
    std::size_t e = s + 1;
    while (e < order.size() &&
           args[static_cast<std::size_t>(order[e])] - args[static_cast<std::size_t>(order[e - 1])] <= kArgTieTol) {
      ++e;
    }
    std::sort(order.begin() + static_cast<std::ptrdiff_t>(s), order.begin() + static_cast<std::ptrdiff_t>(e),
              [&](Eigen::Index a, Eigen::Index b) {
                return lexicographic_less(vectors.col(a), vectors.col(b));
              });
    s = e;
  }

  FourierEigen fe;
  fe.vectors.resize(n, n);
  fe.values.resize(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    fe.vectors.col(i) = vectors.col(order[static_cast<std::size_t>(i)]);
    fe.values(i) = values(order[static_cast<std::size_t>(i)]);
  }
  fe.source = f;
  return fe;
}

CVector frac_diag_power(const CVector& mu, double t) {
  CVector out(mu.size());
  for (Eigen::Index k = 0; k < mu.size(); ++k) {
    if (std::abs(std::abs(mu(k)) - 1.0) > kUnimodularTol) {
      throw DomainError("frac_diag_power: eigenvalue is not unimodular");
    }
    out(k) = std::polar(1.0, t * principal_arg(mu(k)));
  }
  return out;
}

CMatrix frac_operator(const FourierEigen& fe, double t) {
  const CVector d = frac_diag_power(fe.values, t);
  return (fe.vectors * d.asDiagonal()) * fe.vectors.adjoint();
}

}  // namespace mdglct
