#include <gtest/gtest.h>

#include <numbers>

#include "oracle.hpp"

using namespace mdglct;

namespace {

constexpr double kPi = std::numbers::pi;

void expect_sorted_ascending(const Vector& v) {
  for (Eigen::Index k = 1; k < v.size(); ++k) EXPECT_LE(v(k - 1), v(k));
}

}  // namespace

TEST(EigSym, RingSpectrum) {
  const std::size_t n = 7;
  const SpectralBasis b = eig_sym(make_ring(n).laplacian());
  std::vector<double> expected;
  for (std::size_t k = 0; k < n; ++k) expected.push_back(2.0 - 2.0 * std::cos(2.0 * kPi * k / n));
  std::sort(expected.begin(), expected.end());
  for (std::size_t k = 0; k < n; ++k) EXPECT_NEAR(b.values(k), expected[k], 1e-12);
}

TEST(EigSym, PathAndCompleteSpectra) {
  const std::size_t n = 6;
  const SpectralBasis p = eig_sym(make_path(n).laplacian());
  for (std::size_t k = 0; k < n; ++k) EXPECT_NEAR(p.values(k), 2.0 - 2.0 * std::cos(kPi * k / n), 1e-12);
  const SpectralBasis c = eig_sym(make_complete(n).laplacian());
  EXPECT_NEAR(c.values(0), 0.0, 1e-12);
  for (std::size_t k = 1; k < n; ++k) EXPECT_NEAR(c.values(k), double(n), 1e-12);
}

TEST(EigSym, OrthonormalEigenpairsWithSignConvention) {
  for (const Matrix& z : {make_ring(9).laplacian(), make_comet(8).adjacency(), make_low_stretch_tree(16).laplacian()}) {
    const SpectralBasis b = eig_sym(z);
    const Matrix& v = b.vectors;
    EXPECT_LT((v.transpose() * v - Matrix::Identity(v.cols(), v.cols())).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LT((z * v - v * b.values.asDiagonal()).cwiseAbs().maxCoeff(), 1e-11);
    expect_sorted_ascending(b.values);
    for (Eigen::Index j = 0; j < v.cols(); ++j) {
      Eigen::Index first = 0;
      while (std::abs(v(first, j)) <= 1e-10) ++first;
      EXPECT_GT(v(first, j), 0.0);
    }
  }
}

TEST(EigSym, RejectsAsymmetric) {
  Matrix z(2, 2);
  z << 0, 1, 0.5, 0;
  EXPECT_THROW(eig_sym(z), DomainError);
  EXPECT_THROW(eig_sym(Matrix(2, 3)), DomainError);
}

TEST(GftMatrix, IsTransposeOfBasis) {
  const SpectralBasis b = eig_sym(make_path(5).laplacian());
  EXPECT_EQ((gft_matrix(b) - b.vectors.transpose()).cwiseAbs().maxCoeff(), 0.0);
}

TEST(EigUnitary, DecomposesGftMatrices) {
  for (const Graph& g : {make_ring(8), make_path(7), make_complete(5), make_comet(9), make_low_stretch_tree(16)}) {
    const Matrix f = gft_matrix(eig_sym(g.laplacian()));
    const FourierEigen fe = eig_unitary(f);
    const CMatrix& p = fe.vectors;
    const Eigen::Index n = p.rows();
    EXPECT_LT(oracle::max_abs(p.adjoint() * p - CMatrix::Identity(n, n)), 1e-10);
    EXPECT_LT(oracle::max_abs(f.cast<Complex>() * p - p * fe.values.asDiagonal()), 1e-10);
    for (Eigen::Index k = 0; k < n; ++k) EXPECT_NEAR(std::abs(fe.values(k)), 1.0, 1e-12);
    for (Eigen::Index k = 1; k < n; ++k) {
      EXPECT_LE(principal_arg(fe.values(k - 1)), principal_arg(fe.values(k)) + 1e-9);
    }
  }
}

TEST(EigUnitary, RealEigenvaluesAreSnapped) {
  // A reflection has eigenvalues exactly +1 and -1.
  Matrix f(2, 2);
  f << 0, 1, 1, 0;
  const FourierEigen fe = eig_unitary(f);
  EXPECT_EQ(fe.values(0), Complex(1.0, 0.0));
  EXPECT_EQ(fe.values(1), Complex(-1.0, 0.0));
  EXPECT_DOUBLE_EQ(principal_arg(fe.values(1)), kPi);
}

TEST(EigUnitary, RotationPair) {
  const double t = 0.7;
  Matrix f(2, 2);
  f << std::cos(t), -std::sin(t), std::sin(t), std::cos(t);
  const FourierEigen fe = eig_unitary(f);
  EXPECT_NEAR(principal_arg(fe.values(0)), -t, 1e-12);
  EXPECT_NEAR(principal_arg(fe.values(1)), t, 1e-12);
}

TEST(EigUnitary, RejectsNonOrthogonal) {
  Matrix f(2, 2);
  f << 1, 1, 0, 1;
  EXPECT_THROW(eig_unitary(f), DomainError);
}

TEST(PrincipalArg, Branch) {
  EXPECT_DOUBLE_EQ(principal_arg(Complex(-1.0, 0.0)), kPi);
  EXPECT_DOUBLE_EQ(principal_arg(Complex(-1.0, -0.0)), kPi);
  EXPECT_DOUBLE_EQ(principal_arg(Complex(0.0, -1.0)), -kPi / 2);
}

TEST(FracDiagPower, PrincipalBranch) {
  CVector mu(3);
  mu << Complex(-1, 0), Complex(0, 1), Complex(1, 0);
  const CVector half = frac_diag_power(mu, 0.5);
  EXPECT_NEAR(std::abs(half(0) - Complex(0, 1)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(half(1) - std::polar(1.0, kPi / 4)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(half(2) - Complex(1, 0)), 0.0, 1e-15);
  CVector bad(1);
  bad << Complex(2.0, 0.0);
  EXPECT_THROW(frac_diag_power(bad, 0.5), DomainError);
}

TEST(FracOperator, PowersOfTheGft) {
  const Matrix f = gft_matrix(eig_sym(make_ring(6).laplacian()));
  const FourierEigen fe = eig_unitary(f);
  const Eigen::Index n = f.rows();
  const CMatrix fc = f.cast<Complex>();
  EXPECT_LT(oracle::max_abs(frac_operator(fe, 1.0) - fc), 1e-10);
  EXPECT_LT(oracle::max_abs(frac_operator(fe, 0.0) - CMatrix::Identity(n, n)), 1e-12);
  EXPECT_LT(oracle::max_abs(frac_operator(fe, 2.0) - fc * fc), 1e-10);
  EXPECT_LT(oracle::max_abs(frac_operator(fe, -1.0) - fc.transpose()), 1e-10);
  const CMatrix a = frac_operator(fe, 0.3);
  const CMatrix b = frac_operator(fe, 0.45);
  EXPECT_LT(oracle::max_abs(a * b - frac_operator(fe, 0.75)), 1e-10);
  EXPECT_LT(oracle::max_abs(a.adjoint() * a - CMatrix::Identity(n, n)), 1e-10);
  EXPECT_LT(oracle::max_abs(a.adjoint() - frac_operator(fe, -0.3)), 1e-10);
}
