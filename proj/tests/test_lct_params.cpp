#include <gtest/gtest.h>

#include <set>

#include "oracle.hpp"

using namespace mdglct;

namespace {

double max_diff(const Eigen::Matrix2d& a, const Eigen::Matrix2d& b) { return (a - b).cwiseAbs().maxCoeff(); }

}  // namespace

TEST(LctParams, Validate) {
  EXPECT_NO_THROW(validate({1, 0, 0, 1}));
  EXPECT_NO_THROW(validate({0, 1, -1, 0}));
  EXPECT_NO_THROW(validate({0.10, 0.60, -0.20, (1 + 0.60 * -0.20) / 0.10}));
  EXPECT_THROW(validate({1, 1, 1, 1}), DeterminantError);
  EXPECT_THROW(validate({1, 0, 0, 1 + 2e-9}), DeterminantError);
  EXPECT_THROW(validate({std::nan(""), 0, 0, 1}), DeterminantError);
}

TEST(LctParams, PrintedRowWithinRounding) {
  const LctParams printed{0.10, 0.60, -0.20, 8.80};
  EXPECT_NEAR(printed.det(), 1.0, 0.02);
  EXPECT_NEAR((1 + 0.60 * -0.20) / 0.10, 8.80, 1e-12);
  EXPECT_NEAR((1 + 0.10 * -0.60) / 0.40, 2.35, 1e-12);
}

TEST(LctParams, InverseAndCompose) {
  const LctParams p{2.0, 0.5, 1.0, 0.75};
  ASSERT_NEAR(p.det(), 1.0, 1e-15);
  const LctParams id = compose(p, inverse(p));
  EXPECT_LT(max_diff(id.matrix(), Eigen::Matrix2d::Identity()), 1e-15);
  const LctParams q{0.0, 1.0, -1.0, 0.0};
  EXPECT_LT(max_diff(compose(p, q).matrix(), p.matrix() * q.matrix()), 1e-15);
  EXPECT_EQ(inverse(p), (LctParams{0.75, -0.5, -1.0, 2.0}));
}

TEST(LctParams, Parse) {
  EXPECT_EQ(parse_params("0.40,-1.10,0.70,0.58"), (LctParams{0.40, -1.10, 0.70, 0.58}));
  EXPECT_EQ(parse_params(" 1, 0 ,0,+1"), (LctParams{1, 0, 0, 1}));
  EXPECT_THROW(parse_params("1,2,3"), ParseError);
  EXPECT_THROW(parse_params("1,2,3,4,5"), ParseError);
  EXPECT_THROW(parse_params("a,b,c,d"), ParseError);
  EXPECT_THROW(parse_params("1,,0,1"), ParseError);
  EXPECT_THROW(parse_params(""), ParseError);
}

TEST(Cddhfs, GftParameters) {
  const CddhfsParams q = cddhfs_decompose({0, 1, -1, 0});
  EXPECT_NEAR(q.xi, 0.0, 1e-15);
  EXPECT_NEAR(q.delta, 1.0, 1e-15);
  EXPECT_NEAR(q.alpha_norm, 1.0, 1e-15);
}

TEST(Cddhfs, RoundTrip) {
  for (const LctParams& p : {LctParams{1, 0, 0, 1}, LctParams{2, 0, 3, 0.5}, LctParams{-2, 0, 1, -0.5},
                             LctParams{0.3, -1.2, 0.5, (1 + -1.2 * 0.5) / 0.3}}) {
    const auto f = cddhfs_factors(cddhfs_decompose(p));
    EXPECT_LT(max_diff(f[0] * f[1] * f[2], p.matrix()), 1e-12);
  }
}

TEST(CmCcCm, GeneralBChirps) {
  const LctParams p{2.0, 0.5, 1.0, 0.75};
  const CmCcCmParams q = cmccm_decompose(p);
  EXPECT_EQ(q.branch, CmCcCmBranch::GeneralB);
  EXPECT_DOUBLE_EQ(q.chirps[0], (0.75 - 1) / 0.5);
  EXPECT_DOUBLE_EQ(q.chirps[1], -0.5);
  EXPECT_DOUBLE_EQ(q.chirps[2], (2.0 - 1) / 0.5);
  EXPECT_EQ(q.phase, Complex(1.0, 0.0));
  EXPECT_LT(max_diff(product_of(cmccm_factors(q)), p.matrix()), 1e-12);
}

TEST(CmCcCm, ZeroBBranches) {
  const LctParams p{2.0, 0.0, 0.3, 0.5};
  const CmCcCmParams q30 = cmccm_decompose(p, ZeroBVariant::Eq30);
  EXPECT_EQ(q30.branch, CmCcCmBranch::ZeroBEq30);
  EXPECT_DOUBLE_EQ(q30.chirps[0], 2.0);
  EXPECT_DOUBLE_EQ(q30.chirps[1], 0.5);
  EXPECT_DOUBLE_EQ(q30.chirps[2], 1.3 / 0.5);
  EXPECT_NEAR(std::arg(q30.phase), -std::numbers::pi / 4, 1e-15);
  EXPECT_LT(max_diff(product_of(cmccm_factors(q30)), p.matrix()), 1e-12);

  const CmCcCmParams q31 = cmccm_decompose(p, ZeroBVariant::Eq31);
  EXPECT_EQ(q31.branch, CmCcCmBranch::ZeroBEq31);
  EXPECT_DOUBLE_EQ(q31.chirps[0], (0.3 - 1) / 2.0);
  EXPECT_DOUBLE_EQ(q31.chirps[1], -2.0);
  EXPECT_DOUBLE_EQ(q31.chirps[2], -0.5);
  EXPECT_NEAR(std::arg(q31.phase), std::numbers::pi / 4, 1e-15);
  EXPECT_LT(max_diff(product_of(cmccm_factors(q31)), p.matrix()), 1e-12);
}

TEST(CmCcCm, ZeroBThreshold) {
  EXPECT_EQ(cmccm_decompose({1, 0.5e-9, 0, 1}).branch, CmCcCmBranch::ZeroBEq30);
  EXPECT_EQ(cmccm_decompose({1, 2e-9, 0, 1}).branch, CmCcCmBranch::GeneralB);
}

TEST(CmCcCm, IdentityParamsUseZeroBChirps) {
  const CmCcCmParams q = cmccm_decompose({1, 0, 0, 1});
  EXPECT_EQ(q.branch, CmCcCmBranch::ZeroBEq30);
  EXPECT_DOUBLE_EQ(q.chirps[0], 1.0);
  EXPECT_DOUBLE_EQ(q.chirps[1], 1.0);
  EXPECT_DOUBLE_EQ(q.chirps[2], 1.0);
}

TEST(Sampler, DeterministicAndValid) {
  ParamSampler s1(42), s2(42), s3(43);
  for (int k = 0; k < 200; ++k) {
    const LctParams p = s1.next();
    EXPECT_EQ(p, s2.next());
    EXPECT_GE(std::abs(p.a), kMinAbsA);
    EXPECT_NEAR(p.det(), 1.0, 1e-9);
    EXPECT_LE(std::abs(p.b), 2.0);
    EXPECT_LE(std::abs(p.c), 2.0);
  }
  EXPECT_NE(ParamSampler(42).next(), s3.next());
  EXPECT_EQ(sample_random_params(5), ParamSampler(5).next());
}

TEST(Sampler, DeriveSeedSpreads) {
  std::set<std::uint64_t> seen;
  for (std::uint64_t t = 0; t < 1000; ++t) seen.insert(derive_seed(7, t));
  EXPECT_EQ(seen.size(), 1000u);
  EXPECT_NE(derive_seed(7, 0), derive_seed(8, 0));
  EXPECT_EQ(derive_seed(7, 3), derive_seed(7, 3));
}

TEST(Sampler, Uniform01Range) {
  std::mt19937_64 rng(1);
  for (int k = 0; k < 10000; ++k) {
    const double u = uniform01(rng);
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
}
