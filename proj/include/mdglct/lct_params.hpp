#pragma once

#include <array>
#include <random>
#include <string_view>
#include <vector>

#include "mdglct/types.hpp"

namespace mdglct {

/// Parameter matrix [[a, b], [c, d]] of a linear canonical transform. The
/// multi-dimensional transforms use the scalar-block form (aI, bI; cI, dI).
struct LctParams {
  double a = 1.0;
  double b = 0.0;
  double c = 0.0;
  double d = 1.0;

  Eigen::Matrix2d matrix() const;
  static LctParams from_matrix(const Eigen::Matrix2d& m);
  double det() const { return a * d - b * c; }

  friend bool operator==(const LctParams&, const LctParams&) = default;
};

inline constexpr double kDeterminantTol = 1e-9;
inline constexpr double kZeroBTol = 1e-9;

/// Returns p unchanged, or throws DeterminantError when |ad - bc - 1| >= 1e-9.
LctParams validate(const LctParams& p);

LctParams inverse(const LctParams& p);

/// Matrix product p1 * p2 (apply p2 first, then p1).
LctParams compose(const LctParams& p1, const LctParams& p2);

/// Parses "a,b,c,d".
LctParams parse_params(std::string_view text);

/// Chirp, scaling, fractional-Fourier factorization
///   M = [[1, 0], [xi, 1]] * [[delta, 0], [0, 1/delta]] * R(alpha_norm * pi/2)
/// with R(t) = [[cos t, sin t], [-sin t, cos t]]. alpha_norm = 1 is the GFT.
struct CddhfsParams {
  double xi = 0.0;
  double delta = 1.0;
  double alpha_norm = 0.0;
};

CddhfsParams cddhfs_decompose(const LctParams& p);

/// The three factor matrices, leftmost first.
std::array<Eigen::Matrix2d, 3> cddhfs_factors(const CddhfsParams& q);

enum class ZeroBVariant { Eq30, Eq31 };
enum class CmCcCmBranch { GeneralB, ZeroBEq30, ZeroBEq31 };

/// Chirp multiplication / chirp convolution / chirp multiplication
/// parameters. `chirps` holds (xi1, xi2, xi3) for GeneralB, (xi4, xi5, xi6)
/// for ZeroBEq30 and (xi7, xi8, xi9) for ZeroBEq31, in the order they appear
/// from left to right in the operator product.
struct CmCcCmParams {
  CmCcCmBranch branch = CmCcCmBranch::GeneralB;
  std::array<double, 3> chirps{};
  Complex phase{1.0, 0.0};
};

CmCcCmParams cmccm_decompose(const LctParams& p, ZeroBVariant variant = ZeroBVariant::Eq30);

/// Elementary factor matrices, leftmost first: chirp multiplications
/// [[1, 0], [xi, 1]], the GFT [[0, 1], [-1, 0]] and the IGFT [[0, -1], [1, 0]].
std::vector<Eigen::Matrix2d> cmccm_factors(const CmCcCmParams& q);

Eigen::Matrix2d product_of(const std::vector<Eigen::Matrix2d>& factors);

/// splitmix64 mix of (seed, index); used to give every trial its own stream.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// Uniform double in [0, 1) from the top 53 bits of a 64-bit engine draw.
/// Portable, unlike std::uniform_real_distribution.
double uniform01(std::mt19937_64& rng);

/// Draws a, b, c uniformly from [lo, hi] and sets d = (1 + bc)/a; a is
/// redrawn while |a| < 0.05.
class ParamSampler {
 public:
  explicit ParamSampler(std::uint64_t seed, double lo = -2.0, double hi = 2.0);

  LctParams next();

 private:
  std::mt19937_64 rng_;
  double lo_;
  double hi_;
};

inline constexpr double kMinAbsA = 0.05;

LctParams sample_random_params(std::uint64_t seed, double lo = -2.0, double hi = 2.0);

}  // namespace mdglct
