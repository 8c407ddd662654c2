#include "mdglct/lct_params.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <string>

namespace mdglct {

namespace {

Eigen::Matrix2d chirp_matrix(double xi) {
  Eigen::Matrix2d m;
  m << 1.0, 0.0, xi, 1.0;
  return m;
}

Eigen::Matrix2d gft_param_matrix() {
  Eigen::Matrix2d m;
  m << 0.0, 1.0, -1.0, 0.0;
  return m;
}

Eigen::Matrix2d igft_param_matrix() {
  Eigen::Matrix2d m;
  m << 0.0, -1.0, 1.0, 0.0;
  return m;
}

}  // namespace

Eigen::Matrix2d LctParams::matrix() const {
  Eigen::Matrix2d m;
  m << a, b, c, d;
  return m;
}

LctParams LctParams::from_matrix(const Eigen::Matrix2d& m) {
  return LctParams{m(0, 0), m(0, 1), m(1, 0), m(1, 1)};
}

LctParams validate(const LctParams& p) {
  if (!std::isfinite(p.a) || !std::isfinite(p.b) || !std::isfinite(p.c) || !std::isfinite(p.d)) {
    throw DeterminantError("LCT parameters must be finite");
  }
  const double err = std::abs(p.det() - 1.0);
  if (!(err < kDeterminantTol)) {
    throw DeterminantError("LCT parameters must satisfy ad - bc = 1 (got ad - bc = " +
                           std::to_string(p.det()) + ")");
  }
  return p;
}

LctParams inverse(const LctParams& p) { return LctParams{p.d, -p.b, -p.c, p.a}; }

LctParams compose(const LctParams& p1, const LctParams& p2) {
  return LctParams::from_matrix(p1.matrix() * p2.matrix());
}

LctParams parse_params(std::string_view text) {
  std::array<double, 4> v{};
  std::size_t count = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    std::string_view field = text.substr(pos, comma == std::string_view::npos ? text.size() - pos : comma - pos);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    if (count >= 4) throw ParseError("expected four comma-separated values a,b,c,d");
    double value = 0.0;
    const auto* first = field.data();
    const auto* last = field.data() + field.size();
    if (!field.empty() && *first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (field.empty() || ec != std::errc{} || ptr != last) {
      throw ParseError("malformed parameter value '" + std::string(field) + "'");
    }
    v[count++] = value;
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (count != 4) throw ParseError("expected four comma-separated values a,b,c,d");
  return LctParams{v[0], v[1], v[2], v[3]};
}

CddhfsParams cddhfs_decompose(const LctParams& p) {
  const double r2 = p.a * p.a + p.b * p.b;
  CddhfsParams q;
  q.xi = (p.a * p.c + p.b * p.d) / r2;
  q.delta = std::sqrt(r2);
  q.alpha_norm = std::atan2(p.b, p.a) / (std::numbers::pi / 2.0);
  return q;
}

std::array<Eigen::Matrix2d, 3> cddhfs_factors(const CddhfsParams& q) {
  Eigen::Matrix2d scaling;
  scaling << q.delta, 0.0, 0.0, 1.0 / q.delta;
  const double t = q.alpha_norm * std::numbers::pi / 2.0;
  Eigen::Matrix2d rotation;
  rotation << std::cos(t), std::sin(t), -std::sin(t), std::cos(t);
  return {chirp_matrix(q.xi), scaling, rotation};
}

CmCcCmParams cmccm_decompose(const LctParams& p, ZeroBVariant variant) {
  CmCcCmParams q;
  if (std::abs(p.b) > kZeroBTol) {
    q.branch = CmCcCmBranch::GeneralB;
    q.chirps = {(p.d - 1.0) / p.b, -p.b, (p.a - 1.0) / p.b};
    q.phase = Complex(1.0, 0.0);
    return q;
  }
  const double s = std::sqrt(0.5);
  if (variant == ZeroBVariant::Eq30) {
    if (p.d == 0.0) throw DomainError("zero-b decomposition (eq30) requires d != 0");
    q.branch = CmCcCmBranch::ZeroBEq30;
    q.chirps = {1.0 / p.d, p.d, (p.c + 1.0) / p.d};
    q.phase = Complex(s, -s);  // sqrt(-j)
  } else {
    if (p.a == 0.0) throw DomainError("zero-b decomposition (eq31) requires a != 0");
    q.branch = CmCcCmBranch::ZeroBEq31;
    q.chirps = {(p.c - 1.0) / p.a, -p.a, -1.0 / p.a};
    q.phase = Complex(s, s);  // sqrt(j)
  }
  return q;
}

std::vector<Eigen::Matrix2d> cmccm_factors(const CmCcCmParams& q) {
  const auto& x = q.chirps;
  switch (q.branch) {
    case CmCcCmBranch::GeneralB:
      return {chirp_matrix(x[0]), igft_param_matrix(), chirp_matrix(x[1]), gft_param_matrix(),
              chirp_matrix(x[2])};
    case CmCcCmBranch::ZeroBEq30:
      return {gft_param_matrix(), chirp_matrix(x[0]), igft_param_matrix(), chirp_matrix(x[1]),
              gft_param_matrix(), chirp_matrix(x[2])};
    case CmCcCmBranch::ZeroBEq31:
      return {chirp_matrix(x[0]), igft_param_matrix(), chirp_matrix(x[1]), gft_param_matrix(),
              chirp_matrix(x[2]), igft_param_matrix()};
  }
  return {};
}

Eigen::Matrix2d product_of(const std::vector<Eigen::Matrix2d>& factors) {
  Eigen::Matrix2d m = Eigen::Matrix2d::Identity();
  for (const auto& f : factors) m = m * f;
  return m;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

ParamSampler::ParamSampler(std::uint64_t seed, double lo, double hi) : rng_(seed), lo_(lo), hi_(hi) {
  if (!(hi > lo)) throw DomainError("sampler range must satisfy lo < hi");
  if (std::max(std::abs(lo), std::abs(hi)) < kMinAbsA) {
    throw DomainError("sampler range cannot produce |a| >= 0.05");
  }
}

LctParams ParamSampler::next() {
  auto draw = [this] { return lo_ + (hi_ - lo_) * uniform01(rng_); };
  double a = draw();
  while (std::abs(a) < kMinAbsA) a = draw();
  const double b = draw();
  const double c = draw();
  return LctParams{a, b, c, (1.0 + b * c) / a};
}

LctParams sample_random_params(std::uint64_t seed, double lo, double hi) {
  return ParamSampler(seed, lo, hi).next();
}

}  // namespace mdglct
