#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mdglct/graph.hpp"
#include "mdglct/kernels.hpp"
#include "mdglct/lct_params.hpp"

namespace mdglct {

/// Complex samples on a Cartesian product graph, stored column-major over
/// the factor axes (axis 0 fastest), so a 2-D signal is vec(X) for the
/// N_1 x N_2 sample matrix X.
struct SignalNd {
  std::vector<std::size_t> shape;
  CVector values;

  SignalNd() = default;
  SignalNd(std::vector<std::size_t> shape, CVector values);

  static SignalNd zeros(std::vector<std::size_t> shape);
  static SignalNd from_real(std::vector<std::size_t> shape, const Vector& values);

  std::size_t size() const { return static_cast<std::size_t>(values.size()); }
  Complex& operator()(std::span<const std::size_t> index);
  const Complex& operator()(std::span<const std::size_t> index) const;
};

std::size_t shape_size(std::span<const std::size_t> shape);

/// Per-factor decompositions of a product graph. Immutable after
/// construction and safe to share across threads.
class ProductSpectrum {
 public:
  ProductSpectrum(const ProductGraph& graph, GsoKind kind);
  ProductSpectrum(std::vector<FactorSpectrum> factors, GsoKind kind);

  const std::vector<FactorSpectrum>& factors() const { return factors_; }
  const std::vector<std::size_t>& shape() const { return shape_; }
  std::size_t size() const { return shape_size(shape_); }
  GsoKind kind() const { return kind_; }

  /// Entry (i_1, …, i_m) is prod_k mu_{k, i_k}^xi, each factor power taken
  /// with the principal branch.
  CVector chirp_diagonal(double xi) const;

 private:
  std::vector<FactorSpectrum> factors_;
  std::vector<std::size_t> shape_;
  GsoKind kind_;
};

/// In-place mode product: applies T along `axis`, i.e. multiplies vec(x) by
/// I ⊗ … ⊗ T ⊗ … ⊗ I without forming the Kronecker product.
void apply_along_axis(CVector& data, std::span<const std::size_t> shape, std::size_t axis, const Matrix& t,
                      MultCounter* counter = nullptr);
void apply_along_axis(CVector& data, std::span<const std::size_t> shape, std::size_t axis, const CMatrix& t,
                      MultCounter* counter = nullptr);

SignalNd gft_nd(const SignalNd& x, const ProductSpectrum& ps, MultCounter* counter = nullptr);
SignalNd igft_nd(const SignalNd& xhat, const ProductSpectrum& ps, MultCounter* counter = nullptr);
SignalNd gfrft_nd(const SignalNd& x, double alpha_norm, const ProductSpectrum& ps, MultCounter* counter = nullptr);
SignalNd gcm_nd(const SignalNd& x, double xi, const ProductSpectrum& ps, MultCounter* counter = nullptr);
SignalNd gscale_nd(const SignalNd& x, double sigma, const ProductSpectrum& ps, MultCounter* counter = nullptr);

/// Chirp ∘ scaling ∘ fractional Fourier, applied right to left.
SignalNd glct_cddhfs_nd(const SignalNd& x, const LctParams& p, const ProductSpectrum& ps,
                        MultCounter* counter = nullptr);

/// Chirp multiplication / chirp convolution / chirp multiplication. Falls
/// back to one of the two b = 0 factorizations when |b| <= 1e-9.
SignalNd glct_cmccm_nd(const SignalNd& x, const LctParams& p, ZeroBVariant zero_b, const ProductSpectrum& ps,
                       MultCounter* counter = nullptr);

SignalNd glct_nd(const SignalNd& x, const LctParams& p, GlctVariant variant, ZeroBVariant zero_b,
                 const ProductSpectrum& ps, MultCounter* counter = nullptr);

enum class TransformOp { Gft, Igft, Gfrft, Gcm, Gscale, GlctCddhfs, GlctCmCcCm };

/// Names one transform together with its parameters.
struct TransformDescriptor {
  TransformOp op = TransformOp::GlctCmCcCm;
  double alpha = 1.0;  // Gfrft
  double xi = 0.0;     // Gcm
  double sigma = 1.0;  // Gscale
  LctParams params;    // GlctCddhfs, GlctCmCcCm
  ZeroBVariant zero_b = ZeroBVariant::Eq30;
  GsoKind gso = GsoKind::Laplacian;
};

std::string to_string(TransformOp op);
TransformOp parse_transform_op(std::string_view name);
std::string to_string(GlctVariant v);
GlctVariant parse_variant(std::string_view name);
std::string to_string(ZeroBVariant v);
ZeroBVariant parse_zero_b_variant(std::string_view name);
std::string to_string(GsoKind k);
GsoKind parse_gso_kind(std::string_view name);

SignalNd apply_transform(const TransformDescriptor& desc, const SignalNd& x, const ProductSpectrum& ps,
                         MultCounter* counter = nullptr);

/// Descriptor of the transform that undoes `desc` (exactly for GFT/IGFT,
/// GFRFT, chirps and general-b CM-CC-CM; nominally for the others, where the
/// inverse parameter matrix is used). Graph scaling has no inverse.
TransformDescriptor inverse_descriptor(const TransformDescriptor& desc);

inline constexpr std::size_t kDenseOperatorCap = 4096;

/// Explicit matrix of a transform: column k is the transform of e_k.
CMatrix dense_operator(const TransformDescriptor& desc, const ProductSpectrum& ps);

/// Real multiplications executed when applying `desc` to one signal of the
/// given shape. Counts depend only on the shape, so a path-graph product of
/// that shape is used as the carrier.
std::uint64_t mult_count(const TransformDescriptor& desc, std::span<const std::size_t> shape);

}  // namespace mdglct
