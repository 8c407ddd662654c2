#include "mdglct/product.hpp"

#include <algorithm>
#include <string>

namespace mdglct {

namespace {

void count(MultCounter* counter, std::uint64_t n) {
  if (counter != nullptr) counter->real_mults += n;
}

void require_shape(const SignalNd& x, const ProductSpectrum& ps, const char* op) {
  if (x.shape != ps.shape()) {
    throw ShapeMismatchError(std::string(op) + ": signal shape does not match the product graph");
  }
}

struct AxisLayout {
  Eigen::Index inner;  // product of the extents before the axis
  Eigen::Index extent;
  Eigen::Index outer;  // product of the extents after the axis
};

AxisLayout layout(std::span<const std::size_t> shape, std::size_t axis, Eigen::Index data_size) {
  if (axis >= shape.size()) throw ShapeMismatchError("axis out of range");
  AxisLayout l{1, static_cast<Eigen::Index>(shape[axis]), 1};
  for (std::size_t k = 0; k < axis; ++k) l.inner *= static_cast<Eigen::Index>(shape[k]);
  for (std::size_t k = axis + 1; k < shape.size(); ++k) l.outer *= static_cast<Eigen::Index>(shape[k]);
  if (l.inner * l.extent * l.outer != data_size) throw ShapeMismatchError("data size does not match shape");
  return l;
}

template <class Mat>
void check_factor(const Mat& t, const AxisLayout& l) {
  if (t.rows() != l.extent || t.cols() != l.extent) {
    throw ShapeMismatchError("factor matrix does not match the axis extent");
  }
}

}  // namespace

std::size_t shape_size(std::span<const std::size_t> shape) {
  std::size_t n = 1;
  for (auto s : shape) n *= s;
  return n;
}

SignalNd::SignalNd(std::vector<std::size_t> shape_in, CVector values_in)
    : shape(std::move(shape_in)), values(std::move(values_in)) {
  if (shape.empty()) throw ShapeMismatchError("signal shape must have at least one axis");
  if (shape_size(shape) != static_cast<std::size_t>(values.size())) {
    throw ShapeMismatchError("signal has " + std::to_string(values.size()) + " values but shape holds " +
                             std::to_string(shape_size(shape)));
  }
}

SignalNd SignalNd::zeros(std::vector<std::size_t> shape) {
  const auto n = static_cast<Eigen::Index>(shape_size(shape));
  return SignalNd(std::move(shape), CVector::Zero(n));
}

SignalNd SignalNd::from_real(std::vector<std::size_t> shape, const Vector& values) {
  return SignalNd(std::move(shape), values.cast<Complex>());
}

Complex& SignalNd::operator()(std::span<const std::size_t> index) {
  return values(static_cast<Eigen::Index>(linear_index(shape, index)));
}

const Complex& SignalNd::operator()(std::span<const std::size_t> index) const {
  return values(static_cast<Eigen::Index>(linear_index(shape, index)));
}

ProductSpectrum::ProductSpectrum(const ProductGraph& graph, GsoKind kind) : kind_(kind) {
  for (const auto& g : graph.factors()) factors_.push_back(FactorSpectrum::build(g, kind));
  shape_ = graph.shape();
}

ProductSpectrum::ProductSpectrum(std::vector<FactorSpectrum> factors, GsoKind kind)
    : factors_(std::move(factors)), kind_(kind) {
  if (factors_.empty()) throw InvalidSizeError("product spectrum needs at least one factor");
  for (const auto& f : factors_) shape_.push_back(f.size());
}

CVector ProductSpectrum::chirp_diagonal(double xi) const {
  CVector diag = frac_diag_power(factors_.front().fourier_eigen.values, xi);
  for (std::size_t k = 1; k < factors_.size(); ++k) {
    const CVector dk = frac_diag_power(factors_[k].fourier_eigen.values, xi);
    CVector next(diag.size() * dk.size());
    for (Eigen::Index j = 0; j < dk.size(); ++j) next.segment(j * diag.size(), diag.size()) = dk(j) * diag;
    diag = std::move(next);
  }
  return diag;
}

void apply_along_axis(CVector& data, std::span<const std::size_t> shape, std::size_t axis, const Matrix& t,
                      MultCounter* counter) {
  const AxisLayout l = layout(shape, axis, data.size());
  check_factor(t, l);
  if (l.inner == 1) {
    Eigen::Map<CMatrix> block(data.data(), l.extent, l.outer);
    const Matrix re = t * block.real();
    const Matrix im = t * block.imag();
    block.real() = re;
    block.imag() = im;
  } else {
    const Matrix tt = t.transpose();
    for (Eigen::Index r = 0; r < l.outer; ++r) {
      Eigen::Map<CMatrix> block(data.data() + r * l.inner * l.extent, l.inner, l.extent);
      const Matrix re = block.real() * tt;
      const Matrix im = block.imag() * tt;
      block.real() = re;
      block.imag() = im;
    }
  }
  // real matrix times complex vector: two real multiplications per term
  count(counter, 2ULL * static_cast<std::uint64_t>(data.size()) * static_cast<std::uint64_t>(l.extent));
}

void apply_along_axis(CVector& data, std::span<const std::size_t> shape, std::size_t axis, const CMatrix& t,
                      MultCounter* counter) {
  const AxisLayout l = layout(shape, axis, data.size());
  check_factor(t, l);
  if (l.inner == 1) {
    Eigen::Map<CMatrix> block(data.data(), l.extent, l.outer);
    block = t * block;
  } else {
    const CMatrix tt = t.transpose();
    for (Eigen::Index r = 0; r < l.outer; ++r) {
      Eigen::Map<CMatrix> block(data.data() + r * l.inner * l.extent, l.inner, l.extent);
      block = block * tt;
    }
  }
  count(counter, 4ULL * static_cast<std::uint64_t>(data.size()) * static_cast<std::uint64_t>(l.extent));
}

SignalNd gft_nd(const SignalNd& x, const ProductSpectrum& ps, MultCounter* counter) {
  require_shape(x, ps, "gft_nd");
  SignalNd out = x;
  for (std::size_t k = 0; k < ps.factors().size(); ++k) {
    apply_along_axis(out.values, out.shape, k, ps.factors()[k].fourier, counter);
  }
  return out;
}

SignalNd igft_nd(const SignalNd& xhat, const ProductSpectrum& ps, MultCounter* counter) {
  require_shape(xhat, ps, "igft_nd");
  SignalNd out = xhat;
  for (std::size_t k = 0; k < ps.factors().size(); ++k) {
    apply_along_axis(out.values, out.shape, k, ps.factors()[k].basis.vectors, counter);
  }
  return out;
}

SignalNd gfrft_nd(const SignalNd& x, double alpha_norm, const ProductSpectrum& ps, MultCounter* counter) {
  require_shape(x, ps, "gfrft_nd");
  SignalNd out = x;
  for (std::size_t k = 0; k < ps.factors().size(); ++k) {
    apply_along_axis(out.values, out.shape, k, frac_operator(ps.factors()[k].fourier_eigen, alpha_norm), counter);
  }
  return out;
}

SignalNd gcm_nd(const SignalNd& x, double xi, const ProductSpectrum& ps, MultCounter* counter) {
  require_shape(x, ps, "gcm_nd");
  SignalNd out = x;
  out.values = ps.chirp_diagonal(xi).cwiseProduct(x.values);
  count(counter, 4ULL * x.size());
  return out;
}

SignalNd gscale_nd(const SignalNd& x, double sigma, const ProductSpectrum& ps, MultCounter* counter) {
  if (sigma == 0.0) throw DomainError("gscale_nd: sigma must be nonzero");
  require_shape(x, ps, "gscale_nd");
  SignalNd out = SignalNd::zeros(x.shape);
  for (std::size_t k = 0; k < ps.factors().size(); ++k) {
    CVector term = x.values;
    apply_along_axis(term, x.shape, k, ps.factors()[k].gso, counter);
    out.values += term;
  }
  out.values /= sigma;
  count(counter, 2ULL * x.size());
  return out;
}

SignalNd glct_cddhfs_nd(const SignalNd& x, const LctParams& p, const ProductSpectrum& ps, MultCounter* counter) {
  const CddhfsParams q = cddhfs_decompose(validate(p));
  SignalNd y = gfrft_nd(x, q.alpha_norm, ps, counter);
  y = gscale_nd(y, q.delta, ps, counter);
  return gcm_nd(y, q.xi, ps, counter);
}

SignalNd glct_cmccm_nd(const SignalNd& x, const LctParams& p, ZeroBVariant zero_b, const ProductSpectrum& ps,
                       MultCounter* counter) {
  const CmCcCmParams q = cmccm_decompose(validate(p), zero_b);
  const auto& xi = q.chirps;
  SignalNd y = x;
  switch (q.branch) {
    case CmCcCmBranch::GeneralB:
      y = gcm_nd(y, xi[2], ps, counter);
      y = gft_nd(y, ps, counter);
      y = gcm_nd(y, xi[1], ps, counter);
      y = igft_nd(y, ps, counter);
      return gcm_nd(y, xi[0], ps, counter);
    case CmCcCmBranch::ZeroBEq30:
      y = gcm_nd(y, xi[2], ps, counter);
      y = gft_nd(y, ps, counter);
      y = gcm_nd(y, xi[1], ps, counter);
      y = igft_nd(y, ps, counter);
      y = gcm_nd(y, xi[0], ps, counter);
      y = gft_nd(y, ps, counter);
      break;
    case CmCcCmBranch::ZeroBEq31:
      y = igft_nd(y, ps, counter);
      y = gcm_nd(y, xi[2], ps, counter);
      y = gft_nd(y, ps, counter);
      y = gcm_nd(y, xi[1], ps, counter);
      y = igft_nd(y, ps, counter);
      y = gcm_nd(y, xi[0], ps, counter);
      break;
  }
  y.values *= q.phase;
  count(counter, 4ULL * y.size());
  return y;
}

SignalNd glct_nd(const SignalNd& x, const LctParams& p, GlctVariant variant, ZeroBVariant zero_b,
                 const ProductSpectrum& ps, MultCounter* counter) {
  return variant == GlctVariant::Cddhfs ? glct_cddhfs_nd(x, p, ps, counter)
                                        : glct_cmccm_nd(x, p, zero_b, ps, counter);
}

std::string to_string(TransformOp op) {
  switch (op) {
    case TransformOp::Gft: return "gft";
    case TransformOp::Igft: return "igft";
    case TransformOp::Gfrft: return "gfrft";
    case TransformOp::Gcm: return "gcm";
    case TransformOp::Gscale: return "gscale";
    case TransformOp::GlctCddhfs: return "glct_cddhfs";
    case TransformOp::GlctCmCcCm: return "glct_cmccm";
  }
  return "unknown";
}

TransformOp parse_transform_op(std::string_view name) {
  for (auto op : {TransformOp::Gft, TransformOp::Igft, TransformOp::Gfrft, TransformOp::Gcm, TransformOp::Gscale,
                  TransformOp::GlctCddhfs, TransformOp::GlctCmCcCm}) {
    if (name == to_string(op)) return op;
  }
  throw ParseError("unknown transform op '" + std::string(name) + "'");
}

std::string to_string(GlctVariant v) { return v == GlctVariant::Cddhfs ? "cddhfs" : "cmccm"; }

GlctVariant parse_variant(std::string_view name) {
  if (name == "cddhfs") return GlctVariant::Cddhfs;
  if (name == "cmccm") return GlctVariant::CmCcCm;
  throw ParseError("unknown variant '" + std::string(name) + "' (expected cddhfs or cmccm)");
}

std::string to_string(ZeroBVariant v) { return v == ZeroBVariant::Eq30 ? "eq30" : "eq31"; }

ZeroBVariant parse_zero_b_variant(std::string_view name) {
  if (name == "eq30") return ZeroBVariant::Eq30;
  if (name == "eq31") return ZeroBVariant::Eq31;
  throw ParseError("unknown zero-b variant '" + std::string(name) + "' (expected eq30 or eq31)");
}

std::string to_string(GsoKind k) { return k == GsoKind::Laplacian ? "laplacian" : "adjacency"; }

GsoKind parse_gso_kind(std::string_view name) {
  if (name == "laplacian") return GsoKind::Laplacian;
  if (name == "adjacency") return GsoKind::Adjacency;
  throw ParseError("unknown gso '" + std::string(name) + "' (expected laplacian or adjacency)");
}

SignalNd apply_transform(const TransformDescriptor& desc, const SignalNd& x, const ProductSpectrum& ps,
                         MultCounter* counter) {
  switch (desc.op) {
    case TransformOp::Gft: return gft_nd(x, ps, counter);
    case TransformOp::Igft: return igft_nd(x, ps, counter);
    case TransformOp::Gfrft: return gfrft_nd(x, desc.alpha, ps, counter);
    case TransformOp::Gcm: return gcm_nd(x, desc.xi, ps, counter);
    case TransformOp::Gscale: return gscale_nd(x, desc.sigma, ps, counter);
    case TransformOp::GlctCddhfs: return glct_cddhfs_nd(x, desc.params, ps, counter);
    case TransformOp::GlctCmCcCm: return glct_cmccm_nd(x, desc.params, desc.zero_b, ps, counter);
  }
  return x;
}

TransformDescriptor inverse_descriptor(const TransformDescriptor& desc) {
  TransformDescriptor inv = desc;
  switch (desc.op) {
    case TransformOp::Gft: inv.op = TransformOp::Igft; break;
    case TransformOp::Igft: inv.op = TransformOp::Gft; break;
    case TransformOp::Gfrft: inv.alpha = -desc.alpha; break;
    case TransformOp::Gcm: inv.xi = -desc.xi; break;
    case TransformOp::Gscale: throw DomainError("graph scaling has no inverse transform");
    case TransformOp::GlctCddhfs:
    case TransformOp::GlctCmCcCm: inv.params = inverse(desc.params); break;
  }
  return inv;
}

CMatrix dense_operator(const TransformDescriptor& desc, const ProductSpectrum& ps) {
  const std::size_t n = ps.size();
  if (n > kDenseOperatorCap) {
    throw InvalidSizeError("dense_operator: " + std::to_string(n) + " vertices exceeds the cap of " +
                           std::to_string(kDenseOperatorCap));
  }
  const auto ni = static_cast<Eigen::Index>(n);
  CMatrix out(ni, ni);
  SignalNd e = SignalNd::zeros(ps.shape());
  for (Eigen::Index k = 0; k < ni; ++k) {
    e.values.setZero();
    e.values(k) = 1.0;
    out.col(k) = apply_transform(desc, e, ps).values;
  }
  return out;
}

std::uint64_t mult_count(const TransformDescriptor& desc, std::span<const std::size_t> shape) {
  std::vector<FactorSpectrum> factors;
  for (auto nk : shape) {
    if (nk == 0) throw InvalidSizeError("mult_count: zero-length axis");
    const Matrix z = nk == 1 ? Matrix::Zero(1, 1) : gso(make_path(nk), desc.gso);
    factors.push_back(FactorSpectrum::from_gso(z, desc.gso));
  }
  const ProductSpectrum ps(std::move(factors), desc.gso);
  MultCounter counter;
  apply_transform(desc, SignalNd::zeros(ps.shape()), ps, &counter);
  return counter.real_mults;
}

}  // namespace mdglct
