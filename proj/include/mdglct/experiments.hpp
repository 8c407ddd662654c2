#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mdglct/io.hpp"
#include "mdglct/product.hpp"

namespace mdglct {

// --- additivity / reversibility -------------------------------------------

/// A 2-D test signal: outer product of bipolar rectangular signals on the
/// two factor graphs.
struct BenchmarkSignal {
  std::string name;
  ProductGraph graph;
  SignalNd signal;
};

/// x1 = ring(14) □ path(8), x2 = ring(18) □ lowstretch(16),
/// x3 = complete(14) □ comet(6), x4 = complete(8) □ lowstretch(16).
BenchmarkSignal make_benchmark_signal(int which);
std::vector<BenchmarkSignal> benchmark_signals();

/// sum |reference - approx|^2 / sum |reference|^2.
double nmse(const CVector& reference, const CVector& approx);

/// Compares T_{M1 M2}(x) against T_{M1}(T_{M2}(x)).
double nmse_additivity(const SignalNd& x, const LctParams& p1, const LctParams& p2, GlctVariant variant,
                       const ProductSpectrum& ps, ZeroBVariant zero_b = ZeroBVariant::Eq30);

/// Compares x against T_{M^-1}(T_M(x)).
double nmse_reversibility(const SignalNd& x, const LctParams& p, GlctVariant variant, const ProductSpectrum& ps,
                          ZeroBVariant zero_b = ZeroBVariant::Eq30);

enum class ComplexityCase { Cddhfs, CmCcCmGeneralB, CmCcCmZeroB };

/// Real multiplications of the 2-D transforms under FFT-style accounting:
///   cddhfs:           4(N1^2 + N2^2) + 8(N1 + N2)
///   cmccm, b != 0:    12(N1 + N2) + 4(N1 log2 N1 + N2 log2 N2)
///   cmccm, b == 0:    12(N1 + N2) + 6(N1 log2 N1 + N2 log2 N2)
double complexity_model(std::size_t n1, std::size_t n2, ComplexityCase which);

struct NmseReport {
  std::string property;  // "additivity" or "reversibility"
  std::string signal;
  GlctVariant variant = GlctVariant::CmCcCm;
  std::uint64_t seed = 0;
  std::vector<double> values;                     // trial order
  std::vector<std::vector<LctParams>> parameters;  // per trial: {M} or {M1, M2}
  double mean = 0.0;

  /// The first `count` trial values sorted ascending.
  std::vector<double> sorted_curve(std::size_t count) const;
};

struct SuiteOptions {
  std::size_t trials = 1000;
  std::uint64_t seed = 0;
  ZeroBVariant zero_b = ZeroBVariant::Eq30;
  double lo = -2.0;
  double hi = 2.0;
  std::vector<GlctVariant> variants{GlctVariant::Cddhfs, GlctVariant::CmCcCm};
};

/// Trial t draws its parameters from ParamSampler(derive_seed(seed, t)), so
/// every signal and variant sees the same parameter sets and results do not
/// depend on the order trials are evaluated in.
std::vector<NmseReport> suite_additivity(const std::vector<BenchmarkSignal>& signals, const SuiteOptions& opts);
std::vector<NmseReport> suite_reversibility(const std::vector<BenchmarkSignal>& signals, const SuiteOptions& opts);

Json nmse_report_to_json(const NmseReport& r);
std::string nmse_reports_csv(const std::vector<NmseReport>& reports);
/// Two-column "rank,nmse" CSV of a sorted curve.
std::string curve_csv(const std::vector<double>& curve);

// --- compression ----------------------------------------------------------

struct CompressionMetrics {
  double re = 0.0;
  double nrms = 0.0;
  double cc = 1.0;
};

/// Relative L1 error, error norm over the deviation norm of x, and the
/// correlation coefficient. CC is reported as 0 when x_com is constant.
CompressionMetrics compression_metrics(const Vector& x, const Vector& x_com);

/// ceil(gamma * n), guarded against round-off just above an integer.
std::size_t retained_count(double gamma, std::size_t n);

/// Zeroes all but the `keep` largest-magnitude entries; ties go to the lower
/// index.
CVector keep_largest(const CVector& coeffs, std::size_t keep);

struct CompressionReport {
  double gamma = 1.0;
  std::size_t kept = 0;
  CompressionMetrics metrics;
  TransformDescriptor transform;
};

struct CompressionResult {
  SignalNd reconstructed;
  CompressionReport report;
};

/// Forward transform, keep the largest ceil(gamma N) coefficients, invert
/// with the inverse descriptor, and score the real part of the result.
CompressionResult compress(const SignalNd& x, const TransformDescriptor& forward, double gamma,
                           const ProductSpectrum& ps);
CompressionResult compress(const SignalNd& x, const LctParams& p, GlctVariant variant, double gamma,
                           const ProductSpectrum& ps, ZeroBVariant zero_b = ZeroBVariant::Eq30);

/// Uniform samples in [lo, hi] from a seeded mt19937_64.
SignalNd uniform_signal(std::vector<std::size_t> shape, std::uint64_t seed, double lo = -10.0, double hi = 10.0);

struct CompressionSetup {
  ProductGraph graph;
  ProductSpectrum spectrum;
  SignalNd signal;
  std::uint64_t seed;
};

/// ring(n1) □ path(n2) with a uniform [-10, 10] signal.
CompressionSetup make_compression_setup(std::uint64_t seed, std::size_t n1 = 100, std::size_t n2 = 15,
                                        GsoKind kind = GsoKind::Laplacian);

/// A parameter row printed for one (metric table, gamma) pair. The printed d
/// is rounded; `effective()` recomputes it as (1 + bc)/a.
struct PublishedParams {
  std::string table;  // "RE", "NRMS" or "CC"
  double gamma;
  LctParams printed;

  LctParams effective() const;
  std::string label() const;
};

const std::vector<PublishedParams>& published_compression_params();

LctParams with_consistent_d(const LctParams& p);

struct NamedParams {
  std::string label;
  LctParams params;
};

struct StudyOptions {
  std::vector<double> gammas{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
  std::vector<double> alpha_grid;  // empty: no GFRFT sweep
  std::vector<NamedParams> glct_params;
  GlctVariant variant = GlctVariant::CmCcCm;
  ZeroBVariant zero_b = ZeroBVariant::Eq30;
  std::size_t search_budget = 0;  // 0: no parameter search
  std::uint64_t seed = 0;
};

struct CompressionRow {
  std::string method;  // "gfrft", "glct" or "glct_search"
  std::string label;
  TransformDescriptor transform;
  double gamma = 1.0;
  std::size_t kept = 0;
  CompressionMetrics metrics;
};

std::vector<double> default_alpha_grid();  // 0, 0.05, ..., 1
std::vector<NamedParams> published_param_set();

std::vector<CompressionRow> compression_study(const CompressionSetup& setup, const StudyOptions& opts);
std::string compression_rows_csv(const std::vector<CompressionRow>& rows);

enum class CompressionObjective { Re, Nrms, Cc };

/// Random draws followed by shrinking coordinate steps over (a, b, c), with
/// d = (1 + bc)/a. Spends at most `budget` compression evaluations.
NamedParams search_glct_params(const SignalNd& x, const ProductSpectrum& ps, double gamma, std::size_t budget,
                               std::uint64_t seed, GlctVariant variant = GlctVariant::CmCcCm,
                               ZeroBVariant zero_b = ZeroBVariant::Eq30,
                               CompressionObjective objective = CompressionObjective::Nrms);

}  // namespace mdglct
