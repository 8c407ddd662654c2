#include "mdglct/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

namespace mdglct {

namespace {

SignalNd outer_signal(const Vector& x1, const Vector& x2) {
  const Eigen::Index n1 = x1.size();
  Vector v(n1 * x2.size());
  for (Eigen::Index j = 0; j < x2.size(); ++j) v.segment(j * n1, n1) = x1 * x2(j);
  return SignalNd::from_real({static_cast<std::size_t>(n1), static_cast<std::size_t>(x2.size())}, v);
}

double sum_sq(const CVector& v) { return v.squaredNorm(); }

NmseReport finish(std::string property, const BenchmarkSignal& s, GlctVariant v, std::uint64_t seed,
                  std::vector<double> values, std::vector<std::vector<LctParams>> params) {
  NmseReport r;
  r.property = std::move(property);
  r.signal = s.name;
  r.variant = v;
  r.seed = seed;
  r.values = std::move(values);
  r.parameters = std::move(params);
  r.mean = r.values.empty() ? 0.0 : std::accumulate(r.values.begin(), r.values.end(), 0.0) /
                                        static_cast<double>(r.values.size());
  return r;
}

std::string fixed2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + '"';
}

}  // namespace

BenchmarkSignal make_benchmark_signal(int which) {
  auto build = [](std::string name, Graph g1, Graph g2) {
    Vector s1 = bipolar_rect_signal(g1.size());
    Vector s2 = bipolar_rect_signal(g2.size());
    ProductGraph pg({std::move(g1), std::move(g2)});
    return BenchmarkSignal{std::move(name), std::move(pg), outer_signal(s1, s2)};
  };
  switch (which) {
    case 1: return build("x1", make_ring(14), make_path(8));
    case 2: return build("x2", make_ring(18), make_low_stretch_tree(16));
    case 3: return build("x3", make_complete(14), make_comet(6));
    case 4: return build("x4", make_complete(8), make_low_stretch_tree(16));
    default: throw DomainError("benchmark signal index must be in 1..4");
  }
}

std::vector<BenchmarkSignal> benchmark_signals() {
  std::vector<BenchmarkSignal> out;
  for (int k = 1; k <= 4; ++k) out.push_back(make_benchmark_signal(k));
  return out;
}

double nmse(const CVector& reference, const CVector& approx) {
  if (reference.size() != approx.size()) throw ShapeMismatchError("nmse: length mismatch");
  const double den = sum_sq(reference);
  if (!(den > 0.0)) throw DegenerateSignalError("nmse: reference signal is zero");
  return sum_sq(reference - approx) / den;
}

double nmse_additivity(const SignalNd& x, const LctParams& p1, const LctParams& p2, GlctVariant variant,
                       const ProductSpectrum& ps, ZeroBVariant zero_b) {
  const SignalNd joint = glct_nd(x, compose(p1, p2), variant, zero_b, ps);
  const SignalNd chained = glct_nd(glct_nd(x, p2, variant, zero_b, ps), p1, variant, zero_b, ps);
  return nmse(joint.values, chained.values);
}

double nmse_reversibility(const SignalNd& x, const LctParams& p, GlctVariant variant, const ProductSpectrum& ps,
                          ZeroBVariant zero_b) {
  if (!(sum_sq(x.values) > 0.0)) throw DegenerateSignalError("nmse_reversibility: zero signal");
  const SignalNd y = glct_nd(glct_nd(x, p, variant, zero_b, ps), inverse(p), variant, zero_b, ps);
  return nmse(x.values, y.values);
}

double complexity_model(std::size_t n1, std::size_t n2, ComplexityCase which) {
  if (n1 < 2 || n2 < 2) throw InvalidSizeError("complexity_model: N1 and N2 must be ≥ 2");
  const double a = static_cast<double>(n1);
  const double b = static_cast<double>(n2);
  const double nlogn = a * std::log2(a) + b * std::log2(b);
  switch (which) {
    case ComplexityCase::Cddhfs: return 4.0 * (a * a + b * b) + 8.0 * (a + b);
    case ComplexityCase::CmCcCmGeneralB: return 12.0 * (a + b) + 4.0 * nlogn;
    case ComplexityCase::CmCcCmZeroB: return 12.0 * (a + b) + 6.0 * nlogn;
  }
  return 0.0;
}

std::vector<double> NmseReport::sorted_curve(std::size_t count) const {
  std::vector<double> out(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(std::min(count, values.size())));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<NmseReport> suite_additivity(const std::vector<BenchmarkSignal>& signals, const SuiteOptions& opts) {
  if (opts.trials < 1) throw DomainError("trials must be ≥ 1");
  std::vector<std::vector<LctParams>> params(opts.trials);
  for (std::size_t t = 0; t < opts.trials; ++t) {
    ParamSampler sampler(derive_seed(opts.seed, t), opts.lo, opts.hi);
    const LctParams m1 = sampler.next();
    const LctParams m2 = sampler.next();
    params[t] = {m1, m2};
  }
  std::vector<NmseReport> out;
  for (const auto& s : signals) {
    const ProductSpectrum ps(s.graph, GsoKind::Laplacian);
    for (GlctVariant v : opts.variants) {
      std::vector<double> values(opts.trials);
      for (std::size_t t = 0; t < opts.trials; ++t) {
        values[t] = nmse_additivity(s.signal, params[t][0], params[t][1], v, ps, opts.zero_b);
      }
      out.push_back(finish("additivity", s, v, opts.seed, std::move(values), params));
    }
  }
  return out;
}

std::vector<NmseReport> suite_reversibility(const std::vector<BenchmarkSignal>& signals, const SuiteOptions& opts) {
  if (opts.trials < 1) throw DomainError("trials must be ≥ 1");
  std::vector<std::vector<LctParams>> params(opts.trials);
  for (std::size_t t = 0; t < opts.trials; ++t) {
    params[t] = {ParamSampler(derive_seed(opts.seed, t), opts.lo, opts.hi).next()};
  }
  std::vector<NmseReport> out;
  for (const auto& s : signals) {
    const ProductSpectrum ps(s.graph, GsoKind::Laplacian);
    for (GlctVariant v : opts.variants) {
      std::vector<double> values(opts.trials);
      for (std::size_t t = 0; t < opts.trials; ++t) {
        values[t] = nmse_reversibility(s.signal, params[t][0], v, ps, opts.zero_b);
      }
      out.push_back(finish("reversibility", s, v, opts.seed, std::move(values), params));
    }
  }
  return out;
}

Json nmse_report_to_json(const NmseReport& r) {
  Json params = Json::array();
  for (const auto& trial : r.parameters) {
    Json row = Json::array();
    for (const auto& p : trial) row.push_back(params_to_json(p));
    params.push_back(row);
  }
  return Json{{"property", r.property}, {"variant", to_string(r.variant)},
              {"signal", r.signal},     {"mean", r.mean},
              {"values", r.values},     {"seed", r.seed},
              {"parameters", params}};
}

std::string nmse_reports_csv(const std::vector<NmseReport>& reports) {
  std::string out = "property,signal,variant,trial,nmse\n";
  for (const auto& r : reports) {
    for (std::size_t t = 0; t < r.values.size(); ++t) {
      out += r.property + ',' + r.signal + ',' + to_string(r.variant) + ',' + std::to_string(t) + ',' +
             format_double(r.values[t]) + '\n';
    }
  }
  return out;
}

std::string curve_csv(const std::vector<double>& curve) {
  std::string out = "rank,nmse\n";
  for (std::size_t k = 0; k < curve.size(); ++k) out += std::to_string(k + 1) + ',' + format_double(curve[k]) + '\n';
  return out;
}

// --- compression ----------------------------------------------------------

CompressionMetrics compression_metrics(const Vector& x, const Vector& x_com) {
  if (x.size() != x_com.size()) throw ShapeMismatchError("compression_metrics: length mismatch");
  const double l1 = x.cwiseAbs().sum();
  if (!(l1 > 0.0)) throw DegenerateSignalError("compression_metrics: zero signal");
  const Vector xd = x.array() - x.mean();
  const double spread = xd.norm();
  if (!(spread > 0.0)) throw DegenerateSignalError("compression_metrics: constant signal");
  const Vector err = x - x_com;
  CompressionMetrics m;
  m.re = err.cwiseAbs().sum() / l1;
  m.nrms = err.norm() / spread;
  const Vector cd = x_com.array() - x_com.mean();
  const double cspread = cd.norm();
  m.cc = cspread > 0.0 ? std::clamp(xd.dot(cd) / (spread * cspread), -1.0, 1.0) : 0.0;
  return m;
}

std::size_t retained_count(double gamma, std::size_t n) {
  if (!(gamma > 0.0 && gamma <= 1.0)) throw DomainError("gamma must be in (0, 1]");
  const double k = std::ceil(gamma * static_cast<double>(n) - 1e-9);
  return std::clamp<std::size_t>(static_cast<std::size_t>(std::max(k, 1.0)), 1, n);
}

CVector keep_largest(const CVector& coeffs, std::size_t keep) {
  std::vector<Eigen::Index> order(static_cast<std::size_t>(coeffs.size()));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index i, Eigen::Index j) { return std::abs(coeffs(i)) > std::abs(coeffs(j)); });
  CVector out = CVector::Zero(coeffs.size());
  for (std::size_t k = 0; k < std::min(keep, order.size()); ++k) out(order[k]) = coeffs(order[k]);
  return out;
}

CompressionResult compress(const SignalNd& x, const TransformDescriptor& forward, double gamma,
                           const ProductSpectrum& ps) {
  const std::size_t keep = retained_count(gamma, x.size());
  if (!(sum_sq(x.values) > 0.0)) throw DegenerateSignalError("compress: zero signal");
  const SignalNd coeffs = apply_transform(forward, x, ps);
  const SignalNd kept(coeffs.shape, keep_largest(coeffs.values, keep));
  SignalNd rec = apply_transform(inverse_descriptor(forward), kept, ps);
  CompressionResult out;
  out.report.gamma = gamma;
  out.report.kept = keep;
  out.report.transform = forward;
  out.report.metrics = compression_metrics(x.values.real(), rec.values.real());
  out.reconstructed = std::move(rec);
  return out;
}

CompressionResult compress(const SignalNd& x, const LctParams& p, GlctVariant variant, double gamma,
                           const ProductSpectrum& ps, ZeroBVariant zero_b) {
  TransformDescriptor d;
  d.op = variant == GlctVariant::Cddhfs ? TransformOp::GlctCddhfs : TransformOp::GlctCmCcCm;
  d.params = validate(p);
  d.zero_b = zero_b;
  d.gso = ps.kind();
  return compress(x, d, gamma, ps);
}

SignalNd uniform_signal(std::vector<std::size_t> shape, std::uint64_t seed, double lo, double hi) {
  std::mt19937_64 rng(seed);
  Vector v(static_cast<Eigen::Index>(shape_size(shape)));
  for (Eigen::Index k = 0; k < v.size(); ++k) v(k) = lo + (hi - lo) * uniform01(rng);
  return SignalNd::from_real(std::move(shape), v);
}

CompressionSetup make_compression_setup(std::uint64_t seed, std::size_t n1, std::size_t n2, GsoKind kind) {
  ProductGraph pg({make_ring(n1), make_path(n2)});
  ProductSpectrum ps(pg, kind);
  SignalNd x = uniform_signal({n1, n2}, seed);
  return CompressionSetup{std::move(pg), std::move(ps), std::move(x), seed};
}

LctParams with_consistent_d(const LctParams& p) {
  if (std::abs(p.a) < kMinAbsA) throw DomainError("with_consistent_d: |a| too small to solve for d");
  return LctParams{p.a, p.b, p.c, (1.0 + p.b * p.c) / p.a};
}

LctParams PublishedParams::effective() const { return with_consistent_d(printed); }

std::string PublishedParams::label() const { return table + "_g" + fixed2(gamma); }

const std::vector<PublishedParams>& published_compression_params() {
  static const std::vector<PublishedParams> rows = {
      {"RE", 0.1, {0.10, 0.60, -0.20, 8.80}},   {"RE", 0.2, {0.40, 0.10, -0.60, 2.35}},
      {"RE", 0.3, {0.10, -0.20, 0.90, 8.20}},   {"RE", 0.4, {0.30, -0.20, -1.40, 4.27}},
      {"RE", 0.5, {0.80, -1.20, 1.40, -0.85}},  {"RE", 0.6, {1.20, 1.40, -0.30, 0.48}},
      {"RE", 0.7, {-1.30, 0.50, 0.40, -0.92}},  {"RE", 0.8, {-0.90, 0.30, -1.20, -0.71}},
      {"RE", 0.9, {0.40, -1.10, 0.70, 0.58}},

      {"NRMS", 0.1, {-1.80, 0.30, -1.20, -0.36}}, {"NRMS", 0.2, {-0.40, 0.30, 1.50, -3.60}},
      {"NRMS", 0.3, {0.30, 0.10, -0.60, 3.53}},   {"NRMS", 0.4, {0.40, -1.00, 0.70, 0.75}},
      {"NRMS", 0.5, {1.30, -0.20, 1.40, 0.55}},   {"NRMS", 0.6, {1.20, 0.50, -1.00, 0.42}},
      {"NRMS", 0.7, {1.50, -1.40, 0.20, 0.48}},   {"NRMS", 0.8, {-0.70, 0.30, 1.50, -2.07}},
      {"NRMS", 0.9, {0.30, -0.20, 1.80, 2.13}},

      {"CC", 0.1, {-0.20, 0.70, 0.40, -6.40}},  {"CC", 0.2, {-0.20, 0.50, 1.10, -7.75}},
      {"CC", 0.3, {0.30, 0.40, -0.80, 2.27}},   {"CC", 0.4, {1.40, 0.10, -0.60, 0.67}},
      {"CC", 0.5, {0.90, -1.10, 0.40, 0.62}},   {"CC", 0.6, {-0.60, 1.40, 0.90, -3.77}},
      {"CC", 0.7, {0.70, 1.80, -0.50, 0.14}},   {"CC", 0.8, {0.40, 0.10, -0.60, 2.35}},
      {"CC", 0.9, {0.10, 0.50, 1.20, 16.00}},
  };
  return rows;
}

std::vector<double> default_alpha_grid() {
  std::vector<double> out;
  for (int k = 0; k <= 20; ++k) out.push_back(k / 20.0);
  return out;
}

std::vector<NamedParams> published_param_set() {
  std::vector<NamedParams> out;
  for (const auto& row : published_compression_params()) out.push_back({row.label(), row.effective()});
  return out;
}

std::vector<CompressionRow> compression_study(const CompressionSetup& setup, const StudyOptions& opts) {
  std::vector<CompressionRow> rows;
  const auto& x = setup.signal;
  const auto& ps = setup.spectrum;
  for (double gamma : opts.gammas) {
    for (double alpha : opts.alpha_grid) {
      TransformDescriptor d;
      d.op = TransformOp::Gfrft;
      d.alpha = alpha;
      d.gso = ps.kind();
      const auto r = compress(x, d, gamma, ps);
      rows.push_back({"gfrft", "alpha=" + fixed2(alpha), d, gamma, r.report.kept, r.report.metrics});
    }
    for (const auto& np : opts.glct_params) {
      const auto r = compress(x, np.params, opts.variant, gamma, ps, opts.zero_b);
      rows.push_back({"glct", np.label, r.report.transform, gamma, r.report.kept, r.report.metrics});
    }
    if (opts.search_budget > 0) {
      const NamedParams best = search_glct_params(x, ps, gamma, opts.search_budget, derive_seed(opts.seed, 0x5e),
                                                  opts.variant, opts.zero_b);
      const auto r = compress(x, best.params, opts.variant, gamma, ps, opts.zero_b);
      rows.push_back({"glct_search", best.label, r.report.transform, gamma, r.report.kept, r.report.metrics});
    }
  }
  return rows;
}

std::string compression_rows_csv(const std::vector<CompressionRow>& rows) {
  std::string out = "method,label,gamma,kept,alpha,a,b,c,d,re,nrms,cc\n";
  for (const auto& r : rows) {
    const bool glct = r.method != "gfrft";
    auto num = [](double v) { return format_double(v); };
    out += r.method + ',' + csv_field(r.label) + ',' + num(r.gamma) + ',' + std::to_string(r.kept) + ',' +
           (glct ? std::string() : num(r.transform.alpha)) + ',' +
           (glct ? num(r.transform.params.a) + ',' + num(r.transform.params.b) + ',' + num(r.transform.params.c) +
                       ',' + num(r.transform.params.d)
                 : std::string(",,,")) +
           ',' + num(r.metrics.re) + ',' + num(r.metrics.nrms) + ',' + num(r.metrics.cc) + '\n';
  }
  return out;
}

NamedParams search_glct_params(const SignalNd& x, const ProductSpectrum& ps, double gamma, std::size_t budget,
                               std::uint64_t seed, GlctVariant variant, ZeroBVariant zero_b,
                               CompressionObjective objective) {
  if (budget < 1) throw DomainError("search budget must be ≥ 1");
  // Lower is better for every objective; CC is negated.
  auto score = [&](const LctParams& p) {
    try {
      const auto m = compress(x, p, variant, gamma, ps, zero_b).report.metrics;
      switch (objective) {
        case CompressionObjective::Re: return m.re;
        case CompressionObjective::Nrms: return m.nrms;
        case CompressionObjective::Cc: return -m.cc;
      }
    } catch (const Error&) {
    }
    return std::numeric_limits<double>::infinity();
  };

  ParamSampler sampler(seed);
  const std::size_t random_draws = std::max<std::size_t>(1, budget / 2);
  LctParams best;
  double best_score = std::numeric_limits<double>::infinity();
  std::size_t spent = 0;
  for (; spent < random_draws; ++spent) {
    const LctParams p = sampler.next();
    const double s = score(p);
    if (s < best_score || spent == 0) {
      best = p;
      best_score = s;
    }
  }

  double step = 0.5;
  while (spent < budget && step > 1e-4) {
    bool improved = false;
    for (int coord = 0; coord < 3 && spent < budget; ++coord) {
      for (double sign : {1.0, -1.0}) {
        if (spent >= budget) break;
        LctParams p = best;
        (coord == 0 ? p.a : coord == 1 ? p.b : p.c) += sign * step;
        if (std::abs(p.a) < kMinAbsA) continue;
        p = with_consistent_d(p);
        const double s = score(p);
        ++spent;
        if (s < best_score) {
          best = p;
          best_score = s;
          improved = true;
        }
      }
    }
    if (!improved) step *= 0.5;
  }
  return {"search_g" + fixed2(gamma), best};
}

}  // namespace mdglct
