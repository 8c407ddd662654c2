// mdglct: graph generation, transforms, benchmarks and compression runs.
//
// Exit codes: 0 success, 2 usage or validation error, 3 numerical failure.

#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "mdglct/experiments.hpp"
#include "mdglct/io.hpp"

namespace fs = std::filesystem;
using namespace mdglct;

namespace {

struct Globals {
  std::uint64_t seed = 0;
  std::string out;
  std::string format;  // empty: command default
  std::string gso = "laplacian";
};

std::vector<double> parse_list(const std::string& text) {
  // "lo:hi:step" or "v1,v2,..."
  std::vector<double> out;
  auto num = [](std::string s) {
    try {
      std::size_t used = 0;
      const double v = std::stod(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      throw ParseError("malformed number '" + s + "'");
    }
  };
  if (text.find(':') != std::string::npos) {
    const auto p1 = text.find(':');
    const auto p2 = text.find(':', p1 + 1);
    if (p2 == std::string::npos) throw ParseError("range must be lo:hi:step");
    const double lo = num(text.substr(0, p1));
    const double hi = num(text.substr(p1 + 1, p2 - p1 - 1));
    const double step = num(text.substr(p2 + 1));
    if (!(step > 0.0) || hi < lo) throw ParseError("range must satisfy lo ≤ hi and step > 0");
    const auto count = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
    for (std::size_t k = 0; k < count; ++k) out.push_back(std::round((lo + k * step) * 1e12) / 1e12);
    return out;
  }
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    out.push_back(num(text.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  return out;
}

Graph make_family(const std::string& family, std::size_t n, std::optional<std::size_t> head = std::nullopt) {
  if (family == "ring") return make_ring(n);
  if (family == "path") return make_path(n);
  if (family == "complete") return make_complete(n);
  if (family == "comet") return make_comet(n, head);
  if (family == "lowstretch") return make_low_stretch_tree(n);
  throw ParseError("unknown graph family '" + family + "'");
}

// "ring:14"
Graph parse_factor(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw ParseError("factor must be family:n, got '" + spec + "'");
  std::size_t n = 0;
  try {
    std::size_t used = 0;
    const std::string digits = spec.substr(colon + 1);
    n = std::stoul(digits, &used);
    if (used != digits.size()) throw std::invalid_argument(digits);
  } catch (const std::exception&) {
    throw ParseError("malformed factor size in '" + spec + "'");
  }
  return make_family(spec.substr(0, colon), n);
}

void emit(const Globals& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
  } else {
    write_file_atomic(g.out, text);
  }
}

std::string csv_with_config(const Json& config, const std::string& body) {
  return "# config: " + config.dump() + "\n" + body;
}

Json base_config(const Globals& g, const std::string& command, const std::string& format) {
  return Json{{"command", command}, {"seed", g.seed}, {"gso", g.gso}, {"format", format},
              {"out", g.out.empty() ? Json(nullptr) : Json(g.out)}};
}

void require_format(const std::string& f) {
  if (f != "csv" && f != "json") throw ParseError("--format must be csv or json");
}

// --- gen-graph ------------------------------------------------------------

struct GenGraphArgs {
  std::string family;
  std::size_t n = 0;
  std::optional<std::size_t> head;
};

void run_gen_graph(const Globals& g, const GenGraphArgs& a) {
  if (!g.format.empty() && g.format != "json") throw ParseError("gen-graph writes JSON only");
  const Graph graph = make_family(a.family, a.n, a.head);
  Json config = base_config(g, "gen-graph", "json");
  config["family"] = a.family;
  config["n"] = a.n;
  if (a.head) config["head"] = *a.head;
  Json j = graph_to_json(graph);
  j["config"] = config;
  emit(g, j.dump(2) + "\n");
}

// --- transform ------------------------------------------------------------

struct TransformArgs {
  std::string signal;
  std::vector<std::string> graphs;
  std::vector<std::string> factors;
  std::string op = "glct";
  std::string variant = "cmccm";
  std::string params = "1,0,0,1";
  std::string zero_b = "eq30";
  double alpha = 1.0;
  double xi = 0.0;
  double sigma = 1.0;
  bool inverse = false;
};

void run_transform(const Globals& g, const TransformArgs& a) {
  std::vector<Graph> factors;
  for (const auto& path : a.graphs) factors.push_back(read_graph_file(path));
  for (const auto& spec : a.factors) factors.push_back(parse_factor(spec));
  if (factors.empty()) throw ParseError("transform needs at least one --graph or --factor");
  const ProductGraph pg(std::move(factors));

  TransformDescriptor d;
  d.gso = parse_gso_kind(g.gso);
  d.zero_b = parse_zero_b_variant(a.zero_b);
  if (a.op == "glct") {
    d.op = parse_variant(a.variant) == GlctVariant::Cddhfs ? TransformOp::GlctCddhfs : TransformOp::GlctCmCcCm;
  } else {
    d.op = parse_transform_op(a.op);
  }
  if (d.op == TransformOp::GlctCddhfs || d.op == TransformOp::GlctCmCcCm) d.params = validate(parse_params(a.params));
  d.alpha = a.alpha;
  d.xi = a.xi;
  d.sigma = a.sigma;
  const TransformDescriptor applied = a.inverse ? inverse_descriptor(d) : d;

  const SignalNd x = read_signal_file(a.signal, pg.shape());
  const ProductSpectrum ps(pg, d.gso);
  const SignalNd y = apply_transform(applied, x, ps);

  std::string format = g.format;
  if (format.empty()) format = fs::path(g.out).extension() == ".csv" ? "csv" : "json";
  require_format(format);
  Json config = base_config(g, "transform", format);
  config["signal"] = a.signal;
  config["shape"] = pg.shape();
  config["transform"] = descriptor_to_json(d);
  config["inverse"] = a.inverse;
  config["applied"] = descriptor_to_json(applied);
  if (format == "json") {
    Json j = signal_to_json(y);
    j["config"] = config;
    emit(g, j.dump() + "\n");
  } else {
    emit(g, csv_with_config(config, signal_to_csv(y)));
  }
}

// --- bench ----------------------------------------------------------------

struct BenchArgs {
  std::string kind;
  std::vector<std::string> signals;
  std::size_t trials = 1000;
  std::size_t curve_trials = 50;
  std::string variant = "both";
  std::string zero_b = "eq30";
  std::string curve_dir;
  std::size_t n1 = 16;
  std::size_t n2 = 8;
};

void run_bench(const Globals& g, const BenchArgs& a) {
  const std::string format = g.format.empty() ? "json" : g.format;
  require_format(format);
  Json config = base_config(g, "bench", format);
  config["kind"] = a.kind;

  if (a.kind == "complexity") {
    config["n1"] = a.n1;
    config["n2"] = a.n2;
    const double cd = complexity_model(a.n1, a.n2, ComplexityCase::Cddhfs);
    const double cg = complexity_model(a.n1, a.n2, ComplexityCase::CmCcCmGeneralB);
    const double cz = complexity_model(a.n1, a.n2, ComplexityCase::CmCcCmZeroB);
    const std::vector<std::size_t> shape{a.n1, a.n2};
    TransformDescriptor d;
    d.params = LctParams{0.5, 1.0, -1.0, 0.0};  // b != 0
    d.op = TransformOp::GlctCddhfs;
    const auto md = mult_count(d, shape);
    d.op = TransformOp::GlctCmCcCm;
    const auto mg = mult_count(d, shape);
    d.params = LctParams{2.0, 0.0, 0.3, 0.5};  // b == 0
    const auto mz = mult_count(d, shape);
    if (format == "json") {
      Json j{{"config", config},
             {"cddhfs", cd},
             {"cmccm", cg},
             {"cmccm_zero_b", cz},
             {"measured", {{"cddhfs", md}, {"cmccm", mg}, {"cmccm_zero_b", mz}}}};
      emit(g, j.dump(2) + "\n");
    } else {
      std::string body = "case,model,measured\n";
      body += "cddhfs," + format_double(cd) + ',' + std::to_string(md) + '\n';
      body += "cmccm," + format_double(cg) + ',' + std::to_string(mg) + '\n';
      body += "cmccm_zero_b," + format_double(cz) + ',' + std::to_string(mz) + '\n';
      emit(g, csv_with_config(config, body));
    }
    return;
  }

  std::vector<BenchmarkSignal> signals;
  std::vector<std::string> names = a.signals;
  if (names.empty()) names = {"x1", "x2", "x3", "x4"};
  for (const auto& name : names) {
    if (name.size() != 2 || name[0] != 'x' || name[1] < '1' || name[1] > '4') {
      throw ParseError("--signal must be one of x1, x2, x3, x4");
    }
    signals.push_back(make_benchmark_signal(name[1] - '0'));
  }
  SuiteOptions opts;
  opts.trials = a.trials;
  opts.seed = g.seed;
  opts.zero_b = parse_zero_b_variant(a.zero_b);
  if (a.variant != "both") opts.variants = {parse_variant(a.variant)};
  if (parse_gso_kind(g.gso) != GsoKind::Laplacian) throw ParseError("bench suites use the Laplacian GSO");

  config["signals"] = names;
  config["trials"] = a.trials;
  config["curve_trials"] = a.curve_trials;
  config["variant"] = a.variant;
  config["zero_b_variant"] = a.zero_b;
  config["param_range"] = {opts.lo, opts.hi};

  const auto reports = a.kind == "additivity" ? suite_additivity(signals, opts) : suite_reversibility(signals, opts);

  if (!a.curve_dir.empty()) {
    fs::create_directories(a.curve_dir);
    for (const auto& r : reports) {
      const fs::path file = fs::path(a.curve_dir) / (r.property + "_" + r.signal + "_" + to_string(r.variant) + ".csv");
      write_file_atomic(file, csv_with_config(config, curve_csv(r.sorted_curve(a.curve_trials))));
    }
  }
  if (format == "json") {
    Json list = Json::array();
    for (const auto& r : reports) {
      Json jr = nmse_report_to_json(r);
      jr["sorted_curve"] = r.sorted_curve(a.curve_trials);
      list.push_back(jr);
    }
    emit(g, Json{{"config", config}, {"reports", list}}.dump(2) + "\n");
  } else {
    emit(g, csv_with_config(config, nmse_reports_csv(reports)));
  }
}

// --- compress -------------------------------------------------------------

struct CompressArgs {
  std::optional<double> gamma;
  std::string gammas;
  bool sweep_gfrft = false;
  std::string alphas = "0:1:0.05";
  std::vector<std::string> glct_params;
  bool published = false;
  std::string params = "0,1,-1,0";
  std::string variant = "cmccm";
  std::string zero_b = "eq30";
  std::size_t search_budget = 0;
  std::size_t n1 = 100;
  std::size_t n2 = 15;
  std::string recon_dir;
};

void run_compress(const Globals& g, const CompressArgs& a) {
  const std::string format = g.format.empty() ? "csv" : g.format;
  require_format(format);
  if (a.gamma && !a.gammas.empty()) throw ParseError("use either --gamma or --gammas");
  StudyOptions opts;
  opts.gammas = a.gamma ? std::vector<double>{*a.gamma} : a.gammas.empty() ? opts.gammas : parse_list(a.gammas);
  for (double gamma : opts.gammas) {
    if (!(gamma > 0.0 && gamma <= 1.0)) throw DomainError("gamma must be in (0, 1]");
  }
  opts.variant = parse_variant(a.variant);
  opts.zero_b = parse_zero_b_variant(a.zero_b);
  opts.search_budget = a.search_budget;
  opts.seed = g.seed;
  if (a.sweep_gfrft) opts.alpha_grid = parse_list(a.alphas);

  Json printed = Json::array();
  for (const auto& text : a.glct_params) {
    const LctParams p = parse_params(text);
    const LctParams eff = with_consistent_d(p);
    if (std::abs(eff.d - p.d) > 0.02) {
      std::cerr << "warning: d=" << p.d << " is inconsistent with (1+bc)/a=" << eff.d << "; using the latter\n";
    }
    opts.glct_params.push_back({text, eff});
    printed.push_back(params_to_json(p));
  }
  if (a.published) {
    for (auto& np : published_param_set()) opts.glct_params.push_back(np);
  }
  if (opts.glct_params.empty() && opts.alpha_grid.empty() && opts.search_budget == 0) {
    opts.glct_params.push_back({a.params, validate(parse_params(a.params))});
  }

  const CompressionSetup setup = make_compression_setup(g.seed, a.n1, a.n2, parse_gso_kind(g.gso));
  const auto rows = compression_study(setup, opts);

  Json config = base_config(g, "compress", format);
  config["graph"] = "ring(" + std::to_string(a.n1) + ") x path(" + std::to_string(a.n2) + ")";
  config["signal"] = "uniform[-10,10]";
  config["gammas"] = opts.gammas;
  config["alpha_grid"] = opts.alpha_grid;
  config["variant"] = a.variant;
  config["zero_b_variant"] = a.zero_b;
  config["glct_params_printed"] = printed;
  config["published"] = a.published;
  config["search_budget"] = a.search_budget;

  if (!a.recon_dir.empty()) {
    fs::create_directories(a.recon_dir);
    for (std::size_t k = 0; k < rows.size(); ++k) {
      const auto r = compress(setup.signal, rows[k].transform, rows[k].gamma, setup.spectrum);
      Json j = signal_to_json(r.reconstructed);
      j["config"] = config;
      j["row"] = k;
      write_file_atomic(fs::path(a.recon_dir) / ("recon_" + std::to_string(k) + ".json"), j.dump() + "\n");
    }
  }

  if (format == "json") {
    Json list = Json::array();
    for (const auto& r : rows) {
      list.push_back(Json{{"method", r.method},
                          {"label", r.label},
                          {"gamma", r.gamma},
                          {"kept", r.kept},
                          {"transform", descriptor_to_json(r.transform)},
                          {"re", r.metrics.re},
                          {"nrms", r.metrics.nrms},
                          {"cc", r.metrics.cc}});
    }
    emit(g, Json{{"config", config}, {"rows", list}}.dump(2) + "\n");
  } else {
    emit(g, csv_with_config(config, compression_rows_csv(rows)));
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-dimensional graph linear canonical transforms"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--seed", g.seed, "Master seed (u64)");
  app.add_option("--out", g.out, "Output file (default: stdout)");
  app.add_option("--format", g.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--gso", g.gso, "laplacian or adjacency")->check(CLI::IsMember({"laplacian", "adjacency"}));

  GenGraphArgs gen;
  auto* gen_cmd = app.add_subcommand("gen-graph", "Write a graph family member as JSON");
  gen_cmd->add_option("family", gen.family, "ring, path, complete, comet or lowstretch")->required();
  gen_cmd->add_option("n", gen.n, "Vertex count")->required();
  gen_cmd->add_option("--head", gen.head, "Comet star size");

  TransformArgs tr;
  auto* tr_cmd = app.add_subcommand("transform", "Apply a transform to a signal on a product graph");
  tr_cmd->add_option("--signal", tr.signal, "Signal file (.json or CSV)")->required();
  tr_cmd->add_option("--graph", tr.graphs, "Factor graph JSON, repeat in axis order");
  tr_cmd->add_option("--factor", tr.factors, "Generated factor family:n, repeat in axis order");
  tr_cmd->add_option("--op", tr.op, "glct, gft, igft, gfrft, gcm or gscale")
      ->check(CLI::IsMember({"glct", "gft", "igft", "gfrft", "gcm", "gscale"}));
  tr_cmd->add_option("--variant", tr.variant, "cddhfs or cmccm")->check(CLI::IsMember({"cddhfs", "cmccm"}));
  tr_cmd->add_option("--params", tr.params, "a,b,c,d with ad - bc = 1");
  tr_cmd->add_option("--zero-b-variant,--zero-b", tr.zero_b, "eq30 or eq31")->check(CLI::IsMember({"eq30", "eq31"}));
  tr_cmd->add_option("--alpha", tr.alpha, "Fractional order for gfrft");
  tr_cmd->add_option("--xi", tr.xi, "Chirp exponent for gcm");
  tr_cmd->add_option("--sigma", tr.sigma, "Scale for gscale");
  tr_cmd->add_flag("--inverse", tr.inverse, "Apply the inverse transform");

  BenchArgs be;
  auto* be_cmd = app.add_subcommand("bench", "Additivity, reversibility or complexity benchmarks");
  be_cmd->add_option("kind", be.kind, "additivity, reversibility or complexity")
      ->required()
      ->check(CLI::IsMember({"additivity", "reversibility", "complexity"}));
  be_cmd->add_option("--signal", be.signals, "x1..x4, repeatable (default: all)");
  be_cmd->add_option("--trials", be.trials, "Random parameter sets per signal")->check(CLI::PositiveNumber);
  be_cmd->add_option("--curve-trials", be.curve_trials, "Trials in each sorted curve");
  be_cmd->add_option("--variant", be.variant, "cddhfs, cmccm or both")
      ->check(CLI::IsMember({"cddhfs", "cmccm", "both"}));
  be_cmd->add_option("--zero-b-variant,--zero-b", be.zero_b, "eq30 or eq31")->check(CLI::IsMember({"eq30", "eq31"}));
  be_cmd->add_option("--curve-dir", be.curve_dir, "Write rank,nmse curve files here");
  be_cmd->add_option("--n1", be.n1, "First axis size for complexity");
  be_cmd->add_option("--n2", be.n2, "Second axis size for complexity");

  CompressArgs co;
  auto* co_cmd = app.add_subcommand("compress", "Transform-domain compression on ring(N1) x path(N2)");
  co_cmd->add_option("--gamma", co.gamma, "Single compression ratio in (0, 1]");
  co_cmd->add_option("--gammas", co.gammas, "lo:hi:step or comma list");
  co_cmd->add_flag("--sweep-gfrft", co.sweep_gfrft, "Sweep the fractional Fourier order");
  co_cmd->add_option("--alphas", co.alphas, "Fractional order grid, lo:hi:step or comma list");
  co_cmd->add_option("--glct-params", co.glct_params, "a,b,c,d; d is recomputed as (1+bc)/a");
  co_cmd->add_flag("--published", co.published, "Evaluate the 27 published parameter rows");
  co_cmd->add_option("--params", co.params, "GLCT params used when nothing else is selected");
  co_cmd->add_option("--variant", co.variant, "cddhfs or cmccm")->check(CLI::IsMember({"cddhfs", "cmccm"}));
  co_cmd->add_option("--zero-b-variant,--zero-b", co.zero_b, "eq30 or eq31")->check(CLI::IsMember({"eq30", "eq31"}));
  co_cmd->add_option("--search-budget", co.search_budget, "Compression evaluations per gamma for param search");
  co_cmd->add_option("--n1", co.n1, "Ring size");
  co_cmd->add_option("--n2", co.n2, "Path size");
  co_cmd->add_option("--recon-dir", co.recon_dir, "Write reconstructed signals here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*gen_cmd) run_gen_graph(g, gen);
    if (*tr_cmd) run_transform(g, tr);
    if (*be_cmd) run_bench(g, be);
    if (*co_cmd) run_compress(g, co);
  } catch (const NumericalError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
