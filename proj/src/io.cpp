#include "mdglct/io.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <sstream>

namespace mdglct {

namespace {

double parse_double(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ParseError("malformed number '" + std::string(s) + "'");
  }
  return v;
}

Complex complex_from_json(const Json& v) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
    return {v[0].get<double>(), v[1].get<double>()};
  }
  throw ParseError("signal entries must be numbers or [re, im] pairs");
}

}  // namespace

Json graph_to_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back(Json::array({e.i, e.j, e.w}));
  return Json{{"n", g.size()}, {"edges", edges}};
}

Graph graph_from_json(const Json& j) {
  try {
    const auto n = j.at("n").get<std::size_t>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() < 2 || e.size() > 3) throw ParseError("edges must be [i, j] or [i, j, w]");
      const auto a = e[0].get<std::size_t>();
      const auto b = e[1].get<std::size_t>();
      if (a >= b) throw ParseError("graph edges must satisfy i < j");
      edges.push_back({a, b, e.size() == 3 ? e[2].get<double>() : 1.0});
    }
    return Graph(n, std::move(edges));
  } catch (const Json::exception& ex) {
    throw ParseError(std::string("invalid graph JSON: ") + ex.what());
  }
}

Graph read_graph_file(const std::filesystem::path& path) {
  try {
    return graph_from_json(Json::parse(read_text_file(path)));
  } catch (const Json::exception& ex) {
    throw ParseError(path.string() + ": " + ex.what());
  }
}

Json signal_to_json(const SignalNd& x) {
  Json data = Json::array();
  for (Eigen::Index k = 0; k < x.values.size(); ++k) {
    data.push_back(Json::array({x.values(k).real(), x.values(k).imag()}));
  }
  return Json{{"shape", x.shape}, {"data", data}};
}

SignalNd signal_from_json(const Json& j) {
  try {
    auto shape = j.at("shape").get<std::vector<std::size_t>>();
    const auto& data = j.at("data");
    CVector values(static_cast<Eigen::Index>(data.size()));
    for (std::size_t k = 0; k < data.size(); ++k) values(static_cast<Eigen::Index>(k)) = complex_from_json(data[k]);
    return SignalNd(std::move(shape), std::move(values));
  } catch (const Json::exception& ex) {
    throw ParseError(std::string("invalid signal JSON: ") + ex.what());
  }
}

CVector parse_signal_csv(std::string_view text) {
  std::vector<Complex> values;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
    while (!line.empty() && line.front() == ' ') line.remove_prefix(1);
    if (line.empty() || line.front() == '#') continue;
    const std::size_t comma = line.find(',');
    if (comma == std::string_view::npos) {
      values.emplace_back(parse_double(line), 0.0);
    } else {
      values.emplace_back(parse_double(line.substr(0, comma)), parse_double(line.substr(comma + 1)));
    }
  }
  CVector out(static_cast<Eigen::Index>(values.size()));
  for (std::size_t k = 0; k < values.size(); ++k) out(static_cast<Eigen::Index>(k)) = values[k];
  return out;
}

std::string signal_to_csv(const SignalNd& x) {
  std::string out;
  for (Eigen::Index k = 0; k < x.values.size(); ++k) {
    out += format_double(x.values(k).real());
    out += ',';
    out += format_double(x.values(k).imag());
    out += '\n';
  }
  return out;
}

SignalNd read_signal_file(const std::filesystem::path& path, const std::vector<std::size_t>& expected_shape) {
  const std::string text = read_text_file(path);
  SignalNd x;
  if (path.extension() == ".json") {
    try {
      x = signal_from_json(Json::parse(text));
    } catch (const Json::exception& ex) {
      throw ParseError(path.string() + ": " + ex.what());
    }
  } else {
    x = SignalNd(expected_shape, parse_signal_csv(text));
  }
  if (x.shape != expected_shape) {
    throw ShapeMismatchError(path.string() + ": signal shape does not match the graphs");
  }
  return x;
}

Json params_to_json(const LctParams& p) { return Json{{"a", p.a}, {"b", p.b}, {"c", p.c}, {"d", p.d}}; }

Json descriptor_to_json(const TransformDescriptor& d) {
  Json params = Json::object();
  switch (d.op) {
    case TransformOp::Gfrft: params["alpha"] = d.alpha; break;
    case TransformOp::Gcm: params["xi"] = d.xi; break;
    case TransformOp::Gscale: params["sigma"] = d.sigma; break;
    case TransformOp::GlctCddhfs:
    case TransformOp::GlctCmCcCm: params = params_to_json(d.params); break;
    case TransformOp::Gft:
    case TransformOp::Igft: break;
  }
  return Json{{"op", to_string(d.op)},
              {"params", params},
              {"gso", to_string(d.gso)},
              {"zero_b_variant", to_string(d.zero_b)}};
}

TransformDescriptor descriptor_from_json(const Json& j) {
  try {
    TransformDescriptor d;
    d.op = parse_transform_op(j.at("op").get<std::string>());
    if (j.contains("gso")) d.gso = parse_gso_kind(j["gso"].get<std::string>());
    if (j.contains("zero_b_variant")) d.zero_b = parse_zero_b_variant(j["zero_b_variant"].get<std::string>());
    const Json params = j.value("params", Json::object());
    switch (d.op) {
      case TransformOp::Gfrft: d.alpha = params.at("alpha").get<double>(); break;
      case TransformOp::Gcm: d.xi = params.at("xi").get<double>(); break;
      case TransformOp::Gscale: d.sigma = params.at("sigma").get<double>(); break;
      case TransformOp::GlctCddhfs:
      case TransformOp::GlctCmCcCm:
        d.params = LctParams{params.at("a").get<double>(), params.at("b").get<double>(), params.at("c").get<double>(),
                             params.at("d").get<double>()};
        break;
      case TransformOp::Gft:
      case TransformOp::Igft: break;
    }
    return d;
  } catch (const Json::exception& ex) {
    throw ParseError(std::string("invalid transform descriptor: ") + ex.what());
  }
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file_atomic(const std::filesystem::path& path, std::string_view contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp.string());
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw Error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

std::string format_double(double v) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return ec == std::errc{} ? std::string(buf.data(), ptr) : std::string("nan");
}

}  // namespace mdglct
