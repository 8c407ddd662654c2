#include <gtest/gtest.h>

#include <filesystem>

#include "oracle.hpp"

using namespace mdglct;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "mdglct_io_test";
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST(GraphJson, RoundTrip) {
  const Graph g(4, {{0, 1, 1.0}, {1, 3, 2.5}, {2, 3, 0.25}});
  const Graph back = graph_from_json(Json::parse(graph_to_json(g).dump()));
  ASSERT_EQ(back.edges().size(), 3u);
  EXPECT_EQ(back.size(), 4u);
  EXPECT_DOUBLE_EQ(back.edges()[1].w, 2.5);
  const Graph unweighted = graph_from_json(Json::parse(R"({"n": 3, "edges": [[0, 1], [1, 2]], "config": {}})"));
  EXPECT_DOUBLE_EQ(unweighted.edges()[0].w, 1.0);
}

TEST(GraphJson, Rejects) {
  EXPECT_THROW(graph_from_json(Json::parse(R"({"n": 3, "edges": [[1, 0]]})")), ParseError);
  EXPECT_THROW(graph_from_json(Json::parse(R"({"edges": []})")), ParseError);
  EXPECT_THROW(graph_from_json(Json::parse(R"({"n": 3, "edges": [[0]]})")), ParseError);
  EXPECT_THROW(graph_from_json(Json::parse(R"({"n": 3, "edges": [[0, 1, -1]]})")), DomainError);
  const fs::path bad = scratch("bad.json");
  write_file_atomic(bad, "{ not json");
  EXPECT_THROW(read_graph_file(bad), ParseError);
  EXPECT_THROW(read_graph_file(scratch("missing.json")), ParseError);
}

TEST(SignalJson, RoundTrip) {
  const SignalNd x({3, 2}, oracle::random_complex(6, 1));
  const SignalNd back = signal_from_json(Json::parse(signal_to_json(x).dump()));
  EXPECT_EQ(back.shape, x.shape);
  EXPECT_EQ(back.values, x.values);
  const SignalNd real = signal_from_json(Json::parse(R"({"shape": [2], "data": [1.5, -2]})"));
  EXPECT_EQ(real.values(1), Complex(-2.0, 0.0));
  EXPECT_THROW(signal_from_json(Json::parse(R"({"shape": [3], "data": [1, 2]})")), ShapeMismatchError);
  EXPECT_THROW(signal_from_json(Json::parse(R"({"shape": [1], "data": ["x"]})")), ParseError);
}

TEST(SignalCsv, ParseAndWrite) {
  const CVector v = parse_signal_csv("# comment\n1.5\n-2,0.25\r\n\n 3e-1 , -1 \n");
  ASSERT_EQ(v.size(), 3);
  EXPECT_EQ(v(0), Complex(1.5, 0.0));
  EXPECT_EQ(v(1), Complex(-2.0, 0.25));
  EXPECT_EQ(v(2), Complex(0.3, -1.0));
  EXPECT_THROW(parse_signal_csv("1\nabc\n"), ParseError);
  const SignalNd x({4}, oracle::random_complex(4, 3));
  EXPECT_EQ(parse_signal_csv(signal_to_csv(x)), x.values);
}

TEST(SignalFile, ShapeChecks) {
  const SignalNd x({2, 2}, oracle::random_complex(4, 4));
  const fs::path csv = scratch("x.csv");
  write_file_atomic(csv, signal_to_csv(x));
  EXPECT_EQ(read_signal_file(csv, {2, 2}).values, x.values);
  EXPECT_THROW(read_signal_file(csv, {3, 2}), ShapeMismatchError);
  const fs::path js = scratch("x.json");
  write_file_atomic(js, signal_to_json(x).dump());
  EXPECT_EQ(read_signal_file(js, {2, 2}).values, x.values);
  EXPECT_THROW(read_signal_file(js, {4}), ShapeMismatchError);
}

TEST(DescriptorJson, RoundTrip) {
  TransformDescriptor d;
  d.op = TransformOp::GlctCddhfs;
  d.params = {0.5, 1.0, -1.0, 0.0};
  d.zero_b = ZeroBVariant::Eq31;
  d.gso = GsoKind::Adjacency;
  const Json j = descriptor_to_json(d);
  EXPECT_EQ(j["op"], "glct_cddhfs");
  EXPECT_EQ(j["gso"], "adjacency");
  EXPECT_EQ(j["zero_b_variant"], "eq31");
  const TransformDescriptor back = descriptor_from_json(j);
  EXPECT_EQ(back.op, d.op);
  EXPECT_EQ(back.params, d.params);
  EXPECT_EQ(back.zero_b, d.zero_b);
  EXPECT_EQ(back.gso, d.gso);
  const auto g = descriptor_from_json(Json::parse(R"({"op": "gfrft", "params": {"alpha": 0.25}})"));
  EXPECT_DOUBLE_EQ(g.alpha, 0.25);
  EXPECT_THROW(descriptor_from_json(Json::parse(R"({"op": "gcm", "params": {}})")), ParseError);
  EXPECT_THROW(descriptor_from_json(Json::parse(R"({"op": "fft"})")), ParseError);
}

TEST(Files, AtomicWriteReplaces) {
  const fs::path p = scratch("out.txt");
  write_file_atomic(p, "first");
  write_file_atomic(p, "second");
  EXPECT_EQ(read_text_file(p), "second");
  EXPECT_FALSE(fs::exists(fs::path(p.string() + ".tmp")));
}

TEST(Format, ShortestRoundTrip) {
  EXPECT_EQ(format_double(0.1), "0.1");
  EXPECT_EQ(format_double(1472.0), "1472");
  EXPECT_EQ(format_double(-2.5e-30), "-2.5e-30");
}
