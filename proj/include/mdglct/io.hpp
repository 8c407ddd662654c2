#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "mdglct/graph.hpp"
#include "mdglct/product.hpp"

namespace mdglct {

using Json = nlohmann::json;

/// {"n": int, "edges": [[i, j, w], ...]}; extra keys are ignored on read.
Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);
Graph read_graph_file(const std::filesystem::path& path);

/// {"shape": [N_1, ...], "data": [[re, im], ...]}. Real numbers are
/// accepted in place of [re, im] pairs on read.
Json signal_to_json(const SignalNd& x);
SignalNd signal_from_json(const Json& j);

/// One value per line in linearized vertex order. A line is either "re" or
/// "re,im"; blank lines and lines starting with '#' are skipped.
CVector parse_signal_csv(std::string_view text);
std::string signal_to_csv(const SignalNd& x);

/// Reads a .json or CSV signal. CSV input carries no shape, so
/// `expected_shape` is applied to it (and checked against JSON input).
SignalNd read_signal_file(const std::filesystem::path& path, const std::vector<std::size_t>& expected_shape);

/// {"op": name, "params": {...}, "gso": "laplacian"|"adjacency",
///  "zero_b_variant": "eq30"|"eq31"}
Json descriptor_to_json(const TransformDescriptor& d);
TransformDescriptor descriptor_from_json(const Json& j);

Json params_to_json(const LctParams& p);

std::string read_text_file(const std::filesystem::path& path);

/// Writes to a sibling temp file, then renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);

/// Shortest decimal text that round-trips the double.
std::string format_double(double v);

}  // namespace mdglct
