#pragma once

#include <optional>
#include <span>
#include <vector>

#include "mdglct/types.hpp"

namespace mdglct {

struct Edge {
  std::size_t i = 0;
  std::size_t j = 0;
  double w = 1.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

enum class GsoKind { Laplacian, Adjacency };

/// Undirected weighted graph without self-loops. Edges are stored with
/// i < j, sorted, and unique.
class Graph {
 public:
  Graph(std::size_t n, std::vector<Edge> edges);

  std::size_t size() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }

  Matrix adjacency() const;
  Vector degrees() const;
  Matrix laplacian() const;

 private:
  std::size_t n_;
  std::vector<Edge> edges_;
};

Matrix gso(const Graph& g, GsoKind kind);

Graph make_ring(std::size_t n);
Graph make_path(std::size_t n);
Graph make_complete(std::size_t n);

/// Star with `head` leaves around center 0, plus a path tail of the remaining
/// vertices hanging off the center. Default head is ceil((n-1)/2).
Graph make_comet(std::size_t n, std::optional<std::size_t> head = std::nullopt);

/// Spanning tree of the sqrt(n) x sqrt(n) grid built by recursive quadrant
/// subdivision. Grid vertex (r, c) has index r * side + c.
Graph make_low_stretch_tree(std::size_t n);

/// Cartesian product G_1 □ … □ G_m. Vertex (i_1, …, i_m) linearizes
/// column-major: index = i_1 + N_1 * (i_2 + N_2 * (…)).
class ProductGraph {
 public:
  explicit ProductGraph(std::vector<Graph> factors);

  const std::vector<Graph>& factors() const { return factors_; }
  const std::vector<std::size_t>& shape() const { return shape_; }
  std::size_t dims() const { return factors_.size(); }
  std::size_t vertex_count() const;

  /// Kronecker sum of the factor GSOs in the column-major vertex order,
  /// i.e. sum_k I ⊗ … ⊗ Z_k ⊗ … ⊗ I with Z_1 acting on the fastest index.
  Matrix gso(GsoKind kind) const;

  /// The product graph as a plain graph over linearized vertices.
  Graph flatten() const;

 private:
  std::vector<Graph> factors_;
  std::vector<std::size_t> shape_;
};

ProductGraph cartesian_product(std::vector<Graph> factors);

/// +1 on the first ceil(n/2) vertices, -1 on the rest.
Vector bipolar_rect_signal(std::size_t n);

std::size_t linear_index(std::span<const std::size_t> shape,
                         std::span<const std::size_t> index);
std::vector<std::size_t> multi_index(std::span<const std::size_t> shape,
                                     std::size_t linear);

Matrix kronecker(const Matrix& a, const Matrix& b);

}  // namespace mdglct
