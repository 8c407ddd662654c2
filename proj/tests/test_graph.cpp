#include <gtest/gtest.h>

#include <numeric>

#include "oracle.hpp"

using namespace mdglct;

namespace {

bool connected(const Graph& g) {
  std::vector<std::size_t> parent(g.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& e : g.edges()) parent[find(e.i)] = find(e.j);
  for (std::size_t v = 0; v < g.size(); ++v)
    if (find(v) != find(0)) return false;
  return true;
}

}  // namespace

TEST(Graph, RejectsBadEdges) {
  EXPECT_THROW(Graph(3, {{0, 0, 1.0}}), DomainError);
  EXPECT_THROW(Graph(3, {{0, 3, 1.0}}), DomainError);
  EXPECT_THROW(Graph(3, {{0, 1, -1.0}}), DomainError);
  EXPECT_THROW(Graph(3, {{0, 1, 0.0}}), DomainError);
  EXPECT_THROW(Graph(3, {{0, 1, 1.0}, {1, 0, 1.0}}), DomainError);
}

TEST(Graph, NormalizesEdgeOrder) {
  Graph g(3, {{2, 1, 1.0}, {1, 0, 2.0}});
  ASSERT_EQ(g.edges().size(), 2u);
  EXPECT_EQ(g.edges()[0].i, 0u);
  EXPECT_EQ(g.edges()[0].j, 1u);
  EXPECT_DOUBLE_EQ(g.edges()[0].w, 2.0);
  EXPECT_EQ(g.edges()[1].i, 1u);
  EXPECT_EQ(g.edges()[1].j, 2u);
}

TEST(Graph, LaplacianIsDegreeMinusAdjacency) {
  Graph g(4, {{0, 1, 1.0}, {1, 2, 2.5}, {0, 3, 0.5}});
  const Matrix l = g.laplacian();
  EXPECT_LT((l - (Matrix(g.degrees().asDiagonal()) - g.adjacency())).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_LT(l.rowwise().sum().cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_DOUBLE_EQ(l(1, 1), 3.5);
  EXPECT_DOUBLE_EQ(l(1, 2), -2.5);
}

TEST(Graph, FamilySizes) {
  EXPECT_EQ(make_ring(14).edges().size(), 14u);
  EXPECT_EQ(make_path(8).edges().size(), 7u);
  EXPECT_EQ(make_complete(6).edges().size(), 15u);
  EXPECT_EQ(make_comet(6).edges().size(), 5u);
  EXPECT_EQ(make_low_stretch_tree(16).edges().size(), 15u);
  EXPECT_EQ(make_low_stretch_tree(64).edges().size(), 63u);
}

TEST(Graph, FamilyValidation) {
  EXPECT_THROW(make_ring(2), InvalidSizeError);
  EXPECT_THROW(make_path(1), InvalidSizeError);
  EXPECT_THROW(make_complete(1), InvalidSizeError);
  EXPECT_THROW(make_low_stretch_tree(15), InvalidSizeError);
  EXPECT_THROW(make_low_stretch_tree(1), InvalidSizeError);
  try {
    make_ring(2);
  } catch (const InvalidSizeError& e) {
    EXPECT_NE(std::string(e.what()).find("n must be ≥ 3"), std::string::npos);
  }
}

TEST(Graph, TreesAreConnected) {
  for (std::size_t n : {4u, 9u, 16u, 25u, 36u}) {
    const Graph t = make_low_stretch_tree(n);
    EXPECT_EQ(t.edges().size(), n - 1);
    EXPECT_TRUE(connected(t)) << n;
  }
  for (std::size_t n : {3u, 6u, 11u}) {
    const Graph c = make_comet(n);
    EXPECT_EQ(c.edges().size(), n - 1);
    EXPECT_TRUE(connected(c)) << n;
  }
}

TEST(Graph, LowStretchTreeUsesGridEdges) {
  const std::size_t side = 4;
  const Graph tree = make_low_stretch_tree(side * side);
  for (const auto& e : tree.edges()) {
    const auto ri = e.i / side, ci = e.i % side, rj = e.j / side, cj = e.j % side;
    const auto dist = (ri > rj ? ri - rj : rj - ri) + (ci > cj ? ci - cj : cj - ci);
    EXPECT_EQ(dist, 1u) << e.i << "-" << e.j;
  }
}

TEST(Graph, CometShape) {
  // 6 vertices: center 0 with leaves 1..3, tail 0-4-5
  const Graph c = make_comet(6);
  const Vector deg = c.degrees();
  EXPECT_DOUBLE_EQ(deg(0), 4.0);
  EXPECT_DOUBLE_EQ(deg(1), 1.0);
  EXPECT_DOUBLE_EQ(deg(4), 2.0);
  EXPECT_DOUBLE_EQ(deg(5), 1.0);
  const Graph star = make_comet(5, 4);
  EXPECT_DOUBLE_EQ(star.degrees()(0), 4.0);
}

TEST(ProductGraph, GsoMatchesKroneckerSum) {
  const ProductGraph pg({make_ring(4), make_path(3), make_complete(2)});
  for (GsoKind kind : {GsoKind::Laplacian, GsoKind::Adjacency}) {
    const Matrix expected = oracle::kron_sum({gso(make_ring(4), kind), gso(make_path(3), kind), gso(make_complete(2), kind)});
    EXPECT_LT((pg.gso(kind) - expected).cwiseAbs().maxCoeff(), 1e-14);
  }
}

TEST(ProductGraph, FlattenAgreesWithProductAdjacency) {
  const ProductGraph pg({make_path(3), make_ring(5)});
  const Graph flat = pg.flatten();
  EXPECT_EQ(flat.size(), 15u);
  EXPECT_EQ(flat.edges().size(), 2u * 5u + 5u * 3u);
  EXPECT_LT((flat.adjacency() - pg.gso(GsoKind::Adjacency)).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_LT((flat.laplacian() - pg.gso(GsoKind::Laplacian)).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(ProductGraph, LinearIndexRoundTrip) {
  const std::vector<std::size_t> shape{3, 4, 2};
  const std::vector<std::size_t> idx{2, 1, 1};
  EXPECT_EQ(linear_index(shape, idx), 2u + 3u * (1u + 4u * 1u));
  for (std::size_t k = 0; k < 24; ++k) EXPECT_EQ(linear_index(shape, multi_index(shape, k)), k);
  EXPECT_THROW(linear_index(shape, std::vector<std::size_t>{3, 0, 0}), ShapeMismatchError);
}

TEST(Graph, BipolarSignal) {
  const Vector s = bipolar_rect_signal(5);
  EXPECT_EQ(s.size(), 5);
  EXPECT_DOUBLE_EQ(s(0), 1.0);
  EXPECT_DOUBLE_EQ(s(2), 1.0);
  EXPECT_DOUBLE_EQ(s(3), -1.0);
  EXPECT_DOUBLE_EQ(bipolar_rect_signal(8).sum(), 0.0);
}

TEST(Graph, KroneckerMatchesOracle) {
  Matrix a(2, 2), b(3, 2);
  a << 1, 2, 3, 4;
  b << 0, 1, 2, 3, 4, 5;
  EXPECT_EQ((kronecker(a, b) - oracle::kron(a, b)).cwiseAbs().maxCoeff(), 0.0);
}
