#include "mdglct/graph.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

namespace mdglct {

namespace {

std::string size_message(const char* family, const char* requirement) {
  return std::string(family) + ": " + requirement;
}

}  // namespace

Graph::Graph(std::size_t n, std::vector<Edge> edges) : n_(n) {
  if (n == 0) throw InvalidSizeError("graph must have at least one vertex");
  for (auto& e : edges) {
    if (e.i == e.j) throw DomainError("self-loop at vertex " + std::to_string(e.i));
    if (e.i >= n || e.j >= n) throw DomainError("edge endpoint out of range");
    if (!(e.w > 0.0) || !std::isfinite(e.w)) throw DomainError("edge weight must be positive and finite");
    if (e.i > e.j) std::swap(e.i, e.j);
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& x, const Edge& y) {
    return x.i != y.i ? x.i < y.i : x.j < y.j;
  });
  for (std::size_t k = 1; k < edges.size(); ++k) {
    if (edges[k].i == edges[k - 1].i && edges[k].j == edges[k - 1].j) {
      throw DomainError("duplicate edge (" + std::to_string(edges[k].i) + ", " +
                        std::to_string(edges[k].j) + ")");
    }
  }
  edges_ = std::move(edges);
}

Matrix Graph::adjacency() const {
  Matrix a = Matrix::Zero(n_, n_);
  for (const auto& e : edges_) {
    a(e.i, e.j) = e.w;
    a(e.j, e.i) = e.w;
  }
  return a;
}

Vector Graph::degrees() const {
  Vector d = Vector::Zero(n_);
  for (const auto& e : edges_) {
    d(e.i) += e.w;
    d(e.j) += e.w;
  }
  return d;
}

Matrix Graph::laplacian() const {
  Matrix l = -adjacency();
  l.diagonal() += degrees();
  return l;
}

Matrix gso(const Graph& g, GsoKind kind) {
  return kind == GsoKind::Laplacian ? g.laplacian() : g.adjacency();
}

Graph make_ring(std::size_t n) {
  if (n < 3) throw InvalidSizeError(size_message("ring", "n must be ≥ 3"));
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n, 1.0});
  return Graph(n, std::move(edges));
}

Graph make_path(std::size_t n) {
  if (n < 2) throw InvalidSizeError(size_message("path", "n must be ≥ 2"));
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, 1.0});
  return Graph(n, std::move(edges));
}

Graph make_complete(std::size_t n) {
  if (n < 2) throw InvalidSizeError(size_message("complete", "n must be ≥ 2"));
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) edges.push_back({i, j, 1.0});
  return Graph(n, std::move(edges));
}

Graph make_comet(std::size_t n, std::optional<std::size_t> head) {
  if (n < 3) throw InvalidSizeError(size_message("comet", "n must be ≥ 3"));
  const std::size_t h = head.value_or(n / 2);  // ceil((n-1)/2)
  if (h < 1 || h > n - 1) throw InvalidSizeError(size_message("comet", "head must be in [1, n-1]"));
  std::vector<Edge> edges;
  for (std::size_t k = 1; k <= h; ++k) edges.push_back({0, k, 1.0});
  std::size_t prev = 0;
  for (std::size_t k = h + 1; k < n; ++k) {
    edges.push_back({prev, k, 1.0});
    prev = k;
  }
  return Graph(n, std::move(edges));
}

Graph make_low_stretch_tree(std::size_t n) {
  const auto side = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(n))));
  if (n < 4 || side * side != n) {
    throw InvalidSizeError(size_message("lowstretch", "n must be a perfect square ≥ 4"));
  }

  struct Region {
    std::size_t r0, r1, c0, c1;  // half-open
    bool empty() const { return r0 >= r1 || c0 >= c1; }
  };

  std::vector<Edge> edges;
  auto vertex = [side](std::size_t r, std::size_t c) { return r * side + c; };

  // Grid edge crossing between two adjacent regions with the smallest
  // (min vertex, max vertex) pair.
  auto connect = [&](const Region& x, const Region& y) {
    std::optional<Edge> best;
    auto consider = [&](std::size_t u, std::size_t v) {
      Edge e{std::min(u, v), std::max(u, v), 1.0};
      if (!best || e.i < best->i || (e.i == best->i && e.j < best->j)) best = e;
    };
    for (std::size_t r = x.r0; r < x.r1; ++r) {
      for (std::size_t c = x.c0; c < x.c1; ++c) {
        if (c + 1 == y.c0 && r >= y.r0 && r < y.r1) consider(vertex(r, c), vertex(r, c + 1));
        if (r + 1 == y.r0 && c >= y.c0 && c < y.c1) consider(vertex(r, c), vertex(r + 1, c));
      }
    }
    edges.push_back(*best);
  };

  std::function<void(const Region&)> build = [&](const Region& reg) {
    const std::size_t rows = reg.r1 - reg.r0;
    const std::size_t cols = reg.c1 - reg.c0;
    if (rows == 1 && cols == 1) return;
    const std::size_t rm = reg.r0 + (rows + 1) / 2;
    const std::size_t cm = reg.c0 + (cols + 1) / 2;
    const Region tl{reg.r0, rm, reg.c0, cm};
    const Region tr{reg.r0, rm, cm, reg.c1};
    const Region bl{rm, reg.r1, reg.c0, cm};
    const Region br{rm, reg.r1, cm, reg.c1};
    for (const auto* q : {&tl, &tr, &bl, &br}) {
      if (!q->empty()) build(*q);
    }
    if (!tr.empty()) connect(tl, tr);
    if (!bl.empty() && !br.empty()) connect(bl, br);
    if (!bl.empty()) connect(tl, bl);
  };
  build(Region{0, side, 0, side});
  return Graph(n, std::move(edges));
}

ProductGraph::ProductGraph(std::vector<Graph> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw InvalidSizeError("cartesian product needs at least one factor");
  for (const auto& g : factors_) shape_.push_back(g.size());
}

std::size_t ProductGraph::vertex_count() const {
  std::size_t n = 1;
  for (auto s : shape_) n *= s;
  return n;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Matrix ProductGraph::gso(GsoKind kind) const {
  // Left-to-right accumulation with each new factor on the slow side:
  // S <- Z_k ⊗ I + I ⊗ S.
  Matrix acc = mdglct::gso(factors_.front(), kind);
  for (std::size_t k = 1; k < factors_.size(); ++k) {
    const Matrix zk = mdglct::gso(factors_[k], kind);
    const auto nk = zk.rows();
    const auto na = acc.rows();
    acc = kronecker(zk, Matrix::Identity(na, na)) + kronecker(Matrix::Identity(nk, nk), acc);
  }
  return acc;
}

Graph ProductGraph::flatten() const {
  std::vector<Edge> edges;
  const std::size_t total = vertex_count();
  std::size_t stride = 1;
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    const std::size_t nk = shape_[k];
    for (std::size_t v = 0; v < total; ++v) {
      const std::size_t ik = (v / stride) % nk;
      if (ik != 0) continue;  // visit each axis-k fiber once, from its base vertex
      for (const auto& e : factors_[k].edges()) {
        edges.push_back({v + e.i * stride, v + e.j * stride, e.w});
      }
    }
    stride *= nk;
  }
  return Graph(total, std::move(edges));
}

ProductGraph cartesian_product(std::vector<Graph> factors) {
  return ProductGraph(std::move(factors));
}

Vector bipolar_rect_signal(std::size_t n) {
  if (n < 2) throw InvalidSizeError("bipolar signal: n must be ≥ 2");
  Vector x(n);
  const std::size_t half = (n + 1) / 2;
  for (std::size_t i = 0; i < n; ++i) x(i) = i < half ? 1.0 : -1.0;
  return x;
}

std::size_t linear_index(std::span<const std::size_t> shape, std::span<const std::size_t> index) {
  if (shape.size() != index.size()) throw ShapeMismatchError("index rank does not match shape");
  std::size_t lin = 0;
  std::size_t stride = 1;
  for (std::size_t k = 0; k < shape.size(); ++k) {
    if (index[k] >= shape[k]) throw ShapeMismatchError("index out of range");
    lin += index[k] * stride;
    stride *= shape[k];
  }
  return lin;
}

std::vector<std::size_t> multi_index(std::span<const std::size_t> shape, std::size_t linear) {
  std::vector<std::size_t> idx(shape.size());
  for (std::size_t k = 0; k < shape.size(); ++k) {
    idx[k] = linear % shape[k];
    linear /= shape[k];
  }
  return idx;
}

}  // namespace mdglct
