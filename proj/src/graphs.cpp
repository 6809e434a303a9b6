#include "csfkit/graphs.hpp"

#include <algorithm>
#include <numeric>

#include "csfkit/errors.hpp"
#include "csfkit/limits.hpp"

namespace csfkit {

Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

LabeledGraph::LabeledGraph(int d, std::vector<Edge> edges) : d_(d), edges_(std::move(edges)) {
  if (d < 0) throw DomainError("negative vertex count");
  if (d > 32) throw CapacityError("graphs are limited to 32 vertices");
  for (auto& e : edges_) {
    if (e.first == e.second) throw DomainError("loop at vertex " + std::to_string(e.first));
    e = make_edge(e.first, e.second);
    if (e.first < 1 || e.second > d) {
      throw DomainError("edge {" + std::to_string(e.first) + "," + std::to_string(e.second) +
                        "} outside [1.." + std::to_string(d) + "]");
    }
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw DomainError("parallel edges are not allowed");
  }
}

bool LabeledGraph::has_edge(int u, int v) const {
  if (u == v) return false;
  return std::binary_search(edges_.begin(), edges_.end(), make_edge(u, v));
}

std::vector<std::uint32_t> LabeledGraph::adjacency() const {
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(d_), 0);
  for (auto [u, v] : edges_) {
    adj[static_cast<std::size_t>(u - 1)] |= 1u << (v - 1);
    adj[static_cast<std::size_t>(v - 1)] |= 1u << (u - 1);
  }
  return adj;
}

LabeledGraph empty_graph(int n) { return LabeledGraph(n, {}); }

LabeledGraph path(int n) {
  if (n < 0) throw DomainError("path needs n >= 0");
  std::vector<Edge> edges;
  for (int k = 1; k < n; ++k) edges.emplace_back(k, k + 1);
  return LabeledGraph(n, std::move(edges));
}

LabeledGraph cycle(int n) {
  if (n < 3) throw DomainError("cycle needs n >= 3 to be a simple graph");
  std::vector<Edge> edges;
  for (int k = 1; k < n; ++k) edges.emplace_back(k, k + 1);
  edges.emplace_back(1, n);
  return LabeledGraph(n, std::move(edges));
}

LabeledGraph complete(int n) {
  if (n < 1) throw DomainError("complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) edges.emplace_back(u, v);
  return LabeledGraph(n, std::move(edges));
}

LabeledGraph tadpole(int m, int l) {
  if (m < 3) throw DomainError("tadpole needs m >= 3");
  if (l < 0) throw DomainError("tadpole needs l >= 0");
  if (l == 0) return cycle(m);
  std::vector<Edge> edges = path(m + l).edges();
  edges.emplace_back(1, m);
  return LabeledGraph(m + l, std::move(edges));
}

LabeledGraph line_tadpole(int m, int l) {
  if (m < 3) throw DomainError("line_tadpole needs m >= 3");
  if (l < 1) throw DomainError("line_tadpole needs l >= 1");
  std::vector<Edge> edges = cycle(m).edges();
  for (int k = m + 1; k < m + l; ++k) edges.emplace_back(k, k + 1);
  edges.emplace_back(1, m + 1);
  edges.emplace_back(m, m + 1);
  return LabeledGraph(m + l, std::move(edges));
}

LabeledGraph cycle_chord(int a, int b) {
  if (a < 2 || b < 2) throw DomainError("cycle_chord needs a, b >= 2");
  std::vector<Edge> edges = cycle(a + b).edges();
  edges.emplace_back(1, a + 1);
  return LabeledGraph(a + b, std::move(edges));
}

LabeledGraph cc_m3_labeled(int m) {
  if (m < 3) throw DomainError("cc_m3_labeled needs m >= 3");
  std::vector<Edge> edges = cycle(m + 2).edges();
  edges.emplace_back(2, m + 1);
  return LabeledGraph(m + 2, std::move(edges));
}

LabeledGraph claw() { return LabeledGraph(4, {{1, 2}, {1, 3}, {1, 4}}); }

LabeledGraph diamond() { return LabeledGraph(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {3, 4}}); }

LabeledGraph disjoint_union(const LabeledGraph& g, const LabeledGraph& h) {
  std::vector<Edge> edges = g.edges();
  for (auto [u, v] : h.edges()) edges.emplace_back(u + g.order(), v + g.order());
  return LabeledGraph(g.order() + h.order(), std::move(edges));
}

LabeledGraph clique_attach(const LabeledGraph& g, int n) {
  if (n < 1) throw DomainError("clique_attach needs n >= 1");
  if (g.order() < 1) throw DomainError("clique_attach needs a nonempty graph");
  const int d = g.order();
  std::vector<Edge> edges = g.edges();
  for (int u = d; u <= d + n - 1; ++u)
    for (int v = u + 1; v <= d + n - 1; ++v) edges.emplace_back(u, v);
  return LabeledGraph(d + n - 1, std::move(edges));
}

LabeledGraph add_edge(const LabeledGraph& g, Edge e) {
  e = make_edge(e.first, e.second);
  if (g.has_edge(e.first, e.second)) throw DomainError("edge already present");
  std::vector<Edge> edges = g.edges();
  edges.push_back(e);
  return LabeledGraph(g.order(), std::move(edges));
}

LabeledGraph delete_edge(const LabeledGraph& g, Edge e) {
  e = make_edge(e.first, e.second);
  if (!g.has_edge(e.first, e.second)) {
    throw DomainError("edge {" + std::to_string(e.first) + "," + std::to_string(e.second) + "} not in graph");
  }
  std::vector<Edge> edges;
  edges.reserve(g.edge_count() - 1);
  for (const auto& f : g.edges())
    if (f != e) edges.push_back(f);
  return LabeledGraph(g.order(), std::move(edges));
}

LabeledGraph contract_edge(const LabeledGraph& g, Edge e) {
  e = make_edge(e.first, e.second);
  const int d = g.order();
  if (!g.has_edge(e.first, e.second)) {
    throw DomainError("edge {" + std::to_string(e.first) + "," + std::to_string(e.second) + "} not in graph");
  }
  if (e != Edge{d - 1, d}) throw DomainError("contraction is only defined for the edge {d-1, d}; relabel first");
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) {
    if (v == d) v = d - 1;
    if (u == v) continue;
    edges.push_back(make_edge(u, v));
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return LabeledGraph(d - 1, std::move(edges));
}

LabeledGraph relabel(const LabeledGraph& g, const std::vector<int>& perm) {
  const int d = g.order();
  if (static_cast<int>(perm.size()) != d) throw DomainError("relabeling size does not match vertex count");
  std::vector<bool> hit(static_cast<std::size_t>(d), false);
  for (int image : perm) {
    if (image < 1 || image > d || hit[static_cast<std::size_t>(image - 1)]) {
      throw DomainError("relabeling is not a bijection of [1.." + std::to_string(d) + "]");
    }
    hit[static_cast<std::size_t>(image - 1)] = true;
  }
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (auto [u, v] : g.edges()) {
    edges.push_back(make_edge(perm[static_cast<std::size_t>(u - 1)], perm[static_cast<std::size_t>(v - 1)]));
  }
  return LabeledGraph(d, std::move(edges));
}

SetPartition component_partition(int d, const std::vector<Edge>& edges) {
  std::vector<int> parent(static_cast<std::size_t>(d));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (auto [u, v] : edges) {
    if (u < 1 || v < 1 || u > d || v > d) throw DomainError("edge endpoint outside the vertex set");
    int a = find(u - 1), b = find(v - 1);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }
  std::vector<int> label(static_cast<std::size_t>(d));
  for (int k = 0; k < d; ++k) label[static_cast<std::size_t>(k)] = find(k);
  return SetPartition::from_labels(label);
}

bool is_connected(const LabeledGraph& g) {
  return g.order() <= 1 || component_partition(g.order(), g.edges()).block_count() == 1;
}

namespace {

// Colors vertices 1..d in order; each vertex only looks back at colored
// neighbours.
std::uint64_t count_colorings(const std::vector<std::uint32_t>& back_adj, std::vector<int>& color, int v, int k) {
  const int d = static_cast<int>(color.size());
  if (v == d) return 1;
  std::uint64_t total = 0;
  for (int c = 0; c < k; ++c) {
    bool ok = true;
    for (std::uint32_t nb = back_adj[static_cast<std::size_t>(v)]; nb; nb &= nb - 1) {
      if (color[static_cast<std::size_t>(__builtin_ctz(nb))] == c) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    color[static_cast<std::size_t>(v)] = c;
    total += count_colorings(back_adj, color, v + 1, k);
  }
  return total;
}

}  // namespace

std::uint64_t chromatic_polynomial_value(const LabeledGraph& g, int k) {
  if (k < 0) throw DomainError("number of colors must be nonnegative");
  const int d = g.order();
  if (d == 0) return 1;
  std::vector<std::uint32_t> back(static_cast<std::size_t>(d), 0);
  for (auto [u, v] : g.edges()) back[static_cast<std::size_t>(v - 1)] |= 1u << (u - 1);
  std::vector<int> color(static_cast<std::size_t>(d), -1);
  return count_colorings(back, color, 0, k);
}

std::string describe(const LabeledGraph& g) {
  std::string out = "d=" + std::to_string(g.order()) + " edges=";
  for (std::size_t k = 0; k < g.edges().size(); ++k) {
    if (k) out += ',';
    const auto [u, v] = g.edges()[k];
    out += std::to_string(u);
    if (g.order() > 9) out += '-';
    out += std::to_string(v);
  }
  return out;
}

}  // namespace csfkit
