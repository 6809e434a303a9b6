#pragma once

// Vertex-labeled simple graphs on {1..d} and the constructions and edits
// needed by the chromatic symmetric function recurrences.

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "csfkit/partitions.hpp"

namespace csfkit {

/// Unordered vertex pair, stored with first < second.
using Edge = std::pair<int, int>;

Edge make_edge(int u, int v);

class LabeledGraph {
 public:
  LabeledGraph() = default;
  /// Normalizes each edge, sorts, and rejects loops, duplicates and
  /// endpoints outside {1..d}.
  LabeledGraph(int d, std::vector<Edge> edges);

  int order() const noexcept { return d_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  bool has_edge(int u, int v) const;
  /// adjacency()[v-1] has bit (w-1) set iff {v,w} is an edge.
  std::vector<std::uint32_t> adjacency() const;

  friend auto operator<=>(const LabeledGraph&, const LabeledGraph&) = default;

 private:
  int d_ = 0;
  std::vector<Edge> edges_;
};

LabeledGraph empty_graph(int n);
/// v_1 ... v_n; path(0) is the graph with no vertices.
LabeledGraph path(int n);
/// v_1 ... v_n v_1, n >= 3.
LabeledGraph cycle(int n);
LabeledGraph complete(int n);
/// Path v_1 ... v_{m+l} plus the edge v_1 v_m. tadpole(m, 0) is the m-cycle.
LabeledGraph tadpole(int m, int l);
/// Cycle v_1 ... v_m v_1, path v_{m+1} ... v_{m+l}, and edges v_1 v_{m+1},
/// v_m v_{m+1}.
LabeledGraph line_tadpole(int m, int l);
/// Cycle on 1..a+b with the chord {1, a+1}: an (a+1)-cycle and a (b+1)-cycle
/// sharing one edge.
LabeledGraph cycle_chord(int a, int b);
/// Cycle v_1 ... v_{m+2} v_1 plus the chord v_2 v_{m+1}.
LabeledGraph cc_m3_labeled(int m);
/// K_{1,3} with center 1.
LabeledGraph claw();
/// K_4 minus the edge {2,4}; identical to line_tadpole(3, 1).
LabeledGraph diamond();

/// H's labels shifted up by G.order().
LabeledGraph disjoint_union(const LabeledGraph& g, const LabeledGraph& h);
/// Adds vertices d+1..d+n-1 and makes {d, ..., d+n-1} a clique.
LabeledGraph clique_attach(const LabeledGraph& g, int n);
LabeledGraph add_edge(const LabeledGraph& g, Edge e);
LabeledGraph delete_edge(const LabeledGraph& g, Edge e);
/// Contracts e = {d-1, d}, merging d into d-1; loops dropped, parallel edges
/// collapsed. Any other edge is rejected: relabel first.
LabeledGraph contract_edge(const LabeledGraph& g, Edge e);
/// perm[k-1] is the new label of vertex k.
LabeledGraph relabel(const LabeledGraph& g, const std::vector<int>& perm);

/// Connected components of the spanning subgraph ({1..d}, edges).
SetPartition component_partition(int d, const std::vector<Edge>& edges);
bool is_connected(const LabeledGraph& g);

/// Number of proper colorings with k colors (backtracking count).
std::uint64_t chromatic_polynomial_value(const LabeledGraph& g, int k);

/// "d=4 edges=12,13,14,23,34"
std::string describe(const LabeledGraph& g);

}  // namespace csfkit
