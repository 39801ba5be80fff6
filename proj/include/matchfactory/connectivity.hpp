#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "matchfactory/multigraph.hpp"

namespace matchfactory {

/// A vertex subset together with its boundary weight (multiplicity counted).
struct Cut {
  std::vector<VertexId> side;
  std::uint64_t weight = 0;
};

/// Maximum s-t flow with unit capacity per parallel copy (Dinic on the
/// multiplicity-collapsed graph). Equals the minimum s-t cut weight.
std::uint64_t max_flow(const Multigraph& g, VertexId s, VertexId t);

/// Global minimum cut weight; 0 for disconnected graphs and graphs with
/// fewer than two vertices. Multiplicity-weighted Stoer-Wagner.
std::uint64_t edge_connectivity(const Multigraph& g);

/// Stoer-Wagner with the cut side; requires >= 2 vertices and connectivity.
Cut global_min_cut(const Multigraph& g);

struct GomoryHuTree {
  struct TreeEdge {
    VertexId a;
    VertexId b;
    std::uint64_t capacity;
  };
  VertexId n = 0;
  std::vector<TreeEdge> edges;  // n - 1 entries, spanning tree

  /// min capacity on the unique s-t tree path (= max s-t flow in the graph).
  std::uint64_t min_cut(VertexId s, VertexId t) const;

  /// Vertices on edge(index).a's side after removing that tree edge.
  std::vector<VertexId> fundamental_side(std::size_t index) const;
};

/// Gomory-Hu tree by recursive contraction. Every tree edge's fundamental
/// cut achieves the minimum cut between its endpoints in g. Deterministic
/// for a fixed input. Throws on disconnected input.
GomoryHuTree gomory_hu(const Multigraph& g);

/// Minimum |boundary(S)| over S with |S| odd. The minimum is attained on a
/// fundamental cut of the Gomory-Hu tree with an odd side, so only those
/// n-1 cuts are scanned (boundaries recomputed directly in g). Requires an
/// even number of vertices and a connected graph.
Cut min_odd_cut(const Multigraph& g);

/// r if g is r-regular of even order with every odd cut >= r, absent
/// otherwise. Disconnected graphs report absent (all target graphs here are
/// connected; an explicit signal beats a silently wrong cut scan).
std::optional<std::uint32_t> is_r_graph(const Multigraph& g);

}  // namespace matchfactory
