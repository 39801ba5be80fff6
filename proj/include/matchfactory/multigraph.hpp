#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

namespace matchfactory {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();
inline constexpr EdgeId kNoEdge = std::numeric_limits<EdgeId>::max();

/// One parallel copy of an unordered vertex pair. Loops are never allowed.
struct Edge {
  VertexId a;
  VertexId b;
};

/// Loop-free multigraph. Every parallel copy carries its own EdgeId; the id
/// equals the position in the edge list, so construction order pins all ids.
/// Instances are treated as immutable values once built: all operations below
/// return fresh graphs instead of mutating.
class Multigraph {
 public:
  Multigraph() = default;
  explicit Multigraph(VertexId n) : n_(n) {}
  Multigraph(VertexId n, std::vector<Edge> edges);

  VertexId vertex_count() const { return n_; }
  EdgeId edge_count() const { return static_cast<EdgeId>(edges_.size()); }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  const std::vector<Edge>& edges() const { return edges_; }

  /// Appends a parallel copy of {a,b} and returns its id. Throws on loops or
  /// out-of-range endpoints.
  EdgeId add_edge(VertexId a, VertexId b);

  std::vector<std::uint32_t> degrees() const;
  bool connected() const;

 private:
  VertexId n_ = 0;
  std::vector<Edge> edges_;
};

/// adjacency[v] lists (neighbor, edge id) pairs in ascending EdgeId order.
std::vector<std::vector<std::pair<VertexId, EdgeId>>> adjacency(
    const Multigraph& g);

/// Edge ids with exactly one endpoint in S (multiplicity respected).
/// Throws if S contains an out-of-range vertex.
std::vector<EdgeId> boundary(const Multigraph& g,
                             const std::vector<VertexId>& s);

/// G + (N_1 + ... + N_k): appends one fresh parallel copy per listed edge per
/// occurrence. Original ids are untouched; copies are appended in family
/// order, then in the order the ids appear within each family member.
Multigraph add_matchings(const Multigraph& g,
                         const std::vector<std::vector<EdgeId>>& family);

struct IdentifyResult {
  Multigraph graph;
  std::vector<VertexId> vertex_map;  // old id -> new id
  VertexId merged;                   // new id of the merged vertex
};

/// Merges b into a (the merged vertex keeps the smaller index slot; indices
/// above the removed slot shift down by one). Throws if a == b or if an edge
/// joins a and b, since that would create a loop.
IdentifyResult identify_vertices(const Multigraph& g, VertexId a, VertexId b);

struct DeleteEdgesResult {
  Multigraph graph;
  std::vector<EdgeId> edge_map;  // old id -> new id, kNoEdge if deleted
};

/// Removes exactly the listed parallel copies. Remaining edges keep their
/// relative order.
DeleteEdgesResult delete_edges(const Multigraph& g,
                               const std::vector<EdgeId>& ids);

/// r if every vertex has degree r, absent otherwise (also absent for n == 0).
std::optional<std::uint32_t> is_regular(const Multigraph& g);

/// True iff parallel-edge multiplicities agree between g1 and g2 under the
/// total vertex bijection vmap : V(g1) -> V(g2). Throws on non-bijections.
bool edge_multiset_equal(const Multigraph& g1, const Multigraph& g2,
                         const std::vector<VertexId>& vmap);

/// Same graph under a relabeling: vertex v of g becomes perm[v]; EdgeIds and
/// their order are preserved.
Multigraph permute_vertices(const Multigraph& g,
                            const std::vector<VertexId>& perm);

/// Groups parallel copies by their unordered endpoint pair. Class ids are
/// assigned in first-seen EdgeId order; members are listed ascending.
struct PairClasses {
  std::vector<std::uint32_t> class_of;                   // per EdgeId
  std::vector<std::pair<VertexId, VertexId>> pair_of;    // per class, (min,max)
  std::vector<std::vector<EdgeId>> members;               // per class
  std::uint32_t count() const {
    return static_cast<std::uint32_t>(pair_of.size());
  }
};

PairClasses pair_classes(const Multigraph& g);

}  // namespace matchfactory
