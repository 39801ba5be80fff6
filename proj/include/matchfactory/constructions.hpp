#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "matchfactory/multigraph.hpp"

namespace matchfactory {

/// Labeled Petersen graph: outer 5-cycle v1..v5, inner 5-cycle visiting
/// u1,u3,u5,u2,u4, spokes u_i v_i. Vertex i-1 is v_i, vertex 4+i is u_i.
struct PetersenLabeling {
  std::array<VertexId, 5> outer;        // v1..v5
  std::array<VertexId, 5> inner;        // u1..u5
  std::array<EdgeId, 5> outer_edges;    // v1v2, v2v3, v3v4, v4v5, v5v1
  std::array<EdgeId, 5> spokes;         // u1v1 .. u5v5
  std::array<EdgeId, 5> inner_edges;    // u1u3, u3u5, u5u2, u2u4, u4u1
};

std::pair<Multigraph, PetersenLabeling> petersen();

/// The six perfect matchings of the Petersen graph as base edge-id sets.
/// m[0] is the spoke matching; m[1] is the only other perfect matching
/// through u1v1; m[i] for i >= 2 is the rotation image of m[i-1] under
/// v_j -> v_{j+1}, u_j -> u_{j+1}. Construction is self-checked: the six
/// sets are exactly the perfect matchings of the graph, any two intersect
/// in a single edge, and those intersections hit all 15 edges.
struct CanonicalMatchings {
  std::array<std::vector<EdgeId>, 6> m;
};

const CanonicalMatchings& canonical_matchings();

/// Petersen graph plus copies of canonical matchings, with per-edge
/// provenance. Edge ids 0..14 are the base graph; each added matching
/// contributes its 5 copies in ascending base-edge order.
struct PetersenHost {
  Multigraph g;
  PetersenLabeling labeling;
  std::vector<std::uint8_t> base_edge;  // per EdgeId: underlying edge 0..14
  std::vector<int> source;              // per EdgeId: -1 base, else family slot
  std::vector<int> added_types;         // type of each added matching
};

PetersenHost build_petersen_host(const std::vector<int>& types);

/// P_k = P + k*M0 + (k-1)*(M1 + M3 + M4); 4k-regular on 10 vertices with
/// 20k edges. Added in the order M0 (k times) then k-1 rounds of M1,M3,M4.
PetersenHost build_p(int k);

/// Where a gadget copy lives inside a composed graph.
struct BlockEmbedding {
  enum class Role { kPetersenCopy, kQBlock, kTBlock };
  Role role;
  int index = 0;
  std::vector<VertexId> vertex_map;  // local -> host
  VertexId u_q = kNoVertex;
  VertexId z1 = kNoVertex;  // v1 of copy 1
  VertexId z2 = kNoVertex;  // v1 of copy 2
  std::array<VertexId, 3> x{kNoVertex, kNoVertex, kNoVertex};
  std::array<std::vector<EdgeId>, 2> u_side;  // U^1, U^2: u_q edges per copy
};

/// Block-internal edge provenance for Q-based hosts.
struct QEdgeInfo {
  std::uint8_t copy;      // 1 or 2
  std::uint8_t base;      // underlying Petersen edge 0..14
  std::int16_t source;    // -1 base, else added-matching slot of P_k
};

/// Q_k: two copies of P_k with the u1v1 multiedge removed and the two u1
/// vertices identified. Local layout: copy c in {1,2} occupies
/// 9(c-1)+0..9(c-1)+8 as v1..v5,u2..u5; the merged u vertex is 18.
struct QGadget {
  Multigraph g;
  BlockEmbedding embedding;
  std::vector<QEdgeInfo> edge_info;
};

QGadget build_q(int k);

/// T_k: three vertices x1,x2,x3 with k parallel edges per pair, in pair
/// order (x1x2), (x1x3), (x2x3).
std::pair<Multigraph, BlockEmbedding> build_t(int k);

/// S_k(G) for a connected bridgeless cubic G: every vertex becomes a T_k
/// block, every edge a Q_k block. Edge e={a,b} with a <= b hangs its z1 at
/// the a side and z2 at the b side. At a vertex v with incident edges
/// e_1 < e_2 < e_3 the block of e_j sends k edges to x_j and k edges to
/// x_{j+1} (indices mod 3), which makes every x vertex receive exactly 2k
/// outside edges.
struct SFamily {
  Multigraph g;
  int k = 0;
  std::vector<BlockEmbedding> q_blocks;  // one per base edge
  std::vector<BlockEmbedding> t_blocks;  // one per base vertex
};

SFamily build_s(const Multigraph& base, int k);

enum class HVariant { kBase, kPrime, kDoublePrime, kTriplePrime };

std::string variant_name(HVariant v);

/// (a, b): Petersen matching types induced by a perfect matching in the two
/// copies of a Q block, in copy order. Exactly one coordinate is in {0,1};
/// that copy was completed with the restored u1v1 edge, so its v1 vertex
/// (z1 for copy 1, z2 for copy 2) carries the block's single outside
/// matching edge.
struct QBlockType {
  int first = -1;
  int second = -1;
  int external_side = 0;  // 1 or 2
  bool operator==(const QBlockType&) const = default;
};

struct MatchingCopyRange {
  std::string label;
  EdgeId first = 0;
  EdgeId count = 0;
};

/// H_k family graph: three Q_k blocks glued with a T_k triangle at the z1
/// side and a pairwise z2 triangle. Vertex layout is independent of k:
/// block b occupies 19b..19b+18, the x vertices are 57,58,59. Variants
/// append canonical matchings: prime = N0+N1+N2, double prime = N0,
/// triple prime = N0+N1.
struct HEdgeInfo {
  enum class Glue : std::uint8_t { kNone, kXZ1, kTriangle, kTInternal };
  std::int8_t block = -1;  // 0..2 for block-internal edges
  QEdgeInfo q;             // valid when block >= 0
  Glue glue = Glue::kNone;
  std::uint8_t glue_block = 0;  // kXZ1/kTriangle: block i; kTInternal: pair
  std::uint8_t glue_slot = 0;   // kXZ1: 0 -> x_{i+1}, 1 -> x_{i+2}
};

struct HFamily {
  Multigraph g;
  int k = 0;
  HVariant variant = HVariant::kBase;
  std::array<BlockEmbedding, 3> blocks;
  std::array<VertexId, 3> x{};
  std::vector<HEdgeInfo> edge_info;
  // glue bundles, ascending EdgeIds (base-structure edges only)
  std::array<std::array<std::vector<EdgeId>, 2>, 3> xz1;  // [block][slot]
  std::array<std::vector<EdgeId>, 3> triangle;            // z2^i - z2^{i+1}
  std::array<std::vector<EdgeId>, 3> t_internal;          // (x1x2),(x1x3),(x2x3)
  std::vector<MatchingCopyRange> added;                    // variant additions
};

HFamily build_h(int k, HVariant variant);

/// The four canonically typed perfect matchings of H_k. Block types:
/// N0 makes every block (0,4); N_i (i in 1..3) makes block i-1 type (1,3),
/// block i mod 3 type (3,0) and block (i+1) mod 3 type (4,1). Glue edges
/// are chosen on fresh endpoint pairs across the family, which pins the
/// identity  H_{k+1} = H_k + (N0+N1+N2+N3)  as an edge multiset.
///
/// edge_disjoint reports whether the four matchings are pairwise disjoint
/// as edge-id sets. That holds for every k >= 2 and can never hold at
/// k = 1: H_1 has no two disjoint perfect matchings at all, so the k = 1
/// family necessarily reuses block-interior copies (the multiset identity
/// above is unaffected, additions count occurrences).
struct PmFamily {
  std::array<std::vector<EdgeId>, 4> n;
  std::array<std::array<QBlockType, 3>, 4> types;
  bool edge_disjoint = false;
};

PmFamily pm_family_n(const HFamily& h);

/// Replaces v (degree t >= 2) by a complete bipartite K_{t,t-1}; the former
/// edge ends attach one-to-one, sorted by (new neighbor id, edge id), to
/// the degree-(t-1) side. Preserves t-regularity and t-edge-connectivity;
/// vertex count grows by 2t-2. Layout: v is removed (higher indices shift
/// down), the t attachment vertices follow, then the t-1 inner vertices.
Multigraph meredith_extend(const Multigraph& g, VertexId v);

/// Applies meredith_extend at every cover vertex, processed in decreasing
/// vertex order. The cover must touch every parallel class of multiplicity
/// >= 2 (that is what makes the result simple) and covered vertices need
/// degree >= 2.
Multigraph meredith_simple(const Multigraph& g,
                           const std::vector<VertexId>& cover);

/// Minimum-cardinality vertex cover of the simple projection, exact via
/// branch and bound (degree reductions + matching lower bound).
std::vector<VertexId> min_vertex_cover(const Multigraph& g);

/// Q_k plus one apex vertex joined to z1 and z2 by 2k parallel edges each,
/// which completes every degree to 4k. Diagnostic host for the boundary
/// parity check: v1 and v2 are the apex-z1 and apex-z2 bundles.
struct ApexHost {
  Multigraph g;
  VertexId apex = kNoVertex;
  std::vector<EdgeId> v1;
  std::vector<EdgeId> v2;
};

ApexHost build_apex_host(int k = 1);

/// Theorem dispatch: r = 4k -> H_k, r = 4k+1 -> H''_k, r = 4k+2 -> H'''_k,
/// r = 4k+3 -> H'_k, with the claimed edge connectivity t and the family
/// size r-2 whose absence is asserted.
struct Counterexample {
  HFamily h;
  std::uint32_t r = 0;
  std::uint32_t claimed_connectivity = 0;
  std::uint32_t missing_family_size = 0;
};

Counterexample counterexample(std::uint32_t r);

}  // namespace matchfactory
