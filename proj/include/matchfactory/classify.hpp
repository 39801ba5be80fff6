#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "matchfactory/constructions.hpp"
#include "matchfactory/multigraph.hpp"

namespace matchfactory {

/// Petersen matching type of a perfect matching of a P^M host: projects the
/// edge ids to base edges and matches against the six canonical matchings.
/// Genuine perfect matchings always classify (their projection is a perfect
/// matching of the Petersen graph); absence signals a non-matching input.
std::optional<int> classify_type(const PetersenHost& host,
                                 const std::vector<EdgeId>& pm);

/// Type pair induced by a perfect matching of an H-family host in one Q
/// block. The block's boundary meets the matching exactly once (a Q block
/// has 19 vertices); the copy on that side extends uniquely by the restored
/// u1v1 edge to a type 0 or 1 matching, the other copy's restriction is a
/// full type 2..5 matching. Requires a base-variant host (provenance covers
/// the base structure only). Throws when pm is not a perfect matching or
/// the restrictions do not classify.
QBlockType classify_q_block(const HFamily& h, int block,
                            const std::vector<EdgeId>& pm);

struct TypedPmOptions {
  std::vector<EdgeId> forbidden;
  /// Normalized endpoint pairs that glue edges (x-z1 connectors, the z2
  /// triangle, T-internal edges) must avoid entirely. pm_family_n uses this
  /// to spread the family's glue edges over fresh pairs, which is what pins
  /// the H_{k+1} = H_k + (N0+..+N3) multiset identity.
  std::vector<std::pair<VertexId, VertexId>> forbidden_glue_pairs;
};

/// A perfect matching of h whose classify_q_block output equals `types` on
/// every block, avoiding the forbidden edges; parallel-copy ties break
/// toward the lowest EdgeId. Absence means no such matching exists under
/// the constraints (some type vectors are structurally impossible: each
/// block needs exactly one outside matching edge, and z2-external blocks
/// must pair up through a single triangle edge).
std::optional<std::vector<EdgeId>> find_typed_pm(
    const HFamily& h, const std::array<QBlockType, 3>& types,
    const TypedPmOptions& opts = {});

/// phi(W) over Z_2^family-size (component j = parity of |W intersect N_j|)
/// together with omega = number of nonzero components. Throws when the
/// family is not pairwise disjoint.
std::pair<std::vector<std::uint8_t>, int> phi_omega(
    const std::vector<std::vector<EdgeId>>& family,
    const std::vector<EdgeId>& w);

/// Brute-force check over P + M_j: every pair of disjoint perfect matchings
/// contains a type-j member.
bool verify_forced_type(int j);

/// Brute-force check over P^M for a type multiset M with |M| <= 3: every
/// family of |M|+1 pairwise disjoint perfect matchings contains M as a
/// subcollection (type multiplicities compared).
bool verify_subcollection_lemma(const std::vector<int>& types);

}  // namespace matchfactory
