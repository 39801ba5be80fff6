#include "matchfactory/classify.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <set>
#include <stdexcept>

#include "matchfactory/search.hpp"

namespace matchfactory {

namespace {

constexpr EdgeId kU1V1Base = 5;  // spokes[0] in the canonical labeling

// Base edge sets of M_0..M_5 as 15-bit masks.
std::array<std::uint16_t, 6> canonical_masks() {
  std::array<std::uint16_t, 6> masks{};
  const CanonicalMatchings& cm = canonical_matchings();
  for (int j = 0; j < 6; ++j)
    for (EdgeId e : cm.m[j]) masks[j] |= static_cast<std::uint16_t>(1u << e);
  return masks;
}

bool is_perfect_matching(const Multigraph& g, const std::vector<EdgeId>& pm) {
  std::vector<char> covered(g.vertex_count(), 0);
  for (EdgeId e : pm) {
    if (e >= g.edge_count()) return false;
    const Edge& ed = g.edge(e);
    if (covered[ed.a] || covered[ed.b]) return false;
    covered[ed.a] = covered[ed.b] = 1;
  }
  return std::all_of(covered.begin(), covered.end(),
                     [](char c) { return c != 0; });
}

int mask_to_type(std::uint16_t mask, const std::array<std::uint16_t, 6>& cm) {
  for (int j = 0; j < 6; ++j)
    if (mask == cm[j]) return j;
  return -1;
}

}  // namespace

std::optional<int> classify_type(const PetersenHost& host,
                                 const std::vector<EdgeId>& pm) {
  if (host.base_edge.size() != host.g.edge_count())
    throw std::invalid_argument("classify_type: host lacks provenance");
  if (!is_perfect_matching(host.g, pm)) return std::nullopt;
  std::uint16_t mask = 0;
  for (EdgeId e : pm) mask |= static_cast<std::uint16_t>(1u << host.base_edge[e]);
  static const std::array<std::uint16_t, 6> cm = canonical_masks();
  int t = mask_to_type(mask, cm);
  if (t < 0) return std::nullopt;
  return t;
}

QBlockType classify_q_block(const HFamily& h, int block,
                            const std::vector<EdgeId>& pm) {
  if (h.variant != HVariant::kBase)
    throw std::invalid_argument("classify_q_block: base-variant host required");
  if (block < 0 || block > 2)
    throw std::invalid_argument("classify_q_block: block index out of range");
  if (!is_perfect_matching(h.g, pm))
    throw std::invalid_argument("classify_q_block: not a perfect matching");

  std::uint16_t proj[2] = {0, 0};
  int ext_z1 = 0, ext_z2 = 0;
  for (EdgeId e : pm) {
    const HEdgeInfo& info = h.edge_info[e];
    if (info.block == block) {
      proj[info.q.copy - 1] |=
          static_cast<std::uint16_t>(1u << info.q.base);
    } else if (info.glue == HEdgeInfo::Glue::kXZ1 &&
               info.glue_block == block) {
      ++ext_z1;
    } else if (info.glue == HEdgeInfo::Glue::kTriangle &&
               (info.glue_block == block ||
                (info.glue_block + 1) % 3 == block)) {
      ++ext_z2;
    }
  }
  if (ext_z1 + ext_z2 != 1)
    throw std::logic_error(
        "classify_q_block: block boundary not met exactly once");

  static const std::array<std::uint16_t, 6> cm = canonical_masks();
  const int side = ext_z1 ? 1 : 2;
  const int ext_copy = side - 1;
  const int full_copy = 1 - ext_copy;
  int ext_type =
      mask_to_type(proj[ext_copy] | (1u << kU1V1Base), cm);
  int full_type = mask_to_type(proj[full_copy], cm);
  if (ext_type != 0 && ext_type != 1)
    throw std::logic_error(
        "classify_q_block: restriction does not extend canonically");
  if (full_type < 2)
    throw std::logic_error(
        "classify_q_block: full-side restriction does not classify");

  QBlockType out;
  out.external_side = side;
  if (side == 1) {
    out.first = ext_type;
    out.second = full_type;
  } else {
    out.first = full_type;
    out.second = ext_type;
  }
  return out;
}

namespace {

struct TypedTarget {
  // Per copy (0,1): base edges the matching must project onto.
  std::array<std::vector<EdgeId>, 2> bases;
  int side = 0;  // which copy carries the outside edge
};

TypedTarget block_target(const QBlockType& t) {
  auto in_ext = [](int x) { return x == 0 || x == 1; };
  if (in_ext(t.first) == in_ext(t.second))
    throw std::invalid_argument(
        "find_typed_pm: exactly one coordinate must be in {0,1}");
  if (t.first < 0 || t.first > 5 || t.second < 0 || t.second > 5)
    throw std::invalid_argument("find_typed_pm: type out of range");
  TypedTarget target;
  target.side = in_ext(t.first) ? 1 : 2;
  if (t.external_side != 0 && t.external_side != target.side)
    throw std::invalid_argument(
        "find_typed_pm: external_side inconsistent with the type pair");
  const CanonicalMatchings& cm = canonical_matchings();
  int types[2] = {t.first, t.second};
  for (int c = 0; c < 2; ++c) {
    for (EdgeId b : cm.m[types[c]]) {
      if (c == target.side - 1 && b == kU1V1Base)
        continue;  // the restored u1v1 edge is virtual
      target.bases[c].push_back(b);
    }
  }
  return target;
}

}  // namespace

std::optional<std::vector<EdgeId>> find_typed_pm(
    const HFamily& h, const std::array<QBlockType, 3>& types,
    const TypedPmOptions& opts) {
  if (h.variant != HVariant::kBase)
    throw std::invalid_argument("find_typed_pm: base-variant host required");

  std::array<TypedTarget, 3> targets;
  int z1_external = 0;
  for (int b = 0; b < 3; ++b) {
    targets[b] = block_target(types[b]);
    if (targets[b].side == 1) ++z1_external;
  }
  // Each block's boundary carries exactly one matching edge; a z2-side edge
  // is a triangle edge shared by two blocks, so only 3 = 3 z1-edges or
  // 3 = 1 z1-edge + 2 (one triangle edge) balance.
  if (z1_external != 3 && z1_external != 1) return std::nullopt;

  std::vector<char> forbidden(h.g.edge_count(), 0);
  for (EdgeId e : opts.forbidden) {
    if (e >= h.g.edge_count())
      throw std::invalid_argument("find_typed_pm: forbidden id out of range");
    forbidden[e] = 1;
  }
  std::set<std::pair<VertexId, VertexId>> banned_pairs(
      opts.forbidden_glue_pairs.begin(), opts.forbidden_glue_pairs.end());

  // Candidate copies per (block, copy, base edge), ascending EdgeIds.
  std::array<std::array<std::array<std::vector<EdgeId>, 15>, 2>, 3> cand;
  for (EdgeId e = 0; e < h.g.edge_count(); ++e) {
    const HEdgeInfo& info = h.edge_info[e];
    if (info.block >= 0)
      cand[info.block][info.q.copy - 1][info.q.base].push_back(e);
  }

  auto pick_plain = [&](const std::vector<EdgeId>& list) -> EdgeId {
    for (EdgeId e : list)
      if (!forbidden[e]) return e;
    return kNoEdge;
  };
  auto pick_glue = [&](const std::vector<EdgeId>& bundle) -> EdgeId {
    if (bundle.empty()) return kNoEdge;
    const Edge& ed = h.g.edge(bundle.front());
    if (banned_pairs.count({std::min(ed.a, ed.b), std::max(ed.a, ed.b)}))
      return kNoEdge;
    return pick_plain(bundle);
  };

  auto assign_blocks = [&](std::vector<EdgeId>& out) -> bool {
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 2; ++c)
        for (EdgeId base : targets[b].bases[c]) {
          EdgeId e = pick_plain(cand[b][c][base]);
          if (e == kNoEdge) return false;
          out.push_back(e);
        }
    return true;
  };

  auto finish = [&](std::vector<EdgeId> pm) -> std::optional<std::vector<EdgeId>> {
    std::sort(pm.begin(), pm.end());
    if (!is_perfect_matching(h.g, pm))
      throw std::logic_error("find_typed_pm: assembled set is not perfect");
    for (int b = 0; b < 3; ++b)
      if (!(classify_q_block(h, b, pm) ==
            QBlockType{types[b].first, types[b].second, targets[b].side}))
        throw std::logic_error("find_typed_pm: classification mismatch");
    return pm;
  };

  if (z1_external == 3) {
    // All three connectors leave through z1; the x assignments must be a
    // system of distinct representatives, which leaves the two rotations.
    for (int slot = 0; slot < 2; ++slot) {
      std::vector<EdgeId> pm;
      bool ok = true;
      for (int b = 0; b < 3 && ok; ++b) {
        EdgeId e = pick_glue(h.xz1[b][slot]);
        if (e == kNoEdge)
          ok = false;
        else
          pm.push_back(e);
      }
      if (ok && assign_blocks(pm)) return finish(std::move(pm));
    }
    return std::nullopt;
  }

  // One z1-external block i; the other two share the triangle edge
  // z2^{i+1} z2^{i+2}, and the two x vertices not taken by the connector
  // are matched inside T.
  int i = 0;
  while (targets[i].side != 1) ++i;
  if (targets[(i + 1) % 3].side != 2 || targets[(i + 2) % 3].side != 2)
    return std::nullopt;
  for (int slot = 0; slot < 2; ++slot) {
    EdgeId conn = pick_glue(h.xz1[i][slot]);
    if (conn == kNoEdge) continue;
    int x_used = (i + 1 + slot) % 3;
    int t_pair = 2 - x_used;  // pair order (x1x2),(x1x3),(x2x3)
    EdgeId t_edge = pick_glue(h.t_internal[t_pair]);
    EdgeId tri = pick_glue(h.triangle[(i + 1) % 3]);
    if (t_edge == kNoEdge || tri == kNoEdge) continue;
    std::vector<EdgeId> pm{conn, t_edge, tri};
    if (assign_blocks(pm)) return finish(std::move(pm));
  }
  return std::nullopt;
}

std::pair<std::vector<std::uint8_t>, int> phi_omega(
    const std::vector<std::vector<EdgeId>>& family,
    const std::vector<EdgeId>& w) {
  std::set<EdgeId> used;
  for (const auto& member : family)
    for (EdgeId e : member)
      if (!used.insert(e).second)
        throw std::invalid_argument("phi_omega: family is not disjoint");
  std::set<EdgeId> wset(w.begin(), w.end());
  std::vector<std::uint8_t> phi(family.size(), 0);
  for (std::size_t j = 0; j < family.size(); ++j) {
    std::size_t hits = 0;
    for (EdgeId e : family[j])
      if (wset.count(e)) ++hits;
    phi[j] = static_cast<std::uint8_t>(hits % 2);
  }
  int omega = static_cast<int>(std::count(phi.begin(), phi.end(), 1));
  return {std::move(phi), omega};
}

namespace {

struct TypedPms {
  std::vector<std::uint64_t> masks;
  std::vector<int> types;
};

TypedPms all_typed_pms(const PetersenHost& host) {
  if (host.g.edge_count() > 64)
    throw std::logic_error("host too large for mask enumeration");
  TypedPms out;
  for_each_perfect_matching(host.g, {}, [&](const std::vector<EdgeId>& pm) {
    std::uint64_t mask = 0;
    for (EdgeId e : pm) mask |= 1ull << e;
    out.masks.push_back(mask);
    auto t = classify_type(host, pm);
    if (!t) throw std::logic_error("perfect matching failed to classify");
    out.types.push_back(*t);
    return true;
  });
  return out;
}

}  // namespace

bool verify_forced_type(int j) {
  if (j < 0 || j > 5)
    throw std::invalid_argument("verify_forced_type: type out of range");
  PetersenHost host = build_petersen_host({j});
  TypedPms pms = all_typed_pms(host);
  for (std::size_t a = 0; a < pms.masks.size(); ++a)
    for (std::size_t b = a + 1; b < pms.masks.size(); ++b) {
      if (pms.masks[a] & pms.masks[b]) continue;
      if (pms.types[a] != j && pms.types[b] != j) return false;
    }
  return true;
}

bool verify_subcollection_lemma(const std::vector<int>& types) {
  if (types.empty() || types.size() > 3)
    throw std::invalid_argument(
        "verify_subcollection_lemma: multiset size must be 1..3");
  PetersenHost host = build_petersen_host(types);
  TypedPms pms = all_typed_pms(host);
  const std::size_t total = pms.masks.size();
  const std::size_t want = types.size() + 1;

  std::array<int, 6> required{};
  for (int t : types) ++required[t];

  std::array<int, 6> have{};
  bool ok = true;
  std::vector<std::size_t> pick;
  std::function<void(std::size_t, std::uint64_t)> rec =
      [&](std::size_t start, std::uint64_t used) {
        if (!ok) return;
        if (pick.size() == want) {
          for (int t = 0; t < 6; ++t)
            if (have[t] < required[t]) {
              ok = false;
              return;
            }
          return;
        }
        for (std::size_t i = start; i < total && ok; ++i) {
          if (used & pms.masks[i]) continue;
          pick.push_back(i);
          ++have[pms.types[i]];
          rec(i + 1, used | pms.masks[i]);
          --have[pms.types[i]];
          pick.pop_back();
        }
      };
  rec(0, 0);
  return ok;
}

}  // namespace matchfactory
