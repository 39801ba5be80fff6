#include "matchfactory/constructions.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <stdexcept>

#include "matchfactory/classify.hpp"
#include "matchfactory/connectivity.hpp"
#include "matchfactory/search.hpp"

namespace matchfactory {

std::pair<Multigraph, PetersenLabeling> petersen() {
  Multigraph g(10);
  PetersenLabeling lab;
  for (int i = 0; i < 5; ++i) {
    lab.outer[i] = static_cast<VertexId>(i);      // v_{i+1}
    lab.inner[i] = static_cast<VertexId>(5 + i);  // u_{i+1}
  }
  for (int i = 0; i < 5; ++i)
    lab.outer_edges[i] = g.add_edge(lab.outer[i], lab.outer[(i + 1) % 5]);
  for (int i = 0; i < 5; ++i)
    lab.spokes[i] = g.add_edge(lab.inner[i], lab.outer[i]);
  // inner 5-cycle u1 u3 u5 u2 u4
  static constexpr int kInnerOrder[5] = {0, 2, 4, 1, 3};
  for (int i = 0; i < 5; ++i)
    lab.inner_edges[i] = g.add_edge(lab.inner[kInnerOrder[i]],
                                    lab.inner[kInnerOrder[(i + 1) % 5]]);
  return {std::move(g), lab};
}

namespace {

CanonicalMatchings compute_canonical_matchings() {
  auto [g, lab] = petersen();
  std::vector<std::vector<EdgeId>> pms;
  for_each_perfect_matching(g, {}, [&](const std::vector<EdgeId>& pm) {
    std::vector<EdgeId> s = pm;
    std::sort(s.begin(), s.end());
    pms.push_back(std::move(s));
    return true;
  });
  if (pms.size() != 6)
    throw std::logic_error("petersen labeling broken: expected 6 matchings");

  CanonicalMatchings cm;
  cm.m[0].assign(lab.spokes.begin(), lab.spokes.end());
  std::sort(cm.m[0].begin(), cm.m[0].end());

  const EdgeId u1v1 = lab.spokes[0];
  for (const auto& pm : pms)
    if (std::binary_search(pm.begin(), pm.end(), u1v1) && pm != cm.m[0])
      cm.m[1] = pm;
  if (cm.m[1].empty())
    throw std::logic_error("no second matching through u1v1");

  // Rotation v_j -> v_{j+1}, u_j -> u_{j+1}; an automorphism of the graph.
  std::vector<VertexId> sigma(10);
  for (int i = 0; i < 5; ++i) {
    sigma[lab.outer[i]] = lab.outer[(i + 1) % 5];
    sigma[lab.inner[i]] = lab.inner[(i + 1) % 5];
  }
  std::map<std::pair<VertexId, VertexId>, EdgeId> id_of;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    auto [a, b] = g.edge(e);
    id_of[{std::min(a, b), std::max(a, b)}] = e;
  }
  for (int i = 2; i < 6; ++i) {
    for (EdgeId e : cm.m[i - 1]) {
      VertexId a = sigma[g.edge(e).a], b = sigma[g.edge(e).b];
      auto it = id_of.find({std::min(a, b), std::max(a, b)});
      if (it == id_of.end())
        throw std::logic_error("rotation is not an automorphism");
      cm.m[i].push_back(it->second);
    }
    std::sort(cm.m[i].begin(), cm.m[i].end());
  }

  // Gate the construction: the six sets must be exactly the perfect
  // matchings of the graph, pairwise intersections must be distinct
  // singletons covering all 15 edges.
  std::set<std::vector<EdgeId>> ours(cm.m.begin(), cm.m.end());
  std::set<std::vector<EdgeId>> found(pms.begin(), pms.end());
  if (ours != found)
    throw std::logic_error("canonical matchings are not the matching set");
  std::set<EdgeId> intersections;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) {
      std::vector<EdgeId> inter;
      std::set_intersection(cm.m[i].begin(), cm.m[i].end(), cm.m[j].begin(),
                            cm.m[j].end(), std::back_inserter(inter));
      if (inter.size() != 1)
        throw std::logic_error("pairwise intersection not a singleton");
      intersections.insert(inter[0]);
    }
  if (intersections.size() != 15)
    throw std::logic_error("intersection map is not a bijection");
  return cm;
}

}  // namespace

const CanonicalMatchings& canonical_matchings() {
  static const CanonicalMatchings cm = compute_canonical_matchings();
  return cm;
}

PetersenHost build_petersen_host(const std::vector<int>& types) {
  for (int t : types)
    if (t < 0 || t > 5)
      throw std::invalid_argument("matching type must be in 0..5");
  const CanonicalMatchings& cm = canonical_matchings();
  PetersenHost host;
  auto [g, lab] = petersen();
  host.labeling = lab;
  host.base_edge.resize(15);
  host.source.assign(15, -1);
  for (EdgeId e = 0; e < 15; ++e)
    host.base_edge[e] = static_cast<std::uint8_t>(e);
  std::vector<std::vector<EdgeId>> family;
  for (int t : types) family.push_back(cm.m[t]);
  host.g = add_matchings(g, family);
  for (std::size_t i = 0; i < types.size(); ++i)
    for (EdgeId e : cm.m[types[i]]) {
      host.base_edge.push_back(static_cast<std::uint8_t>(e));
      host.source.push_back(static_cast<int>(i));
    }
  host.added_types = types;
  assert(host.base_edge.size() == host.g.edge_count());
  return host;
}

PetersenHost build_p(int k) {
  if (k < 1) throw std::invalid_argument("build_p: k must be >= 1");
  std::vector<int> types(k, 0);
  for (int round = 1; round < k; ++round) {
    types.push_back(1);
    types.push_back(3);
    types.push_back(4);
  }
  return build_petersen_host(types);
}

namespace {

// Edges of one Q block in local coordinates: copy c in {1,2} occupies
// 9(c-1)+0..8 as v1..v5,u2..u5, the merged u1 vertex is 18. All copies of
// the u1v1 multiedge are dropped.
struct QParts {
  std::vector<Edge> edges;
  std::vector<QEdgeInfo> info;
};

QParts q_block_parts(const PetersenHost& pk) {
  const EdgeId u1v1_base = 5;  // spokes[0]
  auto map_vertex = [](int copy, VertexId pv) -> VertexId {
    if (pv == 5) return 18;                     // u1 -> merged vertex
    if (pv < 5) return 9 * (copy - 1) + pv;     // v_i
    return 9 * (copy - 1) + pv - 1;             // u2..u5
  };
  QParts parts;
  for (int copy = 1; copy <= 2; ++copy)
    for (EdgeId e = 0; e < pk.g.edge_count(); ++e) {
      if (pk.base_edge[e] == u1v1_base) continue;
      const Edge& ed = pk.g.edge(e);
      parts.edges.push_back(
          {map_vertex(copy, ed.a), map_vertex(copy, ed.b)});
      parts.info.push_back({static_cast<std::uint8_t>(copy),
                            pk.base_edge[e],
                            static_cast<std::int16_t>(pk.source[e])});
    }
  return parts;
}

}  // namespace

QGadget build_q(int k) {
  if (k < 1) throw std::invalid_argument("build_q: k must be >= 1");
  QParts parts = q_block_parts(build_p(k));
  QGadget q;
  q.g = Multigraph(19);
  q.embedding.role = BlockEmbedding::Role::kQBlock;
  q.embedding.vertex_map.resize(19);
  for (VertexId v = 0; v < 19; ++v) q.embedding.vertex_map[v] = v;
  q.embedding.u_q = 18;
  q.embedding.z1 = 0;
  q.embedding.z2 = 9;
  for (std::size_t i = 0; i < parts.edges.size(); ++i) {
    EdgeId id = q.g.add_edge(parts.edges[i].a, parts.edges[i].b);
    if (parts.edges[i].a == 18 || parts.edges[i].b == 18)
      q.embedding.u_side[parts.info[i].copy - 1].push_back(id);
  }
  q.edge_info = std::move(parts.info);
  return q;
}

std::pair<Multigraph, BlockEmbedding> build_t(int k) {
  if (k < 1) throw std::invalid_argument("build_t: k must be >= 1");
  Multigraph g(3);
  static constexpr int kPairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  for (const auto& p : kPairs)
    for (int c = 0; c < k; ++c) g.add_edge(p[0], p[1]);
  BlockEmbedding emb;
  emb.role = BlockEmbedding::Role::kTBlock;
  emb.vertex_map = {0, 1, 2};
  emb.x = {0, 1, 2};
  return {std::move(g), emb};
}

SFamily build_s(const Multigraph& base, int k) {
  if (k < 1) throw std::invalid_argument("build_s: k must be >= 1");
  if (is_regular(base) != std::optional<std::uint32_t>{3})
    throw std::invalid_argument("build_s: base graph must be cubic");
  if (!base.connected())
    throw std::invalid_argument("build_s: base graph must be connected");
  if (edge_connectivity(base) < 2)
    throw std::invalid_argument("build_s: base graph must be bridgeless");

  const VertexId nb = base.vertex_count();
  const EdgeId mb = base.edge_count();
  QParts parts = q_block_parts(build_p(k));

  SFamily s;
  s.k = k;
  s.g = Multigraph(19 * mb + 3 * nb);

  // One Q block per base edge; z1 sits at the min(a,b) side.
  for (EdgeId e = 0; e < mb; ++e) {
    VertexId off = 19 * e;
    BlockEmbedding emb;
    emb.role = BlockEmbedding::Role::kQBlock;
    emb.index = static_cast<int>(e);
    emb.vertex_map.resize(19);
    for (VertexId v = 0; v < 19; ++v) emb.vertex_map[v] = off + v;
    emb.u_q = off + 18;
    emb.z1 = off + 0;
    emb.z2 = off + 9;
    for (std::size_t i = 0; i < parts.edges.size(); ++i) {
      EdgeId id = s.g.add_edge(off + parts.edges[i].a, off + parts.edges[i].b);
      if (parts.edges[i].a == 18 || parts.edges[i].b == 18)
        emb.u_side[parts.info[i].copy - 1].push_back(id);
    }
    s.q_blocks.push_back(std::move(emb));
  }
  // One T block per base vertex.
  for (VertexId v = 0; v < nb; ++v) {
    VertexId off = 19 * mb + 3 * v;
    BlockEmbedding emb;
    emb.role = BlockEmbedding::Role::kTBlock;
    emb.index = static_cast<int>(v);
    emb.vertex_map = {off, off + 1, off + 2};
    emb.x = {off, off + 1, off + 2};
    static constexpr int kPairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
    for (const auto& p : kPairs)
      for (int c = 0; c < k; ++c) s.g.add_edge(off + p[0], off + p[1]);
    s.t_blocks.push_back(std::move(emb));
  }
  // Glue: at vertex v with incident edges e_1 < e_2 < e_3, the block of e_j
  // connects k edges to x_j and k edges to x_{j+1} (mod 3); each x vertex
  // then receives 2k outside edges.
  auto adj = adjacency(base);
  for (VertexId v = 0; v < nb; ++v) {
    if (adj[v].size() != 3)
      throw std::invalid_argument("build_s: base graph must be cubic");
    for (int j = 0; j < 3; ++j) {
      EdgeId e = adj[v][j].second;
      const Edge& ed = base.edge(e);
      VertexId zv = v == std::min(ed.a, ed.b) ? s.q_blocks[e].z1
                                              : s.q_blocks[e].z2;
      for (int c = 0; c < k; ++c) s.g.add_edge(zv, s.t_blocks[v].x[j]);
      for (int c = 0; c < k; ++c)
        s.g.add_edge(zv, s.t_blocks[v].x[(j + 1) % 3]);
    }
  }
  return s;
}

std::string variant_name(HVariant v) {
  switch (v) {
    case HVariant::kBase: return "base";
    case HVariant::kPrime: return "prime";
    case HVariant::kDoublePrime: return "double-prime";
    case HVariant::kTriplePrime: return "triple-prime";
  }
  return "?";
}

HFamily build_h(int k, HVariant variant) {
  if (k < 1) throw std::invalid_argument("build_h: k must be >= 1");
  QParts parts = q_block_parts(build_p(k));

  HFamily h;
  h.k = k;
  h.variant = HVariant::kBase;
  h.g = Multigraph(60);
  h.x = {57, 58, 59};

  for (int b = 0; b < 3; ++b) {
    VertexId off = 19 * b;
    BlockEmbedding emb;
    emb.role = BlockEmbedding::Role::kQBlock;
    emb.index = b;
    emb.vertex_map.resize(19);
    for (VertexId v = 0; v < 19; ++v) emb.vertex_map[v] = off + v;
    emb.u_q = off + 18;
    emb.z1 = off + 0;
    emb.z2 = off + 9;
    for (std::size_t i = 0; i < parts.edges.size(); ++i) {
      EdgeId id = h.g.add_edge(off + parts.edges[i].a, off + parts.edges[i].b);
      if (parts.edges[i].a == 18 || parts.edges[i].b == 18)
        emb.u_side[parts.info[i].copy - 1].push_back(id);
      HEdgeInfo info;
      info.block = static_cast<std::int8_t>(b);
      info.q = parts.info[i];
      h.edge_info.push_back(info);
    }
    h.blocks[b] = std::move(emb);
  }

  // Glue: k edges x_{i+1} -- z1^i, k edges x_{i+2} -- z1^i, k edges
  // z2^i -- z2^{i+1}, indices mod 3.
  for (int i = 0; i < 3; ++i)
    for (int slot = 0; slot < 2; ++slot) {
      VertexId xv = h.x[(i + 1 + slot) % 3];
      for (int c = 0; c < k; ++c) {
        EdgeId id = h.g.add_edge(xv, h.blocks[i].z1);
        h.xz1[i][slot].push_back(id);
        HEdgeInfo info;
        info.glue = HEdgeInfo::Glue::kXZ1;
        info.glue_block = static_cast<std::uint8_t>(i);
        info.glue_slot = static_cast<std::uint8_t>(slot);
        h.edge_info.push_back(info);
      }
    }
  for (int i = 0; i < 3; ++i)
    for (int c = 0; c < k; ++c) {
      EdgeId id = h.g.add_edge(h.blocks[i].z2, h.blocks[(i + 1) % 3].z2);
      h.triangle[i].push_back(id);
      HEdgeInfo info;
      info.glue = HEdgeInfo::Glue::kTriangle;
      info.glue_block = static_cast<std::uint8_t>(i);
      h.edge_info.push_back(info);
    }
  static constexpr int kPairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  for (int p = 0; p < 3; ++p)
    for (int c = 0; c < k; ++c) {
      EdgeId id = h.g.add_edge(h.x[kPairs[p][0]], h.x[kPairs[p][1]]);
      h.t_internal[p].push_back(id);
      HEdgeInfo info;
      info.glue = HEdgeInfo::Glue::kTInternal;
      info.glue_block = static_cast<std::uint8_t>(p);
      h.edge_info.push_back(info);
    }

  assert(h.g.edge_count() == static_cast<EdgeId>(120 * k));

  if (variant != HVariant::kBase) {
    PmFamily fam = pm_family_n(h);
    std::vector<int> members;
    switch (variant) {
      case HVariant::kPrime: members = {0, 1, 2}; break;
      case HVariant::kDoublePrime: members = {0}; break;
      case HVariant::kTriplePrime: members = {0, 1}; break;
      default: break;
    }
    for (int mi : members) {
      MatchingCopyRange range;
      range.label = "N" + std::to_string(mi);
      range.first = h.g.edge_count();
      range.count = static_cast<EdgeId>(fam.n[mi].size());
      for (EdgeId e : fam.n[mi]) {
        h.g.add_edge(h.g.edge(e).a, h.g.edge(e).b);
        h.edge_info.push_back(h.edge_info[e]);
      }
      h.added.push_back(std::move(range));
    }
    h.variant = variant;
  }
  return h;
}

PmFamily pm_family_n(const HFamily& h) {
  if (h.variant != HVariant::kBase)
    throw std::invalid_argument("pm_family_n: base-variant host required");

  PmFamily fam;
  for (int b = 0; b < 3; ++b) fam.types[0][b] = {0, 4, 1};
  for (int i = 1; i <= 3; ++i) {
    fam.types[i][(i - 1) % 3] = {1, 3, 1};
    fam.types[i][i % 3] = {3, 0, 2};
    fam.types[i][(i + 1) % 3] = {4, 1, 2};
  }

  TypedPmOptions opts;
  for (int mi = 0; mi < 4; ++mi) {
    auto res = find_typed_pm(h, fam.types[mi], opts);
    if (!res) {
      // Strict edge-id disjointness is unattainable at k = 1 (the host has
      // no two disjoint perfect matchings at all); fall back to the glue
      // constraints alone, which keep the multiset identity intact.
      TypedPmOptions relaxed;
      relaxed.forbidden_glue_pairs = opts.forbidden_glue_pairs;
      res = find_typed_pm(h, fam.types[mi], relaxed);
      if (!res)
        throw std::logic_error("pm_family_n: typed matching not found");
    }
    fam.n[mi] = *res;
    for (EdgeId e : fam.n[mi]) {
      opts.forbidden.push_back(e);
      if (h.edge_info[e].glue != HEdgeInfo::Glue::kNone) {
        VertexId a = h.g.edge(e).a, b = h.g.edge(e).b;
        opts.forbidden_glue_pairs.emplace_back(std::min(a, b),
                                               std::max(a, b));
      }
    }
  }

  fam.edge_disjoint = true;
  std::vector<char> seen(h.g.edge_count(), 0);
  for (const auto& member : fam.n)
    for (EdgeId e : member) {
      if (seen[e]) fam.edge_disjoint = false;
      seen[e] = 1;
    }
  if (h.k >= 2 && !fam.edge_disjoint)
    throw std::logic_error("pm_family_n: family must be disjoint for k >= 2");
  return fam;
}

Multigraph meredith_extend(const Multigraph& g, VertexId v) {
  if (v >= g.vertex_count())
    throw std::invalid_argument("meredith_extend: vertex out of range");
  auto adj = adjacency(g);
  const std::uint32_t t = static_cast<std::uint32_t>(adj[v].size());
  if (t < 2)
    throw std::invalid_argument("meredith_extend: degree must be >= 2");

  auto map_vertex = [v](VertexId w) { return w > v ? w - 1 : w; };
  const VertexId base = g.vertex_count() - 1;  // first gadget vertex
  Multigraph out(g.vertex_count() - 1 + 2 * t - 1);

  // Former edges of v, sorted by (new neighbor id, edge id), attach to the
  // degree-(t-1) side vertices base+0..base+t-1 in order.
  std::vector<std::pair<VertexId, EdgeId>> ends;
  for (auto [w, e] : adj[v]) ends.emplace_back(map_vertex(w), e);
  std::sort(ends.begin(), ends.end());
  std::vector<std::uint32_t> slot_of_edge(g.edge_count(), 0);
  for (std::uint32_t i = 0; i < t; ++i) slot_of_edge[ends[i].second] = i;

  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (ed.a != v && ed.b != v) {
      out.add_edge(map_vertex(ed.a), map_vertex(ed.b));
    } else {
      VertexId other = ed.a == v ? ed.b : ed.a;
      out.add_edge(map_vertex(other), base + slot_of_edge[e]);
    }
  }
  // K_{t,t-1} internals: attachment side base+0..t-1, inner side
  // base+t..base+2t-2.
  for (std::uint32_t i = 0; i < t; ++i)
    for (std::uint32_t j = 0; j < t - 1; ++j)
      out.add_edge(base + i, base + t + j);
  return out;
}

Multigraph meredith_simple(const Multigraph& g,
                           const std::vector<VertexId>& cover) {
  std::vector<char> in_cover(g.vertex_count(), 0);
  for (VertexId v : cover) {
    if (v >= g.vertex_count())
      throw std::invalid_argument("meredith_simple: cover vertex out of range");
    in_cover[v] = 1;
  }
  PairClasses pc = pair_classes(g);
  for (std::uint32_t c = 0; c < pc.count(); ++c)
    if (pc.members[c].size() >= 2 && !in_cover[pc.pair_of[c].first] &&
        !in_cover[pc.pair_of[c].second])
      throw std::invalid_argument(
          "meredith_simple: cover misses a parallel class");
  auto deg = g.degrees();
  std::vector<VertexId> order;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (in_cover[v]) {
      if (deg[v] < 2)
        throw std::invalid_argument(
            "meredith_simple: cover vertex with degree < 2");
      order.push_back(v);
    }
  // Decreasing order keeps the remaining cover indices stable across the
  // vertex removals.
  Multigraph cur = g;
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    cur = meredith_extend(cur, *it);
  return cur;
}

namespace {

// Exact minimum vertex cover via branch and bound on the simple projection.
class CoverSolver {
 public:
  explicit CoverSolver(const Multigraph& g) {
    n_ = g.vertex_count();
    adj_.resize(n_);
    PairClasses pc = pair_classes(g);
    for (std::uint32_t c = 0; c < pc.count(); ++c) {
      adj_[pc.pair_of[c].first].push_back(pc.pair_of[c].second);
      adj_[pc.pair_of[c].second].push_back(pc.pair_of[c].first);
    }
    alive_.assign(n_, 1);
    deg_.resize(n_);
    for (VertexId v = 0; v < n_; ++v)
      deg_[v] = static_cast<int>(adj_[v].size());
  }

  std::vector<VertexId> solve() {
    best_.clear();
    for (VertexId v = 0; v < n_; ++v) best_.push_back(v);  // trivial cover
    std::vector<VertexId> cur;
    branch(cur);
    std::sort(best_.begin(), best_.end());
    return best_;
  }

 private:
  int matching_lower_bound() const {
    std::vector<char> used(n_, 0);
    int size = 0;
    for (VertexId v = 0; v < n_; ++v) {
      if (!alive_[v] || used[v]) continue;
      for (VertexId u : adj_[v])
        if (alive_[u] && !used[u] && u != v) {
          used[v] = used[u] = 1;
          ++size;
          break;
        }
    }
    return size;
  }

  void remove_vertex(VertexId v, std::vector<VertexId>& trail) {
    alive_[v] = 0;
    trail.push_back(v);
    for (VertexId u : adj_[v])
      if (alive_[u]) --deg_[u];
  }

  void restore(std::vector<VertexId>& trail, std::size_t mark) {
    while (trail.size() > mark) {
      VertexId v = trail.back();
      trail.pop_back();
      alive_[v] = 1;
      for (VertexId u : adj_[v])
        if (alive_[u]) ++deg_[u];
    }
  }

  void branch(std::vector<VertexId>& cover) {
    if (cover.size() >= best_.size()) return;
    std::vector<VertexId> trail;
    const std::size_t cover_mark = cover.size();

    // Reductions: drop isolated vertices, take the neighbor of any
    // degree-1 vertex.
    bool changed = true;
    while (changed && cover.size() < best_.size()) {
      changed = false;
      for (VertexId v = 0; v < n_; ++v) {
        if (!alive_[v]) continue;
        if (deg_[v] == 0) {
          remove_vertex(v, trail);
          changed = true;
        } else if (deg_[v] == 1) {
          for (VertexId w : adj_[v])
            if (alive_[w]) {
              cover.push_back(w);
              remove_vertex(w, trail);
              break;
            }
          changed = true;
        }
      }
    }

    if (cover.size() < best_.size()) {
      VertexId pivot = kNoVertex;
      int maxdeg = 0;
      for (VertexId v = 0; v < n_; ++v)
        if (alive_[v] && deg_[v] > maxdeg) {
          maxdeg = deg_[v];
          pivot = v;
        }
      if (pivot == kNoVertex) {
        best_ = cover;
      } else if (cover.size() + matching_lower_bound() < best_.size()) {
        const std::size_t tmark = trail.size();
        const std::size_t cmark = cover.size();
        // Branch 1: pivot joins the cover.
        cover.push_back(pivot);
        remove_vertex(pivot, trail);
        branch(cover);
        restore(trail, tmark);
        cover.resize(cmark);
        // Branch 2: pivot stays out, so all its neighbors join.
        std::vector<VertexId> nbrs;
        for (VertexId u : adj_[pivot])
          if (alive_[u]) nbrs.push_back(u);
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        for (VertexId u : nbrs) {
          cover.push_back(u);
          remove_vertex(u, trail);
        }
        remove_vertex(pivot, trail);
        branch(cover);
        restore(trail, tmark);
        cover.resize(cmark);
      }
    }

    restore(trail, 0);
    cover.resize(cover_mark);
  }

  VertexId n_ = 0;
  std::vector<std::vector<VertexId>> adj_;
  std::vector<char> alive_;
  std::vector<int> deg_;
  std::vector<VertexId> best_;
};

}  // namespace

std::vector<VertexId> min_vertex_cover(const Multigraph& g) {
  if (g.vertex_count() == 0) return {};
  CoverSolver solver(g);
  return solver.solve();
}

ApexHost build_apex_host(int k) {
  QGadget q = build_q(k);
  ApexHost host;
  host.g = Multigraph(20);
  for (const Edge& e : q.g.edges()) host.g.add_edge(e.a, e.b);
  host.apex = 19;
  for (int c = 0; c < 2 * k; ++c)
    host.v1.push_back(host.g.add_edge(host.apex, q.embedding.z1));
  for (int c = 0; c < 2 * k; ++c)
    host.v2.push_back(host.g.add_edge(host.apex, q.embedding.z2));
  return host;
}

Counterexample counterexample(std::uint32_t r) {
  if (r < 4)
    throw std::invalid_argument("counterexample: r must be >= 4");
  Counterexample out;
  out.r = r;
  out.missing_family_size = r - 2;
  switch (r % 4) {
    case 0:
      out.h = build_h(static_cast<int>(r / 4), HVariant::kBase);
      out.claimed_connectivity = r;
      break;
    case 1:
      out.h = build_h(static_cast<int>((r - 1) / 4), HVariant::kDoublePrime);
      out.claimed_connectivity = r - 1;
      break;
    case 2:
      out.h = build_h(static_cast<int>((r - 2) / 4), HVariant::kTriplePrime);
      out.claimed_connectivity = r - 2;
      break;
    default:
      out.h = build_h(static_cast<int>((r - 3) / 4), HVariant::kPrime);
      out.claimed_connectivity = r - 1;
      break;
  }
  return out;
}

}  // namespace matchfactory
