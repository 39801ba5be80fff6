#include "matchfactory/multigraph.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace matchfactory {

Multigraph::Multigraph(VertexId n, std::vector<Edge> edges) : n_(n) {
  edges_.reserve(edges.size());
  for (const Edge& e : edges) add_edge(e.a, e.b);
}

EdgeId Multigraph::add_edge(VertexId a, VertexId b) {
  if (a >= n_ || b >= n_)
    throw std::invalid_argument("edge endpoint out of range: " +
                                std::to_string(a) + "," + std::to_string(b));
  if (a == b)
    throw std::invalid_argument("loop edge rejected at vertex " +
                                std::to_string(a));
  edges_.push_back({a, b});
  return static_cast<EdgeId>(edges_.size() - 1);
}

std::vector<std::uint32_t> Multigraph::degrees() const {
  std::vector<std::uint32_t> deg(n_, 0);
  for (const Edge& e : edges_) {
    ++deg[e.a];
    ++deg[e.b];
  }
  return deg;
}

bool Multigraph::connected() const {
  if (n_ == 0) return true;
  auto adj = adjacency(*this);
  std::vector<char> seen(n_, 0);
  std::vector<VertexId> stack{0};
  seen[0] = 1;
  VertexId reached = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (auto [w, e] : adj[v]) {
      (void)e;
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n_;
}

std::vector<std::vector<std::pair<VertexId, EdgeId>>> adjacency(
    const Multigraph& g) {
  std::vector<std::vector<std::pair<VertexId, EdgeId>>> adj(g.vertex_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    adj[ed.a].emplace_back(ed.b, e);
    adj[ed.b].emplace_back(ed.a, e);
  }
  return adj;
}

std::vector<EdgeId> boundary(const Multigraph& g,
                             const std::vector<VertexId>& s) {
  std::vector<char> in(g.vertex_count(), 0);
  for (VertexId v : s) {
    if (v >= g.vertex_count())
      throw std::invalid_argument("boundary: vertex out of range: " +
                                  std::to_string(v));
    in[v] = 1;
  }
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (in[g.edge(e).a] != in[g.edge(e).b]) out.push_back(e);
  return out;
}

Multigraph add_matchings(const Multigraph& g,
                         const std::vector<std::vector<EdgeId>>& family) {
  Multigraph out = g;
  for (const auto& member : family)
    for (EdgeId e : member) {
      if (e >= g.edge_count())
        throw std::invalid_argument("add_matchings: edge id out of range: " +
                                    std::to_string(e));
      out.add_edge(g.edge(e).a, g.edge(e).b);
    }
  return out;
}

IdentifyResult identify_vertices(const Multigraph& g, VertexId a, VertexId b) {
  if (a >= g.vertex_count() || b >= g.vertex_count())
    throw std::invalid_argument("identify_vertices: vertex out of range");
  if (a == b) throw std::invalid_argument("identify_vertices: a == b");
  for (const Edge& e : g.edges())
    if ((e.a == a && e.b == b) || (e.a == b && e.b == a))
      throw std::invalid_argument(
          "identify_vertices: vertices are adjacent, merge would create a "
          "loop");
  VertexId keep = std::min(a, b), drop = std::max(a, b);
  std::vector<VertexId> vmap(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (v == drop)
      vmap[v] = keep;
    else
      vmap[v] = v > drop ? v - 1 : v;
  }
  Multigraph out(g.vertex_count() - 1);
  for (const Edge& e : g.edges()) out.add_edge(vmap[e.a], vmap[e.b]);
  return {std::move(out), std::move(vmap), keep};
}

DeleteEdgesResult delete_edges(const Multigraph& g,
                               const std::vector<EdgeId>& ids) {
  std::vector<char> dead(g.edge_count(), 0);
  for (EdgeId e : ids) {
    if (e >= g.edge_count())
      throw std::invalid_argument("delete_edges: edge id out of range: " +
                                  std::to_string(e));
    dead[e] = 1;
  }
  Multigraph out(g.vertex_count());
  std::vector<EdgeId> emap(g.edge_count(), kNoEdge);
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (!dead[e]) emap[e] = out.add_edge(g.edge(e).a, g.edge(e).b);
  return {std::move(out), std::move(emap)};
}

std::optional<std::uint32_t> is_regular(const Multigraph& g) {
  if (g.vertex_count() == 0) return std::nullopt;
  auto deg = g.degrees();
  for (std::uint32_t d : deg)
    if (d != deg[0]) return std::nullopt;
  return deg[0];
}

bool edge_multiset_equal(const Multigraph& g1, const Multigraph& g2,
                         const std::vector<VertexId>& vmap) {
  if (g1.vertex_count() != g2.vertex_count() ||
      vmap.size() != g1.vertex_count())
    throw std::invalid_argument("edge_multiset_equal: map size mismatch");
  std::vector<char> hit(g2.vertex_count(), 0);
  for (VertexId v : vmap) {
    if (v >= g2.vertex_count() || hit[v])
      throw std::invalid_argument("edge_multiset_equal: map not a bijection");
    hit[v] = 1;
  }
  if (g1.edge_count() != g2.edge_count()) return false;
  std::map<std::pair<VertexId, VertexId>, long> mult;
  auto norm = [](VertexId x, VertexId y) {
    return std::make_pair(std::min(x, y), std::max(x, y));
  };
  for (const Edge& e : g1.edges()) ++mult[norm(vmap[e.a], vmap[e.b])];
  for (const Edge& e : g2.edges())
    if (--mult[norm(e.a, e.b)] < 0) return false;
  return true;
}

Multigraph permute_vertices(const Multigraph& g,
                            const std::vector<VertexId>& perm) {
  if (perm.size() != g.vertex_count())
    throw std::invalid_argument("permute_vertices: size mismatch");
  std::vector<char> hit(g.vertex_count(), 0);
  for (VertexId v : perm) {
    if (v >= g.vertex_count() || hit[v])
      throw std::invalid_argument("permute_vertices: not a permutation");
    hit[v] = 1;
  }
  Multigraph out(g.vertex_count());
  for (const Edge& e : g.edges()) out.add_edge(perm[e.a], perm[e.b]);
  return out;
}

PairClasses pair_classes(const Multigraph& g) {
  PairClasses pc;
  pc.class_of.resize(g.edge_count());
  std::map<std::pair<VertexId, VertexId>, std::uint32_t> index;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    VertexId a = std::min(g.edge(e).a, g.edge(e).b);
    VertexId b = std::max(g.edge(e).a, g.edge(e).b);
    auto [it, fresh] = index.try_emplace({a, b}, pc.count());
    if (fresh) {
      pc.pair_of.emplace_back(a, b);
      pc.members.emplace_back();
    }
    pc.class_of[e] = it->second;
    pc.members[it->second].push_back(e);
  }
  return pc;
}

}  // namespace matchfactory
