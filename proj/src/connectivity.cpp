#include "matchfactory/connectivity.hpp"

#include <algorithm>
#include <cassert>
#include <queue>
#include <stdexcept>

namespace matchfactory {

namespace {

// Multiplicity-collapsed weighted adjacency matrix.
std::vector<std::vector<std::uint64_t>> weight_matrix(const Multigraph& g) {
  std::vector<std::vector<std::uint64_t>> w(
      g.vertex_count(), std::vector<std::uint64_t>(g.vertex_count(), 0));
  for (const Edge& e : g.edges()) {
    ++w[e.a][e.b];
    ++w[e.b][e.a];
  }
  return w;
}

// Dinic over an explicit capacity list; vertices 0..n-1.
class Dinic {
 public:
  explicit Dinic(std::size_t n) : head_(n, -1) {}

  void add_undirected(int u, int v, std::uint64_t cap) {
    add_arc(u, v, cap);
    add_arc(v, u, cap);
  }

  std::uint64_t run(int s, int t) {
    std::uint64_t flow = 0;
    while (bfs(s, t)) {
      it_ = head_;
      while (std::uint64_t f = dfs(s, t, UINT64_MAX)) flow += f;
    }
    return flow;
  }

  // After run(): vertices reachable from s in the residual network.
  std::vector<char> reachable(int s) const {
    std::vector<char> seen(head_.size(), 0);
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int a = head_[v]; a != -1; a = next_[a])
        if (cap_[a] > 0 && !seen[to_[a]]) {
          seen[to_[a]] = 1;
          stack.push_back(to_[a]);
        }
    }
    return seen;
  }

 private:
  void add_arc(int u, int v, std::uint64_t cap) {
    to_.push_back(v);
    cap_.push_back(cap);
    next_.push_back(head_[u]);
    head_[u] = static_cast<int>(to_.size()) - 1;
  }

  bool bfs(int s, int t) {
    level_.assign(head_.size(), -1);
    std::queue<int> q;
    q.push(s);
    level_[s] = 0;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int a = head_[v]; a != -1; a = next_[a])
        if (cap_[a] > 0 && level_[to_[a]] < 0) {
          level_[to_[a]] = level_[v] + 1;
          q.push(to_[a]);
        }
    }
    return level_[t] >= 0;
  }

  std::uint64_t dfs(int v, int t, std::uint64_t limit) {
    if (v == t) return limit;
    for (int& a = it_[v]; a != -1; a = next_[a]) {
      int w = to_[a];
      if (cap_[a] > 0 && level_[w] == level_[v] + 1) {
        std::uint64_t f = dfs(w, t, std::min(limit, cap_[a]));
        if (f > 0) {
          cap_[a] -= f;
          cap_[a ^ 1] += f;
          return f;
        }
      }
    }
    return 0;
  }

  std::vector<int> head_, next_, to_, level_, it_;
  std::vector<std::uint64_t> cap_;
};

}  // namespace

std::uint64_t max_flow(const Multigraph& g, VertexId s, VertexId t) {
  if (s >= g.vertex_count() || t >= g.vertex_count() || s == t)
    throw std::invalid_argument("max_flow: bad terminals");
  auto w = weight_matrix(g);
  Dinic d(g.vertex_count());
  for (VertexId a = 0; a < g.vertex_count(); ++a)
    for (VertexId b = a + 1; b < g.vertex_count(); ++b)
      if (w[a][b] > 0) d.add_undirected(a, b, w[a][b]);
  return d.run(static_cast<int>(s), static_cast<int>(t));
}

Cut global_min_cut(const Multigraph& g) {
  const VertexId n = g.vertex_count();
  if (n < 2) throw std::invalid_argument("global_min_cut: need >= 2 vertices");
  if (!g.connected()) {
    // Report any connected component as a weight-0 side.
    auto adj = adjacency(g);
    std::vector<char> seen(n, 0);
    std::vector<VertexId> stack{0}, side;
    seen[0] = 1;
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      side.push_back(v);
      for (auto [u, e] : adj[v]) {
        (void)e;
        if (!seen[u]) seen[u] = 1, stack.push_back(u);
      }
    }
    return {side, 0};
  }

  // Stoer-Wagner with supernodes that remember their original members.
  auto w = weight_matrix(g);
  std::vector<std::vector<VertexId>> members(n);
  for (VertexId v = 0; v < n; ++v) members[v] = {v};
  std::vector<VertexId> active(n);
  for (VertexId v = 0; v < n; ++v) active[v] = v;

  Cut best;
  best.weight = UINT64_MAX;
  while (active.size() > 1) {
    // Maximum-adjacency order over the active supernodes.
    std::vector<std::uint64_t> conn(n, 0);
    std::vector<char> added(n, 0);
    std::vector<VertexId> order;
    for (std::size_t i = 0; i < active.size(); ++i) {
      VertexId pick = kNoVertex;
      for (VertexId v : active)
        if (!added[v] && (pick == kNoVertex || conn[v] > conn[pick]))
          pick = v;
      added[pick] = 1;
      order.push_back(pick);
      for (VertexId v : active)
        if (!added[v]) conn[v] += w[pick][v];
    }
    VertexId s = order[order.size() - 2], t = order.back();
    if (conn[t] < best.weight) {
      best.weight = conn[t];
      best.side = members[t];
    }
    // Merge t into s.
    for (VertexId v : active)
      if (v != s && v != t) {
        w[s][v] += w[t][v];
        w[v][s] = w[s][v];
      }
    members[s].insert(members[s].end(), members[t].begin(), members[t].end());
    active.erase(std::find(active.begin(), active.end(), t));
  }
  std::sort(best.side.begin(), best.side.end());
  return best;
}

std::uint64_t edge_connectivity(const Multigraph& g) {
  if (g.vertex_count() < 2) return 0;
  if (!g.connected()) return 0;
  return global_min_cut(g).weight;
}

std::uint64_t GomoryHuTree::min_cut(VertexId s, VertexId t) const {
  // BFS over the tree tracking the bottleneck.
  std::vector<std::vector<std::pair<VertexId, std::uint64_t>>> adj(n);
  for (const TreeEdge& e : edges) {
    adj[e.a].emplace_back(e.b, e.capacity);
    adj[e.b].emplace_back(e.a, e.capacity);
  }
  std::vector<std::uint64_t> bottleneck(n, 0);
  std::vector<char> seen(n, 0);
  std::queue<VertexId> q;
  q.push(s);
  seen[s] = 1;
  bottleneck[s] = UINT64_MAX;
  while (!q.empty()) {
    VertexId v = q.front();
    q.pop();
    for (auto [u, c] : adj[v])
      if (!seen[u]) {
        seen[u] = 1;
        bottleneck[u] = std::min(bottleneck[v], c);
        q.push(u);
      }
  }
  if (!seen[t]) throw std::logic_error("GomoryHuTree: not spanning");
  return bottleneck[t];
}

std::vector<VertexId> GomoryHuTree::fundamental_side(std::size_t index) const {
  const TreeEdge& cut = edges[index];
  std::vector<std::vector<VertexId>> adj(n);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i == index) continue;
    adj[edges[i].a].push_back(edges[i].b);
    adj[edges[i].b].push_back(edges[i].a);
  }
  std::vector<char> seen(n, 0);
  std::vector<VertexId> stack{cut.a}, side;
  seen[cut.a] = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    side.push_back(v);
    for (VertexId u : adj[v])
      if (!seen[u]) seen[u] = 1, stack.push_back(u);
  }
  std::sort(side.begin(), side.end());
  return side;
}

GomoryHuTree gomory_hu(const Multigraph& g) {
  const VertexId n = g.vertex_count();
  if (n == 0) throw std::invalid_argument("gomory_hu: empty graph");
  if (!g.connected()) throw std::invalid_argument("gomory_hu: disconnected");

  auto base = weight_matrix(g);

  // Classic contraction scheme: tree nodes hold vertex groups; while a group
  // has >= 2 vertices, split it with a min cut computed in g with every
  // other group's subtree contracted to a single node.
  struct Node {
    std::vector<VertexId> group;
    std::vector<std::pair<int, std::uint64_t>> links;  // (node, capacity)
  };
  std::vector<Node> nodes;
  {
    Node all;
    for (VertexId v = 0; v < n; ++v) all.group.push_back(v);
    nodes.push_back(std::move(all));
  }

  for (std::size_t cur = 0; cur < nodes.size(); ++cur) {
    while (nodes[cur].group.size() >= 2) {
      // Subtree membership with respect to `cur`: every neighbor link hangs
      // a subtree; collect the union of groups per neighbor.
      std::vector<int> owner(nodes.size(), -1);
      owner[cur] = static_cast<int>(cur);
      // Iterative DFS from each neighbor of cur, not crossing cur.
      std::vector<std::vector<int>> tree_adj(nodes.size());
      for (std::size_t i = 0; i < nodes.size(); ++i)
        for (auto [j, c] : nodes[i].links) {
          (void)c;
          tree_adj[i].push_back(j);
        }
      std::vector<int> neighbor_of(nodes.size(), -1);
      for (int nb : tree_adj[cur]) {
        if (neighbor_of[nb] != -1) continue;
        std::vector<int> stack{nb};
        neighbor_of[nb] = nb;
        while (!stack.empty()) {
          int x = stack.back();
          stack.pop_back();
          for (int y : tree_adj[x])
            if (y != static_cast<int>(cur) && neighbor_of[y] == -1) {
              neighbor_of[y] = nb;
              stack.push_back(y);
            }
        }
      }

      // Contracted graph: own vertices stay distinct; each neighbor subtree
      // becomes one super vertex.
      std::vector<int> super_of_node(nodes.size(), -1);
      int next_super = static_cast<int>(nodes[cur].group.size());
      std::vector<int> supers;  // super index per distinct neighbor subtree
      std::vector<int> subtree_roots;
      for (int nb : tree_adj[cur]) {
        if (super_of_node[nb] != -1) continue;
        for (std::size_t i = 0; i < nodes.size(); ++i)
          if (neighbor_of[i] == nb) super_of_node[i] = next_super;
        supers.push_back(next_super);
        subtree_roots.push_back(nb);
        ++next_super;
      }
      std::vector<int> vert_of(n, -1);
      for (std::size_t i = 0; i < nodes[cur].group.size(); ++i)
        vert_of[nodes[cur].group[i]] = static_cast<int>(i);
      for (std::size_t i = 0; i < nodes.size(); ++i)
        if (i != cur)
          for (VertexId v : nodes[i].group)
            vert_of[v] = super_of_node[i];

      std::vector<std::vector<std::uint64_t>> cap(
          next_super, std::vector<std::uint64_t>(next_super, 0));
      for (VertexId a = 0; a < n; ++a)
        for (VertexId b = a + 1; b < n; ++b)
          if (base[a][b] > 0 && vert_of[a] != vert_of[b]) {
            cap[vert_of[a]][vert_of[b]] += base[a][b];
            cap[vert_of[b]][vert_of[a]] += base[a][b];
          }

      Dinic dinic(next_super);
      for (int a = 0; a < next_super; ++a)
        for (int b = a + 1; b < next_super; ++b)
          if (cap[a][b] > 0) dinic.add_undirected(a, b, cap[a][b]);
      int s = 0, t = 1;  // two group vertices, deterministic pick
      std::uint64_t f = dinic.run(s, t);
      std::vector<char> on_s_side = dinic.reachable(s);

      // Split cur: s-side keeps `cur`, t-side becomes a fresh node.
      Node fresh;
      std::vector<VertexId> keep;
      for (VertexId v : nodes[cur].group) {
        if (on_s_side[vert_of[v]])
          keep.push_back(v);
        else
          fresh.group.push_back(v);
      }
      assert(!keep.empty() && !fresh.group.empty());
      nodes[cur].group = std::move(keep);

      int fresh_index = static_cast<int>(nodes.size());
      // Reattach neighbor subtrees by the side their super vertex landed on.
      std::vector<std::pair<int, std::uint64_t>> stay_links;
      for (auto [nb, c] : nodes[cur].links) {
        int root = neighbor_of[nb];
        int sup = super_of_node[root];
        if (on_s_side[sup]) {
          stay_links.emplace_back(nb, c);
        } else {
          fresh.links.emplace_back(nb, c);
          for (auto& link : nodes[nb].links)
            if (link.first == static_cast<int>(cur)) link.first = fresh_index;
        }
      }
      nodes[cur].links = std::move(stay_links);
      nodes[cur].links.emplace_back(fresh_index, f);
      fresh.links.emplace_back(static_cast<int>(cur), f);
      nodes.push_back(std::move(fresh));
    }
  }

  GomoryHuTree tree;
  tree.n = n;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    assert(nodes[i].group.size() == 1);
    for (auto [j, c] : nodes[i].links)
      if (static_cast<std::size_t>(j) > i)
        tree.edges.push_back({nodes[i].group[0], nodes[j].group[0], c});
  }
  assert(tree.edges.size() + 1 == n);
  return tree;
}

Cut min_odd_cut(const Multigraph& g) {
  if (g.vertex_count() % 2 != 0)
    throw std::invalid_argument("min_odd_cut: odd vertex count");
  if (g.vertex_count() == 0)
    throw std::invalid_argument("min_odd_cut: empty graph");
  if (!g.connected())
    throw std::invalid_argument("min_odd_cut: disconnected");
  GomoryHuTree tree = gomory_hu(g);
  Cut best;
  best.weight = UINT64_MAX;
  for (std::size_t i = 0; i < tree.edges.size(); ++i) {
    std::vector<VertexId> side = tree.fundamental_side(i);
    if (side.size() % 2 == 0) continue;
    std::uint64_t w = boundary(g, side).size();
    if (w < best.weight) {
      best.weight = w;
      best.side = std::move(side);
    }
  }
  assert(best.weight != UINT64_MAX);  // a leaf side is always odd
  return best;
}

std::optional<std::uint32_t> is_r_graph(const Multigraph& g) {
  auto r = is_regular(g);
  if (!r) return std::nullopt;
  if (g.vertex_count() % 2 != 0) return std::nullopt;
  if (!g.connected()) return std::nullopt;
  if (min_odd_cut(g).weight < *r) return std::nullopt;
  return r;
}

}  // namespace matchfactory
