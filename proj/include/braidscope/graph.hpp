#pragma once

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace braidscope {

enum class VertexRole { Junction, Leaf, Subdivision };

inline const char* role_name(VertexRole r) {
  switch (r) {
    case VertexRole::Junction: return "junction";
    case VertexRole::Leaf: return "leaf";
    case VertexRole::Subdivision: return "subdivision";
  }
  return "unknown";
}

inline VertexRole role_from_name(const std::string& s) {
  if (s == "junction") return VertexRole::Junction;
  if (s == "leaf") return VertexRole::Leaf;
  if (s == "subdivision") return VertexRole::Subdivision;
  throw std::invalid_argument("unknown vertex role: " + s);
}

/// Finite undirected simple graph. Edges are kept canonical: each pair
/// stored (min,max), list sorted lexicographically, so equal graphs
/// compare and serialize identically.
struct Graph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;
  std::map<int, VertexRole> labels;

  bool operator==(const Graph&) const = default;
};

/// Validates and canonicalizes. Rejects self-loops, duplicate edges and
/// out-of-range ids.
inline Graph make_graph(int vertex_count, std::vector<std::pair<int, int>> edges,
                        std::map<int, VertexRole> labels = {}) {
  if (vertex_count < 0) throw std::invalid_argument("make_graph: negative vertex count");
  for (auto& [u, v] : edges) {
    if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count)
      throw std::invalid_argument("make_graph: edge endpoint out of range");
    if (u == v) throw std::invalid_argument("make_graph: self-loop");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw std::invalid_argument("make_graph: duplicate edge");
  for (const auto& [v, r] : labels) {
    (void)r;
    if (v < 0 || v >= vertex_count)
      throw std::invalid_argument("make_graph: label for unknown vertex");
  }
  return Graph{vertex_count, std::move(edges), std::move(labels)};
}

inline std::vector<int> vertex_degrees(const Graph& g) {
  std::vector<int> deg(g.vertex_count, 0);
  for (const auto& [u, v] : g.edges) {
    ++deg[u];
    ++deg[v];
  }
  return deg;
}

inline std::vector<std::vector<int>> adjacency_lists(const Graph& g) {
  std::vector<std::vector<int>> adj(g.vertex_count);
  for (const auto& [u, v] : g.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& nbrs : adj) std::sort(nbrs.begin(), nbrs.end());
  return adj;
}

/// Index of edge {u,v} in the canonical edge list, or -1.
inline int edge_index(const Graph& g, int u, int v) {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(g.edges.begin(), g.edges.end(), std::make_pair(u, v));
  if (it == g.edges.end() || *it != std::make_pair(u, v)) return -1;
  return static_cast<int>(it - g.edges.begin());
}

inline bool is_connected(const Graph& g) {
  if (g.vertex_count <= 1) return true;
  auto adj = adjacency_lists(g);
  std::vector<char> seen(g.vertex_count, 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        q.push(w);
      }
  }
  return reached == g.vertex_count;
}

/// Sorted list of vertices of degree >= 3.
inline std::vector<int> essential_vertices(const Graph& g) {
  auto deg = vertex_degrees(g);
  std::vector<int> out;
  for (int v = 0; v < g.vertex_count; ++v)
    if (deg[v] >= 3) out.push_back(v);
  return out;
}

/// First Betti number |E| - |V| + 1 of a connected graph.
inline int cycle_rank(const Graph& g) {
  if (!is_connected(g)) throw std::invalid_argument("cycle_rank: graph is not connected");
  return static_cast<int>(g.edges.size()) - g.vertex_count + 1;
}

/// Sun graph with n pendant rays: the smallest simple-graph model of a
/// circle with n evenly spaced arms. Cycle length is 3 for one ray, 4
/// (arms on opposite vertices) for two, and n for n >= 3.
inline Graph make_sun(int n_rays) {
  if (n_rays < 1) throw std::invalid_argument("make_sun: need at least one ray");
  std::vector<std::pair<int, int>> edges;
  std::map<int, VertexRole> labels;
  int cycle_len = n_rays == 1 ? 3 : (n_rays == 2 ? 4 : n_rays);
  for (int i = 0; i < cycle_len; ++i) edges.emplace_back(i, (i + 1) % cycle_len);
  std::vector<int> junctions;
  if (n_rays == 1)
    junctions = {0};
  else if (n_rays == 2)
    junctions = {0, 2};
  else
    for (int i = 0; i < n_rays; ++i) junctions.push_back(i);
  for (int j = 0; j < n_rays; ++j) {
    int leaf = cycle_len + j;
    edges.emplace_back(junctions[j], leaf);
    labels[junctions[j]] = VertexRole::Junction;
    labels[leaf] = VertexRole::Leaf;
  }
  return make_graph(cycle_len + n_rays, std::move(edges), std::move(labels));
}

/// Star with k arms of one edge each; center is vertex 0.
inline Graph make_star(int k_arms) {
  if (k_arms < 1) throw std::invalid_argument("make_star: need at least one arm");
  std::vector<std::pair<int, int>> edges;
  std::map<int, VertexRole> labels;
  for (int i = 1; i <= k_arms; ++i) {
    edges.emplace_back(0, i);
    labels[i] = VertexRole::Leaf;
  }
  if (k_arms >= 3)
    labels[0] = VertexRole::Junction;
  else if (k_arms == 1)
    labels[0] = VertexRole::Leaf;
  return make_graph(k_arms + 1, std::move(edges), std::move(labels));
}

inline Graph make_cycle(int m) {
  if (m < 3) throw std::invalid_argument("make_cycle: need at least 3 vertices");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < m; ++i) edges.emplace_back(i, (i + 1) % m);
  return make_graph(m, std::move(edges));
}

inline Graph make_path(int m) {
  if (m < 1) throw std::invalid_argument("make_path: need at least 1 vertex");
  std::vector<std::pair<int, int>> edges;
  std::map<int, VertexRole> labels;
  for (int i = 0; i + 1 < m; ++i) edges.emplace_back(i, i + 1);
  if (m >= 2) {
    labels[0] = VertexRole::Leaf;
    labels[m - 1] = VertexRole::Leaf;
  }
  return make_graph(m, std::move(edges), std::move(labels));
}

namespace detail {

/// Maximal path through degree-2 interior vertices between two terminal
/// vertices (degree != 2). Loop-backs (both ends the same essential
/// vertex) are single segments.
struct Segment {
  std::vector<std::pair<int, int>> walk;  // directed edges in walk order
  int tail = -1, head = -1;               // terminal endpoints
};

inline std::vector<Segment> collect_segments(const Graph& g,
                                             const std::vector<std::vector<int>>& adj,
                                             const std::vector<int>& deg) {
  std::set<std::pair<int, int>> used;  // normalized edges already walked
  auto mark = [&](int a, int b) { used.insert(std::minmax(a, b)); };
  auto is_used = [&](int a, int b) { return used.count(std::minmax(a, b)) > 0; };
  std::vector<Segment> segments;
  for (int v = 0; v < g.vertex_count; ++v) {
    if (deg[v] == 2 || deg[v] == 0) continue;
    for (int w : adj[v]) {
      if (is_used(v, w)) continue;
      Segment seg;
      seg.tail = v;
      int prev = v, cur = w;
      seg.walk.emplace_back(prev, cur);
      mark(prev, cur);
      while (deg[cur] == 2) {
        int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
        seg.walk.emplace_back(cur, next);
        mark(cur, next);
        prev = cur;
        cur = next;
      }
      seg.head = cur;
      segments.push_back(std::move(seg));
    }
  }
  return segments;
}

struct EdgeSplit {
  std::pair<int, int> edge;  // directed as walked; orientation of the chain
  int insert_count = 0;
};

inline Graph apply_edge_splits(const Graph& g, const std::vector<EdgeSplit>& splits) {
  if (splits.empty()) return g;
  std::set<std::pair<int, int>> removed;
  std::vector<std::pair<int, int>> added;
  auto labels = g.labels;
  int next_id = g.vertex_count;
  for (const auto& s : splits) {
    removed.insert(std::minmax(s.edge.first, s.edge.second));
    int prev = s.edge.first;
    for (int i = 0; i < s.insert_count; ++i) {
      labels[next_id] = VertexRole::Subdivision;
      added.emplace_back(prev, next_id);
      prev = next_id++;
    }
    added.emplace_back(prev, s.edge.second);
  }
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : g.edges)
    if (!removed.count(e)) edges.push_back(e);
  edges.insert(edges.end(), added.begin(), added.end());
  return make_graph(next_id, std::move(edges), std::move(labels));
}

}  // namespace detail

/// True when g already meets the token-capacity conditions for n tokens:
/// segments between essential vertices (and cycles through one) have
/// >= n+1 edges, arms to leaves have >= n edges, and an essential-free
/// graph is a cycle of >= n+1 edges or a path on >= n+1 vertices.
inline bool meets_token_conditions(const Graph& g, int n_tokens) {
  if (n_tokens < 1) throw std::invalid_argument("meets_token_conditions: tokens must be positive");
  if (!is_connected(g)) throw std::invalid_argument("meets_token_conditions: graph is not connected");
  auto deg = vertex_degrees(g);
  auto adj = adjacency_lists(g);
  bool has_terminal = false;
  for (int v = 0; v < g.vertex_count; ++v)
    if (deg[v] != 2) has_terminal = true;
  if (!has_terminal)  // a cycle
    return static_cast<int>(g.edges.size()) >= n_tokens + 1;
  bool has_essential = false;
  for (int d : deg)
    if (d >= 3) has_essential = true;
  if (!has_essential)  // a path (possibly a single vertex)
    return g.vertex_count >= n_tokens + 1;
  for (const auto& seg : detail::collect_segments(g, adj, deg)) {
    bool arm = deg[seg.tail] == 1 || deg[seg.head] == 1;
    int required = arm ? n_tokens : n_tokens + 1;
    if (static_cast<int>(seg.walk.size()) < required) return false;
  }
  return true;
}

/// Subdivides g so that n_tokens tokens fit: inserts the minimum number
/// of degree-2 vertices into each deficient segment (first edge of its
/// walk), labeling them. Returns g unchanged when already sufficient.
inline Graph subdivide_for(const Graph& g, int n_tokens) {
  if (n_tokens < 1) throw std::invalid_argument("subdivide_for: tokens must be positive");
  if (!is_connected(g)) throw std::invalid_argument("subdivide_for: graph is not connected");
  if (g.edges.empty()) return g;  // nothing to subdivide
  auto deg = vertex_degrees(g);
  auto adj = adjacency_lists(g);
  std::vector<detail::EdgeSplit> splits;
  bool has_terminal = false, has_essential = false;
  for (int d : deg) {
    if (d != 2) has_terminal = true;
    if (d >= 3) has_essential = true;
  }
  if (!has_essential) {
    // Whole graph is a cycle (needs >= n+1 edges) or a path (needs
    // >= n+1 vertices, i.e. >= n edges).
    int edge_count = static_cast<int>(g.edges.size());
    int required = has_terminal ? n_tokens : n_tokens + 1;
    if (edge_count < required) splits.push_back({g.edges[0], required - edge_count});
  } else {
    for (const auto& seg : detail::collect_segments(g, adj, deg)) {
      bool arm = deg[seg.tail] == 1 || deg[seg.head] == 1;
      int required = arm ? n_tokens : n_tokens + 1;
      int deficit = required - static_cast<int>(seg.walk.size());
      if (deficit > 0) splits.push_back({seg.walk[0], deficit});
    }
  }
  return detail::apply_edge_splits(g, splits);
}

/// One uniform refinement round: every edge is split once. Preserves the
/// homeomorphism type; inserted vertices are labeled as subdivisions.
inline Graph subdivide_all_edges(const Graph& g) {
  std::vector<detail::EdgeSplit> splits;
  splits.reserve(g.edges.size());
  for (const auto& e : g.edges) splits.push_back({e, 1});
  return detail::apply_edge_splits(g, splits);
}

/// Removes every subdivision-labeled degree-2 vertex by merging its two
/// incident edges, then renumbers the survivors in order. Undoes
/// subdivide_for / subdivide_all_edges.
inline Graph smooth_subdivisions(const Graph& g) {
  std::set<std::pair<int, int>> edges(g.edges.begin(), g.edges.end());
  std::vector<std::set<int>> adj(g.vertex_count);
  for (const auto& [u, v] : g.edges) {
    adj[u].insert(v);
    adj[v].insert(u);
  }
  std::vector<int> to_remove;
  for (const auto& [v, role] : g.labels)
    if (role == VertexRole::Subdivision) to_remove.push_back(v);
  // Descending id order unwinds insertions last-in-first-out.
  std::sort(to_remove.rbegin(), to_remove.rend());
  std::set<int> removed;
  for (int v : to_remove) {
    if (adj[v].size() != 2) throw std::logic_error("smooth_subdivisions: tagged vertex has degree != 2");
    int a = *adj[v].begin();
    int b = *std::next(adj[v].begin());
    if (edges.count(std::minmax(a, b)))
      throw std::logic_error("smooth_subdivisions: smoothing would create a duplicate edge");
    edges.erase(std::minmax(a, v));
    edges.erase(std::minmax(b, v));
    adj[a].erase(v);
    adj[b].erase(v);
    adj[a].insert(b);
    adj[b].insert(a);
    edges.insert(std::minmax(a, b));
    removed.insert(v);
  }
  std::vector<int> new_id(g.vertex_count, -1);
  int next = 0;
  for (int v = 0; v < g.vertex_count; ++v)
    if (!removed.count(v)) new_id[v] = next++;
  std::vector<std::pair<int, int>> out_edges;
  for (const auto& [u, v] : edges) out_edges.emplace_back(new_id[u], new_id[v]);
  std::map<int, VertexRole> out_labels;
  for (const auto& [v, role] : g.labels)
    if (!removed.count(v)) out_labels[new_id[v]] = role;
  return make_graph(next, std::move(out_edges), std::move(out_labels));
}

}  // namespace braidscope
