#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <queue>
#include <string>

#include "braidscope/graph.hpp"

namespace braidscope {

/// One closed cell of the underlying graph: a vertex or a whole edge.
/// Vertex atoms order before edge atoms, both by index.
struct Atom {
  enum class Kind : int { Vertex = 0, Edge = 1 };
  Kind kind = Kind::Vertex;
  int index = 0;

  friend auto operator<=>(const Atom&, const Atom&) = default;
};

inline Atom vertex_atom(int v) { return Atom{Atom::Kind::Vertex, v}; }
inline Atom edge_atom(int e) { return Atom{Atom::Kind::Edge, e}; }

/// A set of n pairwise closure-disjoint atoms, canonically sorted.
/// Dimension = number of edge atoms.
struct ConfigCell {
  std::vector<Atom> atoms;

  int dimension() const {
    int d = 0;
    for (const auto& a : atoms)
      if (a.kind == Atom::Kind::Edge) ++d;
    return d;
  }

  friend auto operator<=>(const ConfigCell&, const ConfigCell&) = default;
};

struct OneCell {
  ConfigCell cell;
  // 0-cells obtained by resolving the edge atom at its smaller/larger
  // endpoint; this orders the cell from endpoints[0] to endpoints[1].
  std::array<int, 2> endpoints{};
};

struct TwoCell {
  ConfigCell cell;
  std::array<int, 4> boundary{};  // the four 1-cells of the square
};

/// Discretized configuration complex of (graph, tokens), materialized up
/// to dimension 2 with full incidence. Cells are listed in lexicographic
/// order of their atom vectors, so indices are reproducible.
struct ConfigComplex {
  Graph graph;
  int tokens = 0;
  std::vector<ConfigCell> zero_cells;
  std::vector<OneCell> one_cells;
  std::vector<TwoCell> two_cells;
  int base = 0;
};

namespace detail {

template <typename Fn>
void for_each_combination(int n, int k, Fn&& fn) {
  if (k < 0 || k > n) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(static_cast<const std::vector<int>&>(idx));
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

inline ConfigCell vertex_cell(const std::vector<int>& vs) {
  ConfigCell c;
  c.atoms.reserve(vs.size());
  for (int v : vs) c.atoms.push_back(vertex_atom(v));
  return c;
}

}  // namespace detail

/// Human-readable cell name, e.g. "v0_v3_e1-2"; unique per cell.
inline std::string cell_name(const Graph& g, const ConfigCell& cell) {
  std::string s;
  for (const auto& a : cell.atoms) {
    if (!s.empty()) s += '_';
    if (a.kind == Atom::Kind::Vertex) {
      s += 'v' + std::to_string(a.index);
    } else {
      const auto& [u, v] = g.edges[a.index];
      s += 'e' + std::to_string(u) + '-' + std::to_string(v);
    }
  }
  return s.empty() ? std::string("empty") : s;
}

inline ConfigComplex enumerate_complex(const Graph& g, int n) {
  if (n < 1) throw std::invalid_argument("enumerate_complex: token count must be positive");
  if (n > g.vertex_count)
    throw std::invalid_argument("enumerate_complex: more tokens than vertices (empty space)");
  const int V = g.vertex_count;
  const int E = static_cast<int>(g.edges.size());
  ConfigComplex cx;
  cx.graph = g;
  cx.tokens = n;

  detail::for_each_combination(V, n, [&](const std::vector<int>& vs) {
    cx.zero_cells.push_back(detail::vertex_cell(vs));
  });

  auto zero_index = [&](ConfigCell c) {
    std::sort(c.atoms.begin(), c.atoms.end());
    auto it = std::lower_bound(cx.zero_cells.begin(), cx.zero_cells.end(), c);
    if (it == cx.zero_cells.end() || !(*it == c))
      throw std::logic_error("enumerate_complex: missing 0-cell");
    return static_cast<int>(it - cx.zero_cells.begin());
  };

  // 1-cells: one moving edge plus n-1 parked vertices avoiding its
  // closure. Outer loop lexicographic in the vertex part keeps the list
  // sorted.
  detail::for_each_combination(V, n - 1, [&](const std::vector<int>& vs) {
    for (int e = 0; e < E; ++e) {
      const auto& [u, v] = g.edges[e];
      if (std::binary_search(vs.begin(), vs.end(), u) ||
          std::binary_search(vs.begin(), vs.end(), v))
        continue;
      OneCell oc;
      oc.cell = detail::vertex_cell(vs);
      oc.cell.atoms.push_back(edge_atom(e));
      ConfigCell at_u = detail::vertex_cell(vs);
      at_u.atoms.push_back(vertex_atom(u));
      ConfigCell at_v = detail::vertex_cell(vs);
      at_v.atoms.push_back(vertex_atom(v));
      oc.endpoints = {zero_index(std::move(at_u)), zero_index(std::move(at_v))};
      cx.one_cells.push_back(std::move(oc));
    }
  });

  auto one_index = [&](ConfigCell c) {
    std::sort(c.atoms.begin(), c.atoms.end());
    auto it = std::lower_bound(cx.one_cells.begin(), cx.one_cells.end(), c,
                               [](const OneCell& oc, const ConfigCell& key) { return oc.cell < key; });
    if (it == cx.one_cells.end() || !(it->cell == c))
      throw std::logic_error("enumerate_complex: missing 1-cell");
    return static_cast<int>(it - cx.one_cells.begin());
  };

  // 2-cells: two closure-disjoint moving edges; boundary square wired by
  // resolving one edge atom at a time.
  detail::for_each_combination(V, n - 2, [&](const std::vector<int>& vs) {
    auto free_vertex = [&](int x) { return !std::binary_search(vs.begin(), vs.end(), x); };
    for (int e1 = 0; e1 < E; ++e1) {
      const auto& [u1, v1] = g.edges[e1];
      if (!free_vertex(u1) || !free_vertex(v1)) continue;
      for (int e2 = e1 + 1; e2 < E; ++e2) {
        const auto& [u2, v2] = g.edges[e2];
        if (!free_vertex(u2) || !free_vertex(v2)) continue;
        if (u2 == u1 || u2 == v1 || v2 == u1 || v2 == v1) continue;
        TwoCell tc;
        tc.cell = detail::vertex_cell(vs);
        tc.cell.atoms.push_back(edge_atom(e1));
        tc.cell.atoms.push_back(edge_atom(e2));
        auto side = [&](int pin, int moving) {
          ConfigCell c = detail::vertex_cell(vs);
          c.atoms.push_back(vertex_atom(pin));
          c.atoms.push_back(edge_atom(moving));
          return one_index(std::move(c));
        };
        tc.boundary = {side(u1, e2), side(v1, e2), side(u2, e1), side(v2, e1)};
        cx.two_cells.push_back(std::move(tc));
      }
    }
  });

  cx.base = 0;
  return cx;
}

/// Re-bases the complex at the 0-cell occupying exactly the given
/// vertices.
inline ConfigComplex with_base(ConfigComplex cx, std::vector<int> base_vertices) {
  std::sort(base_vertices.begin(), base_vertices.end());
  ConfigCell key = detail::vertex_cell(base_vertices);
  auto it = std::lower_bound(cx.zero_cells.begin(), cx.zero_cells.end(), key);
  if (it == cx.zero_cells.end() || !(*it == key))
    throw std::invalid_argument("with_base: no 0-cell on the requested vertex set");
  cx.base = static_cast<int>(it - cx.zero_cells.begin());
  return cx;
}

/// Cell counts for every dimension 0..n, counted without materializing
/// incidence (dimensions above 2 are never stored elsewhere).
inline std::vector<long long> count_cells_all_dims(const Graph& g, int n) {
  if (n < 1) throw std::invalid_argument("count_cells_all_dims: token count must be positive");
  if (n > g.vertex_count)
    throw std::invalid_argument("count_cells_all_dims: more tokens than vertices (empty space)");
  const int V = g.vertex_count;
  const int E = static_cast<int>(g.edges.size());
  std::vector<long long> counts(n + 1, 0);
  std::vector<char> used(V, 0);
  // Atoms in canonical order: vertices 0..V-1 then edges 0..E-1.
  auto rec = [&](auto&& self, int first, int remaining, int edge_atoms) -> void {
    if (remaining == 0) {
      ++counts[edge_atoms];
      return;
    }
    for (int a = first; a <= V + E - remaining; ++a) {
      if (a < V) {
        if (used[a]) continue;
        used[a] = 1;
        self(self, a + 1, remaining - 1, edge_atoms);
        used[a] = 0;
      } else {
        const auto& [u, v] = g.edges[a - V];
        if (used[u] || used[v]) continue;
        used[u] = used[v] = 1;
        self(self, a + 1, remaining - 1, edge_atoms + 1);
        used[u] = used[v] = 0;
      }
    }
  };
  rec(rec, 0, n, 0);
  return counts;
}

/// Alternating sum over all dimensions; for these aspherical complexes a
/// free fundamental group of rank r forces 1 - r.
inline long long euler_characteristic(const Graph& g, int n) {
  auto counts = count_cells_all_dims(g, n);
  long long chi = 0;
  long long sign = 1;
  for (long long c : counts) {
    chi += sign * c;
    sign = -sign;
  }
  return chi;
}

struct ComponentInfo {
  int count = 0;
  std::vector<int> component_of;  // per 0-cell, numbered by smallest member
};

inline ComponentInfo connected_components(const ConfigComplex& cx) {
  const int n0 = static_cast<int>(cx.zero_cells.size());
  std::vector<std::vector<int>> adj(n0);
  for (const auto& oc : cx.one_cells) {
    adj[oc.endpoints[0]].push_back(oc.endpoints[1]);
    adj[oc.endpoints[1]].push_back(oc.endpoints[0]);
  }
  ComponentInfo info;
  info.component_of.assign(n0, -1);
  for (int s = 0; s < n0; ++s) {
    if (info.component_of[s] != -1) continue;
    int id = info.count++;
    std::queue<int> q;
    q.push(s);
    info.component_of[s] = id;
    while (!q.empty()) {
      int c = q.front();
      q.pop();
      for (int d : adj[c])
        if (info.component_of[d] == -1) {
          info.component_of[d] = id;
          q.push(d);
        }
    }
  }
  return info;
}

}  // namespace braidscope
