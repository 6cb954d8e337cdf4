#pragma once

#include <optional>
#include <string>

#include "braidscope/config_complex.hpp"
#include "braidscope/smith.hpp"
#include "braidscope/word.hpp"

namespace braidscope {

/// Finite group presentation. Relators are kept freely and cyclically
/// reduced; an empty relator is the trivial word.
struct Presentation {
  std::vector<std::string> generator_names;
  std::vector<Word> relators;

  bool operator==(const Presentation&) const = default;
};

inline Presentation make_presentation(std::vector<std::string> names, std::vector<Word> relators) {
  for (auto& r : relators) {
    validate_word(r, static_cast<int>(names.size()));
    r = cyclic_reduce(r);
  }
  return Presentation{std::move(names), std::move(relators)};
}

/// BFS spanning tree of the 1-skeleton rooted at the base cell,
/// neighbors taken in 1-cell index order. Returns the sorted tree edge
/// indices; size is #zero_cells - 1.
inline std::vector<int> spanning_tree(const ConfigComplex& cx) {
  const int n0 = static_cast<int>(cx.zero_cells.size());
  if (n0 == 0) throw std::runtime_error("spanning_tree: empty complex");
  std::vector<std::vector<std::pair<int, int>>> incident(n0);  // (1-cell, far endpoint)
  for (int j = 0; j < static_cast<int>(cx.one_cells.size()); ++j) {
    const auto& oc = cx.one_cells[j];
    incident[oc.endpoints[0]].emplace_back(j, oc.endpoints[1]);
    incident[oc.endpoints[1]].emplace_back(j, oc.endpoints[0]);
  }
  std::vector<char> seen(n0, 0);
  std::vector<int> tree;
  std::queue<int> q;
  q.push(cx.base);
  seen[cx.base] = 1;
  int reached = 1;
  while (!q.empty()) {
    int p = q.front();
    q.pop();
    for (const auto& [j, far] : incident[p]) {
      if (seen[far]) continue;
      seen[far] = 1;
      ++reached;
      tree.push_back(j);
      q.push(far);
    }
  }
  if (reached != n0)
    throw std::runtime_error("spanning_tree: configuration complex is not connected");
  std::sort(tree.begin(), tree.end());
  return tree;
}

namespace detail {

/// Boundary walk of a square 2-cell as signed 1-cell crossings: starts
/// at the lexicographically smallest corner, first step along the
/// smaller-indexed boundary 1-cell. Sign is + when a 1-cell is crossed
/// from endpoints[0] to endpoints[1].
inline std::vector<std::pair<int, int>> square_boundary_walk(const ConfigComplex& cx,
                                                             const TwoCell& tc) {
  std::map<int, std::vector<std::pair<int, int>>> corner_arcs;  // corner -> (1-cell, far corner)
  for (int j : tc.boundary) {
    const auto& oc = cx.one_cells[j];
    corner_arcs[oc.endpoints[0]].emplace_back(j, oc.endpoints[1]);
    corner_arcs[oc.endpoints[1]].emplace_back(j, oc.endpoints[0]);
  }
  if (corner_arcs.size() != 4) throw std::logic_error("square 2-cell without 4 distinct corners");
  const int start = corner_arcs.begin()->first;
  auto& first_arcs = corner_arcs.at(start);
  std::sort(first_arcs.begin(), first_arcs.end());
  std::vector<std::pair<int, int>> walk;  // (1-cell, sign)
  int at = start;
  int via = first_arcs.front().first;
  for (int step = 0; step < 4; ++step) {
    const auto& oc = cx.one_cells[via];
    int to = oc.endpoints[0] == at ? oc.endpoints[1] : oc.endpoints[0];
    walk.emplace_back(via, oc.endpoints[0] == at ? +1 : -1);
    at = to;
    const auto& arcs = corner_arcs.at(at);
    via = arcs[0].first == via ? arcs[1].first : arcs[0].first;
  }
  if (at != start) throw std::logic_error("square boundary walk did not close");
  return walk;
}

}  // namespace detail

/// Spanning-tree presentation of the fundamental group: one generator
/// per non-tree 1-cell (named by its cell), one relator per square.
inline Presentation fundamental_presentation(const ConfigComplex& cx) {
  auto tree = spanning_tree(cx);
  std::vector<int> generator_of(cx.one_cells.size(), -1);
  std::vector<std::string> names;
  {
    std::vector<char> in_tree(cx.one_cells.size(), 0);
    for (int j : tree) in_tree[j] = 1;
    for (int j = 0; j < static_cast<int>(cx.one_cells.size()); ++j) {
      if (in_tree[j]) continue;
      generator_of[j] = static_cast<int>(names.size());
      names.push_back(cell_name(cx.graph, cx.one_cells[j].cell));
    }
  }
  std::vector<Word> relators;
  relators.reserve(cx.two_cells.size());
  for (const auto& tc : cx.two_cells) {
    Word w;
    for (const auto& [j, sign] : detail::square_boundary_walk(cx, tc)) {
      int g = generator_of[j];
      if (g >= 0) w.push_back(sign * (g + 1));
    }
    relators.push_back(std::move(w));
  }
  return make_presentation(std::move(names), std::move(relators));
}

struct AbelianInvariants {
  long long betti = 0;
  std::vector<long long> torsion;  // entries > 1 in divisibility order

  bool operator==(const AbelianInvariants&) const = default;
};

/// Invariants of the abelianized group, via Smith normal form of the
/// generator-by-relator exponent-sum matrix.
inline AbelianInvariants abelian_invariants(const Presentation& p) {
  const int gens = static_cast<int>(p.generator_names.size());
  SparseIntMatrix m(gens, static_cast<int>(p.relators.size()));
  for (int r = 0; r < static_cast<int>(p.relators.size()); ++r)
    for (int letter : p.relators[r])
      m.add(letter > 0 ? letter - 1 : -letter - 1, r, letter > 0 ? 1 : -1);
  auto s = smith_normal_form(std::move(m));
  return AbelianInvariants{gens - s.rank, s.torsion()};
}

/// Homomorphism between presentations, one target word per source
/// generator.
struct PresHom {
  Presentation source;
  Presentation target;
  std::vector<Word> images;

  bool operator==(const PresHom&) const = default;
};

namespace detail {

inline std::vector<long long> exponent_vector(const Word& w, int gens) {
  std::vector<long long> v(gens, 0);
  for (int letter : w) v[letter > 0 ? letter - 1 : -letter - 1] += letter > 0 ? 1 : -1;
  return v;
}

/// Membership of v in the integer lattice spanned by the columns:
/// adjoining v leaves rank and elementary divisors unchanged exactly
/// when v already lies in the lattice.
inline bool lattice_contains(int dim, const std::vector<std::vector<long long>>& basis,
                             const std::vector<long long>& v) {
  SparseIntMatrix base(dim, static_cast<int>(basis.size()));
  SparseIntMatrix extended(dim, static_cast<int>(basis.size()) + 1);
  for (int c = 0; c < static_cast<int>(basis.size()); ++c)
    for (int r = 0; r < dim; ++r) {
      base.add(r, c, basis[c][r]);
      extended.add(r, c, basis[c][r]);
    }
  for (int r = 0; r < dim; ++r) extended.add(r, static_cast<int>(basis.size()), v[r]);
  return smith_normal_form(std::move(base)) == smith_normal_form(std::move(extended));
}

}  // namespace detail

/// Checks the cheap necessary condition on a homomorphism: every source
/// relator must map to a word that dies in the target's abelianization.
/// (Full triviality in the target group is not decided.)
inline void validate_pres_hom(const PresHom& h) {
  const int target_gens = static_cast<int>(h.target.generator_names.size());
  if (h.images.size() != h.source.generator_names.size())
    throw std::invalid_argument("PresHom: one image per source generator required");
  for (const auto& w : h.images) validate_word(w, target_gens);
  std::vector<std::vector<long long>> relator_lattice;
  for (const auto& r : h.target.relators)
    relator_lattice.push_back(detail::exponent_vector(r, target_gens));
  for (const auto& rel : h.source.relators) {
    Word image;
    for (int letter : rel) {
      const Word& piece = h.images[letter > 0 ? letter - 1 : -letter - 1];
      if (letter > 0)
        image.insert(image.end(), piece.begin(), piece.end());
      else {
        Word inv = word_inverse(piece);
        image.insert(image.end(), inv.begin(), inv.end());
      }
    }
    auto v = detail::exponent_vector(free_reduce(image), target_gens);
    if (!detail::lattice_contains(target_gens, relator_lattice, v))
      throw std::invalid_argument("PresHom: a source relator maps to a word that is "
                                  "nontrivial in the target abelianization");
  }
}

}  // namespace braidscope
