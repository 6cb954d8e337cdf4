#pragma once

#include <optional>

#include "braidscope/config_complex.hpp"
#include "braidscope/graph.hpp"
#include "braidscope/presentation.hpp"
#include "braidscope/tietze.hpp"

namespace braidscope {

enum class Family { Star3NTokens, Sun1NTokens, SunK2Tokens };

inline const char* family_name(Family f) {
  switch (f) {
    case Family::Star3NTokens: return "star3_ntokens";
    case Family::Sun1NTokens: return "sun1_ntokens";
    case Family::SunK2Tokens: return "sun_k_2tokens";
  }
  return "unknown";
}

inline Family family_from_name(const std::string& s) {
  if (s == "star3_ntokens") return Family::Star3NTokens;
  if (s == "sun1_ntokens") return Family::Sun1NTokens;
  if (s == "sun_k_2tokens") return Family::SunK2Tokens;
  throw std::invalid_argument("unknown family: " + s);
}

struct FamilySpec {
  Family family;
  int parameter = 1;
};

/// Certified free ranks the three theorems predict: n-choose-2 for n
/// tokens on the 3-star, n for n tokens on the one-ray sun, and k+1 for
/// two tokens on the k-ray sun.
inline long long expected_rank(const FamilySpec& spec) {
  if (spec.parameter < 1) throw std::invalid_argument("expected_rank: parameter must be positive");
  const long long p = spec.parameter;
  switch (spec.family) {
    case Family::Star3NTokens: return p * (p - 1) / 2;
    case Family::Sun1NTokens: return p;
    case Family::SunK2Tokens: return p + 1;
  }
  throw std::invalid_argument("expected_rank: unknown family");
}

/// Index triples of the non-tree edges in the arm-occupancy model of the
/// 3-star: a1+a2+a3 = n+2 with a1,a2 >= 1 and a3 >= 2, lexicographic.
inline std::vector<std::array<int, 3>> star_generator_index_set(int n) {
  if (n < 2) throw std::invalid_argument("star_generator_index_set: need n >= 2");
  std::vector<std::array<int, 3>> out;
  for (int a1 = 1; a1 <= n; ++a1)
    for (int a2 = 1; a2 <= n + 1 - a1; ++a2) {
      int a3 = n + 2 - a1 - a2;
      if (a3 >= 2) out.push_back({a1, a2, a3});
    }
  return out;
}

/// Arm-occupancy vertex counts of the same model, by enumeration.
/// Type I: positive parts summing to n+2. Type II: nonnegative parts
/// summing to n.
inline long long type_i_vertex_count(int n) {
  long long count = 0;
  for (int a1 = 1; a1 <= n; ++a1)
    for (int a2 = 1; a2 <= n + 1 - a1; ++a2)
      if (n + 2 - a1 - a2 >= 1) ++count;
  return count;
}

inline long long type_ii_vertex_count(int n) {
  long long count = 0;
  for (int a1 = 0; a1 <= n; ++a1)
    for (int a2 = 0; a2 <= n - a1; ++a2) ++count;
  return count;
}

/// The explicit subdivision used for the one-ray sun with n tokens:
/// a cycle of 4n-2 edges with the junction on it, and a ray of 2n-2
/// edges.
inline Graph paper_sun1_subdivision(int n) {
  if (n < 2) throw std::invalid_argument("paper_sun1_subdivision: need n >= 2");
  const int cycle_len = 4 * n - 2;
  const int ray_len = 2 * n - 2;
  std::vector<std::pair<int, int>> edges;
  std::map<int, VertexRole> labels;
  for (int i = 0; i < cycle_len; ++i) edges.emplace_back(i, (i + 1) % cycle_len);
  int prev = 0;
  for (int i = 0; i < ray_len; ++i) {
    int next = cycle_len + i;
    edges.emplace_back(prev, next);
    prev = next;
  }
  labels[0] = VertexRole::Junction;
  labels[prev] = VertexRole::Leaf;
  return make_graph(cycle_len + ray_len, std::move(edges), std::move(labels));
}

inline Graph family_graph(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::Star3NTokens: return make_star(3);
    case Family::Sun1NTokens: return make_sun(1);
    case Family::SunK2Tokens: return make_sun(spec.parameter);
  }
  throw std::invalid_argument("family_graph: unknown family");
}

inline int family_tokens(const FamilySpec& spec) {
  return spec.family == Family::SunK2Tokens ? 2 : spec.parameter;
}

struct VerifyRow {
  std::string family;
  int param = 0;
  long long expected = 0;
  std::optional<long long> computed;
  long long chi = 0;
  bool consistent = false;  // rank == 1 - chi, betti == rank, no torsion
  bool pass = false;

  bool operator==(const VerifyRow&) const = default;
};

struct VerifyReport {
  std::vector<VerifyRow> rows;
  bool all_pass = true;
};

/// Full pipeline on one family instance: build, subdivide, enumerate,
/// present, certify, and cross-check against the Euler characteristic
/// and the abelianization.
inline VerifyRow verify_instance(const FamilySpec& spec, long long budget = kDefaultTietzeBudget) {
  VerifyRow row;
  row.family = family_name(spec.family);
  row.param = spec.parameter;
  try {
    row.expected = expected_rank(spec);
    const int tokens = family_tokens(spec);
    Graph g = subdivide_for(family_graph(spec), tokens);
    ConfigComplex cx = enumerate_complex(g, tokens);
    Presentation pres = fundamental_presentation(cx);
    row.computed = certify_free(pres, budget);
    row.chi = euler_characteristic(g, tokens);
    auto ab = abelian_invariants(pres);
    row.consistent = row.computed.has_value() && *row.computed == 1 - row.chi &&
                     ab.betti == *row.computed && ab.torsion.empty();
    row.pass = row.consistent && row.computed.has_value() && *row.computed == row.expected;
  } catch (const std::exception& e) {
    throw std::runtime_error(std::string(row.family) + "(" + std::to_string(row.param) +
                             "): " + e.what());
  }
  return row;
}

inline VerifyReport verify_family(Family family, int param_min, int param_max,
                                  long long budget = kDefaultTietzeBudget) {
  if (param_min < 1 || param_max < param_min)
    throw std::invalid_argument("verify_family: bad parameter range");
  VerifyReport report;
  for (int p = param_min; p <= param_max; ++p) {
    report.rows.push_back(verify_instance(FamilySpec{family, p}, budget));
    report.all_pass = report.all_pass && report.rows.back().pass;
  }
  return report;
}

}  // namespace braidscope
