#pragma once

#include <array>
#include <set>

#include "braidscope/presentation.hpp"
#include "braidscope/tietze.hpp"

namespace braidscope {

/// Generator-wise substitution followed by free reduction.
inline Word apply_hom(const PresHom& h, const Word& w) {
  validate_word(w, static_cast<int>(h.source.generator_names.size()));
  Word out;
  for (int letter : w) {
    const Word& piece = h.images[letter > 0 ? letter - 1 : -letter - 1];
    if (letter > 0)
      out.insert(out.end(), piece.begin(), piece.end());
    else {
      Word inv = word_inverse(piece);
      out.insert(out.end(), inv.begin(), inv.end());
    }
  }
  return free_reduce(out);
}

/// One path component of an intersection A cap B, with the maps induced
/// by its inclusions into each side (after base-point transport).
struct GvkComponent {
  Presentation pres;
  PresHom into_a;
  PresHom into_b;
};

/// Input of the generalized Van Kampen pushout. Component 0 is the base
/// component: its connecting path is the constant one.
struct GvkInput {
  Presentation a;
  Presentation b;
  std::vector<GvkComponent> components;
};

inline void validate_gvk_input(const GvkInput& input) {
  if (input.components.empty())
    throw std::invalid_argument("gvk_pushout: at least one intersection component required");
  for (const auto& comp : input.components) {
    if (!(comp.into_a.source == comp.pres) || !(comp.into_b.source == comp.pres))
      throw std::invalid_argument("gvk_pushout: homomorphism source does not match its component");
    if (!(comp.into_a.target == input.a) || !(comp.into_b.target == input.b))
      throw std::invalid_argument("gvk_pushout: homomorphism target does not match A/B");
    validate_pres_hom(comp.into_a);
    validate_pres_hom(comp.into_b);
  }
}

/// Presentation of pi_1(A cup B) when A cap B has components C_0..C_n:
/// generators of A and B plus one fresh t_i per extra component, with a
/// conjugation relator jA(s) t_i jB(s)^-1 t_i^-1 per generator s of C_i
/// (t_0 is the identity, so the base component contributes jA(s) jB(s)^-1).
inline Presentation gvk_pushout(const GvkInput& input) {
  validate_gvk_input(input);
  const int a_gens = static_cast<int>(input.a.generator_names.size());
  const int b_gens = static_cast<int>(input.b.generator_names.size());
  const int extra = static_cast<int>(input.components.size()) - 1;

  std::vector<std::string> names;
  std::set<std::string> used;
  auto add_name = [&](std::string candidate) {
    while (used.count(candidate)) candidate += '\'';
    used.insert(candidate);
    names.push_back(std::move(candidate));
  };
  for (const auto& n : input.a.generator_names) add_name(n);
  for (const auto& n : input.b.generator_names) add_name(n);
  for (int i = 1; i <= extra; ++i)
    add_name(extra == 1 ? std::string("t") : "t" + std::to_string(i));

  auto shift_b = [&](const Word& w) {
    Word out;
    out.reserve(w.size());
    for (int letter : w)
      out.push_back(letter > 0 ? letter + a_gens : letter - a_gens);
    return out;
  };

  std::vector<Word> relators = input.a.relators;
  for (const auto& r : input.b.relators) relators.push_back(shift_b(r));
  for (int i = 0; i < static_cast<int>(input.components.size()); ++i) {
    const auto& comp = input.components[i];
    const int t_letter = a_gens + b_gens + i;  // 1-based letter for t_i, i >= 1
    for (int s = 0; s < static_cast<int>(comp.pres.generator_names.size()); ++s) {
      Word generator{s + 1};
      Word in_a = apply_hom(comp.into_a, generator);
      Word in_b_inv = word_inverse(shift_b(apply_hom(comp.into_b, generator)));
      Word rel = in_a;
      if (i > 0) rel.push_back(t_letter);
      rel.insert(rel.end(), in_b_inv.begin(), in_b_inv.end());
      if (i > 0) rel.push_back(-t_letter);
      relators.push_back(free_reduce(rel));
    }
  }
  return make_presentation(std::move(names), std::move(relators));
}

namespace detail {

/// Lexicographic (i,j,k) with i,j >= 1, k >= 2 and the given total.
inline std::vector<std::array<int, 3>> positive_triples(int total) {
  std::vector<std::array<int, 3>> out;
  for (int i = 1; i <= total - 3; ++i)
    for (int j = 1; j <= total - i - 2; ++j) out.push_back({i, j, total - i - j});
  return out;
}

inline std::string triple_name(char prefix, const std::array<int, 3>& t) {
  return std::string(1, prefix) + '_' + std::to_string(t[0]) + '_' + std::to_string(t[1]) +
         '_' + std::to_string(t[2]);
}

}  // namespace detail

/// The pushout input behind sun1_symbolic(n): A free on alpha indices
/// (sum n+1), B free on beta indices (sum n+2), two free intersection
/// components mapping gamma/delta identically into A, and into B by
/// bumping the third/second index.
inline GvkInput sun1_gvk_input(int n) {
  if (n < 2) throw std::invalid_argument("sun1_gvk_input: need n >= 2");
  auto alpha = detail::positive_triples(n + 1);
  auto beta = detail::positive_triples(n + 2);
  std::map<std::array<int, 3>, int> beta_index;
  for (int i = 0; i < static_cast<int>(beta.size()); ++i) beta_index[beta[i]] = i;

  auto free_pres = [&](char prefix, const std::vector<std::array<int, 3>>& triples) {
    std::vector<std::string> names;
    for (const auto& t : triples) names.push_back(detail::triple_name(prefix, t));
    return make_presentation(std::move(names), {});
  };
  Presentation pres_a = free_pres('a', alpha);
  Presentation pres_b = free_pres('b', beta);
  Presentation c0 = free_pres('g', alpha);
  Presentation c1 = free_pres('d', alpha);

  auto identity_images = [&]() {
    std::vector<Word> images;
    for (int i = 0; i < static_cast<int>(alpha.size()); ++i) images.push_back({i + 1});
    return images;
  };
  auto beta_images = [&](int dj, int dk) {
    std::vector<Word> images;
    for (const auto& t : alpha) {
      std::array<int, 3> shifted{t[0], t[1] + dj, t[2] + dk};
      images.push_back({beta_index.at(shifted) + 1});
    }
    return images;
  };

  GvkInput input;
  input.a = pres_a;
  input.b = pres_b;
  input.components.push_back({c0, PresHom{c0, pres_a, identity_images()},
                              PresHom{c0, pres_b, beta_images(0, 1)}});
  input.components.push_back({c1, PresHom{c1, pres_a, identity_images()},
                              PresHom{c1, pres_b, beta_images(1, 0)}});
  return input;
}

/// Symbolic presentation of the n-token braid group of the one-ray sun,
/// assembled exactly as the generalized Van Kampen pushout of the
/// circle-interval decomposition.
inline Presentation sun1_symbolic(int n) { return gvk_pushout(sun1_gvk_input(n)); }

}  // namespace braidscope
