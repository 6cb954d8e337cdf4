#pragma once

#include <optional>
#include <tuple>

#include "braidscope/presentation.hpp"

namespace braidscope {

inline constexpr long long kDefaultTietzeBudget = 1'000'000;

struct TietzeResult {
  Presentation presentation;
  long long steps = 0;
  bool converged = true;  // false when the step budget ran out first
};

namespace detail {

/// Greedy Tietze simplification: deletes trivial relators, eliminates
/// generators that occur exactly once in some relator, and shortens
/// relators against shorter ones. Pivot order is deterministic:
/// shortest relator first, then lowest generator index.
class SimplifyEngine {
 public:
  SimplifyEngine(const Presentation& p, long long budget) : budget_(budget) {
    names_ = p.generator_names;
    gen_alive_.assign(names_.size(), 1);
    occ_.resize(names_.size());
    rels_.reserve(p.relators.size());
    rel_alive_.reserve(p.relators.size());
    for (const auto& r : p.relators) {
      rels_.push_back(cyclic_reduce(r));
      rel_alive_.push_back(1);
    }
    for (int r = 0; r < static_cast<int>(rels_.size()); ++r) {
      if (rels_[r].empty())
        drop_relator(r);
      else
        index_relator(r);
    }
  }

  TietzeResult run() {
    while (true) {
      if (steps_ >= budget_) {
        converged_ = false;
        break;
      }
      if (!heap_.empty()) {
        auto [len, g, r] = heap_.top();
        heap_.pop();
        if (!candidate_valid(len, g, r)) continue;
        eliminate(g, r);
        continue;
      }
      if (!shorten_pass()) break;
    }
    return finalize();
  }

 private:
  using Cand = std::tuple<size_t, int, int>;  // (relator length, generator, relator)

  bool candidate_valid(size_t len, int g, int r) const {
    if (!gen_alive_[g] || !rel_alive_[r]) return false;
    if (rels_[r].size() != len) return false;  // stale; a fresh entry exists
    auto it = occ_[g].find(r);
    return it != occ_[g].end() && it->second == 1;
  }

  void index_relator(int r) {
    std::map<int, int> count;
    for (int letter : rels_[r]) ++count[letter > 0 ? letter - 1 : -letter - 1];
    for (const auto& [g, c] : count) {
      occ_[g][r] = c;
      if (c == 1) heap_.emplace(rels_[r].size(), g, r);
    }
  }

  void deindex_relator(int r) {
    for (int letter : rels_[r]) occ_[letter > 0 ? letter - 1 : -letter - 1].erase(r);
  }

  void drop_relator(int r) {
    rel_alive_[r] = 0;
    rels_[r].clear();
    ++steps_;
  }

  void replace_relator(int r, Word w) {
    deindex_relator(r);
    rels_[r] = std::move(w);
    if (rels_[r].empty())
      drop_relator(r);
    else
      index_relator(r);
  }

  void eliminate(int g, int r) {
    const Word& w = rels_[r];
    size_t pos = 0;
    while (pos < w.size() && w[pos] != g + 1 && w[pos] != -(g + 1)) ++pos;
    Word rotated(w.begin() + pos, w.end());
    rotated.insert(rotated.end(), w.begin(), w.begin() + pos);
    Word rest(rotated.begin() + 1, rotated.end());
    // The relator reads g^eps * rest = 1, so g = (rest^-1)^eps.
    Word repl = rotated[0] > 0 ? word_inverse(rest) : std::move(rest);
    std::vector<int> affected;
    for (const auto& [s, c] : occ_[g]) {
      (void)c;
      if (s != r) affected.push_back(s);
    }
    deindex_relator(r);
    rel_alive_[r] = 0;
    rels_[r].clear();
    for (int s : affected)
      replace_relator(s, cyclic_reduce(substitute_generator(rels_[s], g, repl)));
    gen_alive_[g] = 0;
    ++steps_;
  }

  /// One pass of relator-vs-relator shortening: an occurrence of more
  /// than half of a (cyclically rotated, possibly inverted) shorter
  /// relator is replaced by the inverse of its complement.
  bool shorten_pass() {
    std::vector<int> order;
    for (int r = 0; r < static_cast<int>(rels_.size()); ++r)
      if (rel_alive_[r]) order.push_back(r);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return std::make_pair(rels_[a].size(), a) < std::make_pair(rels_[b].size(), b);
    });
    bool changed = false;
    for (int s : order) {
      if (!rel_alive_[s]) continue;
      const Word pattern = rels_[s];
      const size_t L = pattern.size();
      if (L < 2) continue;
      for (int r : order) {
        if (r == s || !rel_alive_[r] || rels_[r].size() < L) continue;
        if (steps_ >= budget_) return changed;
        if (try_shorten(r, pattern)) changed = true;
      }
    }
    return changed;
  }

  bool try_shorten(int r, const Word& pattern) {
    const size_t L = pattern.size();
    for (size_t ulen = L; 2 * ulen > L; --ulen) {
      for (int inv = 0; inv < 2; ++inv) {
        Word variant = inv ? word_inverse(pattern) : pattern;
        for (size_t rot = 0; rot < L; ++rot) {
          Word cyc(variant.begin() + rot, variant.end());
          cyc.insert(cyc.end(), variant.begin(), variant.begin() + rot);
          auto it = std::search(rels_[r].begin(), rels_[r].end(), cyc.begin(), cyc.begin() + ulen);
          if (it == rels_[r].end()) continue;
          // cyc = u * c with u found in r; u equals c^-1 in the group.
          Word complement(cyc.begin() + ulen, cyc.end());
          Word next(rels_[r].begin(), it);
          Word tail = word_inverse(complement);
          next.insert(next.end(), tail.begin(), tail.end());
          next.insert(next.end(), it + ulen, rels_[r].end());
          replace_relator(r, cyclic_reduce(next));
          ++steps_;
          return true;
        }
      }
    }
    return false;
  }

  TietzeResult finalize() {
    std::vector<int> new_id(names_.size(), -1);
    std::vector<std::string> out_names;
    for (int g = 0; g < static_cast<int>(names_.size()); ++g)
      if (gen_alive_[g]) {
        new_id[g] = static_cast<int>(out_names.size());
        out_names.push_back(names_[g]);
      }
    std::vector<Word> out_rels;
    for (int r = 0; r < static_cast<int>(rels_.size()); ++r) {
      if (!rel_alive_[r]) continue;
      Word w;
      w.reserve(rels_[r].size());
      for (int letter : rels_[r]) {
        int g = letter > 0 ? letter - 1 : -letter - 1;
        w.push_back(letter > 0 ? new_id[g] + 1 : -(new_id[g] + 1));
      }
      out_rels.push_back(std::move(w));
    }
    TietzeResult result;
    result.presentation = Presentation{std::move(out_names), std::move(out_rels)};
    result.steps = steps_;
    result.converged = converged_;
    return result;
  }

  std::vector<std::string> names_;
  std::vector<char> gen_alive_;
  std::vector<Word> rels_;
  std::vector<char> rel_alive_;
  std::vector<std::map<int, int>> occ_;  // generator -> relator -> occurrence count
  std::priority_queue<Cand, std::vector<Cand>, std::greater<>> heap_;
  long long steps_ = 0;
  long long budget_ = kDefaultTietzeBudget;
  bool converged_ = true;
};

}  // namespace detail

inline TietzeResult tietze_simplify(const Presentation& p,
                                    long long budget = kDefaultTietzeBudget) {
  return detail::SimplifyEngine(p, budget).run();
}

/// Certified free rank: the surviving generator count when simplification
/// eliminates every relator, otherwise nothing. Never asserts
/// non-freeness.
inline std::optional<long long> certify_free(const Presentation& p,
                                             long long budget = kDefaultTietzeBudget) {
  auto result = tietze_simplify(p, budget);
  if (result.presentation.relators.empty())
    return static_cast<long long>(result.presentation.generator_names.size());
  return std::nullopt;
}

}  // namespace braidscope
