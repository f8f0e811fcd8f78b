#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "odd5/coloring.hpp"

namespace odd5 {

constexpr int default_oracle_limit = 12;

// ODD5_MAX_ORACLE_N overrides the size guard when set to a positive integer.
inline int oracle_limit() {
  if (const char* s = std::getenv("ODD5_MAX_ORACLE_N")) {
    char* end = nullptr;
    long v = std::strtol(s, &end, 10);
    if (end != s && *end == '\0' && v > 0) return static_cast<int>(v);
  }
  return default_oracle_limit;
}

namespace detail {

// Backtracking over vertices in descending degree order. A vertex's oddness
// is checked once its whole neighborhood is colored.
class odd_search {
 public:
  odd_search(const graph& g, int k, std::mt19937_64* rng) : k_(k), rng_(rng) {
    ids_ = g.vertices();
    std::stable_sort(ids_.begin(), ids_.end(), [&](vertex a, vertex b) { return g.degree(a) > g.degree(b); });
    int n = static_cast<int>(ids_.size());
    std::vector<int> pos(g.capacity(), -1);
    for (int i = 0; i < n; ++i) pos[ids_[i]] = i;
    nb_.resize(n);
    for (int i = 0; i < n; ++i)
      for (vertex w : g.neighbors(ids_[i])) nb_[i].push_back(pos[w]);
    col_.assign(n, 0);
    cnt_.assign(static_cast<std::size_t>(n) * (k + 1), 0);
    odd_.assign(n, 0);
    pending_.resize(n);
    for (int i = 0; i < n; ++i) pending_[i] = static_cast<int>(nb_[i].size());
  }

  std::optional<coloring> run(int capacity) {
    if (!place(0, 0)) return std::nullopt;
    coloring out(k_, capacity);
    for (std::size_t i = 0; i < ids_.size(); ++i) out.assign(ids_[i], col_[i]);
    return out;
  }

 private:
  int& cnt(int i, color c) { return cnt_[static_cast<std::size_t>(i) * (k_ + 1) + c]; }

  bool place(int i, int max_used) {
    int n = static_cast<int>(ids_.size());
    if (i == n) return true;
    int top = rng_ ? k_ : std::min(k_, max_used + 1);
    std::vector<color> choices;
    for (color c = 1; c <= top; ++c) choices.push_back(c);
    if (rng_) std::shuffle(choices.begin(), choices.end(), *rng_);
    for (color c : choices) {
      bool clash = false;
      for (int j : nb_[i])
        if (col_[j] == c) {
          clash = true;
          break;
        }
      if (clash) continue;
      col_[i] = c;
      bool ok = true;
      for (int j : nb_[i]) {
        int& x = cnt(j, c);
        odd_[j] += (x % 2) ? -1 : 1;
        ++x;
        if (--pending_[j] == 0 && odd_[j] == 0) ok = false;
      }
      if (ok && place(i + 1, std::max(max_used, c))) return true;
      for (int j : nb_[i]) {
        int& x = cnt(j, c);
        odd_[j] += (x % 2) ? -1 : 1;
        --x;
        ++pending_[j];
      }
      col_[i] = 0;
    }
    return false;
  }

  int k_;
  std::mt19937_64* rng_;
  std::vector<vertex> ids_;
  std::vector<std::vector<int>> nb_;
  std::vector<color> col_;
  std::vector<int> cnt_;
  std::vector<int> odd_;
  std::vector<int> pending_;
};

}  // namespace detail

// Exhaustive; first occurrences of colors appear in increasing order.
inline std::optional<coloring> is_odd_k_colorable(const graph& g, int k) {
  if (k < 1) throw precondition_error("is_odd_k_colorable: k must be >= 1");
  return detail::odd_search(g, k, nullptr).run(g.capacity());
}

// Same search with a seeded random color order and no symmetry pruning.
// Produces varied witnesses for fixtures.
inline std::optional<coloring> sample_odd_k_coloring(const graph& g, int k, std::uint64_t seed) {
  if (k < 1) throw precondition_error("sample_odd_k_coloring: k must be >= 1");
  std::mt19937_64 rng(seed);
  return detail::odd_search(g, k, &rng).run(g.capacity());
}

struct oracle_result {
  int chi_odd = 0;
  coloring witness;
};

inline oracle_result chi_odd(const graph& g, std::optional<int> max_n = std::nullopt) {
  int limit = max_n.value_or(oracle_limit());
  if (g.order() > limit)
    throw oracle_guard_error("oracle refuses " + std::to_string(g.order()) + " vertices (limit " +
                             std::to_string(limit) + ")");
  // A rainbow coloring is odd, so the loop ends by k = |V|.
  for (int k = 1;; ++k)
    if (auto w = is_odd_k_colorable(g, k)) return {k, *w};
}

}  // namespace odd5
