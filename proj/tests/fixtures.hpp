#pragma once

// Shared fixture builders and independent oracles for the test binaries.
// Oracles deliberately use different algorithms than the library (DFS
// cycle detection instead of union-find, brute-force maximal independent
// subsets instead of representation-specific rank, min-max closure
// instead of single linkage) so that agreement is meaningful.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <utility>
#include <vector>

#include "bergman/matroid.hpp"
#include "bergman/phylo.hpp"
#include "bergman/rational.hpp"
#include "bergman/subset.hpp"

namespace fixtures {

using bergman::DissimilarityMap;
using bergman::EquidistantTree;
using bergman::GraphEdge;
using bergman::Matroid;
using bergman::Rat;
using bergman::Subset;
using bergman::TreeNode;
using bergman::WeightVector;

inline Rat rq(long num, long den = 1) { return bergman::make_rat(num, den); }

inline Matroid u12() { return Matroid::uniform({"a", "b"}, 1); }
inline Matroid u23() { return Matroid::uniform({"a", "b", "c"}, 2); }
inline Matroid u24() { return Matroid::uniform({"a", "b", "c", "d"}, 2); }
inline Matroid u35() { return Matroid::uniform({"a", "b", "c", "d", "e"}, 3); }

inline std::vector<std::string> complete_vertices(int n) {
  std::vector<std::string> v;
  for (int i = 0; i < n; ++i) v.push_back(std::string(1, char('A' + i)));
  return v;
}

// Edges of the complete graph on {A, B, ...}, ids "AB", "AC", ..., in
// canonical pair order.
inline Matroid complete(int n) {
  auto vertices = complete_vertices(n);
  std::vector<GraphEdge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      edges.push_back(GraphEdge{vertices[i] + vertices[j], vertices[i],
                                vertices[j]});
  return Matroid::graphic(vertices, edges);
}

inline Matroid k3() { return complete(3); }
inline Matroid k4() { return complete(4); }
inline Matroid k5() { return complete(5); }
inline Matroid k6() { return complete(6); }

// Weights on k4() in edge order AB, AC, AD, BC, BD, CD.
inline WeightVector w1() {
  return {rq(6, 5), rq(6, 5), rq(2), rq(1, 5), rq(2), rq(2)};
}

inline Matroid fano() {
  std::vector<std::string> elements = {"1", "2", "3", "4", "5", "6", "7"};
  const std::vector<std::vector<int>> lines = {
      {1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {2, 4, 6},
      {2, 5, 7}, {3, 4, 7}, {3, 5, 6}};
  std::vector<std::vector<std::string>> bases;
  for (int a = 1; a <= 7; ++a) {
    for (int b = a + 1; b <= 7; ++b) {
      for (int c = b + 1; c <= 7; ++c) {
        bool is_line = false;
        for (const auto& l : lines)
          is_line = is_line || (l[0] == a && l[1] == b && l[2] == c);
        if (!is_line)
          bases.push_back({std::to_string(a), std::to_string(b),
                           std::to_string(c)});
      }
    }
  }
  return Matroid::from_bases(elements, bases);
}

// Deterministic rational weight generator; numerators in [-6, 12],
// denominators from {1, 2, 3, 4, 6} so that ties actually happen.
struct RandomWeights {
  explicit RandomWeights(std::uint64_t seed) : rng(seed) {}

  Rat next_value() {
    static constexpr int kDens[] = {1, 2, 3, 4, 6};
    std::uniform_int_distribution<int> num(-6, 12);
    std::uniform_int_distribution<int> den(0, 4);
    return rq(num(rng), kDens[den(rng)]);
  }

  WeightVector next(int n) {
    WeightVector w;
    w.reserve(n);
    for (int i = 0; i < n; ++i) w.push_back(next_value());
    return w;
  }

  Rat next_positive() {
    static constexpr int kDens[] = {1, 2, 3, 4, 6};
    std::uniform_int_distribution<int> num(1, 12);
    std::uniform_int_distribution<int> den(0, 4);
    return rq(num(rng), kDens[den(rng)]);
  }

  std::mt19937_64 rng;
};

// True iff the given edges (pairs of vertex indices) contain no cycle.
// DFS with an explicit stack; parallel edges count as a cycle.
inline bool acyclic_oracle(int num_vertices,
                           const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<std::pair<int, int>>> adj(num_vertices);
  for (int k = 0; k < static_cast<int>(edges.size()); ++k) {
    adj[edges[k].first].push_back({edges[k].second, k});
    adj[edges[k].second].push_back({edges[k].first, k});
  }
  std::vector<bool> visited(num_vertices, false);
  for (int s = 0; s < num_vertices; ++s) {
    if (visited[s]) continue;
    std::vector<std::pair<int, int>> stack{{s, -1}};  // vertex, arriving edge
    visited[s] = true;
    while (!stack.empty()) {
      auto [v, in_edge] = stack.back();
      stack.pop_back();
      for (auto [u, k] : adj[v]) {
        if (k == in_edge) continue;
        if (visited[u]) return false;
        visited[u] = true;
        stack.push_back({u, k});
      }
    }
  }
  return true;
}

using IndependenceOracle = std::function<bool(Subset)>;

// Rank by brute force over all subsets of s.
inline int rank_oracle(const IndependenceOracle& indep, Subset s) {
  int best = 0;
  std::uint32_t bits = s.bits();
  for (std::uint32_t sub = bits;; sub = (sub - 1) & bits) {
    Subset t = Subset::from_bits(sub);
    if (indep(t)) best = std::max(best, t.count());
    if (sub == 0) break;
  }
  return best;
}

// Minimal dependent sets by brute force.
inline std::vector<Subset> circuits_oracle(const IndependenceOracle& indep,
                                           int n) {
  std::vector<Subset> out;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    Subset s = Subset::from_bits(mask);
    if (indep(s)) continue;
    bool minimal = true;
    for (int e : s) minimal = minimal && indep(s.without(e));
    if (minimal) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), bergman::SubsetLexLess{});
  return out;
}

inline IndependenceOracle graphic_oracle(int num_vertices,
                                         std::vector<std::pair<int, int>> ends) {
  return [num_vertices, ends = std::move(ends)](Subset s) {
    std::vector<std::pair<int, int>> chosen;
    for (int e : s) chosen.push_back(ends[e]);
    return acyclic_oracle(num_vertices, chosen);
  };
}

inline std::vector<std::pair<int, int>> complete_ends(int n) {
  std::vector<std::pair<int, int>> ends;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) ends.push_back({i, j});
  return ends;
}

// Min-max path closure: o(i,j) = min over i-j paths of the largest step,
// computed by relaxation until stable. Independent of single linkage.
inline DissimilarityMap bottleneck_oracle(const DissimilarityMap& d) {
  int n = d.size();
  std::vector<std::vector<Rat>> b(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b[i][j] = d.at(i, j);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j || i == k || j == k) continue;
        Rat via = std::max(b[i][k], b[k][j]);
        if (via < b[i][j]) b[i][j] = via;
      }
  DissimilarityMap out(d.taxa());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) out.set(i, j, b[i][j]);
  return out;
}

// Random equidistant tree: repeatedly merges 2 or 3 clusters at strictly
// increasing heights. Heights are halves so pair values are integers.
struct RandomTreeGen {
  explicit RandomTreeGen(std::uint64_t seed) : rng(seed) {}

  EquidistantTree next(const std::vector<std::string>& taxa) {
    EquidistantTree t;
    t.taxa = taxa;
    std::vector<int> clusters;
    for (int i = 0; i < static_cast<int>(taxa.size()); ++i) {
      t.nodes.push_back(TreeNode{Rat(0), i, {}});
      clusters.push_back(i);
    }
    Rat height(0);
    while (clusters.size() > 1) {
      std::uniform_int_distribution<int> step(1, 4);
      height += rq(step(rng), 2);
      int max_arity = std::min<int>(3, static_cast<int>(clusters.size()));
      std::uniform_int_distribution<int> arity_dist(2, max_arity);
      int arity = arity_dist(rng);
      TreeNode node;
      node.height = height;
      for (int k = 0; k < arity; ++k) {
        std::uniform_int_distribution<int> pick(
            0, static_cast<int>(clusters.size()) - 1);
        int at = pick(rng);
        node.children.push_back(clusters[at]);
        clusters.erase(clusters.begin() + at);
      }
      clusters.push_back(static_cast<int>(t.nodes.size()));
      t.nodes.push_back(std::move(node));
    }
    t.root = clusters.front();
    return t;
  }

  std::mt19937_64 rng;
};

}  // namespace fixtures
