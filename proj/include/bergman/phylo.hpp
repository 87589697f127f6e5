#pragma once

#include <string>
#include <vector>

#include "bergman/matroid.hpp"
#include "bergman/rational.hpp"

namespace bergman {

/// Symmetric, zero-diagonal table of pairwise values on n labelled taxa.
/// Only the upper triangle (i < j) is stored.
class DissimilarityMap {
 public:
  explicit DissimilarityMap(std::vector<std::string> taxa);

  int size() const { return static_cast<int>(taxa_.size()); }
  const std::vector<std::string>& taxa() const { return taxa_; }

  const Rat& at(int i, int j) const;
  void set(int i, int j, Rat value);

  /// Pairs in the canonical order (0,1),(0,2),...,(1,2),...: the element
  /// order of the complete-graph matroid on the same taxa.
  const std::vector<Rat>& pair_values() const { return values_; }
  std::vector<Rat>& pair_values() { return values_; }
  int pair_count() const { return static_cast<int>(values_.size()); }

  friend bool operator==(const DissimilarityMap&,
                         const DissimilarityMap&) = default;

 private:
  std::vector<std::string> taxa_;
  std::vector<Rat> values_;
};

/// Graphic matroid of the complete graph on the given taxa; one element
/// per unordered pair, ids "u-v", in the same canonical pair order as
/// DissimilarityMap::pair_values().
Matroid complete_graph_matroid(const std::vector<std::string>& taxa);

/// The pair values of d as a weight vector on complete_graph_matroid.
WeightVector to_weight_vector(const DissimilarityMap& d);
DissimilarityMap from_weight_vector(const std::vector<std::string>& taxa,
                                    const WeightVector& w);

/// Rooted tree with labelled leaves at height 0 and a height per internal
/// node; merge heights strictly increase from child to parent.
struct TreeNode {
  Rat height{0};
  int taxon = -1;              // leaf taxon index, -1 for internal nodes
  std::vector<int> children;   // node indices; empty for leaves
};

struct EquidistantTree {
  std::vector<std::string> taxa;
  std::vector<TreeNode> nodes;
  int root = -1;
};

/// Three-point condition: among every triple of pairwise values, the two
/// largest are equal.
bool is_ultrametric_3pt(const DissimilarityMap& d);

/// Componentwise-maximum ultrametric below d: the minimax (bottleneck)
/// path value of each pair, realized on a minimum spanning tree. Computed
/// by ascending single-linkage merges. Needs n >= 2.
DissimilarityMap subdominant_ultrametric(const DissimilarityMap& d);

struct LinfFit {
  DissimilarityMap fitted;
  Rat epsilon;
};

/// l-infinity-closest ultrametric to d: the subdominant ultrametric
/// shifted up by epsilon = half the largest gap. The fit is ultrametric
/// and its distance to d is exactly epsilon.
LinfFit linf_fit(const DissimilarityMap& d);

/// Hierarchical merge reconstruction: processing distinct values of u in
/// ascending order, clusters joined by a pair of value t merge into a
/// node of height t/2 (a multifurcation when more than two tie). The tree
/// distance of the result reproduces u exactly. Rejects non-ultrametric
/// input.
EquidistantTree tree_from_ultrametric(const DissimilarityMap& u);

/// d(i,j) = twice the height of the lowest common ancestor of i and j.
DissimilarityMap tree_distance(const EquidistantTree& t);

/// Rooted Newick with branch lengths (parent height minus child height),
/// children ordered by their smallest contained leaf label, ";"-terminated.
std::string newick_export(const EquidistantTree& t);

/// Inverse of newick_export; also accepts any equidistant Newick tree.
/// Rejects trees whose leaves are not all at the same depth.
EquidistantTree parse_newick(const std::string& text);

/// JSON-style dump {node, height, children}, serialized as a string.
std::string tree_to_json(const EquidistantTree& t);

}  // namespace bergman
