#include "bergman/phylo.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include <json.hpp>

#include "bergman/errors.hpp"
#include "union_find.hpp"

namespace bergman {

namespace {

int pair_index(int n, int i, int j) {
  if (i > j) std::swap(i, j);
  if (i < 0 || i == j || j >= n)
    throw std::invalid_argument("taxon pair out of range");
  return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

}  // namespace

DissimilarityMap::DissimilarityMap(std::vector<std::string> taxa)
    : taxa_(std::move(taxa)) {
  if (taxa_.empty()) throw ValidationError("need at least one taxon");
  std::unordered_set<std::string> seen;
  for (const auto& t : taxa_)
    if (!seen.insert(t).second)
      throw ValidationError("duplicate taxon '" + t + "'");
  values_.assign(size() * (size() - 1) / 2, Rat(0));
}

const Rat& DissimilarityMap::at(int i, int j) const {
  static const Rat kZero(0);
  if (i == j) {
    if (i < 0 || i >= size())
      throw std::invalid_argument("taxon index out of range");
    return kZero;
  }
  return values_[pair_index(size(), i, j)];
}

void DissimilarityMap::set(int i, int j, Rat value) {
  values_[pair_index(size(), i, j)] = std::move(value);
}

Matroid complete_graph_matroid(const std::vector<std::string>& taxa) {
  std::vector<GraphEdge> edges;
  for (std::size_t i = 0; i < taxa.size(); ++i)
    for (std::size_t j = i + 1; j < taxa.size(); ++j)
      edges.push_back(GraphEdge{taxa[i] + "-" + taxa[j], taxa[i], taxa[j]});
  return Matroid::graphic(taxa, edges);
}

WeightVector to_weight_vector(const DissimilarityMap& d) {
  return d.pair_values();
}

DissimilarityMap from_weight_vector(const std::vector<std::string>& taxa,
                                    const WeightVector& w) {
  DissimilarityMap d(taxa);
  if (static_cast<int>(w.size()) != d.pair_count())
    throw std::invalid_argument("weight vector does not match the taxa");
  d.pair_values() = w;
  return d;
}

bool is_ultrametric_3pt(const DissimilarityMap& d) {
  int n = d.size();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        const Rat& a = d.at(i, j);
        const Rat& b = d.at(i, k);
        const Rat& c = d.at(j, k);
        Rat top = std::max({a, b, c});
        int hits = (a == top) + (b == top) + (c == top);
        if (hits < 2) return false;
      }
    }
  }
  return true;
}

DissimilarityMap subdominant_ultrametric(const DissimilarityMap& d) {
  int n = d.size();
  if (n < 2) throw std::invalid_argument("need at least two taxa");
  std::vector<int> order(d.pair_count());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return d.pair_values()[a] < d.pair_values()[b];
  });

  std::vector<std::pair<int, int>> pair_of(d.pair_count());
  for (int i = 0, p = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++p) pair_of[p] = {i, j};

  detail::UnionFind uf(n);
  std::vector<std::vector<int>> members(n);
  for (int i = 0; i < n; ++i) members[i] = {i};

  DissimilarityMap out(d.taxa());
  for (int p : order) {
    auto [i, j] = pair_of[p];
    int ri = uf.find(i), rj = uf.find(j);
    if (ri == rj) continue;
    const Rat& w = d.pair_values()[p];
    for (int a : members[ri])
      for (int b : members[rj]) out.set(a, b, w);
    uf.unite(ri, rj);
    int r = uf.find(ri);
    int other = r == ri ? rj : ri;
    members[r].insert(members[r].end(), members[other].begin(),
                      members[other].end());
    members[other].clear();
  }
  return out;
}

LinfFit linf_fit(const DissimilarityMap& d) {
  DissimilarityMap u = subdominant_ultrametric(d);
  Rat gap(0);
  for (int p = 0; p < d.pair_count(); ++p)
    gap = std::max(gap, Rat(d.pair_values()[p] - u.pair_values()[p]));
  Rat epsilon = gap / 2;
  for (auto& v : u.pair_values()) v += epsilon;
  return LinfFit{std::move(u), std::move(epsilon)};
}

EquidistantTree tree_from_ultrametric(const DissimilarityMap& u) {
  if (!is_ultrametric_3pt(u))
    throw std::invalid_argument("map fails the three-point condition");
  int n = u.size();
  EquidistantTree tree;
  tree.taxa = u.taxa();
  for (int i = 0; i < n; ++i)
    tree.nodes.push_back(TreeNode{Rat(0), i, {}});
  if (n == 1) {
    tree.root = 0;
    return tree;
  }

  std::map<Rat, std::vector<std::pair<int, int>>> levels;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) levels[u.at(i, j)].push_back({i, j});

  detail::UnionFind uf(n);
  std::vector<int> cluster_node(n), cluster_min(n);
  std::iota(cluster_node.begin(), cluster_node.end(), 0);
  std::iota(cluster_min.begin(), cluster_min.end(), 0);

  for (const auto& [value, pairs] : levels) {
    // Group the clusters that this level ties together.
    detail::UnionFind groups(n);
    for (auto [i, j] : pairs) groups.unite(uf.find(i), uf.find(j));
    std::map<int, std::vector<int>> grouped;  // group root -> cluster roots
    std::unordered_set<int> taken;
    for (auto [i, j] : pairs) {
      for (int r : {uf.find(i), uf.find(j)})
        if (taken.insert(r).second) grouped[groups.find(r)].push_back(r);
    }
    for (auto& [g, roots] : grouped) {
      if (roots.size() < 2) continue;
      std::sort(roots.begin(), roots.end(),
                [&](int a, int b) { return cluster_min[a] < cluster_min[b]; });
      TreeNode node;
      node.height = value / 2;
      for (int r : roots) node.children.push_back(cluster_node[r]);
      int idx = static_cast<int>(tree.nodes.size());
      tree.nodes.push_back(std::move(node));
      int merged = roots.front();
      int least = cluster_min[merged];
      for (std::size_t k = 1; k < roots.size(); ++k) {
        uf.unite(merged, roots[k]);
        least = std::min(least, cluster_min[roots[k]]);
        merged = uf.find(merged);
      }
      cluster_node[merged] = idx;
      cluster_min[merged] = least;
    }
  }
  tree.root = cluster_node[uf.find(0)];
  return tree;
}

namespace {

void collect_leaves(const EquidistantTree& t, int node, std::vector<int>* out) {
  const TreeNode& v = t.nodes[node];
  if (v.children.empty()) {
    out->push_back(v.taxon);
    return;
  }
  for (int c : v.children) collect_leaves(t, c, out);
}

}  // namespace

DissimilarityMap tree_distance(const EquidistantTree& t) {
  DissimilarityMap d(t.taxa);
  for (int v = 0; v < static_cast<int>(t.nodes.size()); ++v) {
    const TreeNode& node = t.nodes[v];
    if (node.children.empty()) continue;
    std::vector<std::vector<int>> parts;
    for (int c : node.children) {
      parts.emplace_back();
      collect_leaves(t, c, &parts.back());
    }
    Rat value = node.height * 2;
    for (std::size_t a = 0; a < parts.size(); ++a)
      for (std::size_t b = a + 1; b < parts.size(); ++b)
        for (int i : parts[a])
          for (int j : parts[b]) d.set(i, j, value);
  }
  return d;
}

namespace {

std::string smallest_leaf_label(const EquidistantTree& t, int node) {
  const TreeNode& v = t.nodes[node];
  if (v.children.empty()) return t.taxa[v.taxon];
  std::string best = smallest_leaf_label(t, v.children.front());
  for (std::size_t k = 1; k < v.children.size(); ++k)
    best = std::min(best, smallest_leaf_label(t, v.children[k]));
  return best;
}

std::string render_newick(const EquidistantTree& t, int node) {
  const TreeNode& v = t.nodes[node];
  if (v.children.empty()) return t.taxa[v.taxon];
  std::vector<int> order = v.children;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return smallest_leaf_label(t, a) < smallest_leaf_label(t, b);
  });
  std::string out = "(";
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (k) out += ",";
    out += render_newick(t, order[k]);
    out += ":";
    out += format_rat(v.height - t.nodes[order[k]].height);
  }
  return out + ")";
}

}  // namespace

std::string newick_export(const EquidistantTree& t) {
  return render_newick(t, t.root) + ";";
}

namespace {

// Recursive-descent Newick reader. Collects nodes with their depth below
// the root; heights are assigned afterwards once the leaf depth is known.
struct NewickParser {
  const std::string& text;
  std::size_t pos = 0;
  EquidistantTree tree;
  std::vector<Rat> depth;

  explicit NewickParser(const std::string& s) : text(s) {}

  void skip_space() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  char peek() {
    skip_space();
    if (pos >= text.size()) throw ParseError("unexpected end of tree text");
    return text[pos];
  }

  void expect(char c) {
    if (peek() != c)
      throw ParseError(std::string("expected '") + c + "' at position " +
                       std::to_string(pos));
    ++pos;
  }

  std::string read_name() {
    skip_space();
    std::size_t start = pos;
    while (pos < text.size()) {
      char c = text[pos];
      if (c == '(' || c == ')' || c == ',' || c == ':' || c == ';' ||
          std::isspace(static_cast<unsigned char>(c)))
        break;
      ++pos;
    }
    if (pos == start) throw ParseError("missing leaf name");
    return text.substr(start, pos - start);
  }

  Rat read_length() {
    expect(':');
    skip_space();
    std::size_t start = pos;
    while (pos < text.size() && text[pos] != ',' && text[pos] != ')' &&
           text[pos] != ';' &&
           !std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
    Rat len = parse_rat(text.substr(start, pos - start));
    if (len < 0) throw ParseError("negative branch length");
    return len;
  }

  // Returns the node index; records its depth below the root.
  int parse_node(const Rat& node_depth) {
    if (peek() == '(') {
      ++pos;
      std::vector<int> children;
      while (true) {
        parse_child(node_depth, &children);
        char c = peek();
        if (c == ',') {
          ++pos;
          continue;
        }
        expect(')');
        break;
      }
      if (children.size() < 2)
        throw ParseError("internal node needs at least two children");
      int idx = static_cast<int>(tree.nodes.size());
      tree.nodes.push_back(TreeNode{Rat(0), -1, children});
      depth.push_back(node_depth);
      return idx;
    }
    std::string name = read_name();
    int idx = static_cast<int>(tree.nodes.size());
    tree.nodes.push_back(TreeNode{Rat(0), -1, {}});
    depth.push_back(node_depth);
    leaf_names.push_back({idx, name});
    return idx;
  }

  void parse_child(const Rat& parent_depth, std::vector<int>* children) {
    // The subtree is parsed before its ':length' is known, so it is built
    // at the parent's depth and shifted down afterwards.
    std::size_t first_node = tree.nodes.size();
    int idx = parse_node(parent_depth);
    Rat len = read_length();
    for (std::size_t k = first_node; k < depth.size(); ++k) depth[k] += len;
    children->push_back(idx);
  }

  std::vector<std::pair<int, std::string>> leaf_names;

  EquidistantTree finish() {
    int root = parse_node(Rat(0));
    expect(';');
    skip_space();
    if (pos != text.size()) throw ParseError("trailing text after ';'");
    tree.root = root;

    if (leaf_names.empty()) throw ParseError("tree has no leaves");
    std::unordered_set<std::string> seen;
    for (const auto& [idx, name] : leaf_names) {
      if (!seen.insert(name).second)
        throw ParseError("duplicate leaf name '" + name + "'");
    }
    const Rat leaf_depth = depth[leaf_names.front().first];
    for (const auto& [idx, name] : leaf_names)
      if (depth[idx] != leaf_depth)
        throw ValidationError("leaves are not all at the same depth");

    for (std::size_t k = 0; k < tree.nodes.size(); ++k)
      tree.nodes[k].height = leaf_depth - depth[k];
    for (const auto& [idx, name] : leaf_names) {
      tree.nodes[idx].taxon = static_cast<int>(tree.taxa.size());
      tree.taxa.push_back(name);
    }
    return std::move(tree);
  }
};

}  // namespace

EquidistantTree parse_newick(const std::string& text) {
  NewickParser parser(text);
  return parser.finish();
}

std::string tree_to_json(const EquidistantTree& t) {
  nlohmann::json nodes = nlohmann::json::array();
  for (std::size_t k = 0; k < t.nodes.size(); ++k) {
    nlohmann::json node;
    node["node"] = k;
    node["height"] = format_rat(t.nodes[k].height);
    node["children"] = t.nodes[k].children;
    if (t.nodes[k].taxon >= 0) node["taxon"] = t.taxa[t.nodes[k].taxon];
    nodes.push_back(std::move(node));
  }
  nlohmann::json out;
  out["taxa"] = t.taxa;
  out["root"] = t.root;
  out["nodes"] = std::move(nodes);
  return out.dump(2);
}

}  // namespace bergman
