#include "bergman/matroid.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "bergman/errors.hpp"
#include "union_find.hpp"

namespace bergman {

GroundSet::GroundSet(std::vector<std::string> labels)
    : labels_(std::move(labels)) {
  if (labels_.empty()) throw ValidationError("ground set must be nonempty");
  if (static_cast<int>(labels_.size()) > kMaxElements)
    throw ValidationError("ground set larger than " +
                          std::to_string(kMaxElements) +
                          " elements; this engine enumerates exhaustively");
  std::unordered_set<std::string> seen;
  for (const auto& l : labels_)
    if (!seen.insert(l).second)
      throw ValidationError("duplicate ground-set element '" + l + "'");
}

std::optional<int> GroundSet::index_of(const std::string& label) const {
  for (int i = 0; i < size(); ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

std::string GroundSet::format(Subset s) const {
  std::string out = "{";
  bool first = true;
  for (int e : s) {
    if (!first) out += ", ";
    out += labels_[e];
    first = false;
  }
  return out + "}";
}

namespace {

// Next bitmask with the same popcount (Gosper). Returns 0 past the end.
std::uint32_t next_combination(std::uint32_t v, int n) {
  std::uint32_t c = v & (~v + 1);
  std::uint32_t r = v + c;
  std::uint32_t next = (((r ^ v) >> 2) / c) | r;
  return next < (1u << n) ? next : 0;
}

}  // namespace

Matroid::Matroid(GroundSet ground, Kind kind)
    : ground_(std::move(ground)), kind_(kind) {}

Matroid Matroid::uniform(std::vector<std::string> elements, int rank) {
  Matroid m(GroundSet(std::move(elements)), Kind::Uniform);
  if (rank < 1)
    throw ValidationError("uniform matroid rank must be at least 1");
  if (rank > m.size())
    throw ValidationError("uniform matroid rank exceeds ground-set size");
  m.uniform_.rank = rank;
  m.finish_construction(false);
  return m;
}

Matroid Matroid::graphic(std::vector<std::string> vertices,
                         std::vector<GraphEdge> edges) {
  std::unordered_map<std::string, int> vertex_index;
  for (const auto& v : vertices) {
    if (!vertex_index.emplace(v, static_cast<int>(vertex_index.size())).second)
      throw ValidationError("duplicate vertex '" + v + "'");
  }
  std::vector<std::string> ids;
  std::vector<std::pair<int, int>> endpoints;
  for (const auto& e : edges) {
    auto u = vertex_index.find(e.u), v = vertex_index.find(e.v);
    if (u == vertex_index.end() || v == vertex_index.end())
      throw ValidationError("edge '" + e.id + "' uses an unknown vertex");
    if (u->second == v->second)
      throw LoopError("edge '" + e.id + "' is a self-loop (a loop element)");
    ids.push_back(e.id);
    endpoints.emplace_back(u->second, v->second);
  }
  Matroid m(GroundSet(std::move(ids)), Kind::Graphic);
  m.graphic_.num_vertices = static_cast<int>(vertices.size());
  m.graphic_.endpoints = std::move(endpoints);
  m.finish_construction(false);
  return m;
}

Matroid Matroid::from_bases(
    std::vector<std::string> elements,
    const std::vector<std::vector<std::string>>& bases) {
  Matroid m(GroundSet(std::move(elements)), Kind::ExplicitBases);
  if (bases.empty())
    throw ValidationError("explicit-bases matroid needs at least one basis");
  std::vector<Subset> masks;
  for (const auto& basis : bases) {
    Subset s;
    for (const auto& label : basis) {
      auto idx = m.ground_.index_of(label);
      if (!idx)
        throw ValidationError("basis uses unknown element '" + label + "'");
      if (s.contains(*idx))
        throw ValidationError("basis repeats element '" + label + "'");
      s = s.with(*idx);
    }
    masks.push_back(s);
  }
  std::sort(masks.begin(), masks.end(), SubsetLexLess{});
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  for (const auto& b : masks)
    if (b.count() != masks.front().count())
      throw ValidationError("bases are not equicardinal");
  if (masks.front().count() < 1)
    throw ValidationError("matroid rank must be at least 1");
  m.bases_ = std::move(masks);
  m.rank_ = m.bases_.front().count();
  m.finish_construction(true);
  return m;
}

int Matroid::rank(Subset s) const {
  switch (kind_) {
    case Kind::Uniform:
      return std::min(s.count(), uniform_.rank);
    case Kind::Graphic: {
      detail::UnionFind uf(graphic_.num_vertices);
      int r = 0;
      for (int e : s)
        if (uf.unite(graphic_.endpoints[e].first,
                     graphic_.endpoints[e].second))
          ++r;
      return r;
    }
    case Kind::ExplicitBases: {
      int best = 0;
      for (const auto& b : bases_) best = std::max(best, (b & s).count());
      return best;
    }
  }
  return 0;
}

void Matroid::finish_construction(bool validate_exchange) {
  const int n = size();
  if (kind_ != Kind::ExplicitBases) rank_ = rank(ground_.all());

  for (int e = 0; e < n; ++e)
    if (rank(Subset::single(e)) == 0)
      throw LoopError("element '" + ground_.label(e) +
                      "' is a loop; loopless matroids only (a loop is in "
                      "no basis, so the Bergman fan would be empty)");

  if (validate_exchange) validate_exchange_axiom();
  if (kind_ != Kind::ExplicitBases) enumerate_bases();
  enumerate_circuits();
  enumerate_flats_and_hyperplanes();

  cocircuits_.clear();
  for (const auto& h : hyperplanes_) cocircuits_.push_back(ground_.all() - h);
  std::sort(cocircuits_.begin(), cocircuits_.end(), SubsetLexLess{});

  circuits_by_element_.assign(n, {});
  for (int i = 0; i < static_cast<int>(circuits_.size()); ++i)
    for (int e : circuits_[i]) circuits_by_element_[e].push_back(i);
  cocircuits_by_element_.assign(n, {});
  for (int i = 0; i < static_cast<int>(cocircuits_.size()); ++i)
    for (int e : cocircuits_[i]) cocircuits_by_element_[e].push_back(i);
}

void Matroid::validate_exchange_axiom() const {
  std::unordered_set<std::uint32_t> basis_set;
  for (const auto& b : bases_) basis_set.insert(b.bits());
  for (const auto& b1 : bases_) {
    for (const auto& b2 : bases_) {
      for (int x : b1 - b2) {
        bool found = false;
        for (int y : b2 - b1) {
          if (basis_set.count(b1.without(x).with(y).bits())) {
            found = true;
            break;
          }
        }
        if (!found)
          throw ValidationError(
              "basis-exchange axiom fails for bases " + ground_.format(b1) +
              " and " + ground_.format(b2) + " at element '" +
              ground_.label(x) + "'");
      }
    }
  }
}

void Matroid::enumerate_bases() {
  bases_.clear();
  std::uint32_t mask = (1u << rank_) - 1u;
  while (mask != 0) {
    Subset s = Subset::from_bits(mask);
    if (rank(s) == rank_) bases_.push_back(s);
    mask = next_combination(mask, size());
  }
  std::sort(bases_.begin(), bases_.end(), SubsetLexLess{});
}

void Matroid::enumerate_circuits() {
  circuits_.clear();
  const int n = size();
  // A circuit has at most rank+1 elements; minimal dependent means every
  // one-element deletion is independent.
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    Subset s = Subset::from_bits(mask);
    int size_s = s.count();
    if (size_s > rank_ + 1) continue;
    if (rank(s) == size_s) continue;
    bool minimal = true;
    for (int e : s) {
      if (rank(s.without(e)) != size_s - 1) {
        minimal = false;
        break;
      }
    }
    if (minimal) circuits_.push_back(s);
  }
  std::sort(circuits_.begin(), circuits_.end(), SubsetLexLess{});
}

void Matroid::enumerate_flats_and_hyperplanes() {
  flats_.clear();
  hyperplanes_.clear();
  std::unordered_set<std::uint32_t> seen;
  std::vector<Subset> frontier{closure(Subset())};
  seen.insert(frontier.front().bits());
  while (!frontier.empty()) {
    std::vector<Subset> next;
    for (Subset f : frontier) {
      flats_.push_back(f);
      if (rank(f) == rank_ - 1) hyperplanes_.push_back(f);
      for (int e = 0; e < size(); ++e) {
        if (f.contains(e)) continue;
        Subset g = closure(f.with(e));
        if (seen.insert(g.bits()).second) next.push_back(g);
      }
    }
    frontier = std::move(next);
  }
  std::sort(flats_.begin(), flats_.end(), SubsetLexLess{});
  std::sort(hyperplanes_.begin(), hyperplanes_.end(), SubsetLexLess{});
}

Subset Matroid::closure(Subset s) const {
  int r = rank(s);
  Subset out = s;
  for (int e = 0; e < size(); ++e)
    if (!s.contains(e) && rank(s.with(e)) == r) out = out.with(e);
  return out;
}

Subset Matroid::fundamental_circuit(Subset basis, int x) const {
  if (!is_basis(basis))
    throw std::invalid_argument("fundamental_circuit: not a basis");
  if (basis.contains(x))
    throw std::invalid_argument("fundamental_circuit: x must lie outside B");
  Subset s = basis.with(x);
  Subset circuit;
  for (int e : s)
    if (rank(s.without(e)) == rank_) circuit = circuit.with(e);
  return circuit;
}

Subset Matroid::fundamental_cocircuit(Subset basis, int y) const {
  if (!is_basis(basis))
    throw std::invalid_argument("fundamental_cocircuit: not a basis");
  if (!basis.contains(y))
    throw std::invalid_argument("fundamental_cocircuit: y must lie in B");
  return ground_.all() - closure(basis.without(y));
}

Matroid Matroid::dual() const {
  for (int e = 0; e < size(); ++e)
    if (is_coloop(e))
      throw LoopError("dual would have a loop: '" + ground_.label(e) +
                      "' is a coloop");
  Matroid m(ground_, Kind::ExplicitBases);
  for (const auto& b : bases_) m.bases_.push_back(ground_.all() - b);
  std::sort(m.bases_.begin(), m.bases_.end(), SubsetLexLess{});
  m.rank_ = size() - rank_;
  m.finish_construction(false);
  return m;
}

Subset Matroid::min_weight_basis(const WeightVector& w) const {
  check_weights(w);
  std::vector<int> order(size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (w[a] != w[b]) return w[a] < w[b];
    return a < b;
  });
  Subset basis;
  int have = 0;
  for (int e : order) {
    if (rank(basis.with(e)) > have) {
      basis = basis.with(e);
      if (++have == rank_) break;
    }
  }
  return basis;
}

std::vector<Subset> Matroid::min_weight_bases(const WeightVector& w) const {
  check_weights(w);
  std::vector<Subset> out;
  Rat best;
  for (const auto& b : bases_) {
    Rat wb = basis_weight(b, w);
    if (out.empty() || wb < best) {
      best = wb;
      out.assign(1, b);
    } else if (wb == best) {
      out.push_back(b);
    }
  }
  return out;
}

Rat Matroid::basis_weight(Subset basis, const WeightVector& w) const {
  Rat total(0);
  for (int e : basis) total += w[e];
  return total;
}

void Matroid::check_weights(const WeightVector& w) const {
  if (static_cast<int>(w.size()) != size())
    throw std::invalid_argument(
        "weight vector has " + std::to_string(w.size()) +
        " entries for a ground set of " + std::to_string(size()));
}

Rat subset_min(const WeightVector& w, Subset s) {
  if (s.empty()) throw std::invalid_argument("subset_min of empty set");
  Rat best = w[s.min_element()];
  for (int e : s) best = std::min(best, w[e]);
  return best;
}

Rat subset_max(const WeightVector& w, Subset s) {
  if (s.empty()) throw std::invalid_argument("subset_max of empty set");
  Rat best = w[s.min_element()];
  for (int e : s) best = std::max(best, w[e]);
  return best;
}

}  // namespace bergman
