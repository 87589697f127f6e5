#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bergman/rational.hpp"
#include "bergman/subset.hpp"

namespace bergman {

/// Ordered list of distinct element identifiers. The input order is the
/// universal deterministic tie-break everywhere in the library.
class GroundSet {
 public:
  /// At most kMaxElements elements, all distinct, at least one.
  explicit GroundSet(std::vector<std::string> labels);

  static constexpr int kMaxElements = 20;

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<int> index_of(const std::string& label) const;
  Subset all() const { return Subset::full(size()); }

  /// "{a, b, c}" with labels in element order.
  std::string format(Subset s) const;

 private:
  std::vector<std::string> labels_;
};

struct GraphEdge {
  std::string id;
  std::string u;
  std::string v;
};

/// Exact, enumeration-capable matroid. Three representations are
/// supported (uniform, graphic, explicit bases); queries behave
/// identically across them. Loopless by construction; coloops are fine.
///
/// All enumerations (bases, circuits, cocircuits, flats, hyperplanes) are
/// computed once at construction and stored sorted in lex order, so a
/// constructed Matroid is immutable and safe to share across threads.
class Matroid {
 public:
  static Matroid uniform(std::vector<std::string> elements, int rank);
  static Matroid graphic(std::vector<std::string> vertices,
                         std::vector<GraphEdge> edges);
  /// Validates equicardinality and the basis-exchange axiom exhaustively;
  /// practical up to ~16 elements, which is the intended scale.
  static Matroid from_bases(std::vector<std::string> elements,
                            const std::vector<std::vector<std::string>>& bases);

  const GroundSet& ground() const { return ground_; }
  int size() const { return ground_.size(); }
  int rank() const { return rank_; }

  /// Matroid rank of S. rank(empty) = 0; monotone and submodular.
  int rank(Subset s) const;
  bool is_independent(Subset s) const { return rank(s) == s.count(); }
  bool is_basis(Subset s) const {
    return s.count() == rank_ && rank(s) == rank_;
  }

  const std::vector<Subset>& bases() const { return bases_; }
  const std::vector<Subset>& circuits() const { return circuits_; }
  /// Complements of the hyperplanes; equal to the circuits of dual().
  const std::vector<Subset>& cocircuits() const { return cocircuits_; }
  const std::vector<Subset>& flats() const { return flats_; }
  const std::vector<Subset>& hyperplanes() const { return hyperplanes_; }

  /// Circuits/cocircuits through a given element (indices into the lists
  /// above; every non-loop element lies in at least one cocircuit).
  const std::vector<int>& circuits_containing(int e) const {
    return circuits_by_element_[e];
  }
  const std::vector<int>& cocircuits_containing(int e) const {
    return cocircuits_by_element_[e];
  }

  /// {e : rank(S + e) == rank(S)}. Always contains S.
  Subset closure(Subset s) const;
  bool is_flat(Subset s) const { return closure(s) == s; }
  bool is_coloop(int e) const { return circuits_by_element_[e].empty(); }

  /// The unique circuit inside B + x, for a basis B and x outside B.
  Subset fundamental_circuit(Subset basis, int x) const;
  /// The unique cocircuit disjoint from B - y, for a basis B and y in B.
  Subset fundamental_cocircuit(Subset basis, int y) const;

  /// Bases of the dual are the complements of the bases of this matroid.
  /// Rejects matroids with coloops (a coloop dualizes to a loop).
  Matroid dual() const;

  /// Greedy minimum-weight basis: elements ascending by (weight, index),
  /// added when independence is preserved.
  Subset min_weight_basis(const WeightVector& w) const;
  /// All bases of minimum weight, in lex order.
  std::vector<Subset> min_weight_bases(const WeightVector& w) const;
  Rat basis_weight(Subset basis, const WeightVector& w) const;

  /// Throws unless w has exactly one finite weight per element.
  void check_weights(const WeightVector& w) const;

 private:
  struct UniformRep {
    int rank;
  };
  struct GraphicRep {
    int num_vertices;
    std::vector<std::pair<int, int>> endpoints;  // per element
  };
  struct BasesRep {};  // rank via the stored basis list

  enum class Kind { Uniform, Graphic, ExplicitBases };

  Matroid(GroundSet ground, Kind kind);
  void finish_construction(bool validate_exchange);
  void enumerate_bases();
  void enumerate_circuits();
  void enumerate_flats_and_hyperplanes();
  void validate_exchange_axiom() const;

  GroundSet ground_;
  Kind kind_;
  UniformRep uniform_{};
  GraphicRep graphic_{};
  int rank_ = 0;

  std::vector<Subset> bases_;
  std::vector<Subset> circuits_;
  std::vector<Subset> cocircuits_;
  std::vector<Subset> flats_;
  std::vector<Subset> hyperplanes_;
  std::vector<std::vector<int>> circuits_by_element_;
  std::vector<std::vector<int>> cocircuits_by_element_;
};

/// Minimum weight over the elements of s; s must be nonempty.
Rat subset_min(const WeightVector& w, Subset s);
/// Maximum weight over the elements of s; s must be nonempty.
Rat subset_max(const WeightVector& w, Subset s);

}  // namespace bergman
