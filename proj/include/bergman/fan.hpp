#pragma once

#include <optional>
#include <vector>

#include "bergman/matroid.hpp"

namespace bergman {

// Membership of a weight vector in the Bergman fan of a matroid, decided
// by each of its characterizations independently. The find_* forms return
// a witness for the failure (the lex-first violator under element order);
// the is_* forms are plain predicates on top of them.

/// First element (in element order) lying in no minimum-weight basis.
std::optional<int> find_uncovered_element(const Matroid& m,
                                          const WeightVector& w);

struct CircuitViolation {
  Subset circuit;
  int unique_max;
};
/// Lex-first circuit whose maximum weight is attained at a single element.
std::optional<CircuitViolation> find_unique_max_circuit(const Matroid& m,
                                                        const WeightVector& w);

/// First element that fails to be minimum in every cocircuit through it.
std::optional<int> find_nowhere_min_element(const Matroid& m,
                                            const WeightVector& w);

/// Chain F_1 < F_2 < ... < F_{k+1} = E of cumulative level sets of a
/// weight vector, together with the (strictly increasing) weight carried
/// by each difference F_i - F_{i-1}. F_0 = empty is implicit.
struct WeightClassFlag {
  std::vector<Subset> parts;
  std::vector<Rat> values;
};

/// The unique flag whose weight class contains w: the i-th part is the
/// union of the level sets of the i smallest distinct values.
WeightClassFlag weight_class_flag(const WeightVector& w);

/// First proper part of weight_class_flag(w) that is not a flat of m.
std::optional<Subset> find_non_flat_part(const Matroid& m,
                                         const WeightVector& w);

bool is_ultrametric_bases(const Matroid& m, const WeightVector& w);
bool is_ultrametric_circuits(const Matroid& m, const WeightVector& w);
bool is_ultrametric_cocircuits(const Matroid& m, const WeightVector& w);
bool is_ultrametric_flag(const Matroid& m, const WeightVector& w);

struct TropicalPoint;

/// True iff every superlevel set {i : x_i >= r} is a flat of m. The
/// thresholds that matter are the distinct finite coordinates of x plus
/// the set of infinite positions (the piece above every finite value).
/// For finite x this decides membership of -x in the Bergman fan; it also
/// applies to generator vectors with infinite entries.
bool superlevel_flat_test(const Matroid& m, const TropicalPoint& x);

}  // namespace bergman
