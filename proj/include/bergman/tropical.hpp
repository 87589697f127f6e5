#pragma once

#include <string>
#include <vector>

#include "bergman/matroid.hpp"
#include "bergman/rational.hpp"

namespace bergman {

/// Scalar of the min-plus semiring: a rational or +infinity. Infinity is
/// the additive unit (neutral for min) and absorbing for multiplication.
struct TropScalar {
  static TropScalar infinity() { return TropScalar{true, Rat(0)}; }
  static TropScalar of(Rat v) { return TropScalar{false, std::move(v)}; }

  bool is_inf = true;
  Rat value{0};

  friend bool operator==(const TropScalar& a, const TropScalar& b) {
    if (a.is_inf || b.is_inf) return a.is_inf == b.is_inf;
    return a.value == b.value;
  }
};

/// min(x, y)
TropScalar trop_add(const TropScalar& x, const TropScalar& y);
/// x + y, with infinity absorbing
TropScalar trop_mul(const TropScalar& x, const TropScalar& y);

/// Point of tropical projective space: one coordinate per index, at least
/// one of them finite. Two points are projectively equal when they differ
/// by adding one finite constant to every coordinate.
struct TropicalPoint {
  std::vector<TropScalar> coords;

  static TropicalPoint finite(const std::vector<Rat>& values);

  int dim() const { return static_cast<int>(coords.size()); }
  bool all_finite() const;
  /// Representative with minimum finite coordinate 0.
  TropicalPoint canonical() const;

  friend bool operator==(const TropicalPoint& a, const TropicalPoint& b) {
    return a.coords == b.coords;
  }
};

bool projectively_equal(const TropicalPoint& a, const TropicalPoint& b);

/// Componentwise min of (coeff_i + point_i). Rejects an empty combination,
/// mismatched dimensions, and all-infinite coefficient lists.
TropicalPoint trop_combine(const std::vector<TropScalar>& coeffs,
                           const std::vector<TropicalPoint>& points);

/// Finite list of generating points.
struct TropicalPolytope {
  std::vector<TropicalPoint> vertices;
};

/// The generator v_F of a flat F: infinity on F, zero elsewhere.
/// F must be a proper flat (v_E would have no finite coordinate).
TropicalPoint flat_generator(const Matroid& m, Subset flat);

/// Polytope generated by {v_H : H hyperplane of m}; its tropical convex
/// hull is the negated Bergman fan of m.
TropicalPolytope matroid_vertex_set(const Matroid& m);

/// max over i,j of |(x_i - x_j) - (y_i - y_j)|, the l-infinity metric on
/// tropical projective space. Both points must be all-finite.
Rat tp_distance(const TropicalPoint& x, const TropicalPoint& y);

/// The minimum lambda with (lambda + v) min x = x, i.e. the max of
/// x_i - v_i over the finite coordinates of v. x must be all-finite and
/// v must have at least one finite coordinate.
Rat lambda_coefficient(const TropicalPoint& v, const TropicalPoint& x);

/// Develin-Sturmfels nearest-point map: the tropical combination of the
/// vertices with their lambda coefficients. Lands in tconv(P) and
/// minimizes tp_distance to x over it.
TropicalPoint nearest_point(const TropicalPolytope& p, const TropicalPoint& x);

/// Projects -w onto the negated Bergman fan and negates back. No
/// projective normalization is applied, so the result is componentwise
/// below w and coincides exactly with the subdominant of w.
WeightVector project_bergman(const Matroid& m, const WeightVector& w);

/// True iff the proper flat F is not an intersection of strictly larger
/// flats — equivalently, iff F is a hyperplane.
bool is_vertex_generator(const Matroid& m, Subset flat);

}  // namespace bergman
