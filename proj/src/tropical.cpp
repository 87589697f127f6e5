#include "bergman/tropical.hpp"

#include <algorithm>
#include <stdexcept>

namespace bergman {

TropScalar trop_add(const TropScalar& x, const TropScalar& y) {
  if (x.is_inf) return y;
  if (y.is_inf) return x;
  return TropScalar::of(std::min(x.value, y.value));
}

TropScalar trop_mul(const TropScalar& x, const TropScalar& y) {
  if (x.is_inf || y.is_inf) return TropScalar::infinity();
  return TropScalar::of(x.value + y.value);
}

TropicalPoint TropicalPoint::finite(const std::vector<Rat>& values) {
  if (values.empty())
    throw std::invalid_argument("a tropical point needs a coordinate");
  TropicalPoint p;
  p.coords.reserve(values.size());
  for (const Rat& v : values) p.coords.push_back(TropScalar::of(v));
  return p;
}

bool TropicalPoint::all_finite() const {
  for (const auto& c : coords)
    if (c.is_inf) return false;
  return true;
}

TropicalPoint TropicalPoint::canonical() const {
  const Rat* min_finite = nullptr;
  for (const auto& c : coords)
    if (!c.is_inf && (!min_finite || c.value < *min_finite))
      min_finite = &c.value;
  if (!min_finite)
    throw std::invalid_argument("point has no finite coordinate");
  Rat shift = *min_finite;
  TropicalPoint out = *this;
  for (auto& c : out.coords)
    if (!c.is_inf) c.value -= shift;
  return out;
}

bool projectively_equal(const TropicalPoint& a, const TropicalPoint& b) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("points live in different dimensions");
  bool have_delta = false;
  Rat delta;
  for (int i = 0; i < a.dim(); ++i) {
    if (a.coords[i].is_inf != b.coords[i].is_inf) return false;
    if (a.coords[i].is_inf) continue;
    Rat d = a.coords[i].value - b.coords[i].value;
    if (!have_delta) {
      delta = d;
      have_delta = true;
    } else if (d != delta) {
      return false;
    }
  }
  return true;
}

TropicalPoint trop_combine(const std::vector<TropScalar>& coeffs,
                           const std::vector<TropicalPoint>& points) {
  if (points.empty())
    throw std::invalid_argument("tropical combination of nothing");
  if (coeffs.size() != points.size())
    throw std::invalid_argument("one coefficient per point required");
  bool some_finite = false;
  for (const auto& c : coeffs) some_finite = some_finite || !c.is_inf;
  if (!some_finite)
    throw std::invalid_argument("all combination coefficients are infinite");
  int dim = points.front().dim();
  TropicalPoint out;
  out.coords.assign(dim, TropScalar::infinity());
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].dim() != dim)
      throw std::invalid_argument("combined points have mixed dimensions");
    for (int j = 0; j < dim; ++j)
      out.coords[j] =
          trop_add(out.coords[j], trop_mul(coeffs[i], points[i].coords[j]));
  }
  return out;
}

TropicalPoint flat_generator(const Matroid& m, Subset flat) {
  if (!m.is_flat(flat))
    throw std::invalid_argument("generator requested for a non-flat");
  if (flat == m.ground().all())
    throw std::invalid_argument(
        "the full ground set has no generator (no finite coordinate)");
  TropicalPoint p;
  p.coords.assign(m.size(), TropScalar::of(Rat(0)));
  for (int e : flat) p.coords[e] = TropScalar::infinity();
  return p;
}

TropicalPolytope matroid_vertex_set(const Matroid& m) {
  TropicalPolytope p;
  p.vertices.reserve(m.hyperplanes().size());
  for (const auto& h : m.hyperplanes())
    p.vertices.push_back(flat_generator(m, h));
  return p;
}

Rat tp_distance(const TropicalPoint& x, const TropicalPoint& y) {
  if (x.dim() != y.dim())
    throw std::invalid_argument("points live in different dimensions");
  if (!x.all_finite() || !y.all_finite())
    throw std::invalid_argument("tp_distance needs all-finite points");
  Rat lo = x.coords[0].value - y.coords[0].value;
  Rat hi = lo;
  for (int i = 1; i < x.dim(); ++i) {
    Rat d = x.coords[i].value - y.coords[i].value;
    lo = std::min(lo, d);
    hi = std::max(hi, d);
  }
  return hi - lo;
}

Rat lambda_coefficient(const TropicalPoint& v, const TropicalPoint& x) {
  if (v.dim() != x.dim())
    throw std::invalid_argument("points live in different dimensions");
  if (!x.all_finite())
    throw std::invalid_argument("lambda coefficient needs a finite target");
  bool have = false;
  Rat best;
  for (int i = 0; i < v.dim(); ++i) {
    if (v.coords[i].is_inf) continue;
    Rat d = x.coords[i].value - v.coords[i].value;
    if (!have || d > best) {
      best = d;
      have = true;
    }
  }
  if (!have)
    throw std::invalid_argument("vertex has no finite coordinate");
  return best;
}

TropicalPoint nearest_point(const TropicalPolytope& p, const TropicalPoint& x) {
  if (p.vertices.empty())
    throw std::invalid_argument("nearest point in an empty polytope");
  std::vector<TropScalar> coeffs;
  coeffs.reserve(p.vertices.size());
  for (const auto& v : p.vertices)
    coeffs.push_back(TropScalar::of(lambda_coefficient(v, x)));
  return trop_combine(coeffs, p.vertices);
}

WeightVector project_bergman(const Matroid& m, const WeightVector& w) {
  m.check_weights(w);
  std::vector<Rat> negated(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) negated[i] = -w[i];
  TropicalPoint image =
      nearest_point(matroid_vertex_set(m), TropicalPoint::finite(negated));
  WeightVector out(w.size());
  for (int i = 0; i < m.size(); ++i) {
    // Every element avoids some hyperplane, so every coordinate is finite.
    if (image.coords[i].is_inf)
      throw std::logic_error("projection produced an infinite coordinate");
    out[i] = -image.coords[i].value;
  }
  return out;
}

bool is_vertex_generator(const Matroid& m, Subset flat) {
  if (!m.is_flat(flat) || flat == m.ground().all())
    throw std::invalid_argument("vertex test needs a proper flat");
  Subset intersection = m.ground().all();
  for (const auto& g : m.flats())
    if (flat != g && (flat & g) == flat) intersection = intersection & g;
  return intersection != flat;
}

}  // namespace bergman
