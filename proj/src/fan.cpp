#include "bergman/fan.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "bergman/tropical.hpp"

namespace bergman {

std::optional<int> find_uncovered_element(const Matroid& m,
                                          const WeightVector& w) {
  m.check_weights(w);
  Rat best = m.basis_weight(m.min_weight_basis(w), w);
  Subset covered;
  for (const auto& b : m.bases())
    if (m.basis_weight(b, w) == best) covered = covered | b;
  for (int e = 0; e < m.size(); ++e)
    if (!covered.contains(e)) return e;
  return std::nullopt;
}

std::optional<CircuitViolation> find_unique_max_circuit(const Matroid& m,
                                                        const WeightVector& w) {
  m.check_weights(w);
  for (const auto& c : m.circuits()) {
    Rat top = subset_max(w, c);
    int attainers = 0;
    int arg = -1;
    for (int e : c) {
      if (w[e] == top) {
        ++attainers;
        if (arg < 0) arg = e;
      }
    }
    if (attainers == 1) return CircuitViolation{c, arg};
  }
  return std::nullopt;
}

std::optional<int> find_nowhere_min_element(const Matroid& m,
                                            const WeightVector& w) {
  m.check_weights(w);
  for (int e = 0; e < m.size(); ++e) {
    bool min_somewhere = false;
    for (int ci : m.cocircuits_containing(e)) {
      if (w[e] == subset_min(w, m.cocircuits()[ci])) {
        min_somewhere = true;
        break;
      }
    }
    if (!min_somewhere) return e;
  }
  return std::nullopt;
}

WeightClassFlag weight_class_flag(const WeightVector& w) {
  std::map<Rat, Subset> levels;
  for (int e = 0; e < static_cast<int>(w.size()); ++e)
    levels[w[e]] = levels[w[e]].with(e);
  WeightClassFlag flag;
  Subset acc;
  for (const auto& [value, level] : levels) {
    acc = acc | level;
    flag.parts.push_back(acc);
    flag.values.push_back(value);
  }
  return flag;
}

std::optional<Subset> find_non_flat_part(const Matroid& m,
                                         const WeightVector& w) {
  m.check_weights(w);
  WeightClassFlag flag = weight_class_flag(w);
  for (std::size_t i = 0; i + 1 < flag.parts.size(); ++i)
    if (!m.is_flat(flag.parts[i])) return flag.parts[i];
  return std::nullopt;
}

bool is_ultrametric_bases(const Matroid& m, const WeightVector& w) {
  return !find_uncovered_element(m, w).has_value();
}

bool is_ultrametric_circuits(const Matroid& m, const WeightVector& w) {
  return !find_unique_max_circuit(m, w).has_value();
}

bool is_ultrametric_cocircuits(const Matroid& m, const WeightVector& w) {
  return !find_nowhere_min_element(m, w).has_value();
}

bool is_ultrametric_flag(const Matroid& m, const WeightVector& w) {
  return !find_non_flat_part(m, w).has_value();
}

bool superlevel_flat_test(const Matroid& m, const TropicalPoint& x) {
  if (x.dim() != m.size())
    throw std::invalid_argument("point dimension does not match ground set");
  Subset infinite;
  std::vector<Rat> thresholds;
  for (int i = 0; i < x.dim(); ++i) {
    if (x.coords[i].is_inf)
      infinite = infinite.with(i);
    else
      thresholds.push_back(x.coords[i].value);
  }
  std::sort(thresholds.begin(), thresholds.end());
  thresholds.erase(std::unique(thresholds.begin(), thresholds.end()),
                   thresholds.end());
  // The piece above every finite coordinate is exactly the infinite set.
  if (!m.is_flat(infinite)) return false;
  for (const Rat& r : thresholds) {
    Subset s = infinite;
    for (int i = 0; i < x.dim(); ++i)
      if (!x.coords[i].is_inf && x.coords[i].value >= r) s = s.with(i);
    if (!m.is_flat(s)) return false;
  }
  return true;
}

}  // namespace bergman
