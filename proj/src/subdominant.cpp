#include "bergman/subdominant.hpp"

#include <algorithm>
#include <stdexcept>

namespace bergman {

Rat blue_rule_value_witness(const Matroid& m, const WeightVector& w, int e,
                            Subset* witness) {
  const auto& through = m.cocircuits_containing(e);
  // Every element of a loopless matroid lies in at least one cocircuit.
  Rat best;
  Subset best_witness;
  bool have = false;
  for (int ci : through) {
    Subset cocircuit = m.cocircuits()[ci];
    Rat value = subset_min(w, cocircuit);
    if (!have || value > best) {
      best = value;
      best_witness = cocircuit;
      have = true;
    }
  }
  if (witness) *witness = best_witness;
  return best;
}

Rat red_rule_value_witness(const Matroid& m, const WeightVector& w, int e,
                           Subset* witness) {
  const auto& through = m.circuits_containing(e);
  if (through.empty()) {
    if (witness) *witness = Subset();
    return w[e];
  }
  Rat best;
  Subset best_witness;
  bool have = false;
  for (int ci : through) {
    Subset circuit = m.circuits()[ci];
    Rat value = subset_max(w, circuit.without(e));
    if (!have || value < best) {
      best = value;
      best_witness = circuit;
      have = true;
    }
  }
  if (witness) *witness = best_witness;
  // The min-max can only exceed w[e] when e is the unique maximum of no
  // circuit, in which case the weight is already right where it must be.
  return std::min(best, w[e]);
}

Rat blue_rule_value(const Matroid& m, const WeightVector& w, int e) {
  return blue_rule_value_witness(m, w, e, nullptr);
}

Rat red_rule_value(const Matroid& m, const WeightVector& w, int e) {
  return red_rule_value_witness(m, w, e, nullptr);
}

WeightVector subdominant(const Matroid& m, const WeightVector& w) {
  m.check_weights(w);
  WeightVector out(w.size());
  for (int e = 0; e < m.size(); ++e) out[e] = blue_rule_value(m, w, e);
  return out;
}

WeightVector subdominant_red(const Matroid& m, const WeightVector& w) {
  m.check_weights(w);
  WeightVector out(w.size());
  for (int e = 0; e < m.size(); ++e) out[e] = red_rule_value(m, w, e);
  return out;
}

WeightVector apply_rules_sequential(const Matroid& m, const WeightVector& w,
                                    const std::vector<int>& order,
                                    const std::vector<Rule>& rule_choice,
                                    std::vector<RuleApplication>* trace) {
  m.check_weights(w);
  if (static_cast<int>(order.size()) != m.size())
    throw std::invalid_argument("order must visit every element once");
  if (rule_choice.size() != order.size())
    throw std::invalid_argument("one rule choice per order entry required");
  std::vector<bool> seen(order.size(), false);
  for (int e : order) {
    if (e < 0 || e >= m.size() || seen[e])
      throw std::invalid_argument("order must be a permutation of elements");
    seen[e] = true;
  }

  WeightVector current = w;
  for (std::size_t k = 0; k < order.size(); ++k) {
    int e = order[k];
    Subset witness;
    Rat value = rule_choice[k] == Rule::Blue
                    ? blue_rule_value_witness(m, current, e, &witness)
                    : red_rule_value_witness(m, current, e, &witness);
    if (value != current[e]) {
      if (trace)
        trace->push_back(
            RuleApplication{e, rule_choice[k], current[e], value, witness});
      current[e] = value;
    }
  }
  return current;
}

WeightVector subdominant_via_basis(const Matroid& m, const WeightVector& w) {
  m.check_weights(w);
  Subset basis = m.min_weight_basis(w);
  WeightVector out = w;
  for (int e = 0; e < m.size(); ++e) {
    if (basis.contains(e)) continue;
    Subset circuit = m.fundamental_circuit(basis, e);
    out[e] = subset_max(w, circuit.without(e));
  }
  return out;
}

bool minmax_identity_check(const Matroid& m, const WeightVector& w,
                           Subset min_basis, int e) {
  m.check_weights(w);
  if (!m.is_basis(min_basis))
    throw std::invalid_argument("minmax_identity_check: not a basis");
  if (min_basis.contains(e))
    throw std::invalid_argument("minmax_identity_check: e must be outside B");
  Rat fc_value = subset_max(w, m.fundamental_circuit(min_basis, e).without(e));
  const auto& through = m.circuits_containing(e);
  Rat best;
  bool have = false;
  for (int ci : through) {
    Rat value = subset_max(w, m.circuits()[ci].without(e));
    if (!have || value < best) {
      best = value;
      have = true;
    }
  }
  return have && best == fc_value;
}

}  // namespace bergman
