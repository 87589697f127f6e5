#pragma once

#include <vector>

#include "bergman/matroid.hpp"

namespace bergman {

enum class Rule { Blue, Red };

/// Audit record of one weight-changing rule application.
struct RuleApplication {
  int element;
  Rule rule;
  Rat old_weight;
  Rat new_weight;   // never above old_weight
  Subset witness;   // cocircuit (blue) or circuit (red) setting the value
};

/// Blue rule: the largest cocircuit-minimum over cocircuits through e.
/// Never exceeds w[e] (e belongs to each such cocircuit), and equals w[e]
/// exactly when e is already minimum in some cocircuit.
Rat blue_rule_value(const Matroid& m, const WeightVector& w, int e);

/// Red rule: the smallest over circuits C through e of the maximum weight
/// in C - e, clamped at w[e]. Equals w[e] when e is a coloop or is not
/// the unique maximum of any circuit.
Rat red_rule_value(const Matroid& m, const WeightVector& w, int e);

/// Like the *_value forms, and also reports the lex-first extremal
/// witness (a cocircuit for blue; a circuit for red, empty for a coloop).
Rat blue_rule_value_witness(const Matroid& m, const WeightVector& w, int e,
                            Subset* witness);
Rat red_rule_value_witness(const Matroid& m, const WeightVector& w, int e,
                           Subset* witness);

/// The subdominant ultrametric of w for m: the componentwise-maximum
/// point of the Bergman fan lying componentwise below w. Computed as the
/// simultaneous blue rule over the original w.
WeightVector subdominant(const Matroid& m, const WeightVector& w);

/// Simultaneous red rule over the original w; agrees with subdominant().
WeightVector subdominant_red(const Matroid& m, const WeightVector& w);

/// Applies the chosen rule to each element in the given order, each step
/// reading the current (partially repaired) vector. The outcome is
/// independent of the order and of the blue/red choices. Appends one
/// RuleApplication per weight change to *trace when trace is non-null.
WeightVector apply_rules_sequential(const Matroid& m, const WeightVector& w,
                                    const std::vector<int>& order,
                                    const std::vector<Rule>& rule_choice,
                                    std::vector<RuleApplication>* trace = nullptr);

/// Fast path from one greedy minimum basis B: weights on B are kept; an
/// element outside B gets the maximum weight of its fundamental circuit
/// minus itself.
WeightVector subdominant_via_basis(const Matroid& m, const WeightVector& w);

/// Verifier for the identity behind the fast path: for a minimum basis B
/// and e outside B, the unclamped min-max over all circuits through e
/// equals the fundamental-circuit maximum.
bool minmax_identity_check(const Matroid& m, const WeightVector& w,
                           Subset min_basis, int e);

}  // namespace bergman
