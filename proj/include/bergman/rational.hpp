#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace bergman {

/// Exact rational scalar. All weights, distances and tree heights in this
/// library are Rat; there is no floating point anywhere, so ties in
/// min/max comparisons are decided exactly.
using Rat = mpq_class;

/// num/den, canonicalized. den must be nonzero.
Rat make_rat(long num, long den = 1);

/// Parses "7", "-3/4", "1.25", "+0.2". Decimal literals are exact
/// ("1.2" becomes 6/5). Throws ParseError on anything else.
Rat parse_rat(const std::string& text);

/// Exact textual form: an integer, a finite decimal when the reduced
/// denominator is 2^a*5^b (no precision loss possible), otherwise "p/q".
std::string format_rat(const Rat& value);

/// One exact rational weight per ground-set element, in element order.
using WeightVector = std::vector<Rat>;

}  // namespace bergman
