#pragma once

#include <iosfwd>
#include <string>

#include "bergman/errors.hpp"
#include "bergman/matroid.hpp"
#include "bergman/phylo.hpp"

namespace bergman {

/// Matroid description file: a JSON object with "type" one of "uniform",
/// "graphic", "bases". Structural problems throw ParseError; axiom
/// violations ValidationError; loops LoopError.
Matroid parse_matroid_json(const std::string& text);
Matroid load_matroid_file(const std::string& path);

/// Weight CSV with header "element,weight", one row per ground-set
/// element, weights as decimal or "p/q" literals.
WeightVector parse_weights_csv(const std::string& text, const Matroid& m);
WeightVector load_weights_file(const std::string& path, const Matroid& m);
void write_weights_csv(std::ostream& out, const Matroid& m,
                       const WeightVector& w);

/// Square distance-matrix CSV: header row of taxa labels, matching first
/// column. Any asymmetry or nonzero diagonal is a hard error.
DissimilarityMap parse_distance_csv(const std::string& text);
DissimilarityMap load_distance_file(const std::string& path);
void write_distance_csv(std::ostream& out, const DissimilarityMap& d);

std::string read_file(const std::string& path);

}  // namespace bergman
