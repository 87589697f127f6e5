#pragma once

#include <stdexcept>
#include <string>

namespace bergman {

/// Malformed input file or literal (bad JSON/CSV structure, unparseable
/// rational, weight row for an unknown element, ...).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Semantically invalid matroid data: exchange axiom failure, bases of
/// unequal size, rank out of range, ground set too large, ...
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what)
      : std::runtime_error(what) {}
};

/// A loop was found. Loops are rejected everywhere: a loop lies in no
/// basis, so no weight vector has every element in a minimum basis.
class LoopError : public ValidationError {
 public:
  explicit LoopError(const std::string& what) : ValidationError(what) {}
};

}  // namespace bergman
