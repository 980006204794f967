#pragma once

#include <stdexcept>

namespace sptree {

/// Input text could not be understood (matrix/tree/graph files, CLI payloads).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exact solver was asked for an instance above its enumeration bound.
class SizeBoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The instance admits no feasible solution (e.g. an active cluster with no
/// outgoing candidate edge on a disconnected graph).
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal invariant was violated; indicates a bug, not bad input.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace sptree
