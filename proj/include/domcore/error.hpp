#pragma once

#include <stdexcept>
#include <string>

namespace domcore {

/// A graph or a requested size exceeds a documented capacity or practicality bound.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Malformed textual input (graph6, edge lists).
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace domcore
