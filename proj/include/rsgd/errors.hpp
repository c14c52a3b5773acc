#pragma once

#include <stdexcept>
#include <string>

namespace rsgd {

// A geometric precondition failed: point off the manifold, vector not
// tangent, step beyond the injectivity radius, boundary/cut-locus hit,
// non-SPD matrix, rank collapse of a factor.
class GeometryError : public std::runtime_error {
 public:
  explicit GeometryError(const std::string& what) : std::runtime_error(what) {}
};

// The SGD driver detected a non-finite coordinate or an exploding loss.
class DivergenceError : public std::runtime_error {
 public:
  DivergenceError(const std::string& what, long iteration)
      : std::runtime_error(what + " at iteration " + std::to_string(iteration)),
        iteration_(iteration) {}
  long iteration() const { return iteration_; }

 private:
  long iteration_;
};

}  // namespace rsgd
