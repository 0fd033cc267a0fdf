#pragma once

#include <stdexcept>
#include <string>

namespace arcbox {

// Malformed input: bad file syntax, out-of-range vertex ids, broken type
// invariants. CLI maps this to exit code 1.
class InvalidInputError : public std::runtime_error {
 public:
  explicit InvalidInputError(const std::string& msg) : std::runtime_error(msg) {}
};

// An operation's precondition does not hold (partition sides are not cliques,
// numbering violates the Bi-Consecutive property, model is not normal, ...).
// CLI maps this to exit code 2.
class PreconditionError : public std::runtime_error {
 public:
  explicit PreconditionError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace arcbox
