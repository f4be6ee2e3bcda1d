#pragma once

#include <stdexcept>
#include <string>

namespace ddg {

/// Raised for violated preconditions and malformed inputs. Verification
/// outcomes (a design that is not affine, a graph that is not a DDG) are
/// reported as values, never thrown.
class Error : public std::invalid_argument {
 public:
  explicit Error(const std::string& what) : std::invalid_argument(what) {}
};

/// Size guardrail exceeded.
class BoundError : public Error {
 public:
  explicit BoundError(const std::string& what) : Error(what) {}
};

}  // namespace ddg
