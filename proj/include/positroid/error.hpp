#pragma once

#include <stdexcept>
#include <string>

namespace positroid {

// Base class for all precondition failures raised by the library.
class Error : public std::invalid_argument {
 public:
  explicit Error(const std::string& what) : std::invalid_argument(what) {}
};

// A rank condition that every point of Gr(k,n) already satisfies (r >= m or
// r >= k). Callers normalize by dropping it.
class TrivialCondition : public Error {
 public:
  explicit TrivialCondition(const std::string& what) : Error(what) {}
};

}  // namespace positroid
