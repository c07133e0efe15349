#pragma once

#include <stdexcept>
#include <string>

namespace sjk {

/// Rejected user input: non-coprime pairs, missing seed data, bad ranges.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

/// An identity that must hold by construction failed. Never bad input.
class ConsistencyError : public std::logic_error {
 public:
  explicit ConsistencyError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace sjk
