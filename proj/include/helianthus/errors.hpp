#pragma once

#include <stdexcept>
#include <string>

namespace helianthus {

/// Malformed or out-of-contract input (CLI exit code 2).
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// A configured search or pivot budget was exhausted (CLI exit code 3).
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

/// A compression oracle returned a system that is not a valid
/// proper upper bound, is too wide, or is too far from its input.
class OracleContractError : public std::runtime_error {
 public:
  explicit OracleContractError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace helianthus
