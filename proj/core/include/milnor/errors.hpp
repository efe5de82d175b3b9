#pragma once

#include <stdexcept>
#include <string>

namespace milnor {

// Bad input or a violated precondition (unparsable text, non-convenient
// support, n < 2, ...).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two routes that must agree did not. Always a bug, never bad input.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace milnor
