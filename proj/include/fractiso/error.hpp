#pragma once

#include <stdexcept>
#include <string>

namespace fractiso {

/// Malformed input: bad indices, unparseable files, wrong kind of object.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A size guard refused to run an exponential or oversized computation.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fractiso
