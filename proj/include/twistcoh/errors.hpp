#pragma once

#include <stdexcept>
#include <string>

namespace twistcoh {

// Malformed or unsupported input: bad dimensions, invalid Cartan types,
// automorphisms that are not diagram symmetries.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A configured resource bound (group element cap, oracle guard) was hit.
class ResourceCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace twistcoh
