#pragma once

#include <stdexcept>
#include <string>

namespace gsp {

// Invalid or malformed input: bad instance data, parse failures, out-of-domain
// parameters. Maps to CLI exit code 3.
struct input_error : std::runtime_error {
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// A broken internal invariant. Maps to CLI exit code 4.
struct internal_error : std::runtime_error {
  explicit internal_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gsp
