#pragma once

#include <stdexcept>

namespace pcube {

// Malformed input: bad poset file, bad JSON, names that don't resolve.
struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A size cap was exceeded (brute-force caps, 64-label ground cap, ...).
struct cap_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A representation fails validation against its poset.
struct invalid_representation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

} // namespace pcube
