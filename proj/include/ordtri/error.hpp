#pragma once

#include <stdexcept>
#include <string>

namespace ordtri {

// Raised for violated preconditions and malformed input. The message is the
// short diagnostic surfaced to callers (e.g. "degenerate pair").
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ordtri
