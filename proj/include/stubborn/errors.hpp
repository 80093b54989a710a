#pragma once

#include <stdexcept>
#include <string>

namespace stubborn {

// Bad input data or a violated precondition (malformed file, disconnected
// graph, set outside the universe, non-dominant set for a dominance bound).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A solve or iteration that failed to meet its tolerance.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace stubborn
