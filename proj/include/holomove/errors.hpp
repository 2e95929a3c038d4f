#pragma once

#include <stdexcept>
#include <string>

namespace holomove {

// Malformed arguments: mismatched sample counts, equal pivots, bad windows.
class input_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A numerical procedure could not certify its result (Newton failure,
// non-integral winding, chart escape, contradictory evidence).
class numerical_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of a formula (lambda = 0, |z| >= 1).
class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace holomove
