#pragma once

#include <stdexcept>

namespace zalcman {

// Input outside the mathematical domain (n < 3, lambda <= 0, point off the square).
struct domain_error : std::domain_error {
  using std::domain_error::domain_error;
};

// Input valid in itself but outside the lambda window an operation is stated for.
struct window_error : std::domain_error {
  using std::domain_error::domain_error;
};

// Malformed call: bad lengths, degenerate grids, null-ish arguments.
struct argument_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace zalcman
