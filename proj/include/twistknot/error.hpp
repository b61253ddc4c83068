#pragma once

#include <stdexcept>
#include <string>

namespace tk {

// Malformed input text, PD codes, tables.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An operation was called outside its domain (bad modulus, non-prime, ...).
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// laurent_divide_exact / cyc division found a nonzero remainder.
struct NonExactDivision : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace tk
