#pragma once

#include <stdexcept>
#include <string>

namespace xisum {

// Argument outside the mathematical domain of an operation (e.g. m = 0).
class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A sum term pairs a zero base with a negative exponent; the value is
// undefined there. The message names the offending index.
class singular_term_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// The request exceeds a configured work cap (cost would be excessive,
// not mathematically invalid).
class resource_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internally checked identity failed; indicates a computation bug.
class verification_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace xisum
