#pragma once

#include <stdexcept>
#include <string>

namespace threesum {

// Input outside an operation's domain (bad modulus, value above the
// universe bound, query element missing from its universe).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A configured budget (memory, sieve span, restart attempts) was exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal guarantee did not hold. Always a bug, never bad input.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace threesum
