#pragma once

#include <stdexcept>
#include <string>

namespace wound {

// Malformed input: parse failures, arity mismatches, out-of-range bounds.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An operation was called outside its domain (non-unit pivot, parameters
// where none are allowed, ...).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// No sampler is available for a relation passed to the randomized oracle.
class UnsupportedRelation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace wound
