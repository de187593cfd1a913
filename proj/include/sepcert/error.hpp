#pragma once

#include <stdexcept>
#include <string>

namespace sepcert {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A graph-level precondition failed (unfolded input, bad endpoints, ...).
class GraphError : public Error {
 public:
  using Error::Error;
};

/// A Y-component is not G-based: two of its vertices land on the same coset.
class NotGBasedError : public Error {
 public:
  using Error::Error;
};

class PermutationError : public Error {
 public:
  using Error::Error;
};

}  // namespace sepcert
