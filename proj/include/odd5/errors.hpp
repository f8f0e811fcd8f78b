#pragma once

#include <stdexcept>
#include <string>

namespace odd5 {

// Malformed input: unknown ids, inconsistent rotations, bad orders.
class structural_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A file that does not parse or does not match its schema.
class input_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An operation was called outside its documented domain.
class precondition_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// The exhaustive search refuses instances above its size guard.
class oracle_guard_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An extension produced something that failed verification.
class reduction_failure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace odd5
