#pragma once

#include <stdexcept>
#include <string>

namespace treepack {

// Malformed input or a violated precondition. The CLI maps this to exit
// code 2.
class input_error : public std::runtime_error {
 public:
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// A certified object failed its own invariants (a packing that does not
// verify, a trace that does not replay). Always names the failing check.
class verification_error : public std::runtime_error {
 public:
  explicit verification_error(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace treepack
