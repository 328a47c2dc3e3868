#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace frattini {

// Resource limits for the search-heavy operations. Exceeding a cap raises
// CapExceededError; a result is never silently truncated.
struct Caps {
  std::uint64_t enumeration_cap = 10000;  // largest order for element enumeration
  std::uint64_t lattice_cap = 400;        // largest order for full subgroup lattices
  std::uint64_t index_cap = 10000;        // largest index for coset-action quotients
  std::uint64_t complement_cap = 500;     // largest complement order searched for
};

class GroupError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CapExceededError : public GroupError {
 public:
  using GroupError::GroupError;
};

class ParseError : public GroupError {
 public:
  ParseError(const std::string& what, int line)
      : GroupError("line " + std::to_string(line) + ": " + what), line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

// Two supposedly-equivalent computation routes disagreed, or a consequence
// that is a theorem failed inside a production code path. Either way the
// library refuses to return a value it cannot stand behind.
class InternalCheckError : public GroupError {
 public:
  using GroupError::GroupError;
};

}  // namespace frattini
