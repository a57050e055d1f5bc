#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace relabel {

/// Malformed input: bad sizes, non-bijective labels, illegal flips, wrong graph class.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A flip inside a sequence could not be applied. `index` is its position in the sequence.
class InvalidFlip : public InvalidArgument {
 public:
  InvalidFlip(std::size_t index, const std::string& what)
      : InvalidArgument("flip #" + std::to_string(index) + ": " + what), index_(index) {}

  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

/// The configuration space needed by an exact computation exceeds the configured limit.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A privileged instance has no restricted flip sequence reaching the target.
class Unsolvable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace relabel
