#pragma once

#include <stdexcept>
#include <string>

namespace tubings {

// Malformed or mismatched input (bad JSON, wrong graph, bad index).
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A documented precondition of an operation does not hold.
class PreconditionError : public std::runtime_error {
 public:
  explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

// Requested computation exceeds an implementation cap.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace tubings
