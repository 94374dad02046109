#pragma once

#include <stdexcept>
#include <string>

namespace frobpow {

/// A caller-supplied value violates a documented precondition
/// (non-prime characteristic, wrong residue class, malformed ideal text, ...).
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

/// A configurable budget (search cap, enumeration cap, term count) was exhausted.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

/// A consistency check that can only fail through an implementation bug.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace frobpow
