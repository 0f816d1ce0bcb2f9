#pragma once

#include <stdexcept>
#include <string>

namespace skein {

// Malformed input: bad token, inconsistent width, unknown symbol.
class ValidationError : public std::invalid_argument {
public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

// The requested level is special for this input and the invariant is not defined there.
class UnsupportedSpecialization : public std::domain_error {
public:
  explicit UnsupportedSpecialization(const std::string& what) : std::domain_error(what) {}
};

}  // namespace skein
