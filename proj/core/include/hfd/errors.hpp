#pragma once

#include <stdexcept>
#include <string>

namespace hfd {

// Malformed textual input: cycle notation, group/set/design files.
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// A declared value (e.g. an `order` line in a group file) failed its check.
class ConsistencyError : public std::runtime_error {
public:
  explicit ConsistencyError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace hfd
