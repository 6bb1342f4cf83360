#pragma once

#include <stdexcept>
#include <string>

namespace softcloud {

/// Unreadable/missing files, unwritable outputs, binary garbage. Exit code 1.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

/// Bad flags, bad config-file values, unresolvable artifact kinds. Exit code 2.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// A tag that cannot be placed on the requested canvas. Exit code 3.
class LayoutError : public std::runtime_error {
 public:
  explicit LayoutError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace softcloud
