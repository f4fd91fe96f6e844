#pragma once

#include <stdexcept>
#include <string>

namespace defenselab {

/// Violation of a documented model invariant (bad labels, malformed tables, ...).
class ModelError : public std::runtime_error {
public:
  explicit ModelError(const std::string& what) : std::runtime_error(what) {}
};

/// Input exceeds a configured size bound (e.g. support enumeration limit).
class CapacityError : public std::runtime_error {
public:
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

/// Scenario file is readable but violates the schema. Carries the offending
/// line (1-based, 0 when the problem is file-wide) and key for diagnostics.
class ConfigError : public std::runtime_error {
public:
  ConfigError(std::string key, int line, const std::string& what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what
                                    : what),
        key_(std::move(key)),
        line_(line) {}

  const std::string& key() const { return key_; }
  int line() const { return line_; }

private:
  std::string key_;
  int line_;
};

/// Filesystem failure (missing scenario, unwritable output directory).
class IoError : public std::runtime_error {
public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace defenselab
