#pragma once

#include <stdexcept>
#include <string>

namespace wts {

// Bad or malformed input: unreadable files, schema violations, invalid
// graphs/systems/terms. CLI exit code 2.
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Structurally valid input that fails a semantic check (degree constraint,
// decomposition condition, law violation caller chose to raise, ...).
// CLI exit code 2 as well; kept distinct for callers that care.
class ValidationError : public std::runtime_error {
public:
  explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Work refused because it exceeds a configured budget (brute-force labeling
// count, width target, automaton state budget). CLI exit code 3.
class ResourceError : public std::runtime_error {
public:
  explicit ResourceError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace wts
