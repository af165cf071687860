#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace covertree {

/// Malformed input text. line() is 1-based; 0 when the error is not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// A size guard (oracle limit, table size, memory) would be exceeded.
class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The reduction refuses to materialize a host graph.
class ReductionRefused : public std::runtime_error {
 public:
  ReductionRefused(const std::string& what, std::uint64_t requiredCap)
      : std::runtime_error(what), requiredCap_(requiredCap) {}
  /// Group-layer size that would have been needed; 0 when not a cap problem.
  std::uint64_t required_cap() const noexcept { return requiredCap_; }

 private:
  std::uint64_t requiredCap_;
};

}  // namespace covertree
