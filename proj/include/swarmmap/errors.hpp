#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace swarmmap {

// Numeric / precondition violations (bad parameter values, dimension
// mismatches, out-of-range arguments). CLI maps this to exit code 3.
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input data (files, config text). Carries the byte offset or
// line number where parsing failed when known. CLI maps this to exit code 2.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what, std::size_t offset = npos)
      : std::runtime_error(offset == npos ? what
                                          : what + " (byte offset " +
                                                std::to_string(offset) + ")"),
        offset_(offset) {}

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  // Byte offset into the input, or npos if not applicable.
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_ = npos;
};

}  // namespace swarmmap
