#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dltk {

// Thrown when a configurable size cap would be exceeded (super summit set
// enumeration, flag enumeration, expression expansion).  Callers that want
// to retry with a larger cap can catch this specifically.
class resource_error : public std::runtime_error {
 public:
  explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown on malformed textual input.  `position` is a byte offset into the
// offending string.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) +
                           ")"),
        reason_(what),
        position_(position) {}

  // The message without the position suffix, for callers that re-frame it.
  const std::string& reason() const noexcept { return reason_; }
  std::size_t position() const noexcept { return position_; }

 private:
  std::string reason_;
  std::size_t position_;
};

}  // namespace dltk
