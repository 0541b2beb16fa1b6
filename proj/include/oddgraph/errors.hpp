#pragma once

#include <stdexcept>
#include <string>

namespace oddgraph {

// Failure while reading an external text format (graph6, edge list, Gauss
// code).  what() names the byte offset of the offending character.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& msg, std::size_t offset)
        : std::runtime_error(msg + " (byte " + std::to_string(offset) + ")"),
          offset_(offset) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// Input is larger than the operation is designed to handle.  The message
// states the limit and, where useful, the expected cost of going beyond it.
class unsupported_size_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace oddgraph
