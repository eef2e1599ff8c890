#ifndef REEB_ERRORS_HPP
#define REEB_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace reeb {

// Syntax error in a canonical string; offset is the byte position.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string msg, std::size_t offset)
        : std::runtime_error(msg + " at offset " + std::to_string(offset)),
          offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// Error in an edge-list document; line is 1-based.
class FileParseError : public std::runtime_error {
public:
    FileParseError(std::string msg, int line)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// Raised when the projected enumeration size exceeds the configured cap.
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised when a graph fails structural validation where a valid one is required.
class InvalidStructureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised when a test mutation mode cannot be applied to the given graph.
class MutationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace reeb

#endif
