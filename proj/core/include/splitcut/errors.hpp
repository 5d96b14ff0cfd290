#ifndef SPLITCUT_ERRORS_HPP
#define SPLITCUT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace splitcut {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument violates the documented precondition of an operation.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Two vertex sets that should partition the graph overlap or miss a vertex.
class InvalidPartition : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class NotSplitGraph : public Error {
public:
    NotSplitGraph() : Error("graph is not a split graph") {}
};

/// Brute-force routine called above its vertex cap, or an enumerated side wider than 62 bits.
class InstanceTooLarge : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string &what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

} // namespace splitcut

#endif // SPLITCUT_ERRORS_HPP
