#ifndef FOLDRUN_ERRORS_HPP
#define FOLDRUN_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace foldrun {

/// Raised when an argument violates an operation's precondition.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised for 1-based indices outside the defined range.
class IndexError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Raised when residual inference cannot produce a consistent hypothesis.
class InferenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed automaton text; carries the 1-based line number.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace foldrun

#endif  // FOLDRUN_ERRORS_HPP
