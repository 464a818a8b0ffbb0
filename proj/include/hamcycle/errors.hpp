#ifndef HAMCYCLE_ERRORS_HPP
#define HAMCYCLE_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hamcycle {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Syntax error in edge-list or graph6 input. `line()` is 1-based, 0 when
/// the input has no line structure (graph6 records).
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line = 0)
        : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

    [[nodiscard]] std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Structurally invalid graph (self-loop, duplicate edge, endpoint out of range).
class InvalidGraph : public Error {
public:
    using Error::Error;
};

/// Semantic precondition failed (disconnected input, bad parameters, unknown vertex).
class PreconditionError : public Error {
public:
    using Error::Error;
};

class BudgetExceeded : public Error {
public:
    using Error::Error;
};

class TooLarge : public Error {
public:
    using Error::Error;
};

class BasisTooLarge : public Error {
public:
    using Error::Error;
};

class NotElementary : public Error {
public:
    using Error::Error;
};

class RankDrop : public Error {
public:
    using Error::Error;
};

class UnknownFixture : public Error {
public:
    using Error::Error;
};

} // namespace hamcycle

#endif // HAMCYCLE_ERRORS_HPP
