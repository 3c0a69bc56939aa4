#pragma once

#include <stdexcept>
#include <string>

namespace dcp {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Non-convergence of an iterative solver; carries the last iterate.
template <class Iterate>
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, Iterate last)
        : Error(what), last_(std::move(last)) {}

    const Iterate& last_iterate() const noexcept { return last_; }

private:
    Iterate last_;
};

}  // namespace dcp
