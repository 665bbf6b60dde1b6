#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace irrdec {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Arithmetic misuse: division by zero, malformed rational text.
class DomainError : public Error {
public:
    using Error::Error;
};

class DimensionError : public Error {
public:
    using Error::Error;
};

class SingularMatrixError : public Error {
public:
    using Error::Error;
};

class RankError : public Error {
public:
    using Error::Error;
};

// Rank-deficient or non-pointed cone input.
class GeometryError : public Error {
public:
    using Error::Error;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

class ShiftSearchError : public Error {
public:
    using Error::Error;
};

// Pole hit while evaluating a generating function.
class EvaluationError : public Error {
public:
    using Error::Error;
};

class SamplingError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& message)
        : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

}  // namespace irrdec
