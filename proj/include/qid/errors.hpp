#pragma once

#include <stdexcept>
#include <string>

namespace qid {

// Root of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Broken internal contract (a precondition the caller should have ensured).
class InvariantViolation : public Error {
public:
    using Error::Error;
};

class NonZeroRemainder : public Error {
public:
    using Error::Error;
};

class NegativeExponentSubstitution : public Error {
public:
    using Error::Error;
};

class MissingAssignment : public Error {
public:
    using Error::Error;
};

class ZeroToNegativePower : public Error {
public:
    using Error::Error;
};

class NotInSpan : public Error {
public:
    using Error::Error;
};

// theta_xy (and operators built on it) left the polynomial domain.
class OutsideDomain : public Error {
public:
    using Error::Error;
};

class InvalidContext : public Error {
public:
    using Error::Error;
};

class ContextMismatch : public Error {
public:
    using Error::Error;
};

class NonUnitConstantTerm : public Error {
public:
    using Error::Error;
};

class NonInvertibleDenParam : public Error {
public:
    using Error::Error;
};

class SampleExhaustion : public Error {
public:
    using Error::Error;
};

class SyntaxError : public Error {
public:
    SyntaxError(std::size_t offset, std::string expected)
        : Error("syntax error at offset " + std::to_string(offset) + ": expected " + expected),
          offset_(offset), expected_(std::move(expected))
    {
    }

    std::size_t offset() const noexcept { return offset_; }
    const std::string& expected() const noexcept { return expected_; }

private:
    std::size_t offset_;
    std::string expected_;
};

}  // namespace qid
