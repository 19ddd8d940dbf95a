#ifndef RSGS_ERRORS_HPP
#define RSGS_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rsgs {

// Base class of everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// decompose() applied to a word that fails the goodness condition.
class NotGoodError : public Error {
public:
    using Error::Error;
};

// An enumeration grew past the configured cap.
class ResourceBoundError : public Error {
public:
    using Error::Error;
};

// leading()/lc()/monic() on the zero polynomial.
class ZeroPolynomialError : public Error {
public:
    using Error::Error;
};

// substitute() where the subtree at the occurrence does not equal the
// leading word of the plugged-in relation.
class PatternMismatchError : public Error {
public:
    using Error::Error;
};

// nf_equal() on a presentation whose confluence has not been established.
class NotConfluentError : public Error {
public:
    using Error::Error;
};

// A structure-constant table violating antisymmetry or the Jacobi identity
// where a valid Lie algebra is required.
class InvalidLieError : public Error {
public:
    using Error::Error;
};

// Expression or file syntax problem, annotated with a byte offset into the
// offending text.
class SyntaxError : public Error {
public:
    SyntaxError(const std::string& what, std::size_t offset)
        : Error(what + " (at offset " + std::to_string(offset) + ")"),
          offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

class UnknownGeneratorError : public Error {
public:
    using Error::Error;
};

class ZeroDenominatorError : public Error {
public:
    using Error::Error;
};

// Malformed presentation file (schema-level problems).
class InvalidInputError : public Error {
public:
    using Error::Error;
};

}  // namespace rsgs

#endif  // RSGS_ERRORS_HPP
