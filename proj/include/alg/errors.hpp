#ifndef ALG_ERRORS_HPP
#define ALG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace alg {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
    explicit DivisionByZero(const std::string& w) : Error(w) {}
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& w) : Error("parse error: " + w) {}
};

class NonRationalCoefficients : public Error {
public:
    NonRationalCoefficients() : Error("polynomial has coefficients with nonzero imaginary part") {}
};

class DimensionMismatch : public Error {
public:
    explicit DimensionMismatch(const std::string& w) : Error("dimension mismatch: " + w) {}
};

class DegenerateInput : public Error {
public:
    explicit DegenerateInput(const std::string& w) : Error("degenerate input: " + w) {}
};

class NotCommuting : public Error {
public:
    NotCommuting() : Error("operators do not commute") {}
};

class NotDiagonalizable : public Error {
public:
    explicit NotDiagonalizable(const std::string& w)
        : Error("not diagonalizable over the supplied eigenvalue candidates: " + w) {}
};

class TooLarge : public Error {
public:
    explicit TooLarge(const std::string& w) : Error("size limit exceeded: " + w) {}
};

class OutOfRange : public Error {
public:
    explicit OutOfRange(const std::string& w) : Error("parameter out of range: " + w) {}
};

class EqualBlocks : public Error {
public:
    EqualBlocks() : Error("sl(n,n) is not simple; equal block sizes refused") {}
};

class GradedInput : public Error {
public:
    GradedInput() : Error("operation requires a trivially graded (ordinary) algebra") {}
};

class GradingError : public Error {
public:
    explicit GradingError(const std::string& w) : Error("grading inconsistency: " + w) {}
};

class SchemaError : public Error {
public:
    explicit SchemaError(const std::string& w) : Error("schema error: " + w) {}
};

class ZeroVector : public Error {
public:
    ZeroVector() : Error("zero vector not allowed") {}
};

class NotIdempotent : public Error {
public:
    NotIdempotent() : Error("element is not idempotent") {}
};

class NotPeirce : public Error {
public:
    explicit NotPeirce(const std::string& w) : Error("Peirce decomposition failed: " + w) {}
};

class NotUnital : public Error {
public:
    NotUnital() : Error("algebra has no unit") {}
};

class NotFlexible : public Error {
public:
    NotFlexible() : Error("algebra fails the flexibility identity") {}
};

class NotClosed : public Error {
public:
    explicit NotClosed(const std::string& w) : Error("subspace not closed under the product: " + w) {}
};

class ParityMismatch : public Error {
public:
    explicit ParityMismatch(const std::string& w) : Error("parity mismatch: " + w) {}
};

class BadParameter : public Error {
public:
    explicit BadParameter(const std::string& w) : Error("bad parameter: " + w) {}
};

class K10DataCorrupt : public Error {
public:
    explicit K10DataCorrupt(const std::string& w) : Error("K10 table validation failed: " + w) {}
};

class InternalError : public Error {
public:
    explicit InternalError(const std::string& w) : Error("internal invariant violated: " + w) {}
};

}  // namespace alg

#endif
