#ifndef QUATNORM_ERRORS_HPP
#define QUATNORM_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace quatnorm {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidN : Error {
    explicit InvalidN(int n)
        : Error("number of quaternionic variables must be >= 1, got " + std::to_string(n)) {}
};

struct InvalidBound : Error {
    explicit InvalidBound(int d)
        : Error("degree bound must be >= 2, got " + std::to_string(d)) {}
};

struct ZeroPolynomial : Error {
    ZeroPolynomial() : Error("leading term of the zero polynomial") {}
};

struct MatchMismatch : Error {
    MatchMismatch() : Error("division match does not target the leading word") {}
};

struct DegreeGuard : Error {
    DegreeGuard(int poly_degree, int bound)
        : Error("polynomial degree " + std::to_string(poly_degree) +
                " exceeds basis degree bound " + std::to_string(bound)) {}
};

struct DegreeOneElement : Error {
    explicit DegreeOneElement(std::size_t index)
        : Error("clear-only certification requires every element of degree > 1; "
                "element " + std::to_string(index) + " violates this") {}
};

struct IndexOutOfRange : Error {
    IndexOutOfRange(int index, int n)
        : Error("variable index " + std::to_string(index) +
                " outside alphabet with n = " + std::to_string(n)) {}
};

struct SyntaxError : Error {
    std::size_t position;
    SyntaxError(std::size_t pos, const std::string& what_arg)
        : Error("syntax error at position " + std::to_string(pos) + ": " + what_arg),
          position(pos) {}
};

} // namespace quatnorm

#endif
