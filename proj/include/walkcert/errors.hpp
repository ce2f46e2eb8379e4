#ifndef WALKCERT_ERRORS_HPP
#define WALKCERT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace walkcert {

struct DimensionMismatch : std::invalid_argument {
    explicit DimensionMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct Singular : std::domain_error {
    explicit Singular(const std::string& what) : std::domain_error(what) {}
};

struct ZeroPolynomial : std::invalid_argument {
    explicit ZeroPolynomial(const std::string& what) : std::invalid_argument(what) {}
};

struct BothZero : std::invalid_argument {
    explicit BothZero(const std::string& what) : std::invalid_argument(what) {}
};

struct NonMonic : std::invalid_argument {
    explicit NonMonic(const std::string& what) : std::invalid_argument(what) {}
};

struct DegreeZero : std::invalid_argument {
    explicit DegreeZero(const std::string& what) : std::invalid_argument(what) {}
};

struct ZeroInput : std::invalid_argument {
    explicit ZeroInput(const std::string& what) : std::invalid_argument(what) {}
};

struct TooLarge : std::length_error {
    explicit TooLarge(const std::string& what) : std::length_error(what) {}
};

struct NotCospectral : std::domain_error {
    explicit NotCospectral(const std::string& what) : std::domain_error(what) {}
};

struct SingularWalkMatrix : std::domain_error {
    explicit SingularWalkMatrix(const std::string& what) : std::domain_error(what) {}
};

// Internal consistency breach; indicates an arithmetic bug, never expected.
struct VerificationFailed : std::logic_error {
    explicit VerificationFailed(const std::string& what) : std::logic_error(what) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace walkcert

#endif
