#ifndef WALKCERT_POLY_HPP
#define WALKCERT_POLY_HPP

#include <cstdint>
#include <vector>

#include "walkcert/linalg.hpp"

namespace walkcert {

// Degree of the zero polynomial; distinct from every attainable degree.
inline constexpr int kZeroPolyDegree = -1;

// Integer polynomial, coefficients ascending by degree, trailing zeros
// stripped on construction.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs);

    static IntPoly zero() { return IntPoly(); }
    static IntPoly constant(Int c);
    // x^k with unit coefficient.
    static IntPoly monomial(std::size_t k);

    // kZeroPolyDegree for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

    // Coefficient of x^k; zero beyond the stored degree.
    const Int& coeff(std::size_t k) const;
    const std::vector<Int>& coeffs() const { return coeffs_; }

    Int evaluate(const Int& x) const;
    // p(M), evaluated by Horner on matrices.
    IntMatrix evaluate(const IntMatrix& m) const;

    IntPoly derivative() const;

    IntPoly operator+(const IntPoly& other) const;
    IntPoly operator-(const IntPoly& other) const;
    IntPoly operator*(const IntPoly& other) const;
    IntPoly operator*(const Int& c) const;
    bool operator==(const IntPoly&) const = default;

private:
    std::vector<Int> coeffs_;
};

// Reduce coefficients into 0..p-1 (result may drop degree).
IntPoly reduce_mod(const IntPoly& a, std::uint64_t p);

// Monic gcd in F_p[x] by the Euclidean algorithm. Throws BothZero when both
// inputs vanish mod p.
IntPoly fp_poly_gcd(const IntPoly& a, const IntPoly& b, std::uint64_t p);

// Exact quotient in F_p[x]; throws VerificationFailed when the division
// leaves a remainder.
IntPoly fp_poly_divexact(const IntPoly& a, const IntPoly& b, std::uint64_t p);

IntPoly fp_poly_mul(const IntPoly& a, const IntPoly& b, std::uint64_t p);

// Number of distinct roots of a mod p, by evaluation at every point of F_p.
std::size_t fp_root_count(const IntPoly& a, std::uint64_t p);

// Exact resultant via the Sylvester matrix and bareiss_det. Throws
// ZeroPolynomial when either input is zero.
Int resultant(const IntPoly& a, const IntPoly& b);

// Monic degree-n characteristic polynomial det(xI - m), division-free
// (Berkowitz).
IntPoly charpoly(const IntMatrix& m);

} // namespace walkcert

#endif
