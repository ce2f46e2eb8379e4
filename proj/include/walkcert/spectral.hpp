#ifndef WALKCERT_SPECTRAL_HPP
#define WALKCERT_SPECTRAL_HPP

#include <cstdint>
#include <optional>

#include "walkcert/linalg.hpp"
#include "walkcert/poly.hpp"

namespace walkcert {

// Phi(lambda, t) = det(lambda I - X - t zeta zeta^T) = c0(lambda) + t c1(lambda).
// The t-expansion stops at degree 1 for rank-one perturbations.
struct GeneralizedCharPoly {
    IntPoly c0; // monic, degree n
    IntPoly c1; // degree <= n-1

    bool operator==(const GeneralizedCharPoly&) const = default;
};

// Phi == beta * (phi1 + t phi2) mod p with gcd(phi1, phi2) = 1.
struct BetaDecomposition {
    std::uint64_t p;
    IntPoly beta;  // monic, coefficients in 0..p-1
    IntPoly phi1;
    IntPoly phi2;
};

// Columns zeta, X zeta, ..., X^{n-1} zeta.
IntMatrix walk_matrix(const IntMatrix& x, const IntVector& z);

// c0 by Berkowitz; c1 = -zeta^T adj(lambda I - X) zeta by Faddeev-LeVerrier
// accumulation of the adjugate's polynomial coefficients, all integral.
GeneralizedCharPoly generalized_charpoly(const IntMatrix& x, const IntVector& z);

bool phi_cospectral(const IntMatrix& x, const IntVector& z,
                    const IntMatrix& y, const IntVector& w);

// (-1)^{n(n-1)/2} res(phi, phi'); phi must be monic of degree >= 1.
Int discriminant(const IntPoly& phi);

// Least-degree monic psi in F_p[lambda] with psi(X) zeta == 0 mod p.
IntPoly minimal_poly_mod_p(const IntMatrix& x, const IntVector& z, std::uint64_t p);

BetaDecomposition beta_decompose(const GeneralizedCharPoly& g, std::uint64_t p);

// X + t zeta zeta^T.
IntMatrix shifted_pair(const IntMatrix& x, const IntVector& z, const Int& t);

// First t0 in 0..p-1 such that c0 + t0 c1 has at most one distinct root in
// F_p; nullopt when no shift works.
std::optional<std::uint64_t> find_single_root_shift(const GeneralizedCharPoly& g,
                                                    std::uint64_t p);

} // namespace walkcert

#endif
