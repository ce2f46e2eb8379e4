#ifndef WALKCERT_CERTIFY_HPP
#define WALKCERT_CERTIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "walkcert/linalg.hpp"
#include "walkcert/spectral.hpp"

namespace walkcert {

struct Factorization {
    Int value;
    int sign; // +1 or -1
    std::vector<std::pair<Int, unsigned>> prime_powers; // primes strictly increasing

    bool square_free() const;
    Int recombine() const;
};

// Complete factorization: trial division to 10^6, then Miller-Rabin and
// Pollard rho (Brent) on what remains. Throws ZeroInput on 0.
Factorization factor(const Int& m);

bool is_probable_prime(const Int& n);

// 0 is not square-free by convention: det(W) = 0 always fails the condition.
bool is_square_free(const Int& m);

enum class Verdict {
    CharacterizedByWalkDet,
    CharacterizedByCombined,
    Inconclusive,
};

std::string to_string(Verdict v);

struct Certificate {
    Verdict verdict = Verdict::Inconclusive;
    std::size_t n = 0;
    Int det_walk;
    bool zero_det = false;
    std::optional<Factorization> det_factorization; // absent when det = 0
    std::optional<Int> discr;                       // present for the combined rule
    std::vector<Int> failing_primes;                // p with p^2 | relevant quantity
    std::string input_hash;                         // hex of the graph bit encoding

    // Key-value document; arbitrary-precision integers as decimal strings.
    std::string to_document() const;
};

// Primary rule: characterized when det(W_{X,zeta}) is square-free.
Certificate certify_walk_det(const IntMatrix& x, const IntVector& z);

// Combined rule: characterized when gcd(|disc|, |det W|) is square-free and
// (4 does not divide det W or disc is odd); requires det W != 0. Soundness
// of this rule rests on cited facts about discriminants of integral
// symmetric matrices, recorded in the certificate document.
Certificate certify_combined(const IntMatrix& x, const IntVector& z);

// Rational orthogonal matrix with cached level (least ell with ell*Q integral).
struct RationalOrthogonal {
    RationalMatrix q;
    Int level;
};

// Q = W_{Y,eta} W_{X,zeta}^{-1}; verifies Q Q^T = I, Q X Q^T = Y, Q zeta = eta
// before returning. Throws NotCospectral, SingularWalkMatrix, or
// VerificationFailed.
RationalOrthogonal construct_q(const IntMatrix& x, const IntVector& z,
                               const IntMatrix& y, const IntVector& w);

// Trace of the proof chain for one prime, cross-checked against the level
// of the constructed Q.
struct LevelPrimeReport {
    std::uint64_t p = 0;
    bool divides_det = false;
    bool p_squared_divides_det = false;
    // Fields below are set only when p | det W and p^2 does not.
    std::optional<std::size_t> rank_x;
    std::optional<std::size_t> rank_y;
    std::optional<bool> kernels_equal;
    std::optional<std::uint64_t> t0;
    bool chain_applicable = false;
    bool concludes_p_coprime_to_level = false;
    bool consistent_with_level = false;

    std::string to_document() const;
};

LevelPrimeReport level_prime_check(const IntMatrix& x, const IntVector& z,
                                   const IntMatrix& y, const IntVector& w,
                                   std::uint64_t p);

} // namespace walkcert

#endif
