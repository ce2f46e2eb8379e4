#include "walkcert/spectral.hpp"

#include "walkcert/fp.hpp"

namespace walkcert {

IntMatrix walk_matrix(const IntMatrix& x, const IntVector& z) {
    const std::size_t n = x.dim();
    if (z.size() != n) throw DimensionMismatch("walk matrix: vector dimension mismatch");
    IntMatrix w(n);
    IntVector col = z;
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) w.at(i, j) = col[i];
        if (j + 1 < n) col = x * col;
    }
    return w;
}

GeneralizedCharPoly generalized_charpoly(const IntMatrix& x, const IntVector& z) {
    const std::size_t n = x.dim();
    if (z.size() != n) throw DimensionMismatch("generalized charpoly: dimension mismatch");
    GeneralizedCharPoly out;
    out.c0 = charpoly(x);

    // Faddeev-LeVerrier: M_0 = I, M_k = X M_{k-1} + c_{n-k} I with
    // c_{n-k} = -tr(X M_{k-1})/k, so adj(lambda I - X) = sum M_k lambda^{n-1-k}.
    // The trace is divisible by k exactly (Newton's identities over Z).
    std::vector<Int> c1_desc(n, Int(0)); // coefficient of lambda^{n-1-k}
    IntMatrix mk = IntMatrix::identity(n);
    for (std::size_t k = 0;; ++k) {
        Int quad(0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                quad += z[i] * mk.at(i, j) * z[j];
        c1_desc[k] = -quad;
        if (k + 1 == n) break;
        IntMatrix next = x * mk;
        Int tr(0);
        for (std::size_t i = 0; i < n; ++i) tr += next.at(i, i);
        Int ck;
        mpz_divexact_ui(ck.get_mpz_t(), tr.get_mpz_t(), static_cast<unsigned long>(k + 1));
        for (std::size_t i = 0; i < n; ++i) next.at(i, i) -= ck;
        mk = std::move(next);
    }
    std::vector<Int> c1(n);
    for (std::size_t k = 0; k < n; ++k) c1[n - 1 - k] = c1_desc[k];
    out.c1 = IntPoly(std::move(c1));
    return out;
}

bool phi_cospectral(const IntMatrix& x, const IntVector& z,
                    const IntMatrix& y, const IntVector& w) {
    if (x.dim() != y.dim() || z.size() != w.size())
        throw DimensionMismatch("phi cospectrality: dimension mismatch");
    return generalized_charpoly(x, z) == generalized_charpoly(y, w);
}

Int discriminant(const IntPoly& phi) {
    if (phi.degree() < 1) throw DegreeZero("discriminant needs degree >= 1");
    if (!phi.is_monic()) throw NonMonic("discriminant needs a monic polynomial");
    const std::size_t n = static_cast<std::size_t>(phi.degree());
    Int r = resultant(phi, phi.derivative());
    return (n * (n - 1) / 2) % 2 == 0 ? r : -r;
}

IntPoly minimal_poly_mod_p(const IntMatrix& x, const IntVector& z, std::uint64_t p) {
    const std::size_t n = x.dim();
    if (z.size() != n) throw DimensionMismatch("minimal polynomial: dimension mismatch");
    // Iterated powers zeta, X zeta, ..., X^k zeta mod p until the new column
    // is dependent; the (monic) dependence is the minimal polynomial.
    std::vector<std::vector<std::uint64_t>> cols;
    IntVector v = z;
    for (std::size_t k = 0; k <= n; ++k) {
        std::vector<std::uint64_t> col(n);
        for (std::size_t i = 0; i < n; ++i) col[i] = fp::reduce(v[i], p);
        cols.push_back(std::move(col));
        std::vector<std::vector<std::uint64_t>> rows(n, std::vector<std::uint64_t>(k + 1));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j <= k; ++j)
                rows[i][j] = cols[j][i];
        auto pivots = fp::rref(rows, p);
        if (pivots.size() <= k) {
            // Columns 0..k-1 are independent, so column k is the unique free
            // column and the kernel vector is already monic in lambda^k.
            std::vector<Int> psi(k + 1, Int(0));
            psi[k] = 1;
            for (std::size_t r = 0; r < pivots.size(); ++r)
                psi[pivots[r]] = Int((p - rows[r][k]) % p);
            return IntPoly(std::move(psi));
        }
        if (k < n) v = x * v;
    }
    throw VerificationFailed("Cayley-Hamilton guarantees a dependence by degree n");
}

BetaDecomposition beta_decompose(const GeneralizedCharPoly& g, std::uint64_t p) {
    BetaDecomposition out;
    out.p = p;
    out.beta = fp_poly_gcd(g.c0, g.c1, p); // c0 monic, never zero mod p
    out.phi1 = fp_poly_divexact(g.c0, out.beta, p);
    out.phi2 = fp_poly_divexact(g.c1, out.beta, p);
    return out;
}

IntMatrix shifted_pair(const IntMatrix& x, const IntVector& z, const Int& t) {
    const std::size_t n = x.dim();
    if (z.size() != n) throw DimensionMismatch("shift: dimension mismatch");
    IntMatrix out = x;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out.at(i, j) += t * z[i] * z[j];
    return out;
}

std::optional<std::uint64_t> find_single_root_shift(const GeneralizedCharPoly& g,
                                                    std::uint64_t p) {
    for (std::uint64_t t0 = 0; t0 < p; ++t0) {
        IntPoly shifted = g.c0 + g.c1 * Int(t0);
        if (fp_root_count(shifted, p) <= 1) return t0;
    }
    return std::nullopt;
}

} // namespace walkcert
