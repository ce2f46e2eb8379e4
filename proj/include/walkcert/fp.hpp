#ifndef WALKCERT_FP_HPP
#define WALKCERT_FP_HPP

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace walkcert::fp {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    base %= p;
    while (exp) {
        if (exp & 1) r = mulmod(r, base, p);
        base = mulmod(base, base, p);
        exp >>= 1;
    }
    return r;
}

inline std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
    return powmod(a, p - 2, p);
}

inline std::uint64_t reduce(const mpz_class& v, std::uint64_t p) {
    mpz_class r = v % mpz_class(p);
    if (r < 0) r += mpz_class(p);
    return r.get_ui();
}

// In-place reduced row echelon form over F_p; returns pivot columns.
// Rows may be rectangular.
inline std::vector<std::size_t> rref(std::vector<std::vector<std::uint64_t>>& rows,
                                     std::uint64_t p) {
    const std::size_t nr = rows.size();
    const std::size_t nc = nr ? rows[0].size() : 0;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < nc && r < nr; ++c) {
        std::size_t pr = r;
        while (pr < nr && rows[pr][c] == 0) ++pr;
        if (pr == nr) continue;
        std::swap(rows[r], rows[pr]);
        std::uint64_t inv = invmod(rows[r][c], p);
        for (std::size_t j = c; j < nc; ++j) rows[r][j] = mulmod(rows[r][j], inv, p);
        for (std::size_t i = 0; i < nr; ++i) {
            if (i == r || rows[i][c] == 0) continue;
            std::uint64_t f = rows[i][c];
            for (std::size_t j = c; j < nc; ++j) {
                std::uint64_t s = mulmod(f, rows[r][j], p);
                rows[i][j] = (rows[i][j] + p - s) % p;
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace walkcert::fp

#endif
