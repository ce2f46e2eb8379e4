#include "walkcert/linalg.hpp"

#include <cstdlib>

#include "walkcert/fp.hpp"

namespace walkcert {

IntVector IntVector::all_ones(std::size_t n) {
    return IntVector(std::vector<Int>(n, Int(1)));
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool IntMatrix::symmetric() const {
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
    if (n_ != other.n_) throw DimensionMismatch("matrix product dimension mismatch");
    IntMatrix out(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t k = 0; k < n_; ++k) {
            const Int& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < n_; ++j)
                out.at(i, j) += a * other.at(k, j);
        }
    return out;
}

IntVector IntMatrix::operator*(const IntVector& v) const {
    if (n_ != v.size()) throw DimensionMismatch("matrix-vector dimension mismatch");
    IntVector out(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            out[i] += at(i, j) * v[j];
    return out;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix out(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            out.at(j, i) = at(i, j);
    return out;
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::from_int(const IntMatrix& m) {
    RationalMatrix out(m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j)
            out.at(i, j) = m.at(i, j);
    return out;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& other) const {
    if (n_ != other.n_) throw DimensionMismatch("matrix product dimension mismatch");
    RationalMatrix out(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t k = 0; k < n_; ++k) {
            const Rat& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < n_; ++j)
                out.at(i, j) += a * other.at(k, j);
        }
    return out;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix out(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            out.at(j, i) = at(i, j);
    return out;
}

bool RationalMatrix::is_integral() const {
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            if (at(i, j).get_den() != 1) return false;
    return true;
}

Int bareiss_det(const IntMatrix& m) {
    const std::size_t n = m.dim();
    IntMatrix a = m;
    Int prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t pivot = k;
            while (pivot < n && a.at(pivot, k) == 0) ++pivot;
            if (pivot == n) return Int(0);
            for (std::size_t j = 0; j < n; ++j)
                std::swap(a.at(k, j), a.at(pivot, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                // Exact by the Bareiss identity.
                mpz_divexact(a.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a.at(i, k) = 0;
        }
        prev = a.at(k, k);
    }
    return sign > 0 ? a.at(n - 1, n - 1) : -a.at(n - 1, n - 1);
}

RationalMatrix rational_inverse(const IntMatrix& m) {
    const std::size_t n = m.dim();
    RationalMatrix a = RationalMatrix::from_int(m);
    RationalMatrix inv = RationalMatrix::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a.at(pivot, col) == 0) ++pivot;
        if (pivot == n) throw Singular("matrix is singular over Q");
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a.at(col, j), a.at(pivot, j));
                std::swap(inv.at(col, j), inv.at(pivot, j));
            }
        }
        Rat d = a.at(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            a.at(col, j) /= d;
            inv.at(col, j) /= d;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a.at(i, col) == 0) continue;
            Rat f = a.at(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                a.at(i, j) -= f * a.at(col, j);
                inv.at(i, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

namespace {

std::vector<std::vector<std::uint64_t>> reduce_matrix(const IntMatrix& m, std::uint64_t p) {
    const std::size_t n = m.dim();
    std::vector<std::vector<std::uint64_t>> rows(n, std::vector<std::uint64_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            rows[i][j] = fp::reduce(m.at(i, j), p);
    return rows;
}

} // namespace

std::size_t fp_rank(const IntMatrix& m, std::uint64_t p) {
    auto rows = reduce_matrix(m, p);
    return fp::rref(rows, p).size();
}

std::vector<IntVector> fp_kernel(const IntMatrix& m, std::uint64_t p) {
    const std::size_t n = m.dim();
    auto rows = reduce_matrix(m, p);
    auto pivots = fp::rref(rows, p);
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<IntVector> basis;
    for (std::size_t fc = 0; fc < n; ++fc) {
        if (is_pivot[fc]) continue;
        IntVector v(n);
        v[fc] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = Int((p - rows[r][fc]) % p);
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace walkcert
