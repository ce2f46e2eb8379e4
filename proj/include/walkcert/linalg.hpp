#ifndef WALKCERT_LINALG_HPP
#define WALKCERT_LINALG_HPP

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "walkcert/errors.hpp"

namespace walkcert {

using Int = mpz_class;
using Rat = mpq_class;

class IntVector {
public:
    IntVector() = default;
    explicit IntVector(std::size_t n) : entries_(n, Int(0)) {}
    explicit IntVector(std::vector<Int> entries) : entries_(std::move(entries)) {}

    static IntVector all_ones(std::size_t n);

    std::size_t size() const { return entries_.size(); }
    const Int& operator[](std::size_t i) const { return entries_[i]; }
    Int& operator[](std::size_t i) { return entries_[i]; }

    bool operator==(const IntVector&) const = default;

private:
    std::vector<Int> entries_;
};

// Dense square matrix of arbitrary-precision integers, row-major.
class IntMatrix {
public:
    IntMatrix() : n_(0) {}
    explicit IntMatrix(std::size_t n) : n_(n), entries_(n * n, Int(0)) {}

    static IntMatrix identity(std::size_t n);

    std::size_t dim() const { return n_; }
    const Int& at(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
    Int& at(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }

    bool symmetric() const;

    IntMatrix operator*(const IntMatrix& other) const;
    IntVector operator*(const IntVector& v) const;
    IntMatrix transpose() const;

    bool operator==(const IntMatrix&) const = default;

private:
    std::size_t n_;
    std::vector<Int> entries_;
};

// Dense square matrix of exact rationals. mpq_class keeps entries canonical
// (lowest terms, positive denominator) on every assignment.
class RationalMatrix {
public:
    RationalMatrix() : n_(0) {}
    explicit RationalMatrix(std::size_t n) : n_(n), entries_(n * n, Rat(0)) {}

    static RationalMatrix identity(std::size_t n);
    static RationalMatrix from_int(const IntMatrix& m);

    std::size_t dim() const { return n_; }
    const Rat& at(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
    Rat& at(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }

    RationalMatrix operator*(const RationalMatrix& other) const;
    RationalMatrix transpose() const;
    bool is_integral() const;

    bool operator==(const RationalMatrix&) const = default;

private:
    std::size_t n_;
    std::vector<Rat> entries_;
};

// Exact determinant by Bareiss fraction-free elimination; all intermediate
// values stay integral.
Int bareiss_det(const IntMatrix& m);

// Exact inverse over Q. Throws Singular when det(m) = 0.
RationalMatrix rational_inverse(const IntMatrix& m);

// Rank of m mod p over F_p. p must be an odd-word prime (p < 2^63), prime
// checked by the caller.
std::size_t fp_rank(const IntMatrix& m, std::uint64_t p);

// Basis of the null space of m mod p; entries in 0..p-1.
std::vector<IntVector> fp_kernel(const IntMatrix& m, std::uint64_t p);

} // namespace walkcert

#endif
