#include "walkcert/poly.hpp"

#include <algorithm>

#include "walkcert/fp.hpp"

namespace walkcert {

IntPoly::IntPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::constant(Int c) {
    return IntPoly(std::vector<Int>{std::move(c)});
}

IntPoly IntPoly::monomial(std::size_t k) {
    std::vector<Int> c(k + 1, Int(0));
    c[k] = 1;
    return IntPoly(std::move(c));
}

const Int& IntPoly::coeff(std::size_t k) const {
    static const Int zero(0);
    return k < coeffs_.size() ? coeffs_[k] : zero;
}

Int IntPoly::evaluate(const Int& x) const {
    Int acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

IntMatrix IntPoly::evaluate(const IntMatrix& m) const {
    const std::size_t n = m.dim();
    IntMatrix acc(n);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * m;
        for (std::size_t i = 0; i < n; ++i) acc.at(i, i) += *it;
    }
    return acc;
}

IntPoly IntPoly::derivative() const {
    if (coeffs_.size() <= 1) return IntPoly();
    std::vector<Int> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
        d[k - 1] = coeffs_[k] * Int(static_cast<unsigned long>(k));
    return IntPoly(std::move(d));
}

IntPoly IntPoly::operator+(const IntPoly& other) const {
    std::vector<Int> c(std::max(coeffs_.size(), other.coeffs_.size()), Int(0));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) c[k] += coeffs_[k];
    for (std::size_t k = 0; k < other.coeffs_.size(); ++k) c[k] += other.coeffs_[k];
    return IntPoly(std::move(c));
}

IntPoly IntPoly::operator-(const IntPoly& other) const {
    std::vector<Int> c(std::max(coeffs_.size(), other.coeffs_.size()), Int(0));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) c[k] += coeffs_[k];
    for (std::size_t k = 0; k < other.coeffs_.size(); ++k) c[k] -= other.coeffs_[k];
    return IntPoly(std::move(c));
}

IntPoly IntPoly::operator*(const IntPoly& other) const {
    if (is_zero() || other.is_zero()) return IntPoly();
    std::vector<Int> c(coeffs_.size() + other.coeffs_.size() - 1, Int(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
            c[i + j] += coeffs_[i] * other.coeffs_[j];
    return IntPoly(std::move(c));
}

IntPoly IntPoly::operator*(const Int& s) const {
    std::vector<Int> c(coeffs_);
    for (auto& v : c) v *= s;
    return IntPoly(std::move(c));
}

namespace {

using fp::mulmod;
using fp::powmod;

std::vector<std::uint64_t> to_fp(const IntPoly& a, std::uint64_t p) {
    std::vector<std::uint64_t> c(a.coeffs().size());
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = fp::reduce(a.coeff(k), p);
    while (!c.empty() && c.back() == 0) c.pop_back();
    return c;
}

IntPoly from_fp(const std::vector<std::uint64_t>& c) {
    std::vector<Int> out(c.size());
    for (std::size_t k = 0; k < c.size(); ++k) out[k] = Int(c[k]);
    return IntPoly(std::move(out));
}

// In-place a mod b over F_p; b nonzero.
void fp_rem(std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b,
            std::uint64_t p) {
    const std::uint64_t lead_inv = powmod(b.back(), p - 2, p);
    while (a.size() >= b.size()) {
        std::uint64_t f = mulmod(a.back(), lead_inv, p);
        std::size_t shift = a.size() - b.size();
        for (std::size_t k = 0; k < b.size(); ++k) {
            std::uint64_t s = mulmod(f, b[k], p);
            a[shift + k] = (a[shift + k] + p - s) % p;
        }
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
}

} // namespace

IntPoly reduce_mod(const IntPoly& a, std::uint64_t p) {
    return from_fp(to_fp(a, p));
}

IntPoly fp_poly_gcd(const IntPoly& a, const IntPoly& b, std::uint64_t p) {
    auto fa = to_fp(a, p);
    auto fb = to_fp(b, p);
    if (fa.empty() && fb.empty())
        throw BothZero("gcd of two polynomials that vanish mod p");
    while (!fb.empty()) {
        fp_rem(fa, fb, p);
        std::swap(fa, fb);
    }
    std::uint64_t inv = powmod(fa.back(), p - 2, p);
    for (auto& c : fa) c = mulmod(c, inv, p);
    return from_fp(fa);
}

IntPoly fp_poly_divexact(const IntPoly& a, const IntPoly& b, std::uint64_t p) {
    auto fa = to_fp(a, p);
    auto fb = to_fp(b, p);
    if (fb.empty()) throw ZeroPolynomial("division by zero polynomial mod p");
    if (fa.empty()) return IntPoly();
    if (fa.size() < fb.size())
        throw VerificationFailed("inexact polynomial division mod p");
    std::vector<std::uint64_t> q(fa.size() - fb.size() + 1, 0);
    const std::uint64_t lead_inv = powmod(fb.back(), p - 2, p);
    while (!fa.empty() && fa.size() >= fb.size()) {
        std::uint64_t f = mulmod(fa.back(), lead_inv, p);
        std::size_t shift = fa.size() - fb.size();
        q[shift] = f;
        for (std::size_t k = 0; k < fb.size(); ++k) {
            std::uint64_t s = mulmod(f, fb[k], p);
            fa[shift + k] = (fa[shift + k] + p - s) % p;
        }
        while (!fa.empty() && fa.back() == 0) fa.pop_back();
    }
    if (!fa.empty()) throw VerificationFailed("inexact polynomial division mod p");
    return from_fp(q);
}

IntPoly fp_poly_mul(const IntPoly& a, const IntPoly& b, std::uint64_t p) {
    return reduce_mod(a * b, p);
}

std::size_t fp_root_count(const IntPoly& a, std::uint64_t p) {
    auto fa = to_fp(a, p);
    std::size_t count = 0;
    for (std::uint64_t x = 0; x < p; ++x) {
        std::uint64_t acc = 0;
        for (auto it = fa.rbegin(); it != fa.rend(); ++it)
            acc = (mulmod(acc, x, p) + *it) % p;
        if (acc == 0) ++count;
    }
    return count;
}

Int resultant(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero())
        throw ZeroPolynomial("resultant of the zero polynomial");
    const std::size_t da = static_cast<std::size_t>(a.degree());
    const std::size_t db = static_cast<std::size_t>(b.degree());
    if (da == 0 && db == 0) return Int(1);
    // Sylvester determinant, with rows ordered so that the linear case
    // evaluates a at the root of b: res(x - u, x - v) = a(v) = v - u.
    IntMatrix s(da + db);
    for (std::size_t r = 0; r < da; ++r)
        for (std::size_t k = 0; k <= db; ++k)
            s.at(r, r + k) = b.coeff(db - k);
    for (std::size_t r = 0; r < db; ++r)
        for (std::size_t k = 0; k <= da; ++k)
            s.at(da + r, r + k) = a.coeff(da - k);
    return bareiss_det(s);
}

IntPoly charpoly(const IntMatrix& m) {
    const std::size_t n = m.dim();
    // Berkowitz iteration: extend the leading principal submatrix one row
    // and column at a time, multiplying by the Toeplitz matrix built from
    // the border products R M^k S.
    std::vector<Int> c{Int(1)}; // descending coefficients, starts as [1]
    for (std::size_t i = 1; i <= n; ++i) {
        // t[0..i], first column of the (i+1) x i Toeplitz matrix.
        std::vector<Int> t(i + 1, Int(0));
        t[0] = 1;
        t[1] = -m.at(i - 1, i - 1);
        if (i >= 2) {
            // w = M^k S for the (i-1)-dimensional leading block M.
            std::vector<Int> w(i - 1);
            for (std::size_t r = 0; r < i - 1; ++r) w[r] = m.at(r, i - 1);
            for (std::size_t k = 2; k <= i; ++k) {
                Int dot(0);
                for (std::size_t r = 0; r < i - 1; ++r) dot += m.at(i - 1, r) * w[r];
                t[k] = -dot;
                if (k == i) break;
                std::vector<Int> next(i - 1, Int(0));
                for (std::size_t r = 0; r < i - 1; ++r)
                    for (std::size_t s = 0; s < i - 1; ++s)
                        next[r] += m.at(r, s) * w[s];
                w = std::move(next);
            }
        }
        std::vector<Int> out(i + 1, Int(0));
        for (std::size_t r = 0; r <= i; ++r)
            for (std::size_t k = 0; k < c.size() && k <= r; ++k)
                out[r] += t[r - k] * c[k];
        c = std::move(out);
    }
    std::reverse(c.begin(), c.end());
    return IntPoly(std::move(c));
}

} // namespace walkcert
