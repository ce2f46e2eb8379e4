#include "walkcert/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace walkcert {

namespace {

std::size_t tri_index(std::size_t n, std::size_t i, std::size_t j) {
    if (i > j) std::swap(i, j);
    // Start of row i within the upper triangle, plus offset.
    return i * n - i * (i - 1) / 2 + (j - i);
}

} // namespace

LoopyGraph::LoopyGraph(std::size_t n, std::uint64_t code) : n_(n), code_(code) {
    if (n == 0 || n > kMaxEncodableVertices)
        throw TooLarge("vertex count outside encodable range");
    std::size_t bits = bit_count();
    if (bits < 64 && (code >> bits) != 0)
        throw ParseError("encoding has bits beyond the upper triangle");
}

LoopyGraph LoopyGraph::from_adjacency(const IntMatrix& adj) {
    const std::size_t n = adj.dim();
    if (n > kMaxEncodableVertices) throw TooLarge("adjacency matrix too large to encode");
    std::uint64_t code = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            const Int& v = adj.at(i, j);
            if (v != 0 && v != 1) throw ParseError("adjacency entries must be 0/1");
            if (adj.at(i, j) != adj.at(j, i)) throw ParseError("adjacency not symmetric");
            if (v == 1) code |= std::uint64_t(1) << tri_index(n, i, j);
        }
    return LoopyGraph(n, code);
}

bool LoopyGraph::edge(std::size_t i, std::size_t j) const {
    return (code_ >> tri_index(n_, i, j)) & 1;
}

IntMatrix LoopyGraph::adjacency() const {
    IntMatrix adj(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i; j < n_; ++j)
            if (edge(i, j)) adj.at(i, j) = adj.at(j, i) = 1;
    return adj;
}

LoopyGraph LoopyGraph::relabeled(const std::vector<std::size_t>& perm) const {
    std::uint64_t code = 0;
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i; j < n_; ++j)
            if (edge(perm[i], perm[j])) code |= std::uint64_t(1) << tri_index(n_, i, j);
    return LoopyGraph(n_, code);
}

std::string LoopyGraph::compact() const {
    std::ostringstream out;
    out << n_ << ':' << std::hex << code_;
    return out.str();
}

std::string LoopyGraph::adjacency_text() const {
    std::ostringstream out;
    out << n_ << '\n';
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j)
            out << (j ? " " : "") << (edge(i, j) ? 1 : 0);
        out << '\n';
    }
    return out.str();
}

SignedPermutation SignedPermutation::identity(std::size_t n) {
    SignedPermutation s;
    s.perm.resize(n);
    std::iota(s.perm.begin(), s.perm.end(), 0);
    s.signs.assign(n, 1);
    return s;
}

IntMatrix SignedPermutation::matrix() const {
    const std::size_t n = perm.size();
    IntMatrix m(n);
    for (std::size_t j = 0; j < n; ++j) m.at(perm[j], j) = signs[j];
    return m;
}

std::pair<IntMatrix, IntVector> apply_signed_perm(const SignedPermutation& s,
                                                  const IntMatrix& x,
                                                  const IntVector& z) {
    const std::size_t n = x.dim();
    if (s.perm.size() != n || s.signs.size() != n || z.size() != n)
        throw DimensionMismatch("signed permutation dimension mismatch");
    IntMatrix sm = s.matrix();
    IntMatrix y = sm * x * sm.transpose();
    IntVector eta = sm * z;
    return {std::move(y), std::move(eta)};
}

namespace {

// Per-vertex isomorphism invariant: loop flag and degree counting loops.
std::vector<std::pair<int, int>> vertex_invariants(const LoopyGraph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<std::pair<int, int>> inv(n);
    for (std::size_t i = 0; i < n; ++i) {
        int deg = 0;
        for (std::size_t j = 0; j < n; ++j) deg += g.edge(i, j);
        inv[i] = {g.edge(i, i) ? 1 : 0, deg};
    }
    return inv;
}

// Backtracking search for a vertex bijection g -> h.
bool extend_mapping(const LoopyGraph& g, const LoopyGraph& h,
                    const std::vector<std::pair<int, int>>& gi,
                    const std::vector<std::pair<int, int>>& hi,
                    std::vector<std::size_t>& map, std::vector<bool>& used,
                    std::size_t v) {
    const std::size_t n = g.vertex_count();
    if (v == n) return true;
    for (std::size_t w = 0; w < n; ++w) {
        if (used[w] || gi[v] != hi[w]) continue;
        bool ok = g.edge(v, v) == h.edge(w, w);
        for (std::size_t u = 0; u < v && ok; ++u)
            if (g.edge(u, v) != h.edge(map[u], w)) ok = false;
        if (!ok) continue;
        map[v] = w;
        used[w] = true;
        if (extend_mapping(g, h, gi, hi, map, used, v + 1)) return true;
        used[w] = false;
    }
    return false;
}

} // namespace

bool is_isomorphic(const LoopyGraph& g, const LoopyGraph& h) {
    const std::size_t n = g.vertex_count();
    if (n != h.vertex_count()) return false;
    if (n > kIsomorphismBound) throw TooLarge("isomorphism search bound exceeded");
    if (g.code() == h.code()) return true;
    auto gi = vertex_invariants(g);
    auto hi = vertex_invariants(h);
    auto gs = gi, hs = hi;
    std::sort(gs.begin(), gs.end());
    std::sort(hs.begin(), hs.end());
    if (gs != hs) return false;
    std::vector<std::size_t> map(n);
    std::vector<bool> used(n, false);
    return extend_mapping(g, h, gi, hi, map, used, 0);
}

std::uint64_t canonical_form(const LoopyGraph& g) {
    const std::size_t n = g.vertex_count();
    if (n > kIsomorphismBound) throw TooLarge("canonical form bound exceeded");
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = g.code();
    while (std::next_permutation(perm.begin(), perm.end()))
        best = std::min(best, g.relabeled(perm).code());
    return best;
}

std::vector<LoopyGraph> enumerate_all(std::size_t n) {
    if (n == 0 || n > kEnumerationBound) throw TooLarge("enumeration bound exceeded");
    const std::size_t bits = n * (n + 1) / 2;
    std::vector<LoopyGraph> out;
    out.reserve(std::size_t(1) << bits);
    for (std::uint64_t code = 0; code < (std::uint64_t(1) << bits); ++code)
        out.emplace_back(n, code);
    return out;
}

namespace {

std::vector<std::vector<Int>> parse_matrix_rows(const std::string& text, std::size_t& n) {
    std::istringstream in(text);
    long long dim = -1;
    if (!(in >> dim) || dim < 1) throw ParseError("expected positive dimension on first line");
    n = static_cast<std::size_t>(dim);
    std::vector<std::vector<Int>> rows(n, std::vector<Int>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::string tok;
            if (!(in >> tok))
                throw ParseError("row " + std::to_string(i + 1) + ": too few entries");
            try {
                rows[i][j] = Int(tok);
            } catch (const std::invalid_argument&) {
                throw ParseError("row " + std::to_string(i + 1) + ", column " +
                                 std::to_string(j + 1) + ": not an integer: " + tok);
            }
        }
    std::string extra;
    if (in >> extra) throw ParseError("trailing content after matrix: " + extra);
    return rows;
}

} // namespace

IntMatrix parse_symmetric_matrix(const std::string& text) {
    std::size_t n = 0;
    auto rows = parse_matrix_rows(text, n);
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m.at(i, j) = rows[i][j];
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (m.at(i, j) != m.at(j, i))
                throw ParseError("matrix not symmetric at row " + std::to_string(i + 1) +
                                 ", column " + std::to_string(j + 1));
    return m;
}

LoopyGraph parse_loopy_adjacency(const std::string& text) {
    IntMatrix m = parse_symmetric_matrix(text);
    return LoopyGraph::from_adjacency(m);
}

LoopyGraph parse_compact(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos) throw ParseError("compact form must be n:hex");
    std::size_t n = 0;
    std::uint64_t code = 0;
    try {
        n = std::stoull(text.substr(0, colon));
        std::size_t pos = 0;
        std::string hex = text.substr(colon + 1);
        if (hex.empty()) throw ParseError("compact form missing hex digits");
        code = std::stoull(hex, &pos, 16);
        if (pos != hex.size()) throw ParseError("invalid hex in compact form: " + hex);
    } catch (const std::invalid_argument&) {
        throw ParseError("invalid compact form: " + text);
    } catch (const std::out_of_range&) {
        throw ParseError("compact form out of range: " + text);
    }
    return LoopyGraph(n, code);
}

IntVector parse_vector(const std::string& text) {
    std::istringstream in(text);
    std::vector<Int> entries;
    std::string tok;
    while (in >> tok) {
        try {
            entries.emplace_back(tok);
        } catch (const std::invalid_argument&) {
            throw ParseError("vector entry not an integer: " + tok);
        }
    }
    if (entries.empty()) throw ParseError("empty vector file");
    return IntVector(std::move(entries));
}

} // namespace walkcert
