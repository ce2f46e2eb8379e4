#ifndef WALKCERT_GRAPH_HPP
#define WALKCERT_GRAPH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "walkcert/linalg.hpp"

namespace walkcert {

// Largest vertex count whose upper-triangle encoding fits in 64 bits.
inline constexpr std::size_t kMaxEncodableVertices = 10;
// Brute-force bound for permutation-search operations.
inline constexpr std::size_t kIsomorphismBound = 8;
// Enumeration bound (2^{n(n+1)/2} graphs).
inline constexpr std::size_t kEnumerationBound = 6;

// Undirected graph on n vertices, loops allowed. Encoded as the upper
// triangle (diagonal included) read row-major; bit k of `code` is the k-th
// such entry. A loop contributes 1 to the adjacency diagonal.
class LoopyGraph {
public:
    LoopyGraph(std::size_t n, std::uint64_t code);

    static LoopyGraph from_adjacency(const IntMatrix& adj);

    std::size_t vertex_count() const { return n_; }
    std::uint64_t code() const { return code_; }
    std::size_t bit_count() const { return n_ * (n_ + 1) / 2; }

    bool edge(std::size_t i, std::size_t j) const;
    IntMatrix adjacency() const;

    // Relabel vertices: vertex v of the result is vertex perm[v] of *this.
    LoopyGraph relabeled(const std::vector<std::size_t>& perm) const;

    // `n:hex` compact form, lowercase hex of `code`.
    std::string compact() const;
    // Multi-line adjacency text: first line n, then n rows of 0/1.
    std::string adjacency_text() const;

    bool operator==(const LoopyGraph&) const = default;

private:
    std::size_t n_;
    std::uint64_t code_;
};

struct SignedPermutation {
    std::vector<std::size_t> perm; // bijection on {0..n-1}
    std::vector<int> signs;        // entries in {+1,-1}

    static SignedPermutation identity(std::size_t n);
    // The matrix S = P D with S[perm[j]][j] = signs[j].
    IntMatrix matrix() const;
};

// (S X S^T, S zeta).
std::pair<IntMatrix, IntVector> apply_signed_perm(const SignedPermutation& s,
                                                  const IntMatrix& x,
                                                  const IntVector& z);

// Brute-force isomorphism over vertex permutations with degree pruning.
// Throws TooLarge beyond the brute-force bound.
bool is_isomorphic(const LoopyGraph& g, const LoopyGraph& h);

// Minimum code over all relabelings; equal iff isomorphic.
std::uint64_t canonical_form(const LoopyGraph& g);

// Every labeled loopy graph on n vertices, in increasing code order.
// Costs 2^{n(n+1)/2}; throws TooLarge above the enumeration bound.
std::vector<LoopyGraph> enumerate_all(std::size_t n);

// Parsers for the two text formats. Throw ParseError on malformed or
// asymmetric input.
LoopyGraph parse_loopy_adjacency(const std::string& text);
LoopyGraph parse_compact(const std::string& text);
// General symmetric integer matrix in the same layout as the adjacency
// text; entries need not be 0/1.
IntMatrix parse_symmetric_matrix(const std::string& text);
IntVector parse_vector(const std::string& text);

} // namespace walkcert

#endif
