#ifndef WALKCERT_ORACLE_HPP
#define WALKCERT_ORACLE_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "walkcert/certify.hpp"
#include "walkcert/graph.hpp"
#include "walkcert/spectral.hpp"

namespace walkcert {

// Serialized (c0, c1) coefficient lists; exact arithmetic makes the key
// collision-free.
std::string fingerprint_key(const GeneralizedCharPoly& g);

// All labeled loopy graphs on n vertices bucketed by exact Phi fingerprint
// with zeta the all-ones vector.
struct FingerprintIndex {
    std::size_t n = 0;
    std::map<std::string, std::vector<std::uint64_t>> buckets; // key -> codes

    const std::vector<std::uint64_t>& bucket_of(const LoopyGraph& g) const;
};

FingerprintIndex build_index(std::size_t n);

// Graphs in g's bucket that are not isomorphic to g.
std::vector<LoopyGraph> find_mates(const LoopyGraph& g, const FingerprintIndex& idx);

struct VerificationReport {
    std::size_t n = 0;
    std::size_t total_graphs = 0;
    std::size_t certified_count = 0;
    std::size_t cospectral_classes_with_nonisomorphic_members = 0;
    // Certified graphs (compact form) having a non-isomorphic cospectral
    // mate; empty iff the square-free condition held up on this n.
    std::vector<std::string> violations;

    std::string to_document() const;
};

VerificationReport verify_theorem(std::size_t n);

struct FrequencyReport {
    std::size_t n = 0;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    std::size_t square_free_count = 0;

    Rat frequency() const;
    std::string to_document() const;
};

// Fraction of seeded uniform random loopy graphs on n vertices whose walk
// matrix determinant is square-free. Deterministic in (n, samples, seed).
FrequencyReport satisfaction_frequency(std::size_t n, std::size_t samples,
                                       std::uint64_t seed);

} // namespace walkcert

#endif
