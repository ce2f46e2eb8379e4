#include "walkcert/oracle.hpp"

#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

namespace walkcert {

using nlohmann::json;

std::string fingerprint_key(const GeneralizedCharPoly& g) {
    std::ostringstream out;
    for (const auto& c : g.c0.coeffs()) out << c << ',';
    out << '|';
    for (const auto& c : g.c1.coeffs()) out << c << ',';
    return out.str();
}

const std::vector<std::uint64_t>& FingerprintIndex::bucket_of(const LoopyGraph& g) const {
    if (g.vertex_count() != n)
        throw DimensionMismatch("graph does not match index vertex count");
    auto phi = generalized_charpoly(g.adjacency(), IntVector::all_ones(n));
    auto it = buckets.find(fingerprint_key(phi));
    if (it == buckets.end())
        throw VerificationFailed("every graph on n vertices is in the index");
    return it->second;
}

FingerprintIndex build_index(std::size_t n) {
    FingerprintIndex idx;
    idx.n = n;
    IntVector ones = IntVector::all_ones(n);
    for (const LoopyGraph& g : enumerate_all(n)) {
        auto phi = generalized_charpoly(g.adjacency(), ones);
        idx.buckets[fingerprint_key(phi)].push_back(g.code());
    }
    return idx;
}

std::vector<LoopyGraph> find_mates(const LoopyGraph& g, const FingerprintIndex& idx) {
    std::vector<LoopyGraph> mates;
    for (std::uint64_t code : idx.bucket_of(g)) {
        LoopyGraph h(idx.n, code);
        if (!is_isomorphic(g, h)) mates.push_back(h);
    }
    return mates;
}

std::string VerificationReport::to_document() const {
    json doc;
    doc["n"] = n;
    doc["total_graphs"] = total_graphs;
    doc["certified_count"] = certified_count;
    doc["cospectral_classes_with_nonisomorphic_members"] =
        cospectral_classes_with_nonisomorphic_members;
    doc["violations"] = violations;
    return doc.dump(2) + "\n";
}

VerificationReport verify_theorem(std::size_t n) {
    FingerprintIndex idx = build_index(n);
    IntVector ones = IntVector::all_ones(n);

    VerificationReport rep;
    rep.n = n;
    for (const auto& [key, codes] : idx.buckets) {
        rep.total_graphs += codes.size();

        // Partition the bucket into isomorphism classes once, instead of
        // re-running find_mates per member.
        std::vector<LoopyGraph> reps;
        std::vector<std::size_t> cls(codes.size());
        for (std::size_t k = 0; k < codes.size(); ++k) {
            LoopyGraph g(n, codes[k]);
            std::size_t c = reps.size();
            for (std::size_t r = 0; r < reps.size(); ++r) {
                if (is_isomorphic(g, reps[r])) {
                    c = r;
                    break;
                }
            }
            if (c == reps.size()) reps.push_back(g);
            cls[k] = c;
        }
        if (reps.size() > 1) ++rep.cospectral_classes_with_nonisomorphic_members;

        for (std::size_t k = 0; k < codes.size(); ++k) {
            LoopyGraph g(n, codes[k]);
            Certificate cert = certify_walk_det(g.adjacency(), ones);
            if (cert.verdict != Verdict::CharacterizedByWalkDet) continue;
            ++rep.certified_count;
            if (reps.size() > 1) rep.violations.push_back(g.compact());
        }
    }
    return rep;
}

Rat FrequencyReport::frequency() const {
    Rat f(square_free_count, samples);
    f.canonicalize();
    return f;
}

std::string FrequencyReport::to_document() const {
    json doc;
    doc["n"] = n;
    doc["samples"] = samples;
    doc["seed"] = seed;
    doc["square_free_count"] = square_free_count;
    doc["frequency"] = frequency().get_str();
    return doc.dump(2) + "\n";
}

FrequencyReport satisfaction_frequency(std::size_t n, std::size_t samples,
                                       std::uint64_t seed) {
    if (samples < 1) throw ZeroInput("samples must be >= 1");
    if (n == 0 || n > kMaxEncodableVertices)
        throw TooLarge("vertex count outside encodable range");
    FrequencyReport rep;
    rep.n = n;
    rep.samples = samples;
    rep.seed = seed;

    std::mt19937_64 rng(seed);
    const std::size_t bits = n * (n + 1) / 2;
    const std::uint64_t mask = bits == 64 ? ~std::uint64_t(0)
                                          : (std::uint64_t(1) << bits) - 1;
    IntVector ones = IntVector::all_ones(n);
    for (std::size_t s = 0; s < samples; ++s) {
        // Each upper-triangle entry is an independent fair bit of one
        // engine draw; mt19937_64 output is specified bit-exactly.
        LoopyGraph g(n, rng() & mask);
        Int det = bareiss_det(walk_matrix(g.adjacency(), ones));
        if (is_square_free(det)) ++rep.square_free_count;
    }
    return rep;
}

} // namespace walkcert
