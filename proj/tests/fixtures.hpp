#ifndef WALKCERT_TESTS_FIXTURES_HPP
#define WALKCERT_TESTS_FIXTURES_HPP

#include <initializer_list>
#include <vector>

#include "walkcert/graph.hpp"
#include "walkcert/linalg.hpp"

namespace walkcert::testfix {

inline IntMatrix make_matrix(std::initializer_list<std::initializer_list<long>> rows) {
    IntMatrix m(rows.size());
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::size_t j = 0;
        for (long v : row) m.at(i, j++) = v;
        ++i;
    }
    return m;
}

inline IntVector make_vector(std::initializer_list<long> entries) {
    IntVector v(entries.size());
    std::size_t i = 0;
    for (long e : entries) v[i++] = e;
    return v;
}

// The 6-vertex example graph with a loop on vertex 3.
inline IntMatrix example6_adjacency() {
    return make_matrix({{0, 1, 0, 0, 0, 0},
                        {1, 0, 1, 0, 0, 1},
                        {0, 1, 1, 1, 0, 0},
                        {0, 0, 1, 0, 1, 1},
                        {0, 0, 0, 1, 0, 1},
                        {0, 1, 0, 1, 1, 0}});
}

// Its walk matrix with the all-ones vector; det = -3.
inline IntMatrix example6_walk() {
    return make_matrix({{1, 1, 3, 7, 20, 52},
                        {1, 3, 7, 20, 52, 146},
                        {1, 3, 9, 24, 67, 180},
                        {1, 3, 8, 23, 61, 170},
                        {1, 2, 6, 16, 44, 120},
                        {1, 3, 8, 21, 59, 157}});
}

inline LoopyGraph example6_graph() {
    return LoopyGraph::from_adjacency(example6_adjacency());
}

} // namespace walkcert::testfix

#endif
