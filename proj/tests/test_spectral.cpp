#include <doctest.h>

#include <random>

#include "walkcert/graph.hpp"
#include "walkcert/spectral.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace walkcert;
using testfix::make_matrix;
using testfix::make_vector;

namespace {

IntPoly poly(std::initializer_list<long> ascending) {
    std::vector<Int> c;
    for (long v : ascending) c.emplace_back(v);
    return IntPoly(std::move(c));
}

SignedPermutation random_signed_perm(std::mt19937_64& rng, std::size_t n) {
    SignedPermutation s = SignedPermutation::identity(n);
    for (std::size_t i = n; i > 1; --i)
        std::swap(s.perm[i - 1], s.perm[rng() % i]);
    for (auto& sign : s.signs) sign = (rng() % 2) ? 1 : -1;
    return s;
}

} // namespace

TEST_CASE("walk_matrix examples") {
    CHECK(walk_matrix(testfix::example6_adjacency(), IntVector::all_ones(6)) ==
          testfix::example6_walk());
    CHECK(walk_matrix(make_matrix({{0}}), make_vector({1})) == make_matrix({{1}}));
    CHECK(walk_matrix(IntMatrix(2), make_vector({1, 1})) ==
          make_matrix({{1, 0}, {1, 0}}));
    CHECK_THROWS_AS(walk_matrix(IntMatrix(2), make_vector({1})), DimensionMismatch);
}

TEST_CASE("generalized_charpoly examples") {
    auto g1 = generalized_charpoly(make_matrix({{1}}), make_vector({1}));
    CHECK(g1.c0 == poly({-1, 1}));
    CHECK(g1.c1 == poly({-1}));

    auto g2 = generalized_charpoly(IntMatrix(2), make_vector({1, 1}));
    CHECK(g2.c0 == poly({0, 0, 1}));
    CHECK(g2.c1 == poly({0, -2}));

    auto g6 = generalized_charpoly(testfix::example6_adjacency(), IntVector::all_ones(6));
    auto oracle = oracle_ref::generalized_charpoly_oracle(testfix::example6_adjacency(),
                                                          IntVector::all_ones(6));
    CHECK(g6 == oracle);
}

TEST_CASE("bivariate determinant has t-degree at most 1") {
    std::mt19937_64 rng(50);
    for (int iter = 0; iter < 10; ++iter) {
        std::size_t n = 1 + rng() % 4;
        IntMatrix x(n);
        IntVector z(n);
        for (std::size_t i = 0; i < n; ++i) {
            z[i] = static_cast<long>(rng() % 5) - 2;
            for (std::size_t j = i; j < n; ++j) {
                long v = static_cast<long>(rng() % 7) - 3;
                x.at(i, j) = v;
                x.at(j, i) = v;
            }
        }
        auto phi = oracle_ref::bivariate_charpoly(x, z);
        CHECK(phi.t_degree() <= 1);
        auto g = generalized_charpoly(x, z);
        CHECK(g.c0 == phi.lambda_poly(0));
        CHECK(g.c1 == phi.lambda_poly(1));
    }
}

TEST_CASE("c1 agrees with the finite t-difference at integer points") {
    // Phi has degree 1 in t, so the t-coefficient at fixed lambda0 is
    // Phi(lambda0, 1) - Phi(lambda0, 0), both plain integer determinants.
    std::mt19937_64 rng(51);
    for (int iter = 0; iter < 8; ++iter) {
        std::size_t n = 1 + rng() % 4;
        IntMatrix x(n);
        IntVector z(n);
        for (std::size_t i = 0; i < n; ++i) {
            z[i] = static_cast<long>(rng() % 3) - 1;
            for (std::size_t j = i; j < n; ++j) {
                long v = static_cast<long>(rng() % 3) - 1;
                x.at(i, j) = v;
                x.at(j, i) = v;
            }
        }
        auto g = generalized_charpoly(x, z);
        for (long lambda0 = -2; lambda0 <= 2; ++lambda0) {
            auto at = [&](long t) {
                IntMatrix m(n);
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j) {
                        m.at(i, j) = -x.at(i, j) - Int(t) * z[i] * z[j];
                        if (i == j) m.at(i, j) += lambda0;
                    }
                return bareiss_det(m);
            };
            CHECK(g.c1.evaluate(Int(lambda0)) == at(1) - at(0));
        }
    }
}

TEST_CASE("phi_cospectral examples") {
    IntMatrix a = testfix::example6_adjacency();
    IntVector ones = IntVector::all_ones(6);
    CHECK(phi_cospectral(a, ones, a, ones));

    std::mt19937_64 rng(52);
    auto s = random_signed_perm(rng, 6);
    auto [y, eta] = apply_signed_perm(s, a, ones);
    CHECK(phi_cospectral(a, ones, y, eta));

    // K2 vs the empty graph on 2 vertices
    CHECK_FALSE(phi_cospectral(make_matrix({{0, 1}, {1, 0}}), IntVector::all_ones(2),
                               IntMatrix(2), IntVector::all_ones(2)));
    CHECK_THROWS_AS(phi_cospectral(a, ones, IntMatrix(2), IntVector::all_ones(2)),
                    DimensionMismatch);
}

TEST_CASE("phi invariance under signed permutations") {
    std::mt19937_64 rng(53);
    for (int iter = 0; iter < 10; ++iter) {
        std::size_t n = 1 + rng() % 5;
        IntMatrix x(n);
        IntVector z(n);
        for (std::size_t i = 0; i < n; ++i) {
            z[i] = static_cast<long>(rng() % 5) - 2;
            for (std::size_t j = i; j < n; ++j) {
                long v = static_cast<long>(rng() % 5) - 2;
                x.at(i, j) = v;
                x.at(j, i) = v;
            }
        }
        auto s = random_signed_perm(rng, n);
        auto [y, eta] = apply_signed_perm(s, x, z);
        CHECK(generalized_charpoly(x, z) == generalized_charpoly(y, eta));
    }
}

TEST_CASE("discriminant examples") {
    CHECK(discriminant(poly({-1, 0, 1})) == 4);
    CHECK(discriminant(poly({1, 1, 1})) == -3);
    CHECK(discriminant(poly({1, -2, 1})) == 0);
    CHECK(discriminant(poly({-5, 1})) == 1);
    CHECK_THROWS_AS(discriminant(poly({2, 2})), NonMonic);
    CHECK_THROWS_AS(discriminant(poly({7})), DegreeZero);
}

TEST_CASE("minimal_poly_mod_p examples") {
    CHECK(minimal_poly_mod_p(IntMatrix(3), make_vector({1, 1, 1}), 5) == poly({0, 1}));
    CHECK(minimal_poly_mod_p(IntMatrix::identity(3), make_vector({1, 0, 2}), 5) ==
          poly({4, 1}));
    IntPoly mu = minimal_poly_mod_p(testfix::example6_adjacency(), IntVector::all_ones(6), 3);
    CHECK(mu.degree() == 5);
    CHECK(mu.is_monic());
    // psi(X) zeta == 0 mod 3 by re-multiplication
    IntVector v = mu.evaluate(testfix::example6_adjacency()) * IntVector::all_ones(6);
    for (std::size_t i = 0; i < 6; ++i) CHECK(v[i] % 3 == 0);
}

TEST_CASE("beta_decompose examples") {
    auto g1 = generalized_charpoly(make_matrix({{1}}), make_vector({1}));
    auto d1 = beta_decompose(g1, 5);
    CHECK(d1.beta == poly({1}));
    CHECK(d1.phi1 == poly({4, 1}));
    CHECK(d1.phi2 == poly({4}));

    auto g6 = generalized_charpoly(testfix::example6_adjacency(), IntVector::all_ones(6));
    for (std::uint64_t p : {2, 3, 5}) {
        auto d = beta_decompose(g6, p);
        CHECK(d.beta.is_monic());
        CHECK(fp_poly_mul(d.beta, d.phi1, p) == reduce_mod(g6.c0, p));
        CHECK(fp_poly_mul(d.beta, d.phi2, p) == reduce_mod(g6.c1, p));
        if (!d.phi2.is_zero())
            CHECK(fp_poly_gcd(d.phi1, d.phi2, p) == poly({1}));
    }
    // Frozen: beta mod 3 for the example graph is lambda.
    CHECK(beta_decompose(g6, 3).beta == poly({0, 1}));
}

TEST_CASE("shifted_pair examples and invariance") {
    IntMatrix x = make_matrix({{0}});
    CHECK(shifted_pair(x, make_vector({1}), 3) == make_matrix({{3}}));
    IntMatrix a = testfix::example6_adjacency();
    IntVector ones = IntVector::all_ones(6);
    CHECK(shifted_pair(a, ones, 0) == a);

    Int base_det = bareiss_det(walk_matrix(a, ones));
    for (long t = -2; t <= 2; ++t) {
        IntMatrix at = shifted_pair(a, ones, t);
        CHECK(at.symmetric());
        CHECK(bareiss_det(walk_matrix(at, ones)) == base_det);
        CHECK(fp_rank(walk_matrix(at, ones), 3) == fp_rank(walk_matrix(a, ones), 3));
    }
}

TEST_CASE("find_single_root_shift examples") {
    auto g1 = generalized_charpoly(make_matrix({{4}}), make_vector({1}));
    CHECK(find_single_root_shift(g1, 7) == 0);

    // c0 = x^2 - x (roots 0 and 1), c1 = 1: t0 = 1 gives x^2 - x + 1,
    // whose only root mod 3 is x = 2.
    GeneralizedCharPoly g{poly({0, -1, 1}), poly({1})};
    CHECK(find_single_root_shift(g, 3) == 1);

    auto g6 = generalized_charpoly(testfix::example6_adjacency(), IntVector::all_ones(6));
    auto t0 = find_single_root_shift(g6, 3);
    REQUIRE(t0.has_value());
    CHECK(*t0 < 3);
}

TEST_CASE("simple graphs: 2^(n/2) divides det of the walk matrix") {
    std::mt19937_64 rng(54);
    for (std::size_t n = 2; n <= 8; ++n) {
        for (int iter = 0; iter < 25; ++iter) {
            IntMatrix a(n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j) {
                    long b = static_cast<long>(rng() & 1);
                    a.at(i, j) = b;
                    a.at(j, i) = b;
                }
            Int det = bareiss_det(walk_matrix(a, IntVector::all_ones(n)));
            Int pow2 = Int(1) << (n / 2);
            CHECK(det % pow2 == 0);
        }
    }
}
