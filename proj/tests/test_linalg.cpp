#include <catch2/catch_amalgamated.hpp>

#include "rml/linalg.hpp"

using namespace rml;

namespace {

Mat m2(const Field& f, std::vector<std::vector<uint32_t>> rows) {
    Mat m(f, static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j) m.set_code(static_cast<int>(i), static_cast<int>(j), rows[i][j]);
    return m;
}

// brute-force perp: all vectors orthogonal to every generator row
Subspace perp_oracle(const Subspace& u) {
    const Field& f = u.field();
    int l = u.ambient();
    long long total = 1;
    for (int i = 0; i < l; ++i) total *= static_cast<long long>(f.order());
    std::vector<std::vector<uint32_t>> sols;
    for (long long code = 0; code < total; ++code) {
        std::vector<uint32_t> v(l);
        long long c = code;
        for (int i = 0; i < l; ++i) { v[i] = static_cast<uint32_t>(c % f.order()); c /= f.order(); }
        bool orth = true;
        for (int r = 0; r < u.dim() && orth; ++r) {
            uint32_t dot = 0;
            for (int i = 0; i < l; ++i) dot = f.add(dot, f.mul(v[i], u.generator().code_at(r, i)));
            orth = dot == 0;
        }
        if (orth) sols.push_back(v);
    }
    Mat rows(f, static_cast<int>(sols.size()), l);
    for (size_t i = 0; i < sols.size(); ++i)
        for (int j = 0; j < l; ++j) rows.set_code(static_cast<int>(i), j, sols[i][j]);
    return Subspace::from_rows(rows);
}

}  // namespace

TEST_CASE("rank by row reduction") {
    Field f2 = Field::prime(2);
    REQUIRE(rank(Mat(f2, 2, 3)) == 0);
    REQUIRE(rank(m2(f2, {{1, 0, 0}, {0, 1, 0}})) == 2);
    REQUIRE(rank(m2(f2, {{0, 0, 1}, {1, 1, 0}})) == 2);
    REQUIRE(rank(m2(f2, {{1, 1}, {1, 1}})) == 1);
}

TEST_CASE("row and column spaces") {
    Field f2 = Field::prime(2);
    SECTION("equal-column pattern has a one dimensional column space") {
        Mat m = m2(f2, {{1, 1}, {1, 1}});
        Subspace col = Subspace::from_rows(m.transposed());
        REQUIRE(col.dim() == 1);
        REQUIRE(col.contains_vector({1, 1}));
    }
    SECTION("zero matrix spans nothing") {
        REQUIRE(Subspace::from_rows(Mat(f2, 2, 3)).dim() == 0);
    }
    SECTION("column space of a tall selector") {
        Mat m = m2(f2, {{1, 0}, {0, 1}, {0, 0}});
        Subspace col = Subspace::from_rows(m.transposed());
        REQUIRE(col.dim() == 2);
        REQUIRE(col.contains_vector({1, 0, 0}));
        REQUIRE(col.contains_vector({0, 1, 0}));
        REQUIRE_FALSE(col.contains_vector({0, 0, 1}));
    }
}

TEST_CASE("subspace lattice operations") {
    Field f2 = Field::prime(2);
    Subspace diag = Subspace::from_rows(m2(f2, {{1, 1}}));
    Subspace e1 = Subspace::from_rows(m2(f2, {{1, 0}}));
    Subspace e2 = Subspace::from_rows(m2(f2, {{0, 1}}));

    SECTION("self-orthogonality in characteristic 2") {
        REQUIRE(diag.perp() == diag);
        REQUIRE(intersect(diag, diag.perp()) == diag);
    }
    SECTION("kernel oracle agreement") {
        REQUIRE(e1.perp() == e2);
        for (const Subspace& u : enumerate_all_subspaces(f2, 3)) REQUIRE(u.perp() == perp_oracle(u));
        Field f3 = Field::prime(3);
        for (const Subspace& u : enumerate_all_subspaces(f3, 2)) REQUIRE(u.perp() == perp_oracle(u));
    }
    SECTION("identities") {
        Subspace zero = Subspace::zero(f2, 2);
        Subspace full = Subspace::full(f2, 2);
        REQUIRE(sum(e1, zero) == e1);
        REQUIRE(intersect(e1, full) == e1);
        REQUIRE(full.contains(e1));
        REQUIRE_FALSE(e1.contains(full));
    }
    SECTION("ambient mismatch") {
        Subspace long_space = Subspace::zero(f2, 3);
        REQUIRE_THROWS_AS(sum(e1, long_space), std::invalid_argument);
    }
    SECTION("modular dimension law, exhaustive over GF(2)^3") {
        auto all = enumerate_all_subspaces(f2, 3);
        for (const Subspace& u : all)
            for (const Subspace& v : all)
                REQUIRE(sum(u, v).dim() + intersect(u, v).dim() == u.dim() + v.dim());
    }
    SECTION("perp involution over GF(2)^4 and GF(3)^2") {
        for (const Subspace& u : enumerate_all_subspaces(f2, 4)) {
            REQUIRE(u.perp().perp() == u);
            REQUIRE(u.perp().dim() == 4 - u.dim());
        }
        Field f3 = Field::prime(3);
        for (const Subspace& u : enumerate_all_subspaces(f3, 2)) REQUIRE(u.perp().perp() == u);
    }
}

TEST_CASE("subspace enumeration") {
    Field f2 = Field::prime(2);
    SECTION("counts") {
        REQUIRE(enumerate_subspaces(f2, 2, 1).size() == 3);
        REQUIRE(enumerate_subspaces(f2, 4, 2).size() == 35);
        REQUIRE(enumerate_subspaces(f2, 3, 0).size() == 1);
        REQUIRE(enumerate_subspaces(f2, 3, 0)[0].dim() == 0);
    }
    SECTION("count equals the Gaussian coefficient across the grid") {
        for (long long q : {2ll, 3ll}) {
            Field f = Field::prime(static_cast<uint32_t>(q));
            for (int l = 1; l <= 4; ++l)
                for (int k = 0; k <= l; ++k)
                    REQUIRE(static_cast<long long>(enumerate_subspaces(f, l, k).size()) ==
                            gaussian_binomial(l, k, q));
        }
    }
    SECTION("deterministic lexicographic order, no duplicates") {
        auto subs = enumerate_subspaces(f2, 4, 2);
        for (size_t i = 1; i < subs.size(); ++i) REQUIRE(subs[i - 1].generator().flat() < subs[i].generator().flat());
    }
    SECTION("budget guard") {
        REQUIRE_THROWS_AS(enumerate_subspaces(f2, 4, 2, 10), BudgetExceeded);
    }
}

TEST_CASE("general linear group enumeration") {
    Field f2 = Field::prime(2);
    REQUIRE(enumerate_gl(f2, 1).size() == 1);
    REQUIRE(enumerate_gl(f2, 2).size() == 6);
    REQUIRE(enumerate_gl(f2, 3).size() == 168);
    REQUIRE(gl_order(3, 1) == 2);
    REQUIRE(gl_order(3, 2) == 48);
    auto gl2 = enumerate_gl(f2, 2);
    for (const Mat& m : gl2) REQUIRE(rank(m) == 2);
    for (size_t i = 1; i < gl2.size(); ++i) REQUIRE(gl2[i - 1].flat() < gl2[i].flat());
    REQUIRE_THROWS_AS(enumerate_gl(f2, 3, 100), BudgetExceeded);
}

TEST_CASE("gaussian binomial coefficients") {
    REQUIRE(gaussian_binomial(4, 2, 2) == 35);
    REQUIRE(gaussian_binomial(3, 1, 2) == 7);
    REQUIRE(gaussian_binomial(5, 0, 2) == 1);
    REQUIRE(gaussian_binomial(0, 0, 2) == 1);
    REQUIRE(gaussian_binomial(2, 3, 2) == 0);
    REQUIRE(gaussian_binomial(-1, 0, 3) == 0);
    REQUIRE(gaussian_binomial(3, -1, 3) == 0);
    REQUIRE(gaussian_binomial(2, 1, 3) == 4);
}

TEST_CASE("canonical form is stable under generator changes") {
    std::mt19937_64 rng(7);
    for (long long q : {2ll, 3ll}) {
        Field f = Field::prime(static_cast<uint32_t>(q));
        for (int t = 0; t < 200; ++t) {
            std::uniform_int_distribution<int> dl(1, 4);
            int l = dl(rng);
            std::uniform_int_distribution<int> dk(0, l);
            Subspace s = random_subspace(f, l, dk(rng), rng);
            if (s.dim() == 0) continue;
            Mat mixed = random_gl(f, s.dim(), rng) * s.generator();
            REQUIRE(Subspace::from_rows(mixed) == s);
        }
    }
}

TEST_CASE("matrix inverse and nullspace") {
    std::mt19937_64 rng(11);
    Field f3 = Field::prime(3);
    for (int t = 0; t < 25; ++t) {
        Mat a = random_gl(f3, 3, rng);
        REQUIRE(a * inverse(a) == Mat::identity(f3, 3));
    }
    Mat singular = m2(f3, {{1, 2}, {2, 1}});  // det = 1 - 4 = 0 mod 3
    REQUIRE(rank(singular) == 1);
    REQUIRE_THROWS_AS(inverse(singular), std::invalid_argument);
    Mat ns = nullspace(singular);
    REQUIRE(ns.rows() == 1);  // kernel is one-dimensional
}
