#include <catch2/catch_amalgamated.hpp>

#include "rml/vector_code.hpp"

using namespace rml;

namespace {

Mat row(const Field& f, std::vector<uint32_t> codes) {
    Mat m(f, 1, static_cast<int>(codes.size()));
    for (size_t i = 0; i < codes.size(); ++i) m.set_code(0, static_cast<int>(i), codes[i]);
    return m;
}

Mat m2(const Field& f, std::vector<std::vector<uint32_t>> rows) {
    Mat m(f, static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j) m.set_code(static_cast<int>(i), static_cast<int>(j), rows[i][j]);
    return m;
}

}  // namespace

TEST_CASE("rank weight") {
    Field f8 = Field::gf(8);
    Field f4 = Field::gf(4);
    REQUIRE(VectorCode::rank_weight(f8, {0, 0}) == 0);
    REQUIRE(VectorCode::rank_weight(f8, {1, 2}) == 2);  // 1 and a are independent
    REQUIRE(VectorCode::rank_weight(f4, {1, 0, 0}) == 1);
    REQUIRE(VectorCode::rank_weight(f8, {2, 4}) == 2);  // a, a^2
    REQUIRE(VectorCode::rank_weight(f8, {3, 3}) == 1);  // equal entries
}

TEST_CASE("expansion reproduces the worked matrices exactly") {
    Field f8 = Field::gf(8);
    FieldBasis gamma = FieldBasis::power_basis(f8);
    const uint32_t alpha = 2;
    std::vector<uint32_t> v{1, alpha};

    Field f2 = Field::prime(2);
    SECTION("images of v, a v, a^2 v") {
        REQUIRE(VectorCode::expand_vector(gamma, v) == m2(f2, {{1, 0, 0}, {0, 1, 0}}));
        std::vector<uint32_t> av{f8.mul(alpha, 1), f8.mul(alpha, alpha)};
        REQUIRE(VectorCode::expand_vector(gamma, av) == m2(f2, {{0, 1, 0}, {0, 0, 1}}));
        std::vector<uint32_t> aav{f8.mul(4, 1), f8.mul(4, alpha)};
        REQUIRE(VectorCode::expand_vector(gamma, aav) == m2(f2, {{0, 0, 1}, {1, 1, 0}}));
    }
    SECTION("canonical span equality") {
        VectorCode c = VectorCode::from_generators(f8, 2, row(f8, v));
        MatrixCode expected = MatrixCode::from_generators(
            f2, 2, 3,
            {m2(f2, {{1, 0, 0}, {0, 1, 0}}), m2(f2, {{0, 1, 0}, {0, 0, 1}}), m2(f2, {{0, 0, 1}, {1, 1, 0}})});
        REQUIRE(c.expanded(gamma) == expected);
        REQUIRE(c.expanded(gamma).dim() == 3);
    }
    SECTION("degenerate expansions") {
        Field f4 = Field::gf(4);
        REQUIRE(VectorCode::zero(f4, 2).expanded(FieldBasis::power_basis(f4)) ==
                MatrixCode::zero(Field::prime(2), 2, 2));
        REQUIRE(VectorCode::full(f4, 1).expanded(FieldBasis::power_basis(f4)) ==
                MatrixCode::full(Field::prime(2), 1, 2));
    }
}

TEST_CASE("vector duality") {
    Field f8 = Field::gf(8);
    VectorCode c = VectorCode::from_generators(f8, 2, row(f8, {1, 2}));
    SECTION("the worked dual generator") {
        VectorCode d = c.dual();
        REQUIRE(d.dim() == 1);
        REQUIRE(d.generator().row_codes(0) == std::vector<uint32_t>{1, 5});  // (1, a^2 + 1)
    }
    SECTION("trivial duals and biduality") {
        REQUIRE(VectorCode::zero(f8, 2).dual() == VectorCode::full(f8, 2));
        std::mt19937_64 rng(3);
        for (int t = 0; t < 10; ++t) {
            VectorCode r = VectorCode::from_subspace(f8, random_subspace(f8, 3, static_cast<int>(rng() % 4), rng));
            REQUIRE(r.dual().dual() == r);
            REQUIRE(r.dim() + r.dual().dim() == 3);
        }
    }
    SECTION("expansion duality in orthogonal bases") {
        FieldBasis gamma = FieldBasis::power_basis(f8);
        REQUIRE(c.expanded(gamma).dual() == c.dual().expanded(gamma.orthogonal()));
    }
}

TEST_CASE("frobenius closure") {
    Field f4 = Field::gf(4);
    SECTION("subfield generators are already fixed") {
        VectorCode c = VectorCode::from_generators(f4, 3, m2(f4, {{1, 0, 1}, {0, 1, 0}}));
        REQUIRE(c.frobenius_closure() == c);
    }
    SECTION("the worked closure fills the plane") {
        VectorCode d = VectorCode::from_generators(f4, 2, row(f4, {1, 2}));
        REQUIRE(d.frobenius_closure() == VectorCode::full(f4, 2));
    }
    SECTION("idempotent and containing") {
        std::mt19937_64 rng(5);
        for (int t = 0; t < 10; ++t) {
            VectorCode d = VectorCode::from_subspace(f4, random_subspace(f4, 3, static_cast<int>(rng() % 3), rng));
            VectorCode star = d.frobenius_closure();
            REQUIRE(d.is_subcode_of(star));
            REQUIRE(star.frobenius_closure() == star);
            REQUIRE(star.frobenius_image() == star);
        }
    }
}

TEST_CASE("vector classification") {
    Field f8 = Field::gf(8);
    Field f4 = Field::gf(4);
    SECTION("coordinate spans are optimal vector anticodes") {
        VectorCode c = VectorCode::from_generators(f4, 3, m2(f4, {{1, 0, 0}, {0, 1, 0}}));
        REQUIRE(c.classify().is_optimal_vector_anticode);
    }
    SECTION("the worked MRD line") {
        VectorCode c = VectorCode::from_generators(f8, 2, row(f8, {1, 2}));
        auto cls = c.classify();
        REQUIRE(cls.is_mrd);
        REQUIRE(c.min_distance() == 2);
    }
    SECTION("the full space fails the anticode equality when n > m") {
        REQUIRE_FALSE(VectorCode::full(f4, 3).classify().is_optimal_vector_anticode);
    }
    SECTION("zero code conventions") {
        REQUIRE(VectorCode::zero(f8, 2).min_distance() == 3);  // n + 1
        REQUIRE(VectorCode::zero(f8, 2).classify().is_mrd);
    }
}

TEST_CASE("vector code equivalence") {
    Field f4 = Field::gf(4);
    VectorCode e1 = VectorCode::from_generators(f4, 2, row(f4, {1, 0}));
    VectorCode e2 = VectorCode::from_generators(f4, 2, row(f4, {0, 1}));
    SECTION("identity on itself") {
        auto w = are_equivalent(e1, e1);
        REQUIRE(w.has_value());
        REQUIRE(apply_isometry(*w, e1) == e1);
    }
    SECTION("coordinate swap witness") {
        auto w = are_equivalent(e1, e2);
        REQUIRE(w.has_value());
        REQUIRE(apply_isometry(*w, e1) == e2);
        // the witness matrix must swap the coordinates up to the scalar
        REQUIRE(w->b.code_at(0, 0) == 0);
    }
    SECTION("equivalent vector codes have equivalent expansions") {
        FieldBasis gamma = FieldBasis::power_basis(f4);
        FieldBasis other = all_bases(f4).back();
        auto w = are_equivalent(e1.expanded(gamma), e2.expanded(other));
        REQUIRE(w.has_value());
    }
    SECTION("definitive non-equivalence") {
        VectorCode diag = VectorCode::from_generators(f4, 2, row(f4, {1, 2}));
        REQUIRE_FALSE(are_equivalent(e1, diag).has_value());  // rank weights differ
    }
}

TEST_CASE("gabidulin fixture") {
    Field f8 = Field::gf(8);
    VectorCode c = VectorCode::gabidulin(f8, 3, 2);
    REQUIRE(c.dim() == 2);
    REQUIRE(c.min_distance() == 2);  // n - k + 1
    REQUIRE(c.classify().is_mrd);
    REQUIRE_THROWS_AS(VectorCode::gabidulin(Field::gf(4), 3, 1), std::invalid_argument);  // needs n <= degree
}

TEST_CASE("code support") {
    Field f4 = Field::gf(4);
    VectorCode c = VectorCode::from_generators(f4, 3, row(f4, {1, 0, 0}));
    Subspace s = c.support();
    REQUIRE(s.ambient() == 3);
    REQUIRE(s.dim() == 1);
    REQUIRE(s.contains_vector({1, 0, 0}));
    // support of the full space is everything
    REQUIRE(VectorCode::full(f4, 3).support().dim() == 3);
}
