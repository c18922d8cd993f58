#include <catch2/catch_amalgamated.hpp>

#include "rml/macwilliams.hpp"
#include "rml/vector_code.hpp"

using namespace rml;

namespace {

// direct count of n x m matrices of each rank over GF(q), by enumeration
std::vector<long long> ambient_rank_counts(const Field& f, int n, int m) {
    std::vector<long long> counts(std::min(n, m) + 1, 0);
    MatrixCode::full(f, n, m).for_each_codeword([&](const Mat& mat) { ++counts[rank(mat)]; });
    return counts;
}

}  // namespace

TEST_CASE("duality transform on the worked example") {
    Field f2 = Field::prime(2);
    std::vector<long long> a{1, 0, 7};
    auto dual = macwilliams_transform(a, 2, 3, 2, 8);
    REQUIRE(dual == std::vector<long long>{1, 0, 7});

    // cross-check against the enumerated dual of the expansion code
    MatrixCode c = MatrixCode::from_generators(
        f2, 2, 3,
        {Mat::from_codes(f2, 2, 3, {1, 0, 0, 0, 1, 0}), Mat::from_codes(f2, 2, 3, {0, 1, 0, 0, 0, 1}),
         Mat::from_codes(f2, 2, 3, {0, 0, 1, 1, 1, 0})});
    REQUIRE(c.weight_distribution() == a);
    REQUIRE(c.dual().weight_distribution() == dual);
}

TEST_CASE("transform of the zero code counts matrices by rank") {
    for (auto [q, n, m] : std::vector<std::tuple<long long, int, int>>{{2, 2, 3}, {2, 2, 2}, {3, 2, 2}, {2, 1, 3}}) {
        Field f = Field::prime(static_cast<uint32_t>(q));
        std::vector<long long> a(std::min(n, m) + 1, 0);
        a[0] = 1;
        REQUIRE(macwilliams_transform(a, n, m, q, 1) == ambient_rank_counts(f, n, m));
    }
}

TEST_CASE("transform of the full space is the zero distribution") {
    Field f2 = Field::prime(2);
    auto full = ambient_rank_counts(f2, 2, 3);
    auto dual = macwilliams_transform(full, 2, 3, 2, 64);
    REQUIRE(dual == std::vector<long long>{1, 0, 0});
}

TEST_CASE("transform rejects inconsistent inputs") {
    REQUIRE_THROWS_AS(macwilliams_transform({1, 1, 1}, 2, 2, 2, 3), std::domain_error);
    REQUIRE_THROWS_AS(macwilliams_transform({1, 0, 3}, 2, 2, 2, 3), std::invalid_argument);  // sum mismatch
    REQUIRE_THROWS_AS(macwilliams_transform({2, 0, 2}, 2, 2, 2, 4), std::invalid_argument);  // A_0 must be 1
}

TEST_CASE("binomial moment identities") {
    std::vector<long long> a{1, 0, 7}, dual{1, 0, 7};
    SECTION("all orders hold on the worked pair") {
        REQUIRE(macwilliams_moment_failures(a, dual, 2, 3, 2, 8).empty());
    }
    SECTION("an enumerated pair passes every order") {
        Field f2 = Field::prime(2);
        MatrixCode c = MatrixCode::standard_anticode(f2, 2, 2, 1);
        auto wd = c.weight_distribution();
        auto dw = c.dual().weight_distribution();
        REQUIRE(macwilliams_moment_failures(wd, dw, 2, 2, 2, c.size()).empty());
    }
    SECTION("perturbation is detected") {
        auto bad = a;
        bad[2] += 1;
        auto failures = macwilliams_moment_failures(bad, dual, 2, 3, 2, 8);
        REQUIRE_FALSE(failures.empty());
        REQUIRE(std::find(failures.begin(), failures.end(), 0) != failures.end());  // the size identity breaks too
    }
}

TEST_CASE("extremal weight distribution formula") {
    SECTION("the worked example") {
        REQUIRE(mrd_weight_distribution(2, 3, 2, 3, 2) == std::vector<long long>{1, 0, 7});
    }
    SECTION("full minimum distance gives q^max - 1 words of top rank") {
        auto a = mrd_weight_distribution(2, 3, 2, 3, 2);
        REQUIRE(a[2] == 7);  // 2^3 - 1
        auto b = mrd_weight_distribution(3, 3, 2, 3, 3);
        REQUIRE(b == std::vector<long long>{1, 0, 0, 7});
    }
    SECTION("the full ambient space with d = 1") {
        Field f3 = Field::prime(3);
        REQUIRE(mrd_weight_distribution(2, 2, 3, 4, 1) == ambient_rank_counts(f3, 2, 2));
    }
    SECTION("a dually quasi-MRD line in the square case") {
        Field f2 = Field::prime(2);
        MatrixCode c = MatrixCode::from_generators(f2, 2, 2, {Mat::identity(f2, 2)});
        REQUIRE(c.classify().is_dually_quasi_mrd);
        REQUIRE(mrd_weight_distribution(2, 2, 2, 1, 2) == c.weight_distribution());
    }
    SECTION("a Gabidulin expansion matches the formula") {
        Field f8 = Field::gf(8);
        MatrixCode c = VectorCode::gabidulin(f8, 3, 2).expanded(FieldBasis::power_basis(f8));
        REQUIRE(mrd_weight_distribution(3, 3, 2, 6, 2) == c.weight_distribution());
    }
    SECTION("non-extremal parameters are rejected") {
        REQUIRE_THROWS_AS(mrd_weight_distribution(2, 2, 2, 1, 1), std::domain_error);
        REQUIRE_THROWS_AS(mrd_weight_distribution(2, 3, 2, 2, 1), std::domain_error);
        REQUIRE_THROWS_AS(mrd_weight_distribution(3, 3, 2, 2, 2), std::domain_error);
    }
}
