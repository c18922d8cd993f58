#include <catch2/catch_amalgamated.hpp>

#include "rml/fields.hpp"

using namespace rml;

namespace {

// Independent oracle for GF(8) = GF(2)[x]/(x^3+x+1): bit-polynomial
// multiplication with shift-xor reduction. Element codes match the library's
// encoding (ascending coefficients, so x is 0b010).
unsigned oracle_mul8(unsigned a, unsigned b) {
    unsigned r = 0;
    for (int i = 0; i < 3; ++i)
        if (b & (1u << i)) r ^= a << i;
    for (int i = 5; i >= 3; --i)
        if (r & (1u << i)) r ^= 0b1011u << (i - 3);
    return r;
}

unsigned oracle_pow8(unsigned a, int e) {
    unsigned r = 1;
    for (int i = 0; i < e; ++i) r = oracle_mul8(r, a);
    return r;
}

}  // namespace

TEST_CASE("prime field construction validates the modulus") {
    REQUIRE(Field::prime(2).order() == 2);
    REQUIRE(Field::prime(251).order() == 251);
    REQUIRE_THROWS_AS(Field::prime(4), std::invalid_argument);
    REQUIRE_THROWS_AS(Field::prime(1), std::invalid_argument);
    REQUIRE_THROWS_AS(Field::prime(257), std::invalid_argument);
}

TEST_CASE("extension field arithmetic in GF(8)") {
    Field f8 = Field::gf(8);
    const uint32_t alpha = 2;

    SECTION("worked products") {
        REQUIRE(f8.mul(alpha, f8.mul(alpha, alpha)) == 3);  // a * a^2 = a + 1
        REQUIRE(f8.mul(alpha, 4) == 3);
    }
    SECTION("additive identity") {
        for (uint32_t a = 0; a < 8; ++a) REQUIRE(f8.add(a, 0) == a);
    }
    SECTION("powers against the independent oracle") {
        REQUIRE(f8.pow(alpha, 4) == oracle_pow8(alpha, 4));
        REQUIRE(oracle_pow8(alpha, 4) == 6);  // a^4 = a^2 + a
        for (uint32_t a = 0; a < 8; ++a)
            for (uint32_t b = 0; b < 8; ++b) REQUIRE(f8.mul(a, b) == oracle_mul8(a, b));
    }
    SECTION("division") {
        for (uint32_t a = 1; a < 8; ++a) {
            REQUIRE(f8.mul(a, f8.inv(a)) == 1);
            REQUIRE_NOTHROW(f8.div(5, a));
        }
        REQUIRE_THROWS_AS(f8.div(1, 0), std::invalid_argument);
    }
    SECTION("field mismatch is rejected") {
        Field f4 = Field::gf(4);
        REQUIRE_THROWS_AS(f8.element(1) + f4.element(1), std::invalid_argument);
    }
}

TEST_CASE("trace onto the prime subfield") {
    Field f8 = Field::gf(8);
    SECTION("worked values via the oracle") {
        // tr(x) = x + x^2 + x^4
        for (unsigned a = 0; a < 8; ++a) {
            unsigned expect = a ^ oracle_pow8(a, 2) ^ oracle_pow8(a, 4);
            REQUIRE(f8.trace_to_prime(a) == expect);
        }
        REQUIRE(f8.trace_to_prime(1) == 1);
        REQUIRE(f8.trace_to_prime(0) == 0);
        REQUIRE(f8.trace_to_prime(2) == 0);  // tr(a) = a + a^2 + a^4 = 0
    }
    SECTION("result lives in the subfield") {
        FieldElement t = trace(f8.element(5));
        REQUIRE(t.field() == Field::prime(2));
    }
    SECTION("trace to the field itself is the identity") {
        REQUIRE(trace(f8.element(5), f8) == f8.element(5));
    }
    SECTION("foreign subfields are rejected") {
        REQUIRE_THROWS_AS(trace(f8.element(3), Field::prime(3)), std::invalid_argument);
        REQUIRE_THROWS_AS(trace(f8.element(3), Field::gf(4)), std::invalid_argument);
    }
}

TEST_CASE("frobenius endomorphism") {
    Field f4 = Field::gf(4);
    REQUIRE(f4.frobenius(0) == 0);
    REQUIRE(f4.frobenius(1) == 1);
    REQUIRE(f4.frobenius(2) == 3);  // a -> a^2 = a + 1
    for (uint64_t q : {4ull, 8ull, 9ull, 27ull}) {
        Field f = Field::gf(q);
        for (uint32_t x = 0; x < f.order(); ++x) {
            uint32_t y = x;
            for (int i = 0; i < f.degree(); ++i) y = f.frobenius(y);
            REQUIRE(y == x);  // the Galois group has order m
        }
    }
}

TEST_CASE("orthogonal bases") {
    SECTION("the worked GF(8) basis") {
        Field f8 = Field::gf(8);
        FieldBasis gamma = FieldBasis::power_basis(f8);  // {1, a, a^2}
        FieldBasis dual = gamma.orthogonal();
        REQUIRE(dual[0].code() == 1);
        REQUIRE(dual[1].code() == 4);  // a^2
        REQUIRE(dual[2].code() == 2);  // a
        REQUIRE(dual.orthogonal() == gamma);
    }
    SECTION("GF(4) dual of {1, a} checked against all four trace products") {
        Field f4 = Field::gf(4);
        FieldBasis gamma = FieldBasis::power_basis(f4);
        FieldBasis dual = gamma.orthogonal();
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                REQUIRE(f4.trace_to_prime(f4.mul(gamma[i].code(), dual[j].code())) == (i == j ? 1u : 0u));
        REQUIRE(dual[0].code() == 3);  // a + 1
        REQUIRE(dual[1].code() == 1);
    }
    SECTION("dependent elements are rejected, independent ones accepted") {
        Field f4 = Field::gf(4);
        REQUIRE_THROWS_AS(FieldBasis(f4, {f4.element(1), f4.element(1)}), std::invalid_argument);
        REQUIRE_THROWS_AS(FieldBasis(f4, {f4.element(0), f4.element(2)}), std::invalid_argument);
        REQUIRE_NOTHROW(FieldBasis(f4, {f4.element(2), f4.element(3)}));  // {a, a+1} spans
    }
}

TEST_CASE("basis sweeps") {
    REQUIRE(all_bases(Field::gf(4)).size() == 6);    // (4-1)(4-2)
    REQUIRE(all_bases(Field::gf(8)).size() == 168);  // (8-1)(8-2)(8-4)
}

TEST_CASE("irreducibility is checked exhaustively") {
    SECTION("reducible moduli name a factor") {
        try {
            Field::extension(2, {1, 0, 1});  // x^2 + 1 = (x+1)^2
            FAIL("expected rejection");
        } catch (const std::invalid_argument& e) {
            std::string msg = e.what();
            REQUIRE(msg.find("reducible") != std::string::npos);
            REQUIRE(msg.find("[1,1]") != std::string::npos);
        }
    }
    SECTION("vanishing constant term is a root at zero") {
        REQUIRE_THROWS_AS(Field::extension(2, {0, 1, 1}), std::invalid_argument);
    }
    SECTION("non-monic moduli are rejected") {
        REQUIRE_THROWS_AS(Field::extension(3, {1, 1, 2}), std::invalid_argument);
    }
    SECTION("order cap") {
        REQUIRE_THROWS_AS(Field::extension(2, std::vector<uint32_t>(18, 1)), std::invalid_argument);
    }
}

TEST_CASE("default moduli and searched moduli") {
    REQUIRE(Field::gf(4).modulus() == std::vector<uint32_t>{1, 1, 1});
    REQUIRE(Field::gf(8).modulus() == std::vector<uint32_t>{1, 1, 0, 1});
    REQUIRE(Field::gf(9).order() == 9);
    REQUIRE(Field::gf(16).order() == 16);
    REQUIRE(Field::gf(27).order() == 27);
    REQUIRE(Field::gf(25).order() == 25);  // found by search
    REQUIRE(Field::gf(7).is_prime_field());
    REQUIRE_THROWS_AS(Field::gf(6), std::invalid_argument);
    REQUIRE_THROWS_AS(Field::gf(12), std::invalid_argument);
}

TEST_CASE("structural field equality") {
    REQUIRE(Field::gf(8) == Field::extension(2, {1, 1, 0, 1}));
    REQUIRE(Field::gf(8) != Field::extension(2, {1, 0, 1, 1}));  // the other cubic
    REQUIRE(Field::gf(4) != Field::prime(2));
}
