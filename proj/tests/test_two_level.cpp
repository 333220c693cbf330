#include "qfunc/two_level.hpp"

#include "helpers.hpp"
#include "qfunc/random.hpp"
#include "qfunc/synthesis.hpp"

#include <doctest.h>

using namespace qfunc;
using qfunc::testing::diff;

TEST_CASE("identity factors into nothing") {
    CHECK(two_level_decompose(CMatrix::Identity(4, 4)).empty());
}

TEST_CASE("a 2x2 unitary is its own single factor") {
    RandomSource rng(7);
    const CMatrix w = rng.unitary(2);
    const auto factors = two_level_decompose(w);
    REQUIRE(factors.size() == 1);
    CHECK(factors[0].i == 0);
    CHECK(factors[0].j == 1);
    CHECK(diff(CMatrix(factors[0].block), w) < 1e-12);
}

TEST_CASE("superposition prep matrices stay within the rotation budget") {
    const CMatrix b = superposition_prep(4, 2);
    const auto factors = two_level_decompose(b);
    CHECK(factors.size() <= 6);
    CHECK(diff(two_level_product(factors, 4), b) < 1e-10);
}

TEST_CASE("diagonal input needs only phase factors") {
    CVector d(4);
    d << Complex{1.0}, std::polar(1.0, 0.4), Complex{1.0}, std::polar(1.0, -1.1);
    const CMatrix w = d.asDiagonal();
    const auto factors = two_level_decompose(w);
    CHECK(factors.size() <= 4);
    CHECK(diff(two_level_product(factors, 4), w) < 1e-12);
}

TEST_CASE("random unitaries reassemble") {
    RandomSource rng(13);
    for (int dim : {2, 4, 8, 16}) {
        for (int trial = 0; trial < 12; ++trial) {
            const CMatrix w = rng.unitary(dim);
            const auto factors = two_level_decompose(w);
            CHECK(factors.size() <= static_cast<std::size_t>(dim * (dim - 1) / 2 + dim));
            CHECK(diff(two_level_product(factors, dim), w) < 1e-9);
        }
    }
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(two_level_decompose(2.0 * CMatrix::Identity(4, 4)), PreconditionError);
    CHECK_THROWS_AS(two_level_decompose(CMatrix::Identity(32, 32)), ResourceError);
    CHECK_THROWS_AS(two_level_decompose(CMatrix::Identity(2, 3)), DimensionError);
    CHECK_THROWS_AS(two_level_decompose(CMatrix::Identity(1, 1)), DimensionError);
}
