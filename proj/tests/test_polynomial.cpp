#include "qfunc/polynomial.hpp"

#include "helpers.hpp"

#include <doctest.h>

using namespace qfunc;
using qfunc::testing::diff;

namespace {
const Complex kI{0.0, 1.0};
}

TEST_CASE("canonical form trims trailing zeros") {
    Polynomial p{{Complex{1.0}, Complex{2.0}, Complex{0.0}, Complex{0.0}}};
    CHECK(p.degree() == 1);
    CHECK(p.coeff(1) == Complex{2.0});
    CHECK(p.coeff(7) == Complex{0.0});

    Polynomial zero{{Complex{0.0}, Complex{0.0}}};
    CHECK(zero.degree() == 0);
    CHECK(zero.is_zero());
}

TEST_CASE("from_roots expands the product of linear factors") {
    // (x - 1)(x + 1)(x + i) = x^3 + i x^2 - x - i
    const Polynomial p = Polynomial::from_roots({Complex{1.0}, Complex{-1.0}, -kI});
    REQUIRE(p.degree() == 3);
    CHECK(std::abs(p.coeff(0) - (-kI)) < 1e-15);
    CHECK(std::abs(p.coeff(1) - Complex{-1.0}) < 1e-15);
    CHECK(std::abs(p.coeff(2) - kI) < 1e-15);
    CHECK(std::abs(p.coeff(3) - Complex{1.0}) < 1e-15);
    CHECK(p.is_monic());
}

TEST_CASE("evaluation at scalars and matrices") {
    const Polynomial p = Polynomial::from_roots({Complex{1.0}, Complex{-1.0}});
    CHECK(std::abs(p(Complex{2.0}) - Complex{3.0}) < 1e-15);
    CHECK(std::abs(p(kI) - Complex{-2.0}) < 1e-15);

    CMatrix u(2, 2);
    u << Complex{1.0}, Complex{0.0}, Complex{0.0}, Complex{-1.0};
    CHECK(max_abs(p(u)) < 1e-15);

    CHECK_THROWS_AS(p(CMatrix::Zero(2, 3)), DimensionError);
}

TEST_CASE("division with remainder") {
    const Polynomial num = Polynomial::from_roots({Complex{1.0}, Complex{-1.0}, kI, -kI});
    const Polynomial den = Polynomial::from_roots({Complex{1.0}, Complex{-1.0}, -kI});
    auto [quot, rem] = Polynomial::divmod(num, den);
    REQUIRE(quot.degree() == 1);
    CHECK(std::abs(quot.coeff(1) - Complex{1.0}) < 1e-12);
    CHECK(std::abs(quot.coeff(0) - (-kI)) < 1e-12);
    CHECK(rem.is_zero(1e-12));

    auto [q2, r2] = Polynomial::divmod(den, num);
    CHECK(q2.is_zero());
    CHECK(r2.degree() == den.degree());

    CHECK_THROWS_AS(Polynomial::divmod(num, Polynomial{}), DomainError);
}

TEST_CASE("printing") {
    CHECK(Polynomial::from_roots({Complex{1.0}, Complex{-1.0}, kI, -kI}).str() == "x^4 - 1");
    CHECK(Polynomial::from_roots({Complex{1.0}}).str() == "x - 1");
    CHECK(Polynomial::from_roots({Complex{1.0}, Complex{-1.0}, -kI}).str() ==
          "x^3 + i x^2 - x - i");
    CHECK(Polynomial{}.str() == "0");
}
