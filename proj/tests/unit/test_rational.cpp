#include "f4gvm/errors.hpp"
#include "f4gvm/linear_form.hpp"

#include <doctest.h>

#include <limits>

using namespace f4gvm;

TEST_SUITE("rational") {

TEST_CASE("normalizes sign and common factors") {
    CHECK(Rational(6, -4) == Rational(-3, 2));
    CHECK(Rational(0, -7).den() == 1);
    CHECK(Rational(-3, 2).str() == "-3/2");
    CHECK(Rational(8, 4).str() == "2");
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("arithmetic and ordering") {
    const Rational a(1, 2), b(1, 3);
    CHECK(a + b == Rational(5, 6));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 6));
    CHECK(a / b == Rational(3, 2));
    CHECK(b < a);
    CHECK(-a < b);
    CHECK_THROWS(a / Rational(0));
}

TEST_CASE("parse round-trips str") {
    for (const char* s : {"0", "7", "-7", "11/2", "-3/4"}) CHECK(Rational::parse(s).str() == s);
    CHECK(Rational::parse("4/6") == Rational(2, 3));
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
}

TEST_CASE("overflow is detected, not wrapped") {
    const Rational big(std::numeric_limits<std::int64_t>::max());
    CHECK_THROWS_AS(big + Rational(1), OverflowError);
    CHECK_THROWS_AS(big * Rational(2), OverflowError);
    CHECK_THROWS_AS(-Rational(std::numeric_limits<std::int64_t>::min()), OverflowError);
    CHECK_NOTHROW(big - Rational(1));
}

}

TEST_SUITE("linear_form") {

TEST_CASE("sign decision assumes positive labels") {
    const auto m1 = LinearForm::generator(1), m2 = LinearForm::generator(2);
    CHECK((m1 + m2).sign() == Sign::Positive);
    CHECK((-m1 - m2 * Rational(3)).sign() == Sign::Negative);
    CHECK((m1 - m2).sign() == Sign::Ambiguous);
    CHECK(LinearForm().sign() == Sign::Zero);
    CHECK(LinearForm(Rational(-2)).sign() == Sign::Negative);
    CHECK((m1 - LinearForm(Rational(1))).sign() == Sign::Ambiguous);
}

TEST_CASE("generator detection, integrality, evaluation") {
    const auto m3 = LinearForm::generator(3);
    CHECK(m3.generator_index() == 3);
    CHECK_FALSE((m3 * Rational(2)).generator_index());
    CHECK_FALSE((m3 + LinearForm::generator(4)).generator_index());
    CHECK((m3 * Rational(1, 2)).is_integral() == false);
    CHECK((m3 * Rational(2) + LinearForm(Rational(-1))).is_integral());
    const std::array<Rational, 4> at{1, 2, 3, 4};
    CHECK((m3 * Rational(3, 2) + LinearForm(Rational(1, 2))).evaluate(at) == Rational(5));
}

TEST_CASE("rendering") {
    LinearForm f({2, 4, Rational(3, 2), 0}, Rational(-8));
    CHECK(f.str() == "2m1+4m2+3m3/2-8");
    CHECK(LinearForm().str() == "0");
    CHECK((-LinearForm::generator(4)).str() == "-m4");
    CHECK_THROWS(LinearForm::generator(5));
}

}
