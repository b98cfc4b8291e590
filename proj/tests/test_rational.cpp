#include <doctest.h>

#include <functional>

#include "surgery/rational.hpp"

using surgery::Error;
using surgery::ErrorKind;
using surgery::Integer;
using surgery::Mod3Residue;
using surgery::Rational;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected a surgery::Error");
    return ErrorKind::InternalInconsistency;
}

}  // namespace

TEST_CASE("rationals canonicalize on construction") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(-3, -9) == Rational(1, 3));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(2, 4).numerator() == 1);
    CHECK(Rational(2, 4).denominator() == 2);
    CHECK(Rational(1, -2).numerator() == -1);
    CHECK(Rational(1, -2).denominator() == 2);
}

TEST_CASE("serialization always carries the denominator, sign on top") {
    CHECK(Rational(28).to_string() == "28/1");
    CHECK(Rational(-14, 27).to_string() == "-14/27");
    CHECK(Rational(14, -27).to_string() == "-14/27");
    CHECK(Rational(0).to_string() == "0/1");
}

TEST_CASE("parsing round-trips and rejects garbage") {
    CHECK(Rational::from_string("14/27") == Rational(14, 27));
    CHECK(Rational::from_string("-14/27") == Rational(-14, 27));
    CHECK(Rational::from_string("28") == Rational(28));
    CHECK(Rational::from_string("+3/6") == Rational(1, 2));
    CHECK(kind_of([] { Rational::from_string("a/b"); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { Rational::from_string("1/2/3"); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { Rational::from_string(""); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { Rational::from_string("1.5"); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { Rational::from_string("1/0"); }) == ErrorKind::ZeroDenominator);
}

TEST_CASE("zero denominators and zero division are structured errors") {
    CHECK(kind_of([] { Rational(1, 0); }) == ErrorKind::ZeroDenominator);
    CHECK(kind_of([] { Rational(1, 2) / Rational(0); }) == ErrorKind::DivisionByZero);
}

TEST_CASE("field arithmetic is exact") {
    CHECK(Rational(1, 6) + Rational(1, 3) == Rational(1, 2));
    CHECK(Rational(1, 3) - Rational(1, 2) == Rational(-1, 6));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(2, 3) / Rational(4, 3) == Rational(1, 2));
    CHECK(-Rational(5, 7) == Rational(-5, 7));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
}

TEST_CASE("floor and integrality") {
    CHECK(Rational(7, 2).floor() == 3);
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(6, 3).floor() == 2);
    CHECK(Rational(6, 3).is_integer());
    CHECK(Rational(6, 3).to_integer() == 2);
    CHECK_FALSE(Rational(1, 2).is_integer());
    CHECK(kind_of([] { Rational(1, 2).to_integer(); }) == ErrorKind::NonIntegral);
}

TEST_CASE("mod-3 residues use the non-negative representative") {
    CHECK(Mod3Residue::of(7).value() == 1);
    CHECK(Mod3Residue::of(-1).value() == 2);
    CHECK(Mod3Residue::of(-6).value() == 0);
    CHECK(Mod3Residue::of(Integer("1000000000000000000000000")).value() == 1);  // 10^24 = 1 mod 3
    CHECK(Mod3Residue::of(Integer("-1000000000000000000000000")).value() == 2);
    CHECK((Mod3Residue::of(2) + Mod3Residue::of(2)).value() == 1);
    CHECK((Mod3Residue::of(2) * Mod3Residue::of(2)).value() == 1);
    CHECK((-Mod3Residue::of(1)).value() == 2);
    CHECK((-Mod3Residue::of(0)).value() == 0);
}

TEST_CASE("rational mod 3 inverts the denominator when possible") {
    CHECK(surgery::mod3_residue(Rational(4, 5)).value() == 2);   // 1 * 2^{-1} = 1*2
    CHECK(surgery::mod3_residue(Rational(1, 2)).value() == 2);
    CHECK(surgery::mod3_residue(Rational(-14, 27) * Rational(27)).value() == 1);
    CHECK(surgery::mod3_residue(Rational(6)).value() == 0);
    CHECK(kind_of([] { surgery::mod3_residue(Rational(1, 3)); }) ==
          ErrorKind::DenominatorNotInvertible);
    CHECK(kind_of([] { surgery::mod3_residue(Rational(5, 12)); }) ==
          ErrorKind::DenominatorNotInvertible);
}

TEST_CASE("mod-3 reduction is a ring homomorphism away from denominator 3") {
    const Rational xs[] = {Rational(4, 5), Rational(-7, 2), Rational(11), Rational(2, 7),
                           Rational(-1, 4)};
    for (const auto& x : xs) {
        for (const auto& y : xs) {
            CHECK(surgery::mod3_residue(x + y) ==
                  surgery::mod3_residue(x) + surgery::mod3_residue(y));
            CHECK(surgery::mod3_residue(x * y) ==
                  surgery::mod3_residue(x) * surgery::mod3_residue(y));
        }
    }
}
