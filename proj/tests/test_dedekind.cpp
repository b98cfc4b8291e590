#include <doctest.h>

#include <functional>
#include <numeric>

#include "surgery/dedekind.hpp"

using surgery::DedekindPair;
using surgery::Error;
using surgery::ErrorKind;
using surgery::Integer;
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

// The sum straight from the definition, all terms as sawtooth products.
// Slow and obviously correct; anchors both production evaluators.
Rational literal_sum(long long q, long long p) {
    Rational acc(0);
    for (long long k = 1; k < p; ++k) {
        acc += surgery::sawtooth(Rational(k, p)) * surgery::sawtooth(Rational(k * q, p));
    }
    return acc;
}

}  // namespace

TEST_CASE("sawtooth vanishes at integers and is odd around them") {
    CHECK(surgery::sawtooth(Rational(5)) == Rational(0));
    CHECK(surgery::sawtooth(Rational(0)) == Rational(0));
    CHECK(surgery::sawtooth(Rational(1, 2)) == Rational(0));
    CHECK(surgery::sawtooth(Rational(1, 4)) == Rational(-1, 4));
    CHECK(surgery::sawtooth(Rational(-1, 4)) == Rational(1, 4));
    CHECK(surgery::sawtooth(Rational(7, 3)) == Rational(-1, 6));
    CHECK(surgery::sawtooth(Rational(-7, 3)) == Rational(1, 6));
}

TEST_CASE("both evaluators match the literal definition on small moduli") {
    for (long long p = 1; p <= 40; ++p) {
        for (long long q = -p; q <= 2 * p; ++q) {
            if (std::gcd(q, p) != 1) continue;
            const Rational expected = literal_sum(q, p);
            const DedekindPair pair{q, p};
            CAPTURE(q);
            CAPTURE(p);
            CHECK(surgery::dedekind_sum_direct(pair) == expected);
            CHECK(surgery::dedekind_sum_fast(pair) == expected);
        }
    }
}

TEST_CASE("known Dedekind sum values") {
    CHECK(surgery::dedekind_sum(1, 1) == Rational(0));
    CHECK(surgery::dedekind_sum(0, 1) == Rational(0));
    CHECK(surgery::dedekind_sum(1, 2) == Rational(0));
    CHECK(surgery::dedekind_sum(1, 3) == Rational(1, 18));
    CHECK(surgery::dedekind_sum(-1, 3) == Rational(-1, 18));
    CHECK(surgery::dedekind_sum(1, 4) == Rational(1, 8));
    CHECK(surgery::dedekind_sum(1, 9) == Rational(14, 27));
    CHECK(surgery::dedekind_sum(2, 9) == Rational(4, 27));
    CHECK(surgery::dedekind_sum(4, 9) == Rational(-4, 27));
}

TEST_CASE("periodicity and oddness in the first argument") {
    for (long long p : {5LL, 9LL, 12LL, 35LL}) {
        for (long long q = 1; q < p; ++q) {
            if (std::gcd(q, p) != 1) continue;
            CHECK(surgery::dedekind_sum(q + p, p) == surgery::dedekind_sum(q, p));
            CHECK(surgery::dedekind_sum(-q, p) == -surgery::dedekind_sum(q, p));
        }
    }
}

TEST_CASE("closed form s(1,p) = (p-1)(p-2)/(12p)") {
    for (long long p = 1; p <= 50; ++p) {
        CHECK(surgery::dedekind_sum(1, p) ==
              Rational((p - 1) * (p - 2), 12 * p));
    }
}

TEST_CASE("reciprocity residual vanishes") {
    for (long long p = 1; p <= 40; ++p) {
        for (long long q = 1; q <= 40; ++q) {
            if (std::gcd(p, q) != 1) continue;
            CHECK(surgery::reciprocity_residual(p, q).is_zero());
        }
    }
}

TEST_CASE("rearranged bracket drops the s(m,1) term") {
    CHECK(surgery::rearranged_dedekind_term(0, 1, 1) == Rational(-1));
    // 12 s(9,1) - 2 - 9 with s(9,1) = 0
    CHECK(surgery::rearranged_dedekind_term(2, 9, 1) == Rational(-11));
    CHECK(surgery::rearranged_dedekind_term(-3, 9, 2) ==
          Rational(12) * surgery::dedekind_sum(9, 2) + Rational(3) - Rational(9, 2));
}

TEST_CASE("6 p s(q,p) integrality and fixtures") {
    CHECK(surgery::six_p_s(DedekindPair{1, 9}) == 28);
    CHECK(surgery::six_p_s(DedekindPair{2, 9}) == 8);
    CHECK(surgery::six_p_s(DedekindPair{4, 9}) == -8);
    CHECK(surgery::six_p_s(DedekindPair{1, 1}) == 0);
    for (long long p = 1; p <= 60; ++p) {
        for (long long q = 1; q <= p; ++q) {
            if (std::gcd(q, p) != 1) continue;
            const Rational v = Rational(6) * Rational(p) * surgery::dedekind_sum(q, p);
            CHECK(v.is_integer());
        }
    }
}

TEST_CASE("the mod-3 congruence fact on its stated domain") {
    // p = 9 p0 with 3 coprime to p0; every coprime q
    for (long long p : {9LL, 18LL, 36LL, 45LL}) {
        for (long long q = 1; q < p; ++q) {
            if (std::gcd(q, p) != 1) continue;
            CAPTURE(p);
            CAPTURE(q);
            CHECK(surgery::six_ps_mod3_fact(p, q));
        }
    }
}

TEST_CASE("the congruence fact rejects off-domain inputs") {
    CHECK(kind_of([] { surgery::six_ps_mod3_fact(27, 1); }) == ErrorKind::HypothesisViolated);
    CHECK(kind_of([] { surgery::six_ps_mod3_fact(12, 1); }) == ErrorKind::HypothesisViolated);
    CHECK(kind_of([] { surgery::six_ps_mod3_fact(9, 3); }) == ErrorKind::HypothesisViolated);
    CHECK(kind_of([] { surgery::six_ps_mod3_fact(9, 0); }) == ErrorKind::HypothesisViolated);
}

TEST_CASE("argument validation") {
    CHECK(kind_of([] { surgery::make_dedekind_pair(2, 4); }) == ErrorKind::NotCoprime);
    CHECK(kind_of([] { surgery::make_dedekind_pair(1, 0); }) == ErrorKind::HypothesisViolated);
    CHECK(kind_of([] { surgery::make_dedekind_pair(1, -3); }) == ErrorKind::HypothesisViolated);
    CHECK(kind_of([] { surgery::dedekind_sum_direct(DedekindPair{2, 4}); }) ==
          ErrorKind::NotCoprime);
    CHECK(kind_of([] { surgery::dedekind_sum_fast(DedekindPair{2, 4}); }) ==
          ErrorKind::NotCoprime);
}
