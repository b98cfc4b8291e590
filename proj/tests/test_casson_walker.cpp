#include <doctest.h>

#include <functional>
#include <numeric>

#include "surgery/casson_walker.hpp"

using surgery::Error;
using surgery::ErrorKind;
using surgery::FramedLink2;
using surgery::Normalization;
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

TEST_CASE("lambda of knot surgeries, both normalizations") {
    CHECK(surgery::lambda_knot_surgery(surgery::make_surgery_on_knot(0, 1, 1),
                                       Normalization::WalkerP1) == Rational(0));
    CHECK(surgery::lambda_knot_surgery(surgery::make_surgery_on_knot(1, 1, 1),
                                       Normalization::WalkerP1) == Rational(1));
    CHECK(surgery::lambda_knot_surgery(surgery::make_surgery_on_knot(0, 9, 1),
                                       Normalization::PaperP2) == Rational(-14, 27));
    CHECK(surgery::lambda_knot_surgery(surgery::make_surgery_on_knot(0, 9, 1),
                                       Normalization::WalkerP1) == Rational(-7, 27));
    // +1-surgery on the trefoil (a2 = 1) gives the Poincare sphere
    CHECK(surgery::lambda_knot_surgery(surgery::make_surgery_on_knot(1, 1, 1),
                                       Normalization::PaperP2) == Rational(2));
}

TEST_CASE("orientation reversal negates lambda") {
    CHECK(surgery::lambda_orientation_reverse(Rational(0)) == Rational(0));
    CHECK(surgery::lambda_orientation_reverse(Rational(-14, 27)) == Rational(14, 27));
    CHECK(surgery::lambda_orientation_reverse(Rational(5, 3)) == Rational(-5, 3));
}

TEST_CASE("surgery coefficient validation") {
    CHECK(kind_of([] { surgery::make_surgery_on_knot(0, 0, 1); }) ==
          ErrorKind::HypothesisViolated);
    CHECK(kind_of([] { surgery::make_surgery_on_knot(0, 1, -1); }) ==
          ErrorKind::HypothesisViolated);
    CHECK(kind_of([] { surgery::make_surgery_on_knot(0, 2, 4); }) == ErrorKind::NotCoprime);
}

TEST_CASE("linking matrix signature from exact sign data") {
    CHECK(surgery::linking_matrix_signature(2, 3, 9, 1) == 2);
    CHECK(surgery::linking_matrix_signature(0, 3, 9, 1) == 0);
    CHECK(surgery::linking_matrix_signature(5, 0, 7, 3) == 2);
    CHECK(surgery::linking_matrix_signature(-5, 2, 7, 3) == 0);
    CHECK(kind_of([] { surgery::linking_matrix_signature(0, 0, 9, 1); }) ==
          ErrorKind::DegenerateMatrix);
    CHECK(kind_of([] { surgery::linking_matrix_signature(1, 1, 2, 2); }) ==
          ErrorKind::NotCoprime);
    // m p / q = ell^2 exactly: ((4,2),(2,1)) is rank one
    CHECK(kind_of([] { surgery::linking_matrix_signature(4, 2, 1, 1); }) ==
          ErrorKind::DegenerateMatrix);
}

TEST_CASE("2 v3 from a3 and half-integrality") {
    CHECK(surgery::two_v3_from_a3(Rational(0), 0, 0, 0) == Rational(0));
    CHECK(surgery::two_v3_from_a3(Rational(0), 0, 0, 1) == Rational(0));
    CHECK(surgery::two_v3_from_a3(Rational(0), 1, 0, 2) == Rational(5, 2));
    CHECK(surgery::two_v3_from_a3(Rational(-2), 1, 1, 3) == Rational(10));
    CHECK(kind_of([] { surgery::two_v3_from_a3(Rational(1, 3), 0, 0, 0); }) ==
          ErrorKind::NonHalfInteger);
}

TEST_CASE("link identity fixtures around the (9,1) scenario") {
    // lambda(S^3_L) = -lambda(L(9,1)) = 14/27 under the lambda(P)=2 scale
    const Rational lambda_SL(14, 27);

    const FramedLink2 solved = surgery::make_framed_link2(2, 3, 9, 1, 0, 0, 2);
    CHECK(surgery::link_identity_residual(solved, lambda_SL) == Rational(0));

    const FramedLink2 at_zero = surgery::make_framed_link2(2, 3, 9, 1, 0, 0, 0);
    CHECK(surgery::link_identity_residual(at_zero, lambda_SL) == Rational(1));
    CHECK(surgery::link_identity_residual(at_zero, lambda_SL, Rational(2)) == Rational(0));
    // residual is affine in 4v3 with slope -1/2
    CHECK(surgery::link_identity_residual(at_zero, lambda_SL, Rational(4)) == Rational(-1));
}

TEST_CASE("solving for 4 v3, frozen values") {
    CHECK(surgery::solve_four_v3(2, 3, 9, 1, 0, 0, Normalization::PaperP2, 0) == Rational(2));
    CHECK(surgery::solve_four_v3(2, 3, 9, 1, 0, 0, Normalization::WalkerP1, 0) ==
          Rational(-1, 3));
    CHECK(surgery::solve_four_v3(0, 3, 9, 1, 0, 0, Normalization::PaperP2, 0) ==
          Rational(-50, 3));
}

TEST_CASE("solved 4 v3 plugs back to a zero residual, integral or not") {
    const struct {
        long long m, ell, p, q, a2x, a2y;
    } tuples[] = {
        {2, 3, 9, 1, 0, 0},  {0, 3, 9, 1, 1, -2},  {5, 6, 9, 1, 3, 1},
        {7, 3, 9, 2, -1, 4}, {17, 12, 9, 1, 2, 2},
    };
    for (const auto& t : tuples) {
        for (Normalization n : {Normalization::WalkerP1, Normalization::PaperP2}) {
            const Rational v =
                surgery::solve_four_v3(t.m, t.ell, t.p, t.q, t.a2x, t.a2y, n, t.a2y);
            const Rational lambda_SL = surgery::lambda_orientation_reverse(
                surgery::lambda_knot_surgery(surgery::make_surgery_on_knot(t.a2y, t.p, t.q), n));
            const FramedLink2 L =
                surgery::make_framed_link2(t.m, t.ell, t.p, t.q, t.a2x, t.a2y, 0);
            CHECK(surgery::link_identity_residual(L, lambda_SL, v) == Rational(0));
        }
    }
}

TEST_CASE("normalization scaling is exactly 2 on a grid") {
    for (long long a2 = -3; a2 <= 3; ++a2) {
        for (long long p = 1; p <= 12; ++p) {
            for (long long q = 1; q <= 12; ++q) {
                if (std::gcd(p, q) != 1) continue;
                const auto s = surgery::make_surgery_on_knot(a2, p, q);
                CHECK(surgery::lambda_knot_surgery(s, Normalization::PaperP2) ==
                      Rational(2) * surgery::lambda_knot_surgery(s, Normalization::WalkerP1));
            }
        }
    }
}
