#include "surgery/casson_walker.hpp"

#include <cstdlib>
#include <numeric>
#include <string>

namespace surgery {

SurgeryOnKnot make_surgery_on_knot(long long a2, long long p, long long q) {
    if (p < 1 || q < 1) {
        fail(ErrorKind::HypothesisViolated,
             "surgery coefficient needs p, q > 0; got p/q = " + std::to_string(p) + "/" +
                 std::to_string(q));
    }
    if (std::gcd(p, q) != 1) {
        fail(ErrorKind::NotCoprime,
             "gcd(" + std::to_string(p) + ", " + std::to_string(q) + ") != 1");
    }
    return SurgeryOnKnot{a2, p, q};
}

Rational lambda_knot_surgery(const SurgeryOnKnot& s, Normalization n) {
    make_surgery_on_knot(s.a2, s.p, s.q);
    const Rational walker =
        Rational(s.q, s.p) * Rational(s.a2) - Rational(1, 2) * dedekind_sum(s.q, s.p);
    return n == Normalization::WalkerP1 ? walker : Rational(2) * walker;
}

int linking_matrix_signature(long long m, long long ell, long long p, long long q) {
    if (p < 1 || q < 1) fail(ErrorKind::HypothesisViolated, "need p, q > 0");
    if (std::gcd(p, q) != 1) {
        fail(ErrorKind::NotCoprime,
             "gcd(" + std::to_string(p) + ", " + std::to_string(q) + ") != 1");
    }
    // det = (mp - q ell^2)/q and trace = (mq + p)/q; with q > 0 the signs of
    // the integer numerators decide everything.
    const Integer M = make_integer(m), L = make_integer(ell);
    const Integer P = make_integer(p), Q = make_integer(q);
    const Integer det_num = M * P - Q * L * L;
    const Integer trace_num = M * Q + P;
    if (det_num == 0) {
        fail(ErrorKind::DegenerateMatrix,
             "linking matrix ((" + std::to_string(m) + ", " + std::to_string(ell) + "), (" +
                 std::to_string(ell) + ", " + std::to_string(p) + "/" + std::to_string(q) +
                 ")) is singular");
    }
    if (det_num < 0) return 0;  // indefinite
    // Definite: both eigenvalues share the sign of the (nonzero) trace.
    return trace_num > 0 ? 2 : -2;
}

Rational two_v3_from_a3(const Rational& a3, long long a2x, long long a2y, long long ell) {
    const Integer l = make_integer(ell);
    const Integer a2sum = make_integer(a2x) + make_integer(a2y);
    const Rational v = -a3 + Rational(a2sum) * Rational(l) + Rational(l * l * l - l, 12);
    if (!(Rational(2) * v).is_integer()) {
        fail(ErrorKind::NonHalfInteger, "2 v3 = " + v.to_string() + " is not a half-integer");
    }
    return v;
}

FramedLink2 make_framed_link2(long long m, long long ell, long long p, long long q,
                              long long a2x, long long a2y, long long four_v3) {
    if (p < 1 || q < 1) fail(ErrorKind::HypothesisViolated, "need p, q > 0");
    if (std::gcd(p, q) != 1) {
        fail(ErrorKind::NotCoprime,
             "gcd(" + std::to_string(p) + ", " + std::to_string(q) + ") != 1");
    }
    return FramedLink2{m, ell, p, q, a2x, a2y, four_v3};
}

Rational link_identity_residual(const FramedLink2& L, const Rational& lambda_SL,
                                const Rational& four_v3) {
    make_framed_link2(L.m, L.ell, L.p, L.q, L.a2x, L.a2y, L.four_v3);
    const int sigma = linking_matrix_signature(L.m, L.ell, L.p, L.q);

    const Integer m = make_integer(L.m), ell = make_integer(L.ell);
    const Integer p = make_integer(L.p), q = make_integer(L.q);
    const Integer det_num = m * p - q * ell * ell;  // q * det

    const Rational lhs =
        Rational(det_num, q) * (lambda_SL / Rational(2) - Rational(sigma, 8));

    const Rational rhs = Rational(p, q) * Rational(L.a2x)
                         - Rational(p, 12 * q)
                         + Rational(p * ell * ell, 24 * q)
                         + Rational(m) * Rational(L.a2y)
                         - Rational(m, 24)
                         - Rational(m, 24 * q * q)
                         + Rational(m * ell * ell, 24)
                         + four_v3 / Rational(2)  // 2 v3 = (4 v3)/2
                         + Rational(det_num, 24 * q) * rearranged_dedekind_term(L.m, L.p, L.q);
    return lhs - rhs;
}

Rational link_identity_residual(const FramedLink2& L, const Rational& lambda_SL) {
    return link_identity_residual(L, lambda_SL, Rational(L.four_v3));
}

Rational solve_four_v3(long long m, long long ell, long long p, long long q,
                       long long a2x, long long a2y, Normalization n,
                       long long knot_a2y_for_lambda) {
    const Rational lambda_M =
        lambda_knot_surgery(make_surgery_on_knot(knot_a2y_for_lambda, p, q), n);
    const Rational lambda_SL = lambda_orientation_reverse(lambda_M);
    // residual is affine in 4 v3 with slope -1/2 (the +2 v3 term on the
    // right), so the root is twice the residual at 0.
    const FramedLink2 L = make_framed_link2(m, ell, p, q, a2x, a2y, 0);
    return Rational(2) * link_identity_residual(L, lambda_SL, Rational(0));
}

}  // namespace surgery
