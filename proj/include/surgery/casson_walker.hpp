#pragma once

#include <string_view>

#include "surgery/dedekind.hpp"
#include "surgery/rational.hpp"

namespace surgery {

// Normalization of the Casson-Walker invariant lambda.  WalkerP1 gives the
// Poincare sphere lambda = 1, PaperP2 gives it lambda = 2; every value here
// scales by exactly 2 between them.  Conflating the two is precisely the
// error the obstruction module reproduces, so the flag is threaded through
// every lambda-consuming operation instead of being a global.
enum class Normalization { WalkerP1, PaperP2 };

constexpr std::string_view to_string(Normalization n) {
    return n == Normalization::WalkerP1 ? "walker_p1" : "paper_p2";
}

// p/q-surgery on a knot with second Conway coefficient a2, p, q > 0 coprime.
struct SurgeryOnKnot {
    long long a2;
    long long p;
    long long q;
};

SurgeryOnKnot make_surgery_on_knot(long long a2, long long p, long long q);

// lambda(S^3_{p/q}(K)) = (q/p) a2 - (1/2) s(q,p) under WalkerP1, twice that
// under PaperP2.
Rational lambda_knot_surgery(const SurgeryOnKnot& s, Normalization n);

// lambda(-M) = -lambda(M).
inline Rational lambda_orientation_reverse(const Rational& v) { return -v; }

// Signature of the symmetric matrix ((m, ell), (ell, p/q)): positive minus
// negative eigenvalue count, in {-2, 0, 2}.  Decided exactly from the signs
// of determinant and trace; q > 0 lets both be read off integer expressions.
int linking_matrix_signature(long long m, long long ell, long long p, long long q);

// 2 v3(L) = -a3(L) + (a2x + a2y) ell + (ell^3 - ell)/12.  The result must
// land in (1/2)Z; anything else means the inputs are not a consistent link.
Rational two_v3_from_a3(const Rational& a3, long long a2x, long long a2y, long long ell);

// Rationally framed two-component link L = K_x \cup K_y: K_x framed by the
// integer m, K_y by p/q, linking number ell.  4 v3(L) is stored, an integer
// since 2 v3 is a half-integer.
struct FramedLink2 {
    long long m;
    long long ell;
    long long p;
    long long q;
    long long a2x;
    long long a2y;
    long long four_v3;
};

FramedLink2 make_framed_link2(long long m, long long ell, long long p, long long q,
                              long long a2x, long long a2y, long long four_v3);

// LHS - RHS of the rational surgery formula for two-component links,
//
//   ((mp - q ell^2)/q) (lambda(S^3_L)/2 - sigma/8)
//     = (p/q) a2x - p/(12q) + p ell^2/(24q) + m a2y - m/24 - m/(24 q^2)
//       + m ell^2/24 + 2 v3(L)
//       + ((mp - q ell^2)/(24q)) (12 s(m,1) - m + 12 s(p,q) - p/q),
//
// with sigma the linking-matrix signature and s(m,1) = 0.  Zero iff the
// supplied lambda(S^3_L) is the value the formula forces.
Rational link_identity_residual(const FramedLink2& L, const Rational& lambda_SL);

// Same residual with 4 v3 overridden by an arbitrary rational, so solved
// values can be plugged back even when they fail integrality.
Rational link_identity_residual(const FramedLink2& L, const Rational& lambda_SL,
                                const Rational& four_v3);

// Solves the identity for 4 v3 after substituting
// lambda(S^3_L) = -lambda(M), M the p/q-surgery on a knot with
// a2 = knot_a2y_for_lambda, computed under normalization n.  The 2 v3 term
// enters with coefficient 1, so the solution is unique; it need not be an
// integer, and failing the integrality the type demands is exactly the
// signal the mod-3 derivation feeds on.
Rational solve_four_v3(long long m, long long ell, long long p, long long q,
                       long long a2x, long long a2y, Normalization n,
                       long long knot_a2y_for_lambda);

}  // namespace surgery
