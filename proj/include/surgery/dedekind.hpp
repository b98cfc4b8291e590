#pragma once

#include "surgery/rational.hpp"

namespace surgery {

// Argument pair of the Dedekind sum s(q, p).  p is the modulus: p >= 1,
// gcd(q, p) = 1.  q may be any integer; s is odd and p-periodic in q.
struct DedekindPair {
    long long q;
    long long p;
};

// Validates p >= 1 (HypothesisViolated) and gcd(q, p) = 1 (NotCoprime).
DedekindPair make_dedekind_pair(long long q, long long p);

// Sawtooth ((x)): 0 at integers, x - floor(x) - 1/2 otherwise.
Rational sawtooth(const Rational& x);

// s(q, p) = sum_{k=1}^{p-1} ((k/p)) ((kq/p)), evaluated term by term.
// Theta(p) time; reference implementation for the reciprocity-based one.
Rational dedekind_sum_direct(const DedekindPair& pair);

// s(q, p) via the reciprocity law
//   s(q, p) + s(p, q) = -1/4 + (p/q + q/p + 1/(pq)) / 12
// applied along the Euclidean algorithm, O(log p) steps (Rademacher and
// Grosswald, "Dedekind Sums", ch. 2).
Rational dedekind_sum_fast(const DedekindPair& pair);

inline Rational dedekind_sum(long long q, long long p) {
    return dedekind_sum_fast(make_dedekind_pair(q, p));
}

// s(q,p) + s(p,q) + 1/4 - (p/q + q/p + 1/(pq))/12; zero iff reciprocity holds.
Rational reciprocity_residual(long long p, long long q);

// 12 s(m, 1) - m + 12 s(p, q) - p/q, the bracket shared by the surgery
// formula's lens-space corrections.  s(m, 1) = 0 for every m.
Rational rearranged_dedekind_term(long long m, long long p, long long q);

// 6 p s(q, p), which is always an integer.
long long six_p_s(const DedekindPair& pair);

// Whether 6 p s(q, p) == q (mod 3).  Callable only on the domain where that
// congruence is asserted: p = 9 p0 with p0 not divisible by 3, and q not
// divisible by 3 (automatic from gcd(q, p) = 1 here).
bool six_ps_mod3_fact(long long p, long long q);

}  // namespace surgery
