#include "surgery/dedekind.hpp"

#include <cstdlib>
#include <numeric>
#include <string>

namespace surgery {

namespace {

long long nonneg_mod(long long a, long long m) {
    long long r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace

DedekindPair make_dedekind_pair(long long q, long long p) {
    if (p < 1) {
        fail(ErrorKind::HypothesisViolated,
             "dedekind modulus must be positive, got p = " + std::to_string(p));
    }
    if (std::gcd(std::llabs(q), p) != 1) {
        fail(ErrorKind::NotCoprime,
             "gcd(" + std::to_string(q) + ", " + std::to_string(p) + ") != 1");
    }
    return DedekindPair{q, p};
}

Rational sawtooth(const Rational& x) {
    if (x.is_integer()) return Rational(0);
    return x - Rational(x.floor()) - Rational(1, 2);
}

Rational dedekind_sum_direct(const DedekindPair& pair) {
    make_dedekind_pair(pair.q, pair.p);
    const long long p = pair.p;
    if (p == 1) return Rational(0);
    const long long q = nonneg_mod(pair.q, p);

    // For 0 < k < p neither k/p nor kq/p is an integer (gcd(q,p)=1), so
    //   ((k/p)) ((kq/p)) = (2k - p)(2r_k - p) / (4 p^2),  r_k = kq mod p.
    // Accumulating the integer numerators over the common denominator 4p^2
    // keeps the loop in machine words; r_k advances by addition.
    if (p <= 2'000'000) {
        // |sum| <= p^3 < 2^63 for p <= 2e6, each term below 4e12.
        long long acc = 0;
        long long r = 0;
        for (long long k = 1; k < p; ++k) {
            r += q;
            if (r >= p) r -= p;
            acc += (2 * k - p) * (2 * r - p);
        }
        const Integer P = make_integer(p);
        return Rational(make_integer(acc), 4 * P * P);
    }
    Integer acc = 0;
    long long r = 0;
    for (long long k = 1; k < p; ++k) {
        r += q;
        if (r >= p) r -= p;
        acc += make_integer(2 * k - p) * make_integer(2 * r - p);
    }
    const Integer P = make_integer(p);
    return Rational(acc, 4 * P * P);
}

Rational dedekind_sum_fast(const DedekindPair& pair) {
    make_dedekind_pair(pair.q, pair.p);
    long long p = pair.p;
    long long q = nonneg_mod(pair.q, p);

    // Reciprocity plus s(q,p) = s(q mod p, p) gives the Euclidean descent
    //   s(q, p) = -1/4 + (p^2 + q^2 + 1)/(12 p q) - s(p mod q, q)
    // with base case s(0, 1) = 0.
    Rational acc(0);
    int sign = 1;
    while (q != 0) {
        const Integer P = make_integer(p), Q = make_integer(q);
        const Rational step =
            Rational(-1, 4) + Rational(P * P + Q * Q + 1, 12 * P * Q);
        acc += (sign > 0) ? step : -step;
        sign = -sign;
        const long long next = p % q;
        p = q;
        q = next;
    }
    return acc;
}

Rational reciprocity_residual(long long p, long long q) {
    if (p < 1 || q < 1) {
        fail(ErrorKind::HypothesisViolated, "reciprocity needs positive p, q");
    }
    const Rational lhs = dedekind_sum(q, p) + dedekind_sum(p, q);
    const Integer P = make_integer(p), Q = make_integer(q);
    const Rational rhs = Rational(-1, 4) + Rational(P * P + Q * Q + 1, 12 * P * Q);
    return lhs - rhs;
}

Rational rearranged_dedekind_term(long long m, long long p, long long q) {
    // s(m, 1) vanishes, so only the s(p, q) piece survives.
    return Rational(12) * dedekind_sum(p, q) - Rational(m) - Rational(p, q);
}

long long six_p_s(const DedekindPair& pair) {
    const Rational v = Rational(6) * Rational(pair.p) * dedekind_sum_fast(pair);
    const Integer n = v.to_integer();
    if (!n.fits_slong_p()) {
        fail(ErrorKind::InternalInconsistency, "6 p s(q,p) overflows long: " + n.get_str());
    }
    return n.get_si();
}

bool six_ps_mod3_fact(long long p, long long q) {
    if (p < 1 || q < 1 || std::gcd(p, q) != 1) {
        fail(ErrorKind::HypothesisViolated,
             "need positive coprime p, q; got (" + std::to_string(p) + ", " + std::to_string(q) + ")");
    }
    if (p % 9 != 0 || (p / 9) % 3 == 0) {
        fail(ErrorKind::HypothesisViolated,
             "p = " + std::to_string(p) + " is not of the form 9*p0 with 3 not dividing p0");
    }
    if (q % 3 == 0) {
        fail(ErrorKind::HypothesisViolated, "q divisible by 3 contradicts gcd(q, p) = 1");
    }
    return Mod3Residue::of(six_p_s(DedekindPair{q, p})) == Mod3Residue::of(q);
}

}  // namespace surgery
