#include "surgery/banding.hpp"

#include <string>

#include "surgery/obstruction.hpp"

namespace surgery {

KnotDescriptor torus_2k_invariants(long long k) {
    if (k < 3 || k % 2 == 0) {
        fail(ErrorKind::InvalidTorusParameter,
             "T(2,k) needs odd k >= 3; got k = " + std::to_string(k));
    }
    KnotDescriptor d;
    d.name = "T(2," + std::to_string(k) + ")";
    d.determinant = k;
    d.signature = -(k - 1);  // right-handed convention
    d.a2 = (k * k - 1) / 8;
    d.quasi_alternating = true;  // alternating, in fact
    d.branched_cover_surgery = CoverSurgery{k, 1, 0};
    return d;
}

bool mv_d_filter(const Rational& d) {
    return d == Rational(0) || d == Rational(1) || d == Rational(-1);
}

Rational signature_to_d(long long sigma, const Rational& convention_scale) {
    return convention_scale * Rational(sigma);
}

BandingVerdict corollary_verdict(const KnotDescriptor& K) {
    BandingVerdict v;

    const bool det_ok = K.determinant % 9 == 0 && (K.determinant / 9) % 3 != 0;
    const bool sigma_ok = K.signature != 0 && K.signature != 4 && K.signature != -4;
    const bool qa_ok = K.quasi_alternating;

    if (det_ok && sigma_ok && qa_ok && !K.branched_cover_surgery) {
        fail(ErrorKind::MissingCoverData,
             "determinant and signature hypotheses hold but no branched cover surgery was given");
    }

    if (!det_ok) {
        v.notes.push_back("determinant " + std::to_string(K.determinant) +
                          " is not 9d with d coprime to 3");
    }
    if (!sigma_ok) {
        v.notes.push_back("signature " + std::to_string(K.signature) + " lies in {0, +4, -4}");
    }
    if (!qa_ok) v.notes.push_back("not asserted quasi-alternating");

    if (det_ok && sigma_ok && qa_ok) {
        v.pre_erratum = PreErratumVerdict::NoBanding;
        v.post_erratum = PostErratumVerdict::InconclusiveErratum;
        const auto& cover = *K.branched_cover_surgery;
        v.surviving_constraint = std::string(kConstraintText) + " with (p, q) = (" +
                                 std::to_string(cover.p) + ", " + std::to_string(cover.q) + ")";
        v.notes.push_back(
            "exclusion withdrawn: the normalization fix turns the congruence "
            "contradiction into a candidate constraint");
        const Rational d = signature_to_d(K.signature);
        if (mv_d_filter(d)) {
            v.notes.push_back("null-homologous branch not excluded: d = " + d.to_string() +
                              " lies in {0, +1, -1}");
        } else {
            v.notes.push_back("null-homologous branch still excluded: d = " + d.to_string() +
                              " lies outside {0, +1, -1}");
        }
    } else {
        v.pre_erratum = PreErratumVerdict::Inconclusive;
        v.post_erratum = PostErratumVerdict::InconclusiveHypotheses;
    }
    return v;
}

BandingVerdict torus_banding_verdict(long long k) {
    BandingVerdict v = corollary_verdict(torus_2k_invariants(k));
    if (k == 5) {
        v.notes.push_back("a chirally cosmetic banding of T(2,5) is known to exist");
    }
    if (k == 9) {
        v.notes.push_back(
            "T(2,9) was the target of the original exclusion, reopened by the correction");
    }
    return v;
}

std::vector<BandingRow> torus_banding_table(long long k_max) {
    if (k_max < 3) fail(ErrorKind::InvalidTorusParameter, "need k_max >= 3");
    std::vector<BandingRow> rows;
    for (long long k = 3; k <= k_max; k += 2) {
        rows.push_back(BandingRow{k, torus_2k_invariants(k), torus_banding_verdict(k)});
    }
    return rows;
}

}  // namespace surgery
