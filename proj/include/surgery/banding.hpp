#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "surgery/rational.hpp"

namespace surgery {

// Dehn surgery description of a double branched cover: p/q-surgery on a
// knot whose second Conway coefficient is a2_of_core_knot.
struct CoverSurgery {
    long long p;
    long long q;
    long long a2_of_core_knot;
};

// Knot data consumed by the banding corollary.  Quasi-alternation is
// caller-asserted; deciding it is out of scope.  determinant is odd for
// knots and the cover surgery, when present, has gcd(p, q) = 1.
struct KnotDescriptor {
    std::string name;
    long long determinant = 0;
    long long signature = 0;
    long long a2 = 0;
    bool quasi_alternating = false;
    std::optional<CoverSurgery> branched_cover_surgery;
};

enum class PreErratumVerdict { NoBanding, Inconclusive };
enum class PostErratumVerdict { InconclusiveErratum, InconclusiveHypotheses };

constexpr std::string_view to_string(PreErratumVerdict v) {
    return v == PreErratumVerdict::NoBanding ? "NO_BANDING" : "INCONCLUSIVE";
}

constexpr std::string_view to_string(PostErratumVerdict v) {
    return v == PostErratumVerdict::InconclusiveErratum ? "INCONCLUSIVE_ERRATUM"
                                                        : "INCONCLUSIVE_HYPOTHESES";
}

// Verdict pair for a chirally cosmetic banding of one knot.  post_erratum
// can never claim NO_BANDING: the congruence argument backing the original
// exclusion collapsed, so at best the surviving constraint is reported.
struct BandingVerdict {
    PreErratumVerdict pre_erratum = PreErratumVerdict::Inconclusive;
    PostErratumVerdict post_erratum = PostErratumVerdict::InconclusiveHypotheses;
    std::optional<std::string> surviving_constraint;
    std::vector<std::string> notes;
};

// Standard invariants of the right-handed torus knot T(2,k), k odd >= 3:
// determinant k, signature -(k-1), a2 = (k^2-1)/8, double branched cover
// L(k,1) = k-surgery on the unknot.
KnotDescriptor torus_2k_invariants(long long k);

// Whether a d-invariant value survives the {0, +1, -1} window that a
// distance-one surgery between Y and -Y forces on the correction term.
bool mv_d_filter(const Rational& d);

// d-invariant from the knot signature, d = convention_scale * sigma.  The
// default 1/4 makes the corollary's exclusion "sigma != 0, +-4" coincide
// with d outside {0, +-1}; the relation is sometimes printed as d = 4 sigma,
// kept selectable here so both conventions can be inspected.
Rational signature_to_d(long long sigma, const Rational& convention_scale = Rational(1, 4));

// The chirally-cosmetic-banding corollary for one knot: pre-erratum
// NO_BANDING iff det = 9d with 3 coprime to d, sigma outside {0, +-4},
// quasi-alternating, and the double branched cover is a surgery on a knot.
// MissingCoverData if everything else holds but no cover surgery is given.
BandingVerdict corollary_verdict(const KnotDescriptor& K);

// corollary_verdict for T(2,k) with the k-specific annotations: the known
// banding at k = 5 and the withdrawn exclusion at k = 9.
BandingVerdict torus_banding_verdict(long long k);

struct BandingRow {
    long long k;
    KnotDescriptor knot;
    BandingVerdict verdict;
};

// torus_banding_verdict across odd k in [3, k_max].
std::vector<BandingRow> torus_banding_table(long long k_max);

}  // namespace surgery
