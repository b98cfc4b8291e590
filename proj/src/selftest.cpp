#include "surgery/selftest.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include "surgery/banding.hpp"
#include "surgery/casson_walker.hpp"
#include "surgery/dedekind.hpp"
#include "surgery/obstruction.hpp"
#include "surgery/parallel.hpp"

namespace surgery {

int SelftestReport::passed() const {
    return static_cast<int>(
        std::count_if(results.begin(), results.end(), [](const auto& r) { return r.passed; }));
}

int SelftestReport::failed() const {
    return static_cast<int>(results.size()) - passed();
}

namespace props {

namespace {

PropertyResult pass(std::string name, std::string detail) {
    return PropertyResult{std::move(name), true, std::move(detail)};
}

PropertyResult failure(std::string name, std::string detail) {
    return PropertyResult{std::move(name), false, std::move(detail)};
}

// First counterexample across a parallel sweep, kept deterministic by
// minimizing over the sweep index.  Failures are the cold path, so a plain
// mutex is fine.
struct FirstFailure {
    std::atomic<bool> any{false};
    std::mutex mu;
    long long index = -1;
    std::string detail;

    void record(long long i, const std::string& d) {
        any.store(true, std::memory_order_relaxed);
        std::lock_guard<std::mutex> lock(mu);
        if (index == -1 || i < index) {
            index = i;
            detail = d;
        }
    }

    bool failed() const { return any.load(); }
};

}  // namespace

PropertyResult dedekind_oracle_equivalence(long long p_max) {
    const std::string name = "dedekind_oracle_equivalence(p<=" + std::to_string(p_max) + ")";
    std::atomic<long long> pairs{0};
    FirstFailure bad;
    parallel_for(1, p_max + 1, [&](long long p) {
        long long local = 0;
        for (long long q = 1; q <= p; ++q) {
            if (std::gcd(q, p) != 1) continue;
            ++local;
            const DedekindPair pair{q, p};
            if (dedekind_sum_direct(pair) != dedekind_sum_fast(pair)) {
                bad.record(p, "s(" + std::to_string(q) + "," + std::to_string(p) +
                                 "): direct != fast");
            }
        }
        pairs += local;
    });
    if (bad.failed()) return failure(name, bad.detail);
    return pass(name, std::to_string(pairs.load()) + " coprime pairs agree exactly");
}

PropertyResult dedekind_reciprocity(long long bound) {
    const std::string name = "dedekind_reciprocity(p,q<=" + std::to_string(bound) + ")";
    std::atomic<long long> pairs{0};
    FirstFailure bad;
    parallel_for(1, bound + 1, [&](long long p) {
        long long local = 0;
        for (long long q = 1; q <= bound; ++q) {
            if (std::gcd(p, q) != 1) continue;
            ++local;
            if (!reciprocity_residual(p, q).is_zero()) {
                bad.record(p, "residual(" + std::to_string(p) + "," + std::to_string(q) +
                                 ") != 0");
            }
        }
        pairs += local;
    });
    if (bad.failed()) return failure(name, bad.detail);
    return pass(name, std::to_string(pairs.load()) + " pairs satisfy reciprocity exactly");
}

PropertyResult six_ps_integrality(long long p_max) {
    const std::string name = "six_ps_integrality(p<=" + std::to_string(p_max) + ")";
    std::atomic<long long> pairs{0};
    FirstFailure bad;
    parallel_for(1, p_max + 1, [&](long long p) {
        long long local = 0;
        for (long long q = 1; q <= p; ++q) {
            if (std::gcd(q, p) != 1) continue;
            ++local;
            const Rational v = Rational(6) * Rational(p) * dedekind_sum(q, p);
            if (!v.is_integer()) {
                bad.record(p, "6*" + std::to_string(p) + "*s(" + std::to_string(q) + "," +
                                 std::to_string(p) + ") = " + v.to_string());
            }
        }
        pairs += local;
    });
    if (bad.failed()) return failure(name, bad.detail);
    return pass(name, "6 p s(q,p) integral on " + std::to_string(pairs.load()) + " pairs");
}

PropertyResult six_ps_congruence_fact(long long p_max) {
    const std::string name = "six_ps_congruence_fact(p=9*p0<=" + std::to_string(p_max) + ")";
    std::atomic<long long> pairs{0};
    FirstFailure bad;
    parallel_for(1, p_max / 9 + 1, [&](long long p0) {
        if (p0 % 3 == 0) return;
        const long long p = 9 * p0;
        if (p > p_max) return;
        long long local = 0;
        for (long long q = 1; q < p; ++q) {
            if (std::gcd(q, p) != 1) continue;
            ++local;
            if (!six_ps_mod3_fact(p, q)) {
                bad.record(p, "6ps(q,p) != q mod 3 at (q,p) = (" + std::to_string(q) + "," +
                                 std::to_string(p) + ")");
            }
        }
        pairs += local;
    });
    if (bad.failed()) return failure(name, bad.detail);
    return pass(name, "congruence holds on " + std::to_string(pairs.load()) + " pairs");
}

ErratumSweepOutcome erratum_sweep(const std::vector<long long>& ps, long long bound) {
    std::ostringstream scope;
    scope << "p in {";
    for (std::size_t i = 0; i < ps.size(); ++i) scope << (i ? "," : "") << ps[i];
    scope << "}, |m|,ell <= " << bound;
    const std::string repro_name = "erratum_reproduction(" + scope.str() + ")";
    const std::string sigma_name = "sigma_epsilon_law(" + scope.str() + ")";

    std::vector<std::pair<long long, long long>> pq;
    for (long long p : ps) {
        for (long long q = 1; q < p; ++q) {
            if (std::gcd(p, q) == 1) pq.emplace_back(p, q);
        }
    }

    std::atomic<long long> admissible{0};
    std::vector<CandidateRow> p9q1_rows;
    std::mutex p9q1_mu;
    FirstFailure repro_bad;
    FirstFailure sigma_bad;

    parallel_for(0, static_cast<long long>(pq.size()), [&](long long idx) {
        const auto [p, q] = pq[static_cast<std::size_t>(idx)];
        for (long long m = -bound; m <= bound; ++m) {
            for (long long ell = 1; ell <= bound; ++ell) {
                const Integer P = make_integer(p), L = make_integer(ell);
                const Integer t = make_integer(m) * P - make_integer(q) * L * L;
                if (t != P && t != -P) continue;
                const auto sc = try_make_scenario(p, q, m, ell);
                if (!sc) continue;
                ++admissible;
                const std::string where = "(p,q,m,ell) = (" + std::to_string(p) + "," +
                                          std::to_string(q) + "," + std::to_string(m) + "," +
                                          std::to_string(ell) + ")";

                const auto erroneous = derive_congruence(*sc, Normalization::WalkerP1);
                if (erroneous.classification != Classification::Contradiction ||
                    erroneous.holds) {
                    repro_bad.record(idx, "erroneous reading did not contradict at " + where);
                }
                const auto corrected = derive_congruence(*sc, Normalization::PaperP2);
                if (corrected.holds != constraint_check(*sc)) {
                    repro_bad.record(idx,
                                     "corrected verdict disagrees with eps*q = ell0 mod 3 at " +
                                         where);
                }
                const auto expected = corrected.holds ? Classification::Allowed
                                                      : Classification::RuledOut;
                if (corrected.classification != expected) {
                    repro_bad.record(idx, "corrected classification inconsistent at " + where);
                }

                if (linking_matrix_signature(m, ell, p, q) != 1 + sc->epsilon) {
                    sigma_bad.record(idx, "signature != 1 + epsilon at " + where);
                }

                if (p == 9 && q == 1) {
                    std::lock_guard<std::mutex> lock(p9q1_mu);
                    p9q1_rows.push_back(CandidateRow{m, ell, sc->epsilon, sc->ell0,
                                                     corrected.classification});
                }
            }
        }
    });

    ErratumSweepOutcome out;
    if (repro_bad.failed()) {
        out.reproduction = failure(repro_name, repro_bad.detail);
    } else {
        // The sweep must actually exhibit survivors for (9, 1), including the
        // canonical (m, ell) = (2, 3) one; a silent empty sweep proves nothing.
        bool survivor_ok = true;
        std::string survivor_note;
        const bool covers_9_1 =
            std::find(ps.begin(), ps.end(), 9LL) != ps.end() && bound >= 3;
        if (covers_9_1) {
            const bool has_2_3 =
                std::any_of(p9q1_rows.begin(), p9q1_rows.end(), [](const CandidateRow& r) {
                    return r.m == 2 && r.ell == 3 && r.epsilon == 1 &&
                           r.verdict == Classification::Allowed;
                });
            const long long allowed_9_1 = std::count_if(
                p9q1_rows.begin(), p9q1_rows.end(),
                [](const CandidateRow& r) { return r.verdict == Classification::Allowed; });
            if (!has_2_3 || allowed_9_1 == 0) {
                survivor_ok = false;
                survivor_note = "ALLOWED set for (p,q) = (9,1) missing (m,ell) = (2,3)";
            } else {
                survivor_note = std::to_string(allowed_9_1) + " ALLOWED for (9,1)";
            }
        }
        if (admissible.load() == 0) {
            survivor_ok = false;
            survivor_note = "sweep found no admissible scenarios at all";
        }
        if (survivor_ok) {
            out.reproduction = pass(repro_name, std::to_string(admissible.load()) +
                                                    " admissible scenarios; " + survivor_note);
        } else {
            out.reproduction = failure(repro_name, survivor_note);
        }
    }
    if (sigma_bad.failed()) {
        out.sigma_epsilon = failure(sigma_name, sigma_bad.detail);
    } else {
        out.sigma_epsilon = pass(sigma_name, "sigma = 1 + eps on " +
                                                 std::to_string(admissible.load()) +
                                                 " admissible scenarios");
    }
    return out;
}

PropertyResult unknown_independence_plugback(int n_scenarios, unsigned seed) {
    const std::string name =
        "unknown_independence_plugback(n=" + std::to_string(n_scenarios) + ")";
    std::mt19937_64 rng(seed);
    const long long p0_choices[] = {1, 2, 4, 5, 7, 8, 10, 11, 13, 14};
    std::uniform_int_distribution<long long> pick_p0(0, 9);
    std::uniform_int_distribution<long long> pick_t(1, 6);
    std::uniform_int_distribution<long long> pick_q(1, 40);
    std::uniform_int_distribution<int> pick_eps(0, 1);
    const std::pair<long long, long long> assignments[] = {{0, 0}, {1, 0}, {0, 1}, {5, -7}};

    long long checked = 0;
    for (int i = 0; i < n_scenarios; ++i) {
        const long long p0 = p0_choices[pick_p0(rng)];
        const long long p = 9 * p0;
        long long t = pick_t(rng);
        if (t % 3 == 0) t += 1;
        const long long ell = 3 * p0 * t;  // ell^2 = p * (p0 t^2), 3 coprime to p0 t^2
        long long q = pick_q(rng);
        while (std::gcd(q, p) != 1) ++q;
        const int eps = pick_eps(rng) == 0 ? -1 : 1;
        const long long ell0 = p0 * t * t;
        const long long m = eps + q * ell0;  // homology condition rearranged

        const auto sc = SurgeryScenario::make(p, q, m, ell);
        if (sc.epsilon != eps || sc.ell0 != ell0) {
            return failure(name, "generator and derivation disagree at scenario " +
                                     std::to_string(i));
        }
        for (Normalization n : {Normalization::WalkerP1, Normalization::PaperP2}) {
            std::optional<Mod3Residue> d_residue;
            for (const auto& [a2x, a2y] : assignments) {
                const Rational v = solve_four_v3(m, ell, p, q, a2x, a2y, n, a2y);
                const Rational big_d = Rational(12) * Rational(q) * v;
                if (!big_d.is_integer()) {
                    return failure(name, "12q * 4v3 not integral at scenario " +
                                             std::to_string(i));
                }
                const Mod3Residue r = mod3_residue(big_d);
                if (d_residue && *d_residue != r) {
                    return failure(name, "mod-3 residue depends on (a2x, a2y) at scenario " +
                                             std::to_string(i));
                }
                d_residue = r;

                const Rational lambda_SL = lambda_orientation_reverse(
                    lambda_knot_surgery(make_surgery_on_knot(a2y, p, q), n));
                const FramedLink2 L = make_framed_link2(m, ell, p, q, a2x, a2y, 0);
                if (!link_identity_residual(L, lambda_SL, v).is_zero()) {
                    return failure(name, "plugged-back residual nonzero at scenario " +
                                             std::to_string(i));
                }
                ++checked;
            }
        }
    }
    return pass(name, std::to_string(checked) + " (scenario, normalization, assignment) checks");
}

PropertyResult normalization_scaling(int n_samples, unsigned seed) {
    const std::string name = "normalization_scaling(n=" + std::to_string(n_samples) + ")";
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long long> pick_a2(-30, 30);
    std::uniform_int_distribution<long long> pick_pq(1, 80);
    for (int i = 0; i < n_samples; ++i) {
        long long p = pick_pq(rng), q = pick_pq(rng);
        while (std::gcd(p, q) != 1) {
            p = pick_pq(rng);
            q = pick_pq(rng);
        }
        const auto s = make_surgery_on_knot(pick_a2(rng), p, q);
        if (lambda_knot_surgery(s, Normalization::PaperP2) !=
            Rational(2) * lambda_knot_surgery(s, Normalization::WalkerP1)) {
            return failure(name, "scaling broken at a2 = " + std::to_string(s.a2) + ", p/q = " +
                                     std::to_string(p) + "/" + std::to_string(q));
        }
    }
    return pass(name, std::to_string(n_samples) + " random surgeries scale by exactly 2");
}

PropertyResult orientation_antisymmetry(long long p_max) {
    const std::string name = "orientation_antisymmetry(p<=" + std::to_string(p_max) + ")";
    long long pairs = 0;
    for (long long p = 2; p <= p_max; ++p) {
        for (long long q = 1; q < p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            ++pairs;
            for (Normalization n : {Normalization::WalkerP1, Normalization::PaperP2}) {
                const Rational a = lambda_knot_surgery(make_surgery_on_knot(0, p, q), n);
                const Rational b = lambda_knot_surgery(make_surgery_on_knot(0, p, p - q), n);
                if (a != -b) {
                    return failure(name, "lambda(L(" + std::to_string(p) + "," +
                                             std::to_string(q) + ")) != -lambda(L(" +
                                             std::to_string(p) + "," + std::to_string(p - q) +
                                             "))");
                }
            }
        }
    }
    return pass(name, std::to_string(pairs) + " lens-space pairs antisymmetric");
}

PropertyResult banding_table_expectations(long long k_max) {
    const std::string name = "banding_table(k<=" + std::to_string(k_max) + ")";
    const auto rows = torus_banding_table(k_max);

    std::set<long long> no_banding;
    for (const auto& row : rows) {
        if (std::string(to_string(row.verdict.post_erratum)).rfind("INCONCLUSIVE", 0) != 0) {
            return failure(name, "post-erratum verdict not inconclusive at k = " +
                                     std::to_string(row.k));
        }
        if (row.verdict.pre_erratum == PreErratumVerdict::NoBanding) no_banding.insert(row.k);
        if (row.k == 5) {
            if (row.verdict.pre_erratum != PreErratumVerdict::Inconclusive) {
                return failure(name, "k = 5 must be INCONCLUSIVE");
            }
            const bool has_known_note = std::any_of(
                row.verdict.notes.begin(), row.verdict.notes.end(),
                [](const std::string& s) { return s.find("known") != std::string::npos; });
            if (!has_known_note) return failure(name, "k = 5 row lacks the known-banding note");
        }
    }

    // Up to 45 the excluded set is known outright: k = 9 and k = 45 are the
    // only odd k with k = 9d, 3 coprime to d, and sigma = -(k-1) outside
    // {0, +-4}.  Compare against that literal list, not the implementation's
    // own predicate.
    std::set<long long> expected;
    for (long long k : {9LL, 45LL}) {
        if (k <= k_max) expected.insert(k);
    }
    std::set<long long> got_small;
    for (long long k : no_banding) {
        if (k <= 45) got_small.insert(k);
    }
    if (got_small != expected) {
        std::ostringstream got;
        for (long long k : no_banding) got << k << " ";
        return failure(name, "NO_BANDING set mismatch; got { " + got.str() + "}");
    }
    std::ostringstream got;
    for (long long k : no_banding) got << k << " ";
    return pass(name, "NO_BANDING exactly at { " + got.str() + "}");
}

PropertyResult conway_skein_oracle(long long k_max) {
    const std::string name = "conway_skein_oracle(k<=" + std::to_string(k_max) + ")";
    // nabla of the closed 2-braid with k positive crossings:
    // nabla_0 = 0 (unlink), nabla_1 = 1 (unknot),
    // nabla_k = z nabla_{k-1} + nabla_{k-2}.
    std::vector<long long> prev;      // z-coefficients, index = degree
    std::vector<long long> cur{1};
    long long checked = 0;
    for (long long k = 2; k <= k_max; ++k) {
        std::vector<long long> next(std::max(cur.size() + 1, prev.size()), 0);
        for (std::size_t j = 0; j < cur.size(); ++j) next[j + 1] += cur[j];
        for (std::size_t j = 0; j < prev.size(); ++j) next[j] += prev[j];
        prev = std::move(cur);
        cur = std::move(next);
        if (k % 2 == 0 || k < 3) continue;
        const long long a2 = cur.size() > 2 ? cur[2] : 0;
        const auto inv = torus_2k_invariants(k);
        if (a2 != inv.a2) {
            return failure(name, "a2 mismatch at k = " + std::to_string(k) + ": skein " +
                                     std::to_string(a2) + " vs closed form " +
                                     std::to_string(inv.a2));
        }
        ++checked;
    }
    return pass(name, std::to_string(checked) + " torus knots match the skein recursion");
}

}  // namespace props

SelftestReport run_selftest(SelftestLevel level, std::ostream* progress) {
    const bool full = level == SelftestLevel::Full;
    SelftestReport report;
    auto add = [&](PropertyResult r) {
        if (progress) {
            *progress << (r.passed ? "[ ok ] " : "[fail] ") << r.name << ": " << r.detail
                      << '\n';
        }
        report.results.push_back(std::move(r));
    };

    add(props::dedekind_oracle_equivalence(full ? 1000 : 80));
    add(props::dedekind_reciprocity(full ? 500 : 60));
    add(props::six_ps_integrality(full ? 1000 : 100));
    add(props::six_ps_congruence_fact(full ? 900 : 180));
    const std::vector<long long> ps =
        full ? std::vector<long long>{9, 18, 36, 45, 63, 90} : std::vector<long long>{9, 18};
    auto sweep = props::erratum_sweep(ps, full ? 50 : 20);
    add(std::move(sweep.reproduction));
    add(std::move(sweep.sigma_epsilon));
    add(props::unknown_independence_plugback(full ? 100 : 25, 20240917));
    add(props::normalization_scaling(full ? 200 : 60, 424243));
    add(props::orientation_antisymmetry(full ? 50 : 30));
    add(props::banding_table_expectations(45));
    add(props::conway_skein_oracle(15));
    return report;
}

}  // namespace surgery
