#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "surgery/banding.hpp"
#include "surgery/casson_walker.hpp"
#include "surgery/dedekind.hpp"
#include "surgery/json_io.hpp"
#include "surgery/obstruction.hpp"
#include "surgery/selftest.hpp"

namespace {

using surgery::Json;

int exit_code_for(surgery::ErrorKind kind) {
    switch (kind) {
        case surgery::ErrorKind::HypothesisViolated:
            return 3;
        case surgery::ErrorKind::ParseError:
            return 4;
        case surgery::ErrorKind::InternalInconsistency:
            return 1;
        default:
            return 2;  // domain errors: coprimality, admissibility, bad inputs
    }
}

surgery::IntRange parse_range(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) {
        surgery::fail(surgery::ErrorKind::ParseError,
                      "range must be 'lo:hi', got '" + text + "'");
    }
    try {
        std::size_t used = 0;
        const std::string lo_s = text.substr(0, colon), hi_s = text.substr(colon + 1);
        const long long lo = std::stoll(lo_s, &used);
        if (used != lo_s.size()) throw std::invalid_argument(lo_s);
        const long long hi = std::stoll(hi_s, &used);
        if (used != hi_s.size()) throw std::invalid_argument(hi_s);
        return surgery::IntRange{lo, hi};
    } catch (const std::exception&) {
        surgery::fail(surgery::ErrorKind::ParseError, "range must be 'lo:hi', got '" + text + "'");
    }
}

std::string residue_line(const surgery::CongruenceVerdict& v) {
    std::ostringstream os;
    os << to_string(v.classification) << " (lhs " << v.lhs_residue.value() << ", rhs "
       << v.rhs_residue.value() << ", " << (v.holds ? "holds" : "fails") << " mod 3)";
    return os.str();
}

std::string candidate_table(const std::vector<surgery::CandidateRow>& rows) {
    std::ostringstream os;
    os << std::setw(6) << "m" << std::setw(6) << "ell" << std::setw(6) << "eps" << std::setw(8)
       << "ell0" << "  verdict\n";
    for (const auto& r : rows) {
        os << std::setw(6) << r.m << std::setw(6) << r.ell << std::setw(6) << std::showpos
           << r.epsilon << std::noshowpos << std::setw(8) << r.ell0 << "  "
           << to_string(r.verdict) << '\n';
    }
    return os.str();
}

std::string verdict_text(const surgery::KnotDescriptor& knot,
                         const surgery::BandingVerdict& verdict) {
    std::ostringstream os;
    os << knot.name << ": det " << knot.determinant << ", signature " << knot.signature
       << ", a2 " << knot.a2 << (knot.quasi_alternating ? ", quasi-alternating" : "") << '\n';
    os << "  pre-erratum:  " << to_string(verdict.pre_erratum) << '\n';
    os << "  post-erratum: " << to_string(verdict.post_erratum) << '\n';
    if (verdict.surviving_constraint) {
        os << "  constraint:   " << *verdict.surviving_constraint << '\n';
    }
    for (const auto& note : verdict.notes) os << "  note: " << note << '\n';
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact Dedekind-sum / Casson-Walker machinery for distance-one surgery "
        "obstructions on lens spaces, with both the flawed and the corrected "
        "normalization of the congruence argument"};
    app.require_subcommand(1);

    bool json_out = false;
    int exit_code = 0;

    auto emit = [&json_out](const Json& payload, const std::string& human) {
        if (json_out) {
            std::cout << payload.dump() << '\n';
        } else {
            std::cout << human;
            if (!human.empty() && human.back() != '\n') std::cout << '\n';
        }
    };

    // dedekind q p
    auto* cmd_dedekind = app.add_subcommand("dedekind", "Dedekind sum s(q, p)");
    struct {
        long long q = 0, p = 0;
        std::string method = "fast";
    } ded;
    cmd_dedekind->add_option("q", ded.q, "value slot of s(q, p)")->required();
    cmd_dedekind->add_option("p", ded.p, "modulus, coprime to q")->required();
    cmd_dedekind->add_option("--method", ded.method, "evaluation method")
        ->check(CLI::IsMember({"fast", "direct", "both"}));
    cmd_dedekind->add_flag("--json", json_out, "machine-readable output");
    cmd_dedekind->callback([&] {
        const auto pair = surgery::make_dedekind_pair(ded.q, ded.p);
        Json payload;
        std::ostringstream human;
        if (ded.method == "both") {
            const auto fast = surgery::dedekind_sum_fast(pair);
            const auto direct = surgery::dedekind_sum_direct(pair);
            if (fast != direct) {
                surgery::fail(surgery::ErrorKind::InternalInconsistency,
                              "direct and fast evaluations disagree");
            }
            payload["s"] = fast.to_string();
            payload["fast"] = fast.to_string();
            payload["direct"] = direct.to_string();
            human << "s(" << ded.q << ", " << ded.p << ") = " << fast
                  << " (direct and fast agree)";
        } else {
            const auto s = ded.method == "fast" ? surgery::dedekind_sum_fast(pair)
                                                : surgery::dedekind_sum_direct(pair);
            payload["s"] = s.to_string();
            human << "s(" << ded.q << ", " << ded.p << ") = " << s;
        }
        emit(payload, human.str());
    });

    // lambda a2 p q
    auto* cmd_lambda = app.add_subcommand(
        "lambda", "Casson-Walker invariant of p/q-surgery on a knot with given a2");
    struct {
        long long a2 = 0, p = 0, q = 0;
        std::string norm = "walker";
    } lam;
    cmd_lambda->add_option("a2", lam.a2, "second Conway coefficient of the knot")->required();
    cmd_lambda->add_option("p", lam.p, "surgery numerator")->required();
    cmd_lambda->add_option("q", lam.q, "surgery denominator")->required();
    cmd_lambda->add_option("--normalization", lam.norm, "lambda(Poincare) = 1 or 2")
        ->check(CLI::IsMember({"walker", "paper"}));
    cmd_lambda->add_flag("--json", json_out, "machine-readable output");
    cmd_lambda->callback([&] {
        const auto n = lam.norm == "walker" ? surgery::Normalization::WalkerP1
                                            : surgery::Normalization::PaperP2;
        const auto v =
            surgery::lambda_knot_surgery(surgery::make_surgery_on_knot(lam.a2, lam.p, lam.q), n);
        const auto rev = surgery::lambda_orientation_reverse(v);
        Json payload;
        payload["normalization"] = std::string(to_string(n));
        payload["lambda"] = v.to_string();
        payload["lambda_reversed"] = rev.to_string();
        std::ostringstream human;
        human << "lambda = " << v << "   lambda of reversed orientation = " << rev << "   ["
              << to_string(n) << "]";
        emit(payload, human.str());
    });

    // erratum p q m ell
    auto* cmd_erratum = app.add_subcommand(
        "erratum",
        "Both congruence derivations, flawed and corrected, for one surgery scenario");
    struct {
        long long p = 0, q = 0, m = 0, ell = 0;
    } err;
    cmd_erratum->add_option("p", err.p, "lens space order, 9*p0 with p0 coprime to 3")
        ->required();
    cmd_erratum->add_option("q", err.q, "lens space twisting, coprime to p")->required();
    cmd_erratum->add_option("m", err.m, "integral framing of the surgery knot")->required();
    cmd_erratum->add_option("ell", err.ell, "linking number")->required();
    cmd_erratum->add_flag("--json", json_out, "machine-readable output");
    cmd_erratum->callback([&] {
        const auto sc = surgery::SurgeryScenario::make(err.p, err.q, err.m, err.ell);
        const auto erroneous =
            surgery::derive_congruence(sc, surgery::Normalization::WalkerP1);
        const auto corrected = surgery::derive_congruence(sc, surgery::Normalization::PaperP2);
        const long long six_ps = surgery::six_p_s(surgery::DedekindPair{sc.q, sc.p});
        const bool constraint = surgery::constraint_check(sc);

        auto congruence_json = [](const surgery::CongruenceVerdict& v) {
            return Json{{"normalization", std::string(to_string(v.normalization))},
                        {"lhs", v.lhs_residue.value()},
                        {"rhs", v.rhs_residue.value()},
                        {"holds", v.holds}};
        };
        Json payload;
        payload["p"] = sc.p;
        payload["q"] = sc.q;
        payload["m"] = sc.m;
        payload["ell"] = sc.ell;
        payload["epsilon"] = sc.epsilon;
        payload["ell0"] = sc.ell0;
        payload["six_ps"] = six_ps;
        payload["erroneous"] = std::string(to_string(erroneous.classification));
        payload["corrected"] = std::string(to_string(corrected.classification));
        payload["erroneous_congruence"] = congruence_json(erroneous);
        payload["corrected_congruence"] = congruence_json(corrected);
        payload["constraint"] = std::string(surgery::kConstraintText);
        payload["constraint_holds"] = constraint;

        std::ostringstream human;
        human << "scenario p = " << sc.p << ", q = " << sc.q << ", m = " << sc.m
              << ", ell = " << sc.ell << "  =>  eps = " << std::showpos << sc.epsilon
              << std::noshowpos << ", ell0 = " << sc.ell0 << ", 6ps(q,p) = " << six_ps << '\n';
        human << "  erroneous reading (lambda(P)=1 values in a lambda(P)=2 formula): "
              << residue_line(erroneous) << '\n';
        human << "  corrected reading: " << residue_line(corrected) << '\n';
        human << "  constraint " << surgery::kConstraintText << ": "
              << (constraint ? "satisfied" : "violated");
        emit(payload, human.str());
    });

    // enumerate p q --m-range a:b --ell-range a:b [--report-bound N]
    auto* cmd_enumerate = app.add_subcommand(
        "enumerate", "Admissible surgery scenarios in a parameter box, with verdicts");
    struct {
        long long p = 0, q = 0;
        std::string m_range, ell_range;
        long long report_bound = 0;
    } enu;
    cmd_enumerate->add_option("p", enu.p, "lens space order")->required();
    cmd_enumerate->add_option("q", enu.q, "lens space twisting")->required();
    auto* opt_m = cmd_enumerate->add_option("--m-range", enu.m_range, "framing range lo:hi");
    auto* opt_ell =
        cmd_enumerate->add_option("--ell-range", enu.ell_range, "linking-number range lo:hi");
    cmd_enumerate->add_option("--report-bound", enu.report_bound,
                              "emit the full status report for |m|, ell up to this bound");
    cmd_enumerate->add_flag("--json", json_out, "machine-readable output");
    cmd_enumerate->callback([&] {
        if (enu.report_bound > 0) {
            const auto report = surgery::theorem2_status(enu.p, enu.q, enu.report_bound);
            std::ostringstream human;
            human << "claim under test: " << report.original_claim << '\n';
            human << "correction: " << report.erratum_note << '\n';
            human << "erroneous reading contradicts all " << report.scenarios.size()
                  << " candidates: " << (report.erroneous_all_contradict ? "yes" : "NO") << '\n';
            human << "surviving constraint: " << report.constraint << '\n';
            human << candidate_table(report.scenarios);
            human << "allowed: " << report.allowed.size() << " of " << report.scenarios.size()
                  << " candidates";
            emit(surgery::to_json(report), human.str());
            return;
        }
        if (opt_m->count() == 0 || opt_ell->count() == 0) {
            surgery::fail(surgery::ErrorKind::ParseError,
                          "either --report-bound or both --m-range and --ell-range are required");
        }
        const auto rows = surgery::enumerate_candidates(enu.p, enu.q, parse_range(enu.m_range),
                                                        parse_range(enu.ell_range));
        std::ostringstream human;
        human << "p = " << enu.p << ", q = " << enu.q
              << ", corrected normalization, constraint " << surgery::kConstraintText << '\n';
        human << candidate_table(rows);
        human << rows.size() << " admissible scenario(s)";
        emit(surgery::candidates_report_json(enu.p, enu.q, rows), human.str());
    });

    // banding --torus k | --knot file | --table k_max
    auto* cmd_banding = app.add_subcommand(
        "banding", "Chirally-cosmetic-banding verdicts via the double branched cover");
    struct {
        long long torus_k = 0;
        std::string knot_file;
        long long table_kmax = 0;
        bool jsonl = false;
    } ban;
    auto* opt_torus =
        cmd_banding->add_option("--torus", ban.torus_k, "torus knot T(2,k), odd k >= 3");
    auto* opt_knot =
        cmd_banding->add_option("--knot", ban.knot_file, "knot descriptor JSON file");
    auto* opt_table =
        cmd_banding->add_option("--table", ban.table_kmax, "verdict table for odd k <= k_max");
    opt_torus->excludes(opt_knot)->excludes(opt_table);
    opt_knot->excludes(opt_table);
    cmd_banding->add_flag("--json", json_out, "machine-readable output");
    cmd_banding->add_flag("--jsonl", ban.jsonl, "table rows as JSON lines");
    cmd_banding->callback([&] {
        if (opt_table->count() > 0) {
            const auto rows = surgery::torus_banding_table(ban.table_kmax);
            if (ban.jsonl) {
                for (const auto& row : rows) std::cout << surgery::banding_row_json(row).dump()
                                                       << '\n';
                return;
            }
            Json payload;
            payload["k_max"] = ban.table_kmax;
            payload["rows"] = Json::array();
            for (const auto& row : rows) payload["rows"].push_back(surgery::banding_row_json(row));
            std::ostringstream human;
            human << std::setw(5) << "k" << std::setw(6) << "det" << std::setw(7) << "sigma"
                  << std::setw(8) << "a2" << "  " << std::setw(14) << std::left << "pre-erratum"
                  << "post-erratum" << std::right << '\n';
            for (const auto& row : rows) {
                human << std::setw(5) << row.k << std::setw(6) << row.knot.determinant
                      << std::setw(7) << row.knot.signature << std::setw(8) << row.knot.a2
                      << "  " << std::setw(14) << std::left
                      << to_string(row.verdict.pre_erratum)
                      << to_string(row.verdict.post_erratum) << std::right << '\n';
            }
            emit(payload, human.str());
            return;
        }
        surgery::KnotDescriptor knot;
        std::optional<surgery::BandingVerdict> verdict;
        if (opt_torus->count() > 0) {
            knot = surgery::torus_2k_invariants(ban.torus_k);
            verdict = surgery::torus_banding_verdict(ban.torus_k);
        } else if (opt_knot->count() > 0) {
            std::ifstream in(ban.knot_file);
            if (!in) {
                surgery::fail(surgery::ErrorKind::ParseError,
                              "cannot open '" + ban.knot_file + "'");
            }
            Json j;
            try {
                in >> j;
            } catch (const nlohmann::json::exception& e) {
                surgery::fail(surgery::ErrorKind::ParseError,
                              std::string("malformed JSON: ") + e.what());
            }
            knot = surgery::knot_descriptor_from_json(j);
        } else {
            surgery::fail(surgery::ErrorKind::ParseError,
                          "one of --torus, --knot, --table is required");
        }
        if (!verdict) verdict = surgery::corollary_verdict(knot);
        Json payload;
        payload["knot"] = surgery::to_json(knot);
        const Json v = surgery::to_json(*verdict);
        payload["pre_erratum"] = v.at("pre_erratum");
        payload["post_erratum"] = v.at("post_erratum");
        payload["constraint"] = v.at("constraint");
        payload["notes"] = v.at("notes");
        emit(payload, verdict_text(knot, *verdict));
    });

    // selftest --level quick|full
    auto* cmd_selftest =
        app.add_subcommand("selftest", "Run the cross-module property sweeps");
    std::string level = "quick";
    cmd_selftest->add_option("--level", level, "sweep size")
        ->check(CLI::IsMember({"quick", "full"}));
    cmd_selftest->add_flag("--json", json_out, "machine-readable output");
    cmd_selftest->callback([&] {
        const auto lv = level == "full" ? surgery::SelftestLevel::Full
                                        : surgery::SelftestLevel::Quick;
        // Progress goes to stderr in JSON mode so stdout stays one document.
        const auto report = surgery::run_selftest(lv, json_out ? &std::cerr : &std::cout);
        Json payload = surgery::selftest_report_json(report, lv);
        std::ostringstream human;
        human << "passed " << report.passed() << ", failed " << report.failed();
        if (json_out) {
            std::cout << payload.dump() << '\n';
        } else {
            std::cout << human.str() << '\n';
        }
        if (report.failed() > 0) exit_code = 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);  // prints help or the parse diagnostic
        return code == 0 ? 0 : 4;
    } catch (const surgery::Error& e) {
        if (json_out) {
            Json doc;
            doc["status"] = "error";
            doc["error_kind"] = std::string(to_string(e.kind()));
            doc["message"] = e.what();
            std::cout << doc.dump() << '\n';
        }
        std::cerr << "error: " << e.what() << '\n';
        return exit_code_for(e.kind());
    }
    return exit_code;
}
