#include "surgery/json_io.hpp"

#include <numeric>
#include <string>

namespace surgery {

namespace {

Json row_json(const CandidateRow& row) {
    Json j;
    j["m"] = row.m;
    j["ell"] = row.ell;
    j["epsilon"] = row.epsilon;
    j["ell0"] = row.ell0;
    j["verdict"] = std::string(to_string(row.verdict));
    return j;
}

}  // namespace

Json candidates_report_json(long long p, long long q, const std::vector<CandidateRow>& rows) {
    Json j;
    j["p"] = p;
    j["q"] = q;
    j["normalization"] = std::string(to_string(Normalization::PaperP2));
    j["scenarios"] = Json::array();
    for (const auto& row : rows) j["scenarios"].push_back(row_json(row));
    j["constraint"] = std::string(kConstraintText);
    return j;
}

Json to_json(const Theorem2Report& report) {
    Json j;
    j["p"] = report.p;
    j["q"] = report.q;
    j["normalization"] = std::string(to_string(Normalization::PaperP2));
    j["search_bound"] = report.search_bound;
    j["original_claim"] = report.original_claim;
    j["erratum_note"] = report.erratum_note;
    j["erroneous_all_contradict"] = report.erroneous_all_contradict;
    j["scenarios"] = Json::array();
    for (const auto& row : report.scenarios) j["scenarios"].push_back(row_json(row));
    j["allowed"] = Json::array();
    for (const auto& row : report.allowed) j["allowed"].push_back(row_json(row));
    j["constraint"] = report.constraint;
    return j;
}

Json to_json(const BandingVerdict& verdict) {
    Json j;
    j["pre_erratum"] = std::string(to_string(verdict.pre_erratum));
    j["post_erratum"] = std::string(to_string(verdict.post_erratum));
    if (verdict.surviving_constraint) {
        j["constraint"] = *verdict.surviving_constraint;
    } else {
        j["constraint"] = nullptr;
    }
    j["notes"] = verdict.notes;
    return j;
}

Json to_json(const KnotDescriptor& knot) {
    Json j;
    j["name"] = knot.name;
    j["determinant"] = knot.determinant;
    j["signature"] = knot.signature;
    j["a2"] = knot.a2;
    j["quasi_alternating"] = knot.quasi_alternating;
    if (knot.branched_cover_surgery) {
        const auto& c = *knot.branched_cover_surgery;
        j["branched_cover_surgery"] = Json{
            {"p", c.p}, {"q", c.q}, {"a2_of_core_knot", c.a2_of_core_knot}};
    } else {
        j["branched_cover_surgery"] = nullptr;
    }
    return j;
}

Json banding_row_json(const BandingRow& row) {
    Json j;
    j["k"] = row.k;
    j["knot"] = to_json(row.knot);
    const Json v = to_json(row.verdict);
    j["pre_erratum"] = v.at("pre_erratum");
    j["post_erratum"] = v.at("post_erratum");
    j["constraint"] = v.at("constraint");
    j["notes"] = v.at("notes");
    return j;
}

Json selftest_report_json(const SelftestReport& report, SelftestLevel level) {
    Json j;
    j["level"] = level == SelftestLevel::Full ? "full" : "quick";
    j["passed"] = report.passed();
    j["failed"] = report.failed();
    j["results"] = Json::array();
    for (const auto& r : report.results) {
        j["results"].push_back(Json{{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    }
    return j;
}

KnotDescriptor knot_descriptor_from_json(const Json& j) {
    KnotDescriptor k;
    try {
        k.name = j.at("name").get<std::string>();
        k.determinant = j.at("determinant").get<long long>();
        k.signature = j.at("signature").get<long long>();
        k.a2 = j.at("a2").get<long long>();
        k.quasi_alternating = j.at("quasi_alternating").get<bool>();
        if (j.contains("branched_cover_surgery") && !j.at("branched_cover_surgery").is_null()) {
            const Json& c = j.at("branched_cover_surgery");
            k.branched_cover_surgery = CoverSurgery{c.at("p").get<long long>(),
                                                    c.at("q").get<long long>(),
                                                    c.at("a2_of_core_knot").get<long long>()};
        }
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorKind::ParseError, std::string("bad knot descriptor: ") + e.what());
    }
    if (k.determinant < 1 || k.determinant % 2 == 0) {
        fail(ErrorKind::ParseError,
             "knot determinant must be odd and positive, got " + std::to_string(k.determinant));
    }
    if (k.branched_cover_surgery) {
        const auto& c = *k.branched_cover_surgery;
        if (c.p < 1 || c.q < 1 || std::gcd(c.p, c.q) != 1) {
            fail(ErrorKind::ParseError, "branched cover surgery needs coprime p, q > 0");
        }
    }
    return k;
}

}  // namespace surgery
