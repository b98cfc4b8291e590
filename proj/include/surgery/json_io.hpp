#pragma once

#include <json.hpp>

#include "surgery/banding.hpp"
#include "surgery/obstruction.hpp"
#include "surgery/selftest.hpp"

namespace surgery {

// Insertion-ordered JSON so emitted documents are byte-stable and read in
// the order the schemas are written.
using Json = nlohmann::ordered_json;

// {"p":…, "q":…, "normalization":"paper_p2", "scenarios":[{"m","ell",
// "epsilon","ell0","verdict"}…], "constraint":"eps*q ≡ ell0 (mod 3)"}
Json candidates_report_json(long long p, long long q,
                            const std::vector<CandidateRow>& rows);

Json to_json(const Theorem2Report& report);

Json to_json(const BandingVerdict& verdict);
Json to_json(const KnotDescriptor& knot);
Json banding_row_json(const BandingRow& row);

Json selftest_report_json(const SelftestReport& report, SelftestLevel level);

// Strict parse of the KnotDescriptor file format (field names mirror the
// struct).  Any structural or domain problem is a ParseError.
KnotDescriptor knot_descriptor_from_json(const Json& j);

}  // namespace surgery
