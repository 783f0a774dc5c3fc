#pragma once

#include "latpic/criterion.hpp"
#include "latpic/fwps.hpp"

#include "json.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace latpic::io {

// Insertion-ordered JSON keeps machine output byte-deterministic.
using Json = nlohmann::ordered_json;

// Input problem with a 1-based position inside the offending text.
struct ParseError : std::runtime_error {
    ParseError(std::string message, int line_, int column_);
    int line = 0;
    int column = 0;
};

// --- simplex records -------------------------------------------------------
// Text format: {"vertices": [[x,y,z] * 4]}, integers only. A file may hold a
// single record, a JSON array of records, or one record per line.

Json to_json(const Simplex3& s);
Simplex3 simplex_from_json(const Json& j);

struct SimplexInput {
    std::string id;
    Simplex3 simplex;
};
std::vector<SimplexInput> parse_simplex_file(const std::string& text, const std::string& name);

// --- module record serialization -------------------------------------------

Json to_json(const WeightSystem& w, const std::optional<Int>& degree = std::nullopt);
Json to_json(const EdgeSubdivision& sub);
Json to_json(const DimCertificate& c);
Json to_json(const Decision& d);

// --- catalog records --------------------------------------------------------

struct CatalogRecord {
    std::string id;
    Simplex3 simplex;
    WeightSystem weights;
    std::optional<Int> degree; // meaningful for weight-system candidates
    Decision decision;
    bool reverified = false; // independent recount agreed (positive verdicts)
    long long timing_ms = 0;
};

extern const char* const kCsvHeader;

Json to_json(const CatalogRecord& rec, bool include_timing = true);
std::string to_csv_row(const CatalogRecord& rec);

// Reads one catalog line; throws ParseError (line numbers are the caller's
// concern and left at 0) when the record is malformed.
struct ReportEntry {
    std::string id;
    Verdict verdict = Verdict::HypothesisFailed;
    std::optional<Int> margin;
    Int multiplicity = 1;
    bool reverified = false;
};
ReportEntry report_entry_from_json(const Json& j);

// Removes the informational timing fields from newline-delimited records so
// byte comparisons see only the deterministic payload.
std::string strip_timing_fields(const std::string& ndjson);

} // namespace latpic::io
