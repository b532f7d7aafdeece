#pragma once

// JSON encodings shared by the C API and the reproduction targets.
// Elements of single-factor groups are written as plain integers, others as
// coordinate arrays; the parsers accept both forms.

#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "diffset/adsearch.hpp"
#include "diffset/cyclotomy.hpp"
#include "diffset/diffcore.hpp"
#include "diffset/extend.hpp"
#include "diffset/families.hpp"
#include "diffset/mgr.hpp"
#include "diffset/search.hpp"

namespace diffset::io {

using Json = nlohmann::ordered_json;

Json group_to_json(const GroupSpec& group);
/// Accepts [n1, n2, ...]; throws std::invalid_argument on malformed input.
GroupSpec group_from_json(const Json& j);

Json element_to_json(const GroupSpec& group, std::uint32_t index);
std::uint32_t element_from_json(const GroupSpec& group, const Json& j);
Json set_to_json(const GroupSpec& group, std::span<const std::uint32_t> set);
/// Sorted indices; rejects duplicates and unreduced coordinates.
IndexSet set_from_json(const GroupSpec& group, const Json& j);

/// {"group": [...], "set": [...], "label"?: "..."}
SetRecord record_from_json(const Json& j);
Json record_to_json(const SetRecord& record);
/// A JSON array of records, or an object with a "records" array.
std::vector<SetRecord> database_from_json(const Json& j);

Json params_to_json(const AdsParams& p);
Json classification_to_json(const Classification& c);
Classification classification_from_json(const Json& j);

Json extension_report_to_json(const ExtensionReport& r);
Json scan_result_to_json(const ScanResult& r, std::span<const SetRecord> records);
Json complement_to_json(const GroupSpec& group, const ComplementResult& r);

Json search_report_to_json(const SearchReport& r);
SearchReport search_report_from_json(const Json& j);
Json spectrum_to_json(const Spectrum& s);
Json relative_ds_to_json(const RelativeDsCheck& r);
Json ryser_to_json(const RyserVerdict& r);

Json grid_cell_to_json(const GridCell& c);

Json table_to_json(const CyclotomicTable& t);
Json quad_reps_to_json(const QuadReps& r);
Json ds_verdict_to_json(std::uint64_t p, const OcticDsVerdict& v);
Json octic_classification_to_json(const OcticClassification& c);
Json octic_scan_to_json(std::span<const OcticScanEntry> entries, std::uint64_t max_p);
Json system_row_to_json(const OcticSystemRow& r);
Json norm_solution_to_json(const NormSolution& s);

std::string certainty_name(PrimeCertainty c);

}  // namespace diffset::io
