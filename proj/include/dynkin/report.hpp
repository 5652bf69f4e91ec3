#pragma once

// JSON, CSV and markdown renderings of the library's results.
//
// JSON objects use sorted keys and rationals are written as "p/q" strings,
// so dumping the same result twice gives the same bytes. Timings and the
// thread count are left out of the canonical form.

#include <json.hpp>
#include <string>
#include <vector>

#include "dynkin/minnorm.hpp"
#include "dynkin/rootsys.hpp"
#include "dynkin/signtypes.hpp"
#include "dynkin/verify.hpp"

namespace dynkin {

using Json = nlohmann::json;

enum class OutputFormat { kJson, kCsv, kMarkdown };

/// "json", "csv" or "markdown"; throws std::invalid_argument otherwise.
OutputFormat parse_format(const std::string& name);

Json to_json(const Rat& r);
Json to_json(const RatVec& v);
Json to_json(const WeightedDynkinDiagram& d);
Json to_json(const AmbiguityClass& c);
Json to_json(const Polyhedron& p);
Json to_json(const MinNormCertificate& c);
Json to_json(const RootSystem& rs, const LieElement& x);

/// Inverses of the polyhedron and certificate encodings; throw on malformed input.
Polyhedron polyhedron_from_json(const Json& j);
MinNormCertificate certificate_from_json(const Json& j);

Json root_system_json(const RootSystem& rs);
Json ideals_json(const RootSystem& rs, const std::vector<Ideal>& ideals);
Json property_d_json(const RootSystem& rs, const PropertyDResult& r);
Json theorem_report_json(const RootSystem& rs, const TheoremReport& rep, bool with_timings = false);

/// Two-space indented dump with a trailing newline.
std::string canonical_dump(const Json& j);

/// Per-orbit table of a theorem report.
std::string render_csv(const TheoremReport& rep);
std::string render_markdown(const TheoremReport& rep);

}  // namespace dynkin
