#ifndef SPINECENSUS_IO_HPP
#define SPINECENSUS_IO_HPP

#include <string>
#include <vector>

#include "json.hpp"
#include "spinecensus/census.hpp"
#include "spinecensus/graph.hpp"
#include "spinecensus/reduction.hpp"
#include "spinecensus/spine.hpp"
#include "spinecensus/triangulation.hpp"

// JSON records for every file the tool reads or writes. Parsers throw
// ValidationError on malformed input. See docs/formats.md.
namespace spinecensus::io {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json to_json(const RegularGraph& g);
RegularGraph graph_from_json(const Json& j);

Json to_json(const Spine& s);
Spine spine_from_json(const Json& j);

Json to_json(const CellDecomposition& d);

Json to_json(const ReductionTrace& t);
ReductionTrace trace_from_json(const Json& j);

Json to_json(const GluingTable& t);
GluingTable table_from_json(const Json& j);

Json to_json(const CensusRecord& r);
/// Recomputes the cell count and spine code and rejects mismatches.
CensusRecord census_record_from_json(const Json& j);

Json to_json(const Anomaly& a);
Json to_json(const BoundsRow& row);

std::string bounds_csv(const std::vector<BoundsRow>& rows);

Json parse(const std::string& text);

} // namespace spinecensus::io

#endif
