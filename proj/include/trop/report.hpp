#pragma once

// JSON documents for the command-line tool. Matrices appear as arrays of row
// strings in the text format; indices are 1-based.

#include <json.hpp>

#include "trop/border.hpp"
#include "trop/families.hpp"
#include "trop/graphs.hpp"
#include "trop/ortho.hpp"
#include "trop/search.hpp"

namespace trop {

using Json = nlohmann::ordered_json;

Json matrix_json(const NormalMatrix& a);
Json vector_json(const BorderVector& v);
std::string cell_label(int i, int j);

Json indicator_json(const IndicatorReport& report);
Json family_json(const FamilySpec& spec);
Json variant_json(const MinimalVariant& v);
Json certificate_json(const ThetaCertificate& cert, bool with_timing);
Json theorem_json(const TheoremCheck& check);
Json blocks_json(const BorderedBlocks& blocks);
Json graph_stats_json(const RelationGraph& graph);

}  // namespace trop
