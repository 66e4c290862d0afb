#ifndef SCENERY_IO_HPP
#define SCENERY_IO_HPP

#include <filesystem>
#include <string>

#include <json.hpp>

#include "scenery/condition.hpp"
#include "scenery/explorer.hpp"
#include "scenery/group.hpp"
#include "scenery/representation.hpp"
#include "scenery/scenery.hpp"
#include "scenery/walk.hpp"

namespace scenery {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// {"name": s, "order": m, "table": [[...], ...]}. Identity must be index 0.
// Throws ValidationError on malformed input or failed axioms.
FiniteGroup group_from_json(const Json& j);
Json group_to_json(const FiniteGroup& g);
FiniteGroup load_group_file(const std::filesystem::path& path);

// A list of {"degree": d, "matrices": [[[ [re, im], ... ], ...], ...]} with
// matrices[x][row][col]. Also accepts an object holding that list under
// "representations".
IrrepSet irreps_from_json(const Json& j);
Json irreps_to_json(const IrrepSet& set);
IrrepSet load_irreps_file(const std::filesystem::path& path);

Json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j);

Json tensor_to_json(const std::string& group, const IntTensor& t);
Json tensor_to_json(const std::string& group, const ComplexTensor& t);
IntTensor int_tensor_from_json(const Json& j);

Json to_json(const ConditionReport& r);
Json to_json(const RankDeficitSummary& s);
Json to_json(const DistinguishVerdict& v);
Json to_json(const PairFinding& p);
Json to_json(const ExplorationReport& r);

Json read_json_file(const std::filesystem::path& path);

}  // namespace scenery

#endif  // SCENERY_IO_HPP
