#pragma once

#include <string>

#include "json.hpp"

#include "frobrel/classify.hpp"
#include "frobrel/constructors.hpp"
#include "frobrel/frobenius.hpp"
#include "frobrel/relation.hpp"
#include "frobrel/tqft.hpp"

namespace frobrel {

// Field order is fixed, so dumps are deterministic.
using njson = nlohmann::ordered_json;

// {"src": n, "dst": m, "pairs": [[i,j],...]} with pairs sorted
// lexicographically.
njson relation_to_json(const Relation& r);

// {"n":3, "labels":["a","b","c"], "unit":[0], "counit":[1],
//  "mul":[[[0],[1],[2]],...]} where mul[x][y] is the sorted element list of
// mu(x,y).
njson frob_data_to_json(const FrobData& d);
FrobData frob_data_from_json(const njson& j);
FrobData load_frob_data(const std::string& path);

// {"preperiod":[...], "period":[...], "proposition":"..."}; a "formal" flag
// is added for noncommutative inputs.
njson partition_to_json(const PartitionFunction& pf);

// {"size":6, "cayley":[[...]], "name":"S3"}
njson group_to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const njson& j);

// {"objects":..,"morphisms":..,"source":[..],"target":[..],
//  "compose":[[..]],"identities":[..],"inverses":[..],"name":".."};
// -1 marks an undefined composite.
njson groupoid_to_json(const FiniteGroupoid& g);
FiniteGroupoid groupoid_from_json(const njson& j);

// {"n":..,"count":..,"objects":[object json + "commutative", "partition",
//  "constructions"]}, objects sorted by canonical encoding.
njson census_to_json(const Census& c);

// Markdown with the table column layout
// Case | Unit | Counit | Multiplication | Partition function.
std::string census_markdown(const njson& census_json);

njson parse_json_file(const std::string& path);
std::string dump_json(const njson& j);  // 2-space indent plus trailing newline

}  // namespace frobrel
