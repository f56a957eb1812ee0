#pragma once

#include <tamagawa/errors.hpp>
#include <tamagawa/fields.hpp>
#include <tamagawa/landau.hpp>
#include <tamagawa/lattice.hpp>
#include <tamagawa/torus.hpp>

#include <json.hpp>

#include <string>

namespace tamagawa {

using Json = nlohmann::ordered_json;

// Groups: {"table": [[...]], "labels": [...]} or {"family": ...}; see README.
FiniteGroup parse_group(const Json& j);
Json group_to_json(const FiniteGroup& g);

// Throws ConstructionError on malformed input.
NormTorusDatum parse_datum(const Json& j);
Json datum_to_json(const NormTorusDatum& d);
NormTorusDatum load_datum(const std::string& path);
Json load_json(const std::string& path);
bool same_datum(const NormTorusDatum& a, const NormTorusDatum& b);

Json to_json(const Rational& r);
Json to_json(const FinAb& a);
Json to_json(const Subgroup& s);
Json to_json(const TamagawaReport& r);
Json to_json(const OracleReport& r);
Json to_json(const std::vector<StructureCheck>& checks);
Json to_json(const ProductReport& r);
Json to_json(const Classification& c);
Json to_json(const DensityBound& b);
Json to_json(const QuadraticSubfieldCount& q);
Json to_json(const DihedralReport& r);
Json to_json(const LandauSearchResult& r);
Json to_json(const Error& e);

// Stable text form: two-space indent, keys in insertion order, trailing newline.
std::string dump(const Json& j);

}  // namespace tamagawa
