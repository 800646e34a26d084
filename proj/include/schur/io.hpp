#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "schur/analysis.hpp"
#include "schur/enumeration.hpp"

namespace schur {

using Json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

Json group_to_json(const GroupSpec& g);
GroupSpec group_from_json(const Json& j, const std::string& where = "/group");

Json elem_to_json(const GroupSpec& g, int element);
int elem_from_json(const GroupSpec& g, const Json& j, const std::string& where);

/// {"version":1,"group":{...},"classes":[[[...],...],...]}, with an optional
/// "alg_map" array.
Json sring_to_json(const SRing& a, const std::optional<AlgMap>& alg_map = std::nullopt);
/// Validates the document and the S-ring axioms. Schema problems raise
/// ErrorKind::Schema with a JSON-pointer location.
SRing sring_from_json(const Json& j);
std::optional<AlgMap> alg_map_from_json(const Json& j, int rank, const std::string& where = "/alg_map");

Json perm_to_json(const Perm& p);
Perm perm_from_json(const Json& j, int degree, const std::string& where);

Json report_to_json(const SeparabilityReport& r);
Json table1_row_to_json(const Table1Row& r);

std::string table1_csv(const std::vector<Table1Row>& rows);

/// Indented text in which arrays and objects nested at most two deep stay on
/// one line, so each basic set of a ring prints as a single line.
std::string to_text(const Json& j);

/// Parses a JSON document; syntax errors raise ErrorKind::Schema.
Json parse_json(const std::string& text);

SRing read_sring(const std::string& path);
void write_sring(const std::string& path, const SRing& a,
                 const std::optional<AlgMap>& alg_map = std::nullopt);

/// Decimal string of a BigInt; JSON numbers when they fit in 64 bits.
Json big_to_json(const BigInt& v);

}  // namespace schur
