#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "expsr/classify.hpp"
#include "expsr/expectation.hpp"
#include "expsr/ideals.hpp"
#include "expsr/numeric.hpp"
#include "expsr/tables.hpp"

namespace expsr::io {

using nlohmann::json;

/// Thrown for structurally malformed documents (missing keys, wrong types).
class FormatError : public Error {
public:
  using Error::Error;
};

json read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const json& doc);

/// True when the document carries an "action" table.
bool is_semimodule_document(const json& doc);

// Instance format: { "name", "size", "zero", "one", "add", "mul" }.
RawSemiring raw_semiring_from_json(const json& doc);
json to_json(const FiniteSemiring& s);

// Semimodule format: { "name", "base", "size", "zero", "add", "action" }.
// "base" is either a semiring document or the name of a builtin semiring.
RawSemimodule raw_semimodule_from_json(const json& doc);
json to_json(const FiniteSemimodule& m);

/// Resolves the "base" field: an embedded document is validated, a string is
/// looked up among the builtins.
SemiringPtr base_from_json(const json& doc);

/// The product in instance format plus a "pairing" block mapping each product
/// index to its (s, m) coordinates.
json to_json(const ExpectationInstance& e);

json to_json(const Subset& s);
json to_json(const Violation& v);
json to_json(const ClassReport& r);
json to_json(const ModuleFlags& f);
json to_json(const IdealProfile& p);

// Graph format: { "d", "nodes", "source", "sink",
//                 "edges": [{ "from", "to", "p", "v" }] }.
// Edges carrying an "r" field (pre-lifted weights) are rejected.
WeightedDag graph_from_json(const json& doc);
json to_json(const WeightedDag& g);
json to_json(const NumericWeight& w);

}  // namespace expsr::io
