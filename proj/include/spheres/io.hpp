#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "spheres/decision.hpp"
#include "spheres/splitting_complex.hpp"

namespace spheres {

using Json = nlohmann::json;

struct NamedClass {
    std::string name;
    SphereClass cls;

    friend bool operator==(const NamedClass&, const NamedClass&) = default;
};

// A parsed input document: one rank, a list of named classes.
struct InputDocument {
    Rank rank;
    std::vector<NamedClass> classes;

    const SphereClass* find(const std::string& name) const;

    friend bool operator==(const InputDocument&, const InputDocument&) = default;
};

// Words serialize as arrays of nonzero letters; [] is the identity. Parsing
// rejects words that are not already reduced.
Json word_to_json(const ReducedWord& w);
ReducedWord word_from_json(const Json& j, Rank rank, const std::string& path);

// {"rank": k, "weights": [{"vertex": [...], "gen": i, "weight": w}, ...]}
Json class_to_json(const SphereClass& A);
SphereClass class_from_json(const Json& j, const std::string& path);

// {"rank": k, "classes": [{"name": ..., "weights": [...]}, ...]}
Json document_to_json(const InputDocument& doc);
InputDocument document_from_json(const Json& j);
InputDocument parse_input(const std::string& text);
std::string serialize(const InputDocument& doc);

// Certificates keep their shape across formats: a "kind" tag, witness pairs
// as {"source", "target", "values"}, failing translates under "g".
Json certificate_to_json(const CoverEmbedResult& r);
Json certificate_to_json(const CoverDisjointResult& r);
Json certificate_to_json(const ManifoldResult& r);

Json complex_to_json(const ComplexOutput& c, bool with_certificates);

}  // namespace spheres
