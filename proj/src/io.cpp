#include "spheres/io.hpp"

#include <set>
#include <utility>

namespace spheres {

const SphereClass* InputDocument::find(const std::string& name) const {
    for (const auto& nc : classes) {
        if (nc.name == name) return &nc.cls;
    }
    return nullptr;
}

Json word_to_json(const ReducedWord& w) {
    return Json(w.letters());
}

namespace {

[[noreturn]] void fail(const std::string& code, const std::string& path,
                       const std::string& message) {
    throw ParseError(code, path, message + " at " + path);
}

std::int64_t require_int(const Json& j, const std::string& path) {
    if (!j.is_number_integer()) fail("malformed_json", path, "expected an integer");
    return j.get<std::int64_t>();
}

const Json& require_field(const Json& j, const char* key, const std::string& path) {
    if (!j.is_object()) fail("malformed_json", path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) fail("malformed_json", path, std::string("missing field \"") + key + "\"");
    return *it;
}

Rank rank_from_json(const Json& j, const std::string& path) {
    const std::int64_t k = require_int(j, path);
    if (k < 1) fail("malformed_json", path, "rank must be at least 1");
    return Rank(static_cast<int>(k));
}

}  // namespace

ReducedWord word_from_json(const Json& j, Rank rank, const std::string& path) {
    if (!j.is_array()) fail("malformed_json", path, "expected a word (array of letters)");
    std::vector<Letter> letters;
    letters.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string lpath = path + "/" + std::to_string(i);
        const std::int64_t raw = require_int(j[i], lpath);
        if (raw == 0 || raw > rank.k || raw < -rank.k) {
            fail("letter_out_of_range", lpath,
                 "letter " + std::to_string(raw) + " out of range for rank " +
                     std::to_string(rank.k));
        }
        const auto l = static_cast<Letter>(raw);
        if (!letters.empty() && letters.back() == -l) {
            fail("non_reduced_word", lpath, "adjacent letters cancel");
        }
        letters.push_back(l);
    }
    return ReducedWord(rank, std::move(letters));
}

namespace {

std::pair<CanonicalEdge, Weight> weight_entry_from_json(const Json& j, Rank rank,
                                                        const std::string& path) {
    const ReducedWord base = word_from_json(require_field(j, "vertex", path), rank, path + "/vertex");
    const std::int64_t gen = require_int(require_field(j, "gen", path), path + "/gen");
    if (gen < 1 || gen > rank.k) {
        fail("gen_out_of_range", path + "/gen",
             "gen " + std::to_string(gen) + " out of range for rank " + std::to_string(rank.k));
    }
    const std::int64_t w = require_int(require_field(j, "weight", path), path + "/weight");
    if (w == 0) fail("zero_weight", path + "/weight", "weights must be nonzero");
    return {CanonicalEdge{base, static_cast<int>(gen)}, w};
}

SphereClass weights_from_json(const Json& j, Rank rank, const std::string& path) {
    if (!j.is_array()) fail("malformed_json", path, "expected an array of weight entries");
    std::vector<std::pair<CanonicalEdge, Weight>> entries;
    std::set<std::pair<std::vector<Letter>, int>> seen;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string epath = path + "/" + std::to_string(i);
        auto entry = weight_entry_from_json(j[i], rank, epath);
        if (!seen.emplace(entry.first.base.letters(), entry.first.gen).second) {
            fail("duplicate_edge", epath, "edge " + to_string(entry.first) + " appears twice");
        }
        entries.push_back(std::move(entry));
    }
    return SphereClass::from_entries(rank, entries);
}

Json weights_to_json(const SphereClass& A) {
    Json out = Json::array();
    for (const auto& [edge, w] : A.weights()) {
        out.push_back(Json{{"vertex", word_to_json(edge.base)}, {"gen", edge.gen}, {"weight", w}});
    }
    return out;
}

}  // namespace

Json class_to_json(const SphereClass& A) {
    return Json{{"rank", A.rank().k}, {"weights", weights_to_json(A)}};
}

SphereClass class_from_json(const Json& j, const std::string& path) {
    const Rank rank = rank_from_json(require_field(j, "rank", path), path + "/rank");
    return weights_from_json(require_field(j, "weights", path), rank, path + "/weights");
}

Json document_to_json(const InputDocument& doc) {
    Json classes = Json::array();
    for (const auto& nc : doc.classes) {
        classes.push_back(Json{{"name", nc.name}, {"weights", weights_to_json(nc.cls)}});
    }
    return Json{{"rank", doc.rank.k}, {"classes", classes}};
}

InputDocument document_from_json(const Json& j) {
    const Rank rank = rank_from_json(require_field(j, "rank", ""), "/rank");
    const Json& classes = require_field(j, "classes", "");
    if (!classes.is_array()) fail("malformed_json", "/classes", "expected an array of classes");

    InputDocument doc{rank, {}};
    std::set<std::string> names;
    for (std::size_t i = 0; i < classes.size(); ++i) {
        const std::string cpath = "/classes/" + std::to_string(i);
        const Json& name = require_field(classes[i], "name", cpath);
        if (!name.is_string()) fail("malformed_json", cpath + "/name", "expected a string");
        if (!names.insert(name.get<std::string>()).second) {
            fail("duplicate_name", cpath + "/name",
                 "class name \"" + name.get<std::string>() + "\" appears twice");
        }
        SphereClass cls =
            weights_from_json(require_field(classes[i], "weights", cpath), rank, cpath + "/weights");
        doc.classes.push_back(NamedClass{name.get<std::string>(), std::move(cls)});
    }
    return doc;
}

InputDocument parse_input(const std::string& text) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("malformed_json", "", "input is not valid JSON");
    return document_from_json(j);
}

std::string serialize(const InputDocument& doc) {
    return document_to_json(doc).dump(2) + "\n";
}

namespace {

Json witness_to_json(const EndPair& pair, std::vector<Weight> values) {
    return Json{{"source", word_to_json(pair.source)},
                {"target", word_to_json(pair.target)},
                {"values", values}};
}

Json inner_to_json(const InnerCertificate& inner) {
    if (const auto* e = std::get_if<ExcessPair>(&inner)) {
        return Json{{"kind", "excess_pair"}, {"witness", witness_to_json(e->pair, {e->value})}};
    }
    const auto& m = std::get<MixedSignTypes>(inner);
    return Json{{"kind", "mixed_sign_types"},
                {"same_sign", witness_to_json(m.same_sign.pair,
                                              {m.same_sign.value_a, m.same_sign.value_b})},
                {"opposite_sign", witness_to_json(m.opposite_sign.pair,
                                                  {m.opposite_sign.value_a,
                                                   m.opposite_sign.value_b})}};
}

}  // namespace

Json certificate_to_json(const CoverEmbedResult& r) {
    if (const auto* p = std::get_if<BoundaryPartition>(&r.certificate)) {
        Json one = Json::array(), two = Json::array();
        for (const auto& v : p->side_one) one.push_back(word_to_json(v));
        for (const auto& v : p->side_two) two.push_back(word_to_json(v));
        return Json{{"kind", "boundary_partition"}, {"side_one", one}, {"side_two", two}};
    }
    return inner_to_json(std::get<ExcessPair>(r.certificate));
}

Json certificate_to_json(const CoverDisjointResult& r) {
    if (std::holds_alternative<SingleSignType>(r.certificate)) {
        return Json{{"kind", "single_sign_type"}};
    }
    return inner_to_json(std::get<MixedSignTypes>(r.certificate));
}

Json certificate_to_json(const ManifoldResult& r) {
    if (const auto* t = std::get_if<TranslatesChecked>(&r.certificate)) {
        Json checked = Json::array();
        for (const auto& g : t->checked) checked.push_back(word_to_json(g));
        return Json{{"kind", "translates_checked"}, {"checked", checked}};
    }
    const auto& f = std::get<FailingTranslate>(r.certificate);
    return Json{{"kind", "failing_translate"},
                {"g", word_to_json(f.g)},
                {"inner", inner_to_json(f.inner)}};
}

Json complex_to_json(const ComplexOutput& c, bool with_certificates) {
    Json vertices = Json::array();
    for (const auto& v : c.vertices) {
        vertices.push_back(Json{{"canonical", class_to_json(v.canonical)}, {"sources", v.sources}});
    }
    Json edges = Json::array();
    for (const auto& [i, j] : c.edges) edges.push_back(Json::array({i, j}));
    Json simplices = Json::array();
    for (const auto& s : c.simplices) simplices.push_back(s);
    Json rejected = Json::array();
    for (const auto& r : c.rejected) {
        Json entry{{"index", r.index}, {"reason", r.reason}};
        if (with_certificates && r.certificate) {
            entry["certificate"] = certificate_to_json(
                ManifoldResult{false, *r.certificate});
        }
        rejected.push_back(entry);
    }
    return Json{{"vertices", vertices},
                {"edges", edges},
                {"simplices", simplices},
                {"rejected", rejected},
                {"dim_cap", c.dim_cap},
                {"simplex_rule", "flag: dimension >= 2 simplices are pairwise-compatible cliques"}};
}

}  // namespace spheres
