#pragma once

// JSON serialization of simplicial data, certificates and input files.
//
// Simplicial set:
//   {"kind": "simplicial_set", "bound": N, "counts": [c_0, ..., c_N],
//    "faces": [[], [d_0 table, d_1 table], ...],          // faces[n][i][id]
//    "degeneracies": [[s_0 table], [s_0, s_1], ...],       // degeneracies[n][i][id], n < N
//    "labels": [[...], ...]}                               // optional
//
// Bisimplicial set:
//   {"kind": "bisimplicial_set", "bounds": [P, Q], "counts": [[...]],
//    "hfaces": ..., "hdegeneracies": ..., "vfaces": ..., "vdegeneracies": ...,
//    "labels": ...}                                        // all indexed [p][q][i][id]
//
// Group input:
//   {"group": {"labels": [...], "table": [[...]]}}            or
//   {"group": {"degree": d, "generators": [[images 1..d], ...]}}
//   optionally with "A": [labels], "B": [labels].

#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

#include "bisimp/bisimplicial.hpp"
#include "bisimp/errors.hpp"
#include "bisimp/groups.hpp"
#include "bisimp/kan.hpp"
#include "bisimp/simplicial_set.hpp"
#include "bisimp/theorem_one.hpp"

namespace bisimp {

using json = nlohmann::json;

inline json to_json(const TruncatedSimplicialSet& X) {
    json j;
    j["kind"] = "simplicial_set";
    j["bound"] = X.bound();
    j["counts"] = X.counts();
    j["faces"] = X.face_tables();
    j["degeneracies"] = X.degeneracy_tables();
    if (X.has_labels()) j["labels"] = X.labels();
    return j;
}

inline TruncatedSimplicialSet simplicial_set_from_json(const json& j) {
    try {
        if (j.value("kind", "") != "simplicial_set") throw RejectedInput("expected kind \"simplicial_set\"");
        std::vector<std::vector<std::string>> labels;
        if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::vector<std::string>>>();
        return {j.at("bound").get<int>(), j.at("counts").get<std::vector<std::size_t>>(),
                j.at("faces").get<std::vector<std::vector<Table>>>(),
                j.at("degeneracies").get<std::vector<std::vector<Table>>>(), std::move(labels)};
    } catch (const json::exception& e) {
        throw RejectedInput(std::string("malformed simplicial set: ") + e.what());
    }
}

inline json to_json(const TruncatedBisimplicialSet& X) {
    json j;
    j["kind"] = "bisimplicial_set";
    j["bounds"] = {X.horizontal_bound(), X.vertical_bound()};
    j["counts"] = X.counts();
    j["hfaces"] = X.hface_tables();
    j["hdegeneracies"] = X.hdeg_tables();
    j["vfaces"] = X.vface_tables();
    j["vdegeneracies"] = X.vdeg_tables();
    if (X.has_labels()) j["labels"] = X.labels();
    return j;
}

inline TruncatedBisimplicialSet bisimplicial_set_from_json(const json& j) {
    try {
        if (j.value("kind", "") != "bisimplicial_set") throw RejectedInput("expected kind \"bisimplicial_set\"");
        using Blocks = Grid<std::vector<Table>>;
        Grid<std::vector<std::string>> labels;
        if (j.contains("labels")) labels = j.at("labels").get<Grid<std::vector<std::string>>>();
        const auto bounds = j.at("bounds").get<std::vector<int>>();
        if (bounds.size() != 2) throw RejectedInput("bounds must be [P, Q]");
        return {bounds[0],
                bounds[1],
                j.at("counts").get<Grid<std::size_t>>(),
                j.at("hfaces").get<Blocks>(),
                j.at("hdegeneracies").get<Blocks>(),
                j.at("vfaces").get<Blocks>(),
                j.at("vdegeneracies").get<Blocks>(),
                std::move(labels)};
    } catch (const json::exception& e) {
        throw RejectedInput(std::string("malformed bisimplicial set: ") + e.what());
    }
}

inline json simplex_json(const TruncatedSimplicialSet& X, Simplex s) {
    return {{"dim", s.dim}, {"id", s.id}, {"label", X.label(s)}};
}

inline json to_json(const CompatibleFamily& fam) {
    json faces = json::array();
    for (const auto& [i, x] : fam.faces) {
        json f = simplex_json(fam.map->domain(), {fam.n - 1, x});
        f["index"] = i;
        faces.push_back(f);
    }
    return {{"n", fam.n}, {"index_set", fam.index_set()}, {"faces", faces},
            {"target", simplex_json(fam.map->codomain(), {fam.n, fam.target})}};
}

/// Rebuilds a family from its serialized form against the map it came from.
inline CompatibleFamily family_from_json(const json& j, const SimplicialMap& f) {
    CompatibleFamily fam;
    fam.map = &f;
    try {
        fam.n = j.at("n").get<int>();
        for (const auto& face : j.at("faces"))
            fam.faces.emplace(face.at("index").get<int>(), face.at("id").get<SimplexId>());
        fam.target = j.at("target").at("id").get<SimplexId>();
    } catch (const json::exception& e) {
        throw RejectedInput(std::string("malformed family: ") + e.what());
    }
    if (fam.n < 1 || fam.n > f.bound()) throw RejectedInput("family dimension outside the map's bound");
    for (const auto& [i, x] : fam.faces)
        if (i < 0 || i > fam.n || x >= f.domain().count(fam.n - 1)) throw RejectedInput("family face out of range");
    if (fam.target >= f.codomain().count(fam.n)) throw RejectedInput("family target out of range");
    return fam;
}

inline json to_json(const FillCertificate& c) {
    json j;
    j["outcome"] = c.filled() ? "filled" : "unfillable";
    j["family"] = to_json(c.family);
    j["candidates_examined"] = c.candidates_examined;
    if (c.witness) j["witness"] = simplex_json(c.family.map->domain(), {c.family.n, *c.witness});
    if (c.failing_subfamily) j["failing_subfamily"] = to_json(*c.failing_subfamily);
    return j;
}

inline json to_json(const KanReport& r) {
    json cells = json::array();
    for (const auto& c : r.cells)
        cells.push_back({{"n", c.n},
                         {"missing", c.k},
                         {"families", c.families},
                         {"candidates", c.candidates},
                         {"max_search", c.max_search},
                         {"passed", c.passed}});
    json j{{"check", r.check}, {"max_dim", r.max_dim}, {"passed", r.passed}, {"families", r.families()}, {"cells", cells}};
    if (r.failure) j["failure"] = to_json(*r.failure);
    return j;
}

inline json to_json(const ValidationReport& r) {
    json v = json::array();
    for (const auto& x : r.violations)
        v.push_back({{"identity", x.identity},
                     {"witness", {{"dim", x.witness.dim}, {"id", x.witness.id}}},
                     {"lhs", {{"dim", x.lhs.dim}, {"id", x.lhs.id}}},
                     {"rhs", {{"dim", x.rhs.dim}, {"id", x.rhs.id}}}});
    return {{"checks", r.checks}, {"violations", v}};
}

inline json to_json(const Theorem1Report& r) {
    auto cells = [](const std::vector<SweepCell>& cs) {
        json out = json::array();
        for (const auto& c : cs)
            out.push_back({{"p", c.p},
                           {"q", c.q},
                           {"missing", c.missing},
                           {"problems", c.problems},
                           {"fills", c.fills},
                           {"max_search", c.max_search},
                           {"passed", c.passed}});
        return out;
    };
    json j{{"max_total_dim", r.max_total_dim},
           {"diagonal_check", to_json(r.diagonal_check)},
           {"direct", cells(r.direct)},
           {"transposed", cells(r.transposed)},
           {"audit",
            {{"families_built", r.audit.families_built},
             {"compatibility_passed", r.audit.compatibility_passed},
             {"dimension_checks", r.audit.dimension_checks},
             {"relations_checked", r.audit.relations_checked}}},
           {"passed", r.passed}};
    if (r.failure) j["failure"] = *r.failure;
    return j;
}

inline FiniteGroup group_from_json(const json& j) {
    try {
        if (j.contains("table")) {
            return group_from_table(j.at("labels").get<std::vector<std::string>>(),
                                    j.at("table").get<std::vector<std::vector<int>>>());
        }
        if (j.contains("generators")) {
            return permutation_group(j.at("degree").get<int>(), j.at("generators").get<std::vector<std::vector<int>>>());
        }
    } catch (const json::exception& e) {
        throw RejectedInput(std::string("malformed group: ") + e.what());
    }
    throw RejectedInput("group needs either labels+table or degree+generators");
}

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw RejectedInput("cannot open input file " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw RejectedInput("input file " + path + " is not valid JSON: " + e.what());
    }
}

} // namespace bisimp
