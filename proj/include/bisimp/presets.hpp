#pragma once

// Named example configurations and the objects built from them.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bisimp/bisimplicial.hpp"
#include "bisimp/double_groupoid.hpp"
#include "bisimp/errors.hpp"
#include "bisimp/groups.hpp"

namespace bisimp {

enum class PresetKind { GroupPair, EgTensor };

/// A group with two subgroups (the C(A,B) double nerve), or a group whose
/// EG is tensored with itself.
struct Preset {
    std::string name;
    PresetKind kind = PresetKind::GroupPair;
    FiniteGroup group;
    std::vector<int> A;
    std::vector<int> B;
};

inline std::vector<std::string> preset_names() { return {"s3-counterexample", "z2-commuting", "eg-tensor", "point"}; }

inline Preset make_preset(const std::string& name) {
    if (name == "s3-counterexample") {
        FiniteGroup G = symmetric_group_preset(3);
        auto A = subgroup_from_labels(G, {"id", "(1,2)"});
        auto B = subgroup_from_labels(G, {"id", "(1,3)"});
        return {name, PresetKind::GroupPair, std::move(G), std::move(A), std::move(B)};
    }
    if (name == "z2-commuting") {
        FiniteGroup G = cyclic_group(2);
        std::vector<int> all{0, 1};
        return {name, PresetKind::GroupPair, std::move(G), all, all};
    }
    if (name == "eg-tensor") return {name, PresetKind::EgTensor, cyclic_group(2), {}, {}};
    if (name == "point") return {name, PresetKind::GroupPair, cyclic_group(1), {0}, {0}};
    throw RejectedInput("unknown preset '" + name + "'");
}

inline DoubleGroupoid preset_double_groupoid(const Preset& p) {
    if (p.kind != PresetKind::GroupPair) throw RejectedInput("preset '" + p.name + "' has no double groupoid");
    return group_pair_double_groupoid(p.group, p.A, p.B);
}

/// NN C(A,B) for group-pair presets, EG (x) EG for the tensor preset.
inline TruncatedBisimplicialSet preset_bisimplicial(const Preset& p, int P, int Q) {
    if (p.kind == PresetKind::EgTensor) {
        return tensor(eg_construction(p.group, P), eg_construction(p.group, Q));
    }
    return double_nerve(preset_double_groupoid(p), P, Q);
}

/// Bisimplex id of the (1,1)-simplex whose single square has `square_label`.
inline SimplexId square_simplex(const TruncatedBisimplicialSet& X, const std::string& square_label) {
    const std::string want = "[" + square_label + "]";
    for (SimplexId x = 0; x < X.count(1, 1); ++x)
        if (X.label({1, 1, x}) == want) return x;
    throw InvariantError("square " + square_label + " not found among (1,1)-simplices");
}

} // namespace bisimp
