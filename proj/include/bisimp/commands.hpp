#pragma once

// The commands behind the bisimp driver. Each returns a RunReport; the
// driver only parses flags and prints.

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bisimp/bisimplicial.hpp"
#include "bisimp/double_groupoid.hpp"
#include "bisimp/errors.hpp"
#include "bisimp/groups.hpp"
#include "bisimp/io.hpp"
#include "bisimp/kan.hpp"
#include "bisimp/ordinal.hpp"
#include "bisimp/presets.hpp"
#include "bisimp/report.hpp"
#include "bisimp/theorem_one.hpp"

namespace bisimp {

/// Where the object under test comes from: a named preset or an input file.
struct SourceOptions {
    std::string preset;
    std::string input;
};

/// An input resolved to either a group configuration or explicit tables.
struct LoadedSource {
    std::string name;
    std::optional<Preset> preset;
    std::optional<TruncatedSimplicialSet> simplicial;
    std::optional<TruncatedBisimplicialSet> bisimplicial;
};

inline LoadedSource load_source(const SourceOptions& opt) {
    if (opt.preset.empty() == opt.input.empty()) throw RejectedInput("give exactly one of --preset or --input");
    LoadedSource out;
    if (!opt.preset.empty()) {
        out.name = opt.preset;
        out.preset = make_preset(opt.preset);
        return out;
    }
    out.name = opt.input;
    const json j = read_json_file(opt.input);
    const std::string kind = j.value("kind", "");
    if (kind == "simplicial_set") {
        out.simplicial = simplicial_set_from_json(j);
    } else if (kind == "bisimplicial_set") {
        out.bisimplicial = bisimplicial_set_from_json(j);
    } else if (j.contains("group")) {
        Preset p;
        p.name = opt.input;
        p.group = group_from_json(j.at("group"));
        std::vector<int> all(static_cast<std::size_t>(p.group.size()));
        for (int g = 0; g < p.group.size(); ++g) all[static_cast<std::size_t>(g)] = g;
        try {
            p.A = j.contains("A") ? subgroup_from_labels(p.group, j.at("A").get<std::vector<std::string>>()) : all;
            p.B = j.contains("B") ? subgroup_from_labels(p.group, j.at("B").get<std::vector<std::string>>()) : all;
        } catch (const json::exception& e) {
            throw RejectedInput(std::string("malformed subgroup list: ") + e.what());
        }
        out.preset = std::move(p);
    } else {
        throw RejectedInput("input must be a simplicial set, a bisimplicial set or a group description");
    }
    return out;
}

inline json group_json(const FiniteGroup& G, const std::vector<int>& elements) {
    json out = json::array();
    for (int g : elements) out.push_back(G.label(g));
    return out;
}

inline json base_configuration(const LoadedSource& src, unsigned threads) {
    json c;
    c["source"] = src.name;
    c["permutation_convention"] = kPermutationConvention;
    c["threads"] = threads;
    c["search"] = "deterministic exhaustive";
    if (src.preset) {
        const auto& p = *src.preset;
        c["group"] = {{"order", p.group.size()}, {"elements", p.group.labels()}};
        if (p.kind == PresetKind::GroupPair) {
            c["A"] = group_json(p.group, p.A);
            c["B"] = group_json(p.group, p.B);
        }
    }
    return c;
}

// ---------------------------------------------------------------------------
// identities

/// Builds the words for one iterated identity; swapped out by mutation tests.
using IdentityBuilder = std::function<std::optional<IdentityInstance>(int family, int i, int j, int m, int n)>;

inline RunReport cmd_identities(int max_n, IdentityBuilder builder = nullptr) {
    if (max_n < 0 || max_n > 10) throw RejectedInput("max_n must lie in [0, 10]");
    if (!builder) builder = iterated_identity;
    Stopwatch clock;
    RunReport r;
    r.command = "identities";
    r.configuration = {{"max_n", max_n}};

    for (int family = 1; family <= 4; ++family) {
        std::size_t checked = 0;
        json witness = nullptr;
        for (int n = 0; n <= max_n && witness.is_null(); ++n)
            for (int i = 0; i <= n + 1 && witness.is_null(); ++i)
                for (int j = 0; j <= n + 1 && witness.is_null(); ++j)
                    for (int m = 0; m <= n + 1 && witness.is_null(); ++m) {
                        auto inst = builder(family, i, j, m, n);
                        if (!inst) continue;
                        ++checked;
                        if (!words_agree(*inst))
                            witness = {{"family", family}, {"i", i}, {"j", j}, {"m", m}, {"n", n},
                                       {"lhs", to_string(inst->lhs)}, {"rhs", to_string(inst->rhs)}};
                    }
        r.add("iterated identity family " + std::to_string(family), true, witness.is_null(),
              std::to_string(checked) + " instances checked", witness);
        r.statistics["family_" + std::to_string(family)] = checked;
    }

    std::size_t checked = 0;
    json witness = nullptr;
    for (int family = 1; family <= 5 && witness.is_null(); ++family)
        for (int n = 0; n <= max_n && witness.is_null(); ++n)
            for (int i = 0; i <= n + 2 && witness.is_null(); ++i)
                for (int j = 0; j <= n + 2 && witness.is_null(); ++j) {
                    auto inst = basic_identity(family, i, j, n);
                    if (!inst) continue;
                    ++checked;
                    if (!words_agree(*inst))
                        witness = {{"family", family}, {"i", i}, {"j", j}, {"n", n},
                                   {"lhs", to_string(inst->lhs)}, {"rhs", to_string(inst->rhs)}};
                }
    r.add("basic simplicial identities", true, witness.is_null(), std::to_string(checked) + " instances checked",
          witness);
    r.statistics["basic"] = checked;
    r.timing_ms["total"] = clock.elapsed_ms();
    return r;
}

// ---------------------------------------------------------------------------
// kan

struct KanOptions {
    SourceOptions source;
    std::string construction = "nerve";
    int max_dim = 2;
    int index = -1; ///< row/column index; -1 means every index below max_dim
    unsigned threads = 1;
};

namespace detail {

/// The S3 preset's diagonal is not Kan from dimension 2 on; reports mark
/// that outcome as expected.
inline bool known_non_kan_diagonal(const LoadedSource& src, int max_dim) {
    return src.preset && src.preset->name == "s3-counterexample" && max_dim >= 2;
}

inline json kan_witness(const KanReport& rep) {
    if (!rep.failure) return nullptr;
    return to_json(*rep.failure);
}

inline void add_kan_verdict(RunReport& r, const std::string& name, const KanReport& rep, bool expected) {
    std::string detail = std::to_string(rep.families()) + " compatible families checked";
    if (rep.failure) detail += "; unfillable: " + rep.failure->family.describe();
    r.add(name, expected, rep.passed, detail, kan_witness(rep));
    r.statistics[name] = {{"families", rep.families()}, {"report", to_json(rep)}};
}

inline TruncatedBisimplicialSet source_bisimplicial(const LoadedSource& src, int P, int Q) {
    if (src.bisimplicial) return *src.bisimplicial;
    if (src.preset) return preset_bisimplicial(*src.preset, P, Q);
    throw RejectedInput("source does not describe a bisimplicial set");
}

} // namespace detail

inline RunReport cmd_kan(const KanOptions& opt) {
    if (opt.max_dim < 1) throw RejectedInput("--max-dim must be at least 1");
    Stopwatch clock;
    const LoadedSource src = load_source(opt.source);
    RunReport r;
    r.command = "kan";
    r.configuration = base_configuration(src, opt.threads);
    r.configuration["construction"] = opt.construction;
    r.configuration["max_dim"] = opt.max_dim;

    const auto& c = opt.construction;
    auto check_set = [&](const std::string& name, std::shared_ptr<const TruncatedSimplicialSet> X, bool expected) {
        const auto f = SimplicialMap::to_point(std::move(X));
        detail::add_kan_verdict(r, name, check_kan_fibration(f, opt.max_dim, opt.threads), expected);
    };

    if (c == "set") {
        if (!src.simplicial) throw RejectedInput("construction 'set' needs a simplicial_set input file");
        r.configuration["bound"] = src.simplicial->bound();
        check_set("Kan complex up to dim " + std::to_string(opt.max_dim),
                  std::make_shared<const TruncatedSimplicialSet>(*src.simplicial), true);
    } else if (c == "nerve") {
        if (!src.preset) throw RejectedInput("construction 'nerve' needs a group");
        r.configuration["bound"] = opt.max_dim;
        auto X = std::make_shared<const TruncatedSimplicialSet>(
            nerve(FiniteGroupoid::from_group(src.preset->group), opt.max_dim));
        check_set("nerve Kan up to dim " + std::to_string(opt.max_dim), X, true);
    } else if (c == "double-nerve-diagonal" || c == "eg-tensor-diagonal") {
        TruncatedBisimplicialSet B = [&] {
            if (c == "eg-tensor-diagonal") {
                if (!src.preset) throw RejectedInput("construction 'eg-tensor-diagonal' needs a group");
                Preset p = *src.preset;
                p.kind = PresetKind::EgTensor;
                return preset_bisimplicial(p, opt.max_dim, opt.max_dim);
            }
            if (src.preset && src.preset->kind != PresetKind::GroupPair)
                throw RejectedInput("preset '" + src.name + "' is not a double nerve");
            return detail::source_bisimplicial(src, opt.max_dim, opt.max_dim);
        }();
        r.configuration["bounds"] = {B.horizontal_bound(), B.vertical_bound()};
        const bool expected = !(c == "double-nerve-diagonal" && detail::known_non_kan_diagonal(src, opt.max_dim));
        check_set("diagonal Kan up to dim " + std::to_string(opt.max_dim),
                  std::make_shared<const TruncatedSimplicialSet>(diagonal(B)), expected);
    } else if (c == "row" || c == "column") {
        const auto B = detail::source_bisimplicial(src, opt.max_dim, opt.max_dim);
        r.configuration["bounds"] = {B.horizontal_bound(), B.vertical_bound()};
        const int limit = c == "row" ? B.vertical_bound() : B.horizontal_bound();
        std::vector<int> indices;
        if (opt.index >= 0) {
            if (opt.index > limit) throw TruncationError(c + " index " + std::to_string(opt.index) + " exceeds bound");
            indices.push_back(opt.index);
        } else {
            for (int k = 0; k < std::min(opt.max_dim, limit + 1); ++k) indices.push_back(k);
        }
        r.configuration["indices"] = indices;
        for (int k : indices) {
            auto X = std::make_shared<const TruncatedSimplicialSet>(c == "row" ? row(B, k) : column(B, k));
            check_set(c + " " + std::to_string(k) + " Kan up to dim " + std::to_string(opt.max_dim), X, true);
        }
    } else {
        throw RejectedInput("unknown construction '" + c +
                            "' (nerve, double-nerve-diagonal, eg-tensor-diagonal, row, column, set)");
    }
    r.timing_ms["total"] = clock.elapsed_ms();
    return r;
}

// ---------------------------------------------------------------------------
// theorem1

struct Theorem1Options {
    SourceOptions source;
    int max_total_dim = 3;
    unsigned threads = 1;
};

inline RunReport cmd_theorem1(const Theorem1Options& opt) {
    Stopwatch clock;
    const LoadedSource src = load_source(opt.source);
    const int N = opt.max_total_dim;
    if (N < 1) throw RejectedInput("--max-dim must be at least 1");
    RunReport r;
    r.command = "theorem1";
    r.configuration = base_configuration(src, opt.threads);
    r.configuration["max_total_dim"] = N;

    auto X = std::make_shared<const TruncatedBisimplicialSet>(detail::source_bisimplicial(src, N, N));
    r.configuration["bounds"] = {X->horizontal_bound(), X->vertical_bound()};
    const auto f = BisimplicialMap::to_point(X);

    const auto diag = check_kan_fibration(diagonal_map(f), N, opt.threads);
    const bool diag_expected = !detail::known_non_kan_diagonal(src, N);
    detail::add_kan_verdict(r, "precondition: diagonal Kan up to dim " + std::to_string(N), diag, diag_expected);
    r.timing_ms["diagonal"] = clock.elapsed_ms();
    if (!diag.passed) {
        r.timing_ms["total"] = clock.elapsed_ms();
        return r;
    }

    const auto rep = verify_theorem1_sweep(f, N, opt.threads);
    auto sweep_ok = [](const std::vector<SweepCell>& cells) {
        for (const auto& c : cells)
            if (!c.passed) return false;
        return true;
    };
    json failure = rep.failure ? json(*rep.failure) : json(nullptr);
    r.add("columns Kan via the diagonal", true, sweep_ok(rep.direct), "", sweep_ok(rep.direct) ? nullptr : failure);
    r.add("rows Kan via the diagonal (transpose)", true, sweep_ok(rep.transposed), "",
          sweep_ok(rep.transposed) ? nullptr : failure);
    const auto& a = rep.audit;
    r.add("diagonal families compatible", true, a.compatibility_passed == a.families_built,
          std::to_string(a.compatibility_passed) + " of " + std::to_string(a.families_built));
    r.add("relations f x = y and d_i x = x_i", true, a.relations_checked > 0 || rep.problems() == 0,
          std::to_string(a.relations_checked) + " relations, " + std::to_string(a.dimension_checks) +
              " dimension checks");
    r.statistics["problems"] = rep.problems();
    r.statistics["sweep"] = to_json(rep);
    r.timing_ms["total"] = clock.elapsed_ms();
    return r;
}

// ---------------------------------------------------------------------------
// counterexample

struct CounterexampleOptions {
    std::string preset;
    unsigned threads = 1;
};

namespace detail {

inline void group_pair_certificate(RunReport& r, const Preset& p, unsigned threads) {
    const auto& G = p.group;
    auto [ab, ba] = product_sets(G, p.A, p.B);
    const bool distinct = ab != ba;
    r.add("AB != BA", p.name == "s3-counterexample", distinct, distinct ? "" : "AB = BA; the counterexample does not apply",
          json{{"AB", group_json(G, ab)}, {"BA", group_json(G, ba)}});
    if (!distinct) return;

    const DoubleGroupoid D = preset_double_groupoid(p);
    r.add("double groupoid laws", true, double_groupoid_violations(D).empty(),
          std::to_string(D.square_count()) + " squares, " + std::to_string(interchange_instances(D)) +
              " interchange instances",
          json{{"squares", D.square_labels}});

    auto X = std::make_shared<const TruncatedBisimplicialSet>(double_nerve(D, 3, 3));
    const auto f = BisimplicialMap::to_point(X);
    for (int k = 0; k <= 2; ++k)
        add_kan_verdict(r, "column " + std::to_string(k) + " Kan up to dim 3", check_kan_fibration(column_map(f, k), 3, threads),
                        true);
    for (int k = 0; k <= 2; ++k)
        add_kan_verdict(r, "row " + std::to_string(k) + " Kan up to dim 3", check_kan_fibration(row_map(f, k), 3, threads),
                        true);

    // a, b with ab outside BA, and the identity squares iota_a, iota_b.
    int a = -1, b = -1;
    for (int x : p.A)
        for (int y : p.B)
            if (a < 0 && !std::binary_search(ba.begin(), ba.end(), G.mul(x, y))) a = x, b = y;
    auto slot = [](const std::vector<int>& set, int g) { return static_cast<int>(std::find(set.begin(), set.end(), g) - set.begin()); };
    const int iota_a = D.id_v[slot(p.A, a)];
    const int iota_b = D.id_h[slot(p.B, b)];

    const SimplicialMap diag = diagonal_map(f);
    CompatibleFamily fam;
    fam.map = &diag;
    fam.n = 2;
    fam.faces = {{0, square_simplex(*X, D.square_labels[iota_b])}, {2, square_simplex(*X, D.square_labels[iota_a])}};
    fam.target = 0;
    const bool compatible = is_compatible(fam);
    r.add("diagonal family (iota_b at 0, iota_a at 2) compatible", true, compatible, fam.describe(),
          json{{"a", G.label(a)}, {"b", G.label(b)}, {"family", to_json(fam)}});
    if (compatible) {
        const FillCertificate cert = brute_force_fill(fam);
        r.add("diagonal family has a filler", false, cert.filled(),
              "exhaustive search over " + std::to_string(cert.candidates_examined) + " candidates in X_{2,2} (" +
                  std::to_string(X->count(2, 2)) + " simplices)",
              to_json(cert));
        r.statistics["diagonal_search"] = {{"candidates_examined", cert.candidates_examined},
                                           {"simplices_2_2", X->count(2, 2)},
                                           {"fillers_found", cert.filled() ? 1 : 0}};
    }
    add_kan_verdict(r, "diagonal Kan up to dim 2", check_kan_fibration(diag, 2, threads), false);
}

inline void eg_tensor_certificate(RunReport& r, const Preset& p, unsigned threads) {
    const auto EG = eg_construction(p.group, 2);
    auto X = std::make_shared<const TruncatedBisimplicialSet>(tensor(EG, EG));
    auto D = std::make_shared<const TruncatedSimplicialSet>(diagonal(*X));
    const auto triv = check_trivial_fibration_to_point(D, 2, threads);
    add_kan_verdict(r, "diagonal trivial fibration up to dim 2", triv, true);

    const auto components = pi0(row(*X, 1));
    json sizes = json::array();
    for (const auto& c : components) sizes.push_back(c.size());
    const auto G = static_cast<std::size_t>(p.group.size());
    r.add("row 1 not contractible (pi0 has more than one component)", true, components.size() > 1,
          std::to_string(components.size()) + " components; |G| = " + std::to_string(G) + ", |G|^2 = " +
              std::to_string(G * G),
          json{{"components", components.size()}, {"component_sizes", sizes}});
    r.statistics["pi0_row_1"] = components.size();
}

} // namespace detail

inline RunReport cmd_counterexample(const CounterexampleOptions& opt) {
    Stopwatch clock;
    const LoadedSource src = load_source({opt.preset, ""});
    const Preset& p = *src.preset;
    RunReport r;
    r.command = "counterexample";
    r.configuration = base_configuration(src, opt.threads);
    if (p.kind == PresetKind::EgTensor) {
        r.configuration["bounds"] = {2, 2};
        detail::eg_tensor_certificate(r, p, opt.threads);
    } else {
        r.configuration["bounds"] = {3, 3};
        detail::group_pair_certificate(r, p, opt.threads);
    }
    r.timing_ms["total"] = clock.elapsed_ms();
    return r;
}

} // namespace bisimp
