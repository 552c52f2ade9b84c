#pragma once

// Pointwise horn filling in a bisimplicial map f : X -> Y from partial-horn
// filling in diag f. Given an f_{p,*}-horn (x_i for i != l, y) the faces are
// pushed up to the diagonal by degeneracies, filled there, and pulled back
// down by faces; every intermediate claim is checked at runtime.

#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "bisimp/bisimplicial.hpp"
#include "bisimp/errors.hpp"
#include "bisimp/kan.hpp"
#include "bisimp/parallel.hpp"

namespace bisimp {

/// Faces x_i in X_{p,q-1} for i != missing, and y in Y_{p,q}.
struct PointwiseHornProblem {
    const BisimplicialMap* map = nullptr;
    int p = 0;
    int q = 1;
    int missing = 0;
    std::map<int, SimplexId> faces;
    SimplexId target = 0;

    std::string describe() const {
        std::ostringstream os;
        os << "(p=" << p << ", q=" << q << ", l=" << missing << ") faces{";
        bool first = true;
        for (const auto& [i, x] : faces) {
            os << (first ? "" : ", ") << "x" << i << "=" << map->domain().label({p, q - 1, x});
            first = false;
        }
        os << "} y=" << map->codomain().label({p, q, target});
        return os.str();
    }
};

/// One step of an iterated bisimplicial operator: `power` repetitions of a
/// single horizontal or vertical face or degeneracy.
struct BiStep {
    enum class Dir { Horizontal, Vertical };
    Dir dir;
    Token::Kind kind;
    int index;
    int power;
};

/// Applies steps written left to right, rightmost first, one table lookup
/// per repetition.
inline Bisimplex apply_steps(const TruncatedBisimplicialSet& X, const std::vector<BiStep>& steps, Bisimplex x) {
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
        for (int r = 0; r < it->power; ++r) {
            const bool h = it->dir == BiStep::Dir::Horizontal;
            if (it->kind == Token::Kind::Face)
                x = h ? X.hface(x, it->index) : X.vface(x, it->index);
            else
                x = h ? X.hdeg(x, it->index) : X.vdeg(x, it->index);
        }
    }
    return x;
}

inline BiStep hdeg_pow(int i, int power) { return {BiStep::Dir::Horizontal, Token::Kind::Degeneracy, i, power}; }
inline BiStep vdeg_pow(int i, int power) { return {BiStep::Dir::Vertical, Token::Kind::Degeneracy, i, power}; }
inline BiStep hface_pow(int i, int power) { return {BiStep::Dir::Horizontal, Token::Kind::Face, i, power}; }
inline BiStep vface_pow(int i, int power) { return {BiStep::Dir::Vertical, Token::Kind::Face, i, power}; }

/// Counters for the runtime checks made by the construction.
struct ConstructionAudit {
    std::size_t families_built = 0;
    std::size_t compatibility_passed = 0;
    std::size_t dimension_checks = 0;
    std::size_t relations_checked = 0;

    ConstructionAudit& operator+=(const ConstructionAudit& o) {
        families_built += o.families_built;
        compatibility_passed += o.compatibility_passed;
        dimension_checks += o.dimension_checks;
        relations_checked += o.relations_checked;
        return *this;
    }
};

namespace detail {

inline void expect_dims(Bisimplex x, int p, int q, const char* what, ConstructionAudit* audit) {
    if (x.p != p || x.q != q) {
        std::ostringstream os;
        os << what << " landed in (" << x.p << "," << x.q << "), expected (" << p << "," << q << ")";
        throw InvariantError(os.str());
    }
    if (audit) ++audit->dimension_checks;
}

inline void check_problem(const PointwiseHornProblem& pr) {
    if (!pr.map) throw RejectedInput("problem has no bisimplicial map");
    const auto& X = pr.map->domain();
    const auto& Y = pr.map->codomain();
    if (pr.p < 0 || pr.q < 1 || pr.missing < 0 || pr.missing > pr.q)
        throw RejectedInput("need p >= 0, q >= 1 and 0 <= l <= q");
    const int top = pr.p + pr.q;
    if (X.horizontal_bound() < top || X.vertical_bound() < top)
        throw RejectedInput("bisimplicial bounds must reach (p+q, p+q) = (" + std::to_string(top) + "," +
                            std::to_string(top) + ")");
    for (int i = 0; i <= pr.q; ++i)
        if ((i == pr.missing) == (pr.faces.count(i) == 1))
            throw RejectedInput("faces must be given exactly for i != l");
    for (const auto& [i, x] : pr.faces)
        if (x >= X.count(pr.p, pr.q - 1)) throw RejectedInput("face is not a (p,q-1)-bisimplex");
    if (pr.target >= Y.count(pr.p, pr.q)) throw RejectedInput("target is not a (p,q)-bisimplex");
    const auto& f = *pr.map;
    for (const auto& [i, x] : pr.faces)
        if (f(pr.p, pr.q - 1, x) != Y.vface(pr.p, pr.q, i, pr.target))
            throw RejectedInput("problem is not f_{p,*}-compatible: f x_" + std::to_string(i) + " != d_" +
                                std::to_string(i) + "^v y");
    if (pr.q >= 2)
        for (auto a = pr.faces.begin(); a != pr.faces.end(); ++a)
            for (auto b = std::next(a); b != pr.faces.end(); ++b)
                if (X.vface(pr.p, pr.q - 1, a->first, b->second) != X.vface(pr.p, pr.q - 1, b->first - 1, a->second))
                    throw RejectedInput("problem is not f_{p,*}-compatible: d_" + std::to_string(a->first) + "^v x_" +
                                        std::to_string(b->first) + " != d_" + std::to_string(b->first - 1) + "^v x_" +
                                        std::to_string(a->first));
}

} // namespace detail

/// Index set I = {i : 0 <= i < l} U {p+i : l < i <= q} in [p+q].
inline std::vector<int> diagonal_index_set(int p, int q, int l) {
    std::vector<int> out;
    for (int i = 0; i < l; ++i) out.push_back(i);
    for (int i = l + 1; i <= q; ++i) out.push_back(p + i);
    return out;
}

/// The diagonal family of a pointwise problem, on diag_f (which must be
/// diagonal_map(*problem.map)):
///   xbar_i     = (s_0^h)^{l-1} (s_p^h)^{q-l}   (s_{l-1}^v)^p x_i   (0 <= i < l)
///   xbar_{p+i} = (s_0^h)^{l}   (s_p^h)^{q-l-1} (s_l^v)^p     x_i   (l < i <= q)
///   ybar       = (s_0^h)^{l}   (s_p^h)^{q-l}   (s_l^v)^p     y
/// The result is asserted diag f-compatible.
inline CompatibleFamily build_diagonal_family(const PointwiseHornProblem& pr, const SimplicialMap& diag_f,
                                              ConstructionAudit* audit = nullptr) {
    detail::check_problem(pr);
    const auto& X = pr.map->domain();
    const auto& Y = pr.map->codomain();
    const int p = pr.p, q = pr.q, l = pr.missing, n = p + q;
    if (diag_f.bound() < n) throw RejectedInput("diagonal map is truncated below p+q");

    CompatibleFamily fam;
    fam.map = &diag_f;
    fam.n = n;
    for (const auto& [i, xi] : pr.faces) {
        const Bisimplex x{p, q - 1, xi};
        Bisimplex bar;
        int slot;
        if (i < l) {
            bar = apply_steps(X, {hdeg_pow(0, l - 1), hdeg_pow(p, q - l), vdeg_pow(l - 1, p)}, x);
            slot = i;
        } else {
            bar = apply_steps(X, {hdeg_pow(0, l), hdeg_pow(p, q - l - 1), vdeg_pow(l, p)}, x);
            slot = p + i;
        }
        detail::expect_dims(bar, n - 1, n - 1, "diagonal face", audit);
        fam.faces.emplace(slot, bar.id);
    }
    const Bisimplex ybar = apply_steps(Y, {hdeg_pow(0, l), hdeg_pow(p, q - l), vdeg_pow(l, p)}, {p, q, pr.target});
    detail::expect_dims(ybar, n, n, "diagonal target", audit);
    fam.target = ybar.id;

    if (fam.index_set() != diagonal_index_set(p, q, l)) throw InvariantError("diagonal index set mismatch");
    if (!is_compatible(fam))
        throw InvariantError("diagonal family is not diag f-compatible for " + pr.describe() + ": " + fam.describe());
    if (audit) {
        ++audit->families_built;
        ++audit->compatibility_passed;
    }
    return fam;
}

/// Fills a compatible diagonal family with 1 <= |I| <= n.
using PartialHornOracle = std::function<FillCertificate(const CompatibleFamily&)>;

inline PartialHornOracle default_partial_oracle() {
    return [](const CompatibleFamily& fam) { return fill_partial_horn(fam, brute_force_oracle); };
}

struct PointwiseFill {
    bool filled = false;
    CompatibleFamily diagonal_family;
    FillCertificate diagonal_certificate;
    std::optional<SimplexId> diagonal_filler; ///< xbar in X_{p+q,p+q}
    std::optional<SimplexId> answer;          ///< x in X_{p,q}
};

/// Solves the problem through the diagonal; on success x satisfies
/// d_i^v x = x_i for every i != l and f x = y (asserted).
inline PointwiseFill pointwise_filler_via_diagonal(const PointwiseHornProblem& pr, const SimplicialMap& diag_f,
                                                   const PartialHornOracle& oracle,
                                                   ConstructionAudit* audit = nullptr) {
    PointwiseFill out;
    out.diagonal_family = build_diagonal_family(pr, diag_f, audit);
    out.diagonal_certificate = oracle(out.diagonal_family);
    if (!out.diagonal_certificate.filled()) return out;

    const auto& X = pr.map->domain();
    const auto& f = *pr.map;
    const int p = pr.p, q = pr.q, l = pr.missing, n = p + q;
    const SimplexId xbar = *out.diagonal_certificate.witness;
    if (!fills(out.diagonal_family, xbar)) throw InvariantError("diagonal oracle returned a wrong filler");
    out.diagonal_filler = xbar;

    // x = (d_{p+1}^h)^{q-l} (d_0^h)^l (d_l^v)^p xbar
    const Bisimplex x = apply_steps(X, {hface_pow(p + 1, q - l), hface_pow(0, l), vface_pow(l, p)}, {n, n, xbar});
    detail::expect_dims(x, p, q, "pointwise filler", audit);

    for (const auto& [i, xi] : pr.faces) {
        if (X.vface(p, q, i, x.id) != xi)
            throw InvariantError("relation d_" + std::to_string(i) + "^v x = x_" + std::to_string(i) + " fails for " +
                                 pr.describe());
        if (audit) ++audit->relations_checked;
    }
    if (f(p, q, x.id) != pr.target) throw InvariantError("relation f x = y fails for " + pr.describe());
    if (audit) ++audit->relations_checked;
    out.filled = true;
    out.answer = x.id;
    return out;
}

struct SweepCell {
    int p = 0;
    int q = 0;
    int missing = 0;
    std::size_t problems = 0;
    std::size_t fills = 0;
    std::size_t max_search = 0;
    bool passed = true;
};

struct Theorem1Report {
    int max_total_dim = 0;
    KanReport diagonal_check;
    std::vector<SweepCell> direct;
    std::vector<SweepCell> transposed;
    ConstructionAudit audit;
    bool passed = true;
    std::optional<std::string> failure;

    std::size_t problems() const {
        std::size_t s = 0;
        for (const auto& c : direct) s += c.problems;
        for (const auto& c : transposed) s += c.problems;
        return s;
    }
};

namespace detail {

struct SweepOutcome {
    std::vector<SweepCell> cells;
    ConstructionAudit audit;
    std::optional<std::string> failure;
};

inline SweepOutcome sweep_columns(const BisimplicialMap& f, int N, unsigned threads,
                                  const std::function<PartialHornOracle(const SimplicialMap&)>& make_oracle) {
    const SimplicialMap diag_f = diagonal_map(f);
    const PartialHornOracle oracle = make_oracle(diag_f);
    std::vector<std::tuple<int, int, int>> keys;
    for (int p = 0; p < N; ++p)
        for (int q = 1; p + q <= N; ++q)
            for (int l = 0; l <= q; ++l) keys.emplace_back(p, q, l);
    std::vector<SimplicialMap> columns;
    for (int p = 0; p < N; ++p) columns.push_back(column_map(f, p));

    struct Result {
        SweepCell cell;
        ConstructionAudit audit;
        std::optional<std::string> failure;
    };
    std::vector<Result> results(keys.size());
    parallel_for(keys.size(), threads, [&](std::size_t c) {
        auto [p, q, l] = keys[c];
        Result& r = results[c];
        r.cell.p = p;
        r.cell.q = q;
        r.cell.missing = l;
        r.cell.problems = enumerate_families(columns[p], q, horn_indices(q, l), [&](const CompatibleFamily& col) {
            PointwiseHornProblem pr{&f, p, q, l, col.faces, col.target};
            PointwiseFill fill = pointwise_filler_via_diagonal(pr, diag_f, oracle, &r.audit);
            r.cell.max_search = std::max(r.cell.max_search, fill.diagonal_certificate.candidates_examined);
            if (!fill.filled) {
                r.cell.passed = false;
                r.failure = "diagonal oracle could not fill the family for " + pr.describe();
                return false;
            }
            ++r.cell.fills;
            return true;
        });
    });
    SweepOutcome out;
    for (auto& r : results) {
        out.cells.push_back(r.cell);
        out.audit += r.audit;
        if (!r.cell.passed && !out.failure) out.failure = r.failure;
    }
    return out;
}

} // namespace detail

/// Requires diag f to pass the Kan check up to max_total_dim, then solves
/// every pointwise horn problem with p+q <= max_total_dim through the
/// diagonal, for f and for its transpose. `make_oracle` builds the
/// partial-horn oracle for a given diagonal map.
inline Theorem1Report verify_theorem1_sweep(
    const BisimplicialMap& f, int max_total_dim, unsigned threads = 1,
    std::function<PartialHornOracle(const SimplicialMap&)> make_oracle = nullptr) {
    if (!make_oracle) make_oracle = [](const SimplicialMap&) { return default_partial_oracle(); };
    const auto& X = f.domain();
    if (max_total_dim < 1 || X.horizontal_bound() < max_total_dim || X.vertical_bound() < max_total_dim)
        throw RejectedInput("sweep to total dimension " + std::to_string(max_total_dim) +
                            " needs bisimplicial bounds of at least that in both directions");
    Theorem1Report report;
    report.max_total_dim = max_total_dim;
    const SimplicialMap diag_f = diagonal_map(f);
    report.diagonal_check = check_kan_fibration(diag_f, max_total_dim, threads);
    if (!report.diagonal_check.passed)
        throw RejectedInput("diag f is not a Kan fibration up to dimension " + std::to_string(max_total_dim) +
                            "; failing horn " + report.diagonal_check.failure->family.describe());

    auto direct = detail::sweep_columns(f, max_total_dim, threads, make_oracle);
    auto trans = detail::sweep_columns(transpose_map(f), max_total_dim, threads, make_oracle);
    report.direct = std::move(direct.cells);
    report.transposed = std::move(trans.cells);
    report.audit = direct.audit;
    report.audit += trans.audit;
    report.failure = direct.failure ? direct.failure : trans.failure;
    report.passed = !report.failure;
    return report;
}

} // namespace bisimp
