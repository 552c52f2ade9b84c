#pragma once

// Compatible families, horn enumeration, exhaustive fillers, Kan and
// trivial-fibration checks, and the recursive partial-horn filler.

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "bisimp/errors.hpp"
#include "bisimp/parallel.hpp"
#include "bisimp/simplicial_set.hpp"

namespace bisimp {

/// Faces x_i in X_{n-1} for i in I together with a target y in Y_n, relative
/// to a simplicial map f : X -> Y. The map is not owned.
struct CompatibleFamily {
    const SimplicialMap* map = nullptr;
    int n = 1;
    std::map<int, SimplexId> faces;
    SimplexId target = 0;

    std::vector<int> index_set() const {
        std::vector<int> out;
        for (const auto& [i, x] : faces) out.push_back(i);
        return out;
    }

    std::string describe() const {
        std::ostringstream os;
        os << "n=" << n << " I={";
        bool first = true;
        for (const auto& [i, x] : faces) {
            os << (first ? "" : ",") << i;
            first = false;
        }
        os << "} faces{";
        first = true;
        for (const auto& [i, x] : faces) {
            os << (first ? "" : ", ") << "x" << i << "=" << map->domain().label({n - 1, x});
            first = false;
        }
        os << "} y=" << map->codomain().label({n, target});
        return os.str();
    }
};

namespace detail {

inline void check_family_shape(const CompatibleFamily& fam) {
    if (!fam.map) throw RejectedInput("family has no simplicial map");
    const auto& X = fam.map->domain();
    const auto& Y = fam.map->codomain();
    if (fam.n < 1) throw RejectedInput("family dimension must be at least 1");
    if (fam.n > X.bound()) throw TruncationError("family dimension " + std::to_string(fam.n) + " exceeds bound");
    for (const auto& [i, x] : fam.faces) {
        if (i < 0 || i > fam.n) throw RejectedInput("face index " + std::to_string(i) + " outside [n]");
        if (x >= X.count(fam.n - 1)) throw RejectedInput("face simplex is not an (n-1)-simplex");
    }
    if (fam.target >= Y.count(fam.n)) throw RejectedInput("target is not an n-simplex of the codomain");
}

} // namespace detail

/// d_i x_j = d_{j-1} x_i for i < j in I, and f x_i = d_i y for i in I.
inline bool is_compatible(const CompatibleFamily& fam) {
    detail::check_family_shape(fam);
    const auto& f = *fam.map;
    const auto& X = f.domain();
    const auto& Y = f.codomain();
    const int n = fam.n;
    for (const auto& [i, xi] : fam.faces)
        if (f(n - 1, xi) != Y.face(n, i, fam.target)) return false;
    if (n >= 2) {
        for (auto a = fam.faces.begin(); a != fam.faces.end(); ++a)
            for (auto b = std::next(a); b != fam.faces.end(); ++b)
                if (X.face(n - 1, a->first, b->second) != X.face(n - 1, b->first - 1, a->second)) return false;
    }
    return true;
}

/// d_i x = x_i for i in I and f x = y.
inline bool fills(const CompatibleFamily& fam, SimplexId x) {
    const auto& f = *fam.map;
    const auto& X = f.domain();
    if (x >= X.count(fam.n) || f(fam.n, x) != fam.target) return false;
    for (const auto& [i, xi] : fam.faces)
        if (X.face(fam.n, i, x) != xi) return false;
    return true;
}

struct FillCertificate {
    enum class Outcome { Filled, Unfillable };

    Outcome outcome = Outcome::Unfillable;
    std::optional<SimplexId> witness;
    CompatibleFamily family;
    std::size_t candidates_examined = 0;
    /// For recursive fillers: the innermost sub-family that failed.
    std::optional<CompatibleFamily> failing_subfamily;

    bool filled() const { return outcome == Outcome::Filled; }

    static FillCertificate make_filled(const CompatibleFamily& fam, SimplexId x, std::size_t examined) {
        if (!fills(fam, x))
            throw InvariantError("claimed filler does not satisfy the family: " + fam.describe());
        FillCertificate c;
        c.outcome = Outcome::Filled;
        c.witness = x;
        c.family = fam;
        c.candidates_examined = examined;
        return c;
    }

    static FillCertificate make_unfillable(const CompatibleFamily& fam, std::size_t examined) {
        FillCertificate c;
        c.family = fam;
        c.candidates_examined = examined;
        return c;
    }
};

/// Exhaustive search of X_n in ascending id order. When I is nonempty the
/// scan is restricted to the simplices whose smallest prescribed face
/// already matches; the first witness found is the same as for a full scan.
inline FillCertificate brute_force_fill(const CompatibleFamily& fam) {
    if (!is_compatible(fam)) throw RejectedInput("brute_force_fill needs a compatible family: " + fam.describe());
    const auto& X = fam.map->domain();
    std::size_t examined = 0;
    auto try_one = [&](SimplexId x) {
        ++examined;
        return fills(fam, x);
    };
    if (fam.faces.empty()) {
        for (SimplexId x = 0; x < X.count(fam.n); ++x)
            if (try_one(x)) return FillCertificate::make_filled(fam, x, examined);
    } else {
        const auto& [i0, x0] = *fam.faces.begin();
        for (SimplexId x : X.face_preimage(fam.n, i0, x0))
            if (try_one(x)) return FillCertificate::make_filled(fam, x, examined);
    }
    return FillCertificate::make_unfillable(fam, examined);
}

/// Visits every f-compatible family with the given index set in dimension n.
/// Order: targets y ascending, then faces lexicographically by index. The
/// visitor returns false to stop. Returns the number of families visited.
template <class Visitor>
std::size_t enumerate_families(const SimplicialMap& f, int n, const std::vector<int>& index_set, Visitor&& visit) {
    const auto& X = f.domain();
    const auto& Y = f.codomain();
    if (n < 1 || n > X.bound()) throw TruncationError("cannot enumerate families in dimension " + std::to_string(n));
    for (std::size_t a = 0; a < index_set.size(); ++a) {
        if (index_set[a] < 0 || index_set[a] > n) throw RejectedInput("index outside [n]");
        if (a > 0 && index_set[a] <= index_set[a - 1]) throw RejectedInput("index set must be strictly increasing");
    }
    // Fibres of f over (n-1)-simplices, ascending.
    std::vector<std::vector<SimplexId>> fibre(Y.count(n - 1));
    for (SimplexId x = 0; x < X.count(n - 1); ++x) fibre[f(n - 1, x)].push_back(x);

    CompatibleFamily fam;
    fam.map = &f;
    fam.n = n;
    std::vector<SimplexId> chosen(index_set.size());
    std::size_t visited = 0;
    bool stop = false;

    std::function<void(std::size_t)> descend = [&](std::size_t depth) {
        if (stop) return;
        if (depth == index_set.size()) {
            fam.faces.clear();
            for (std::size_t a = 0; a < index_set.size(); ++a) fam.faces.emplace(index_set[a], chosen[a]);
            ++visited;
            if (!visit(static_cast<const CompatibleFamily&>(fam))) stop = true;
            return;
        }
        const int j = index_set[depth];
        const SimplexId yface = Y.face(n, j, fam.target);
        auto consistent = [&](SimplexId xj) {
            for (std::size_t a = 0; a < depth; ++a) {
                const int i = index_set[a];
                if (X.face(n - 1, i, xj) != X.face(n - 1, j - 1, chosen[a])) return false;
            }
            return true;
        };
        if (depth > 0 && n >= 2) {
            // d_{i0} x_j is forced by the first chosen face; scan that bucket.
            const int i0 = index_set[0];
            const SimplexId want = X.face(n - 1, j - 1, chosen[0]);
            for (SimplexId xj : X.face_preimage(n - 1, i0, want)) {
                if (f(n - 1, xj) != yface || !consistent(xj)) continue;
                chosen[depth] = xj;
                descend(depth + 1);
                if (stop) return;
            }
        } else {
            for (SimplexId xj : fibre[yface]) {
                chosen[depth] = xj;
                descend(depth + 1);
                if (stop) return;
            }
        }
    };
    for (SimplexId y = 0; y < Y.count(n) && !stop; ++y) {
        fam.target = y;
        descend(0);
    }
    return visited;
}

/// All of [n] except k.
inline std::vector<int> horn_indices(int n, int k) {
    std::vector<int> out;
    for (int i = 0; i <= n; ++i)
        if (i != k) out.push_back(i);
    return out;
}

struct HornCellStats {
    int n = 0;
    int k = -1; ///< missing index; -1 for full boundaries
    std::size_t families = 0;
    std::size_t candidates = 0;
    std::size_t max_search = 0;
    bool passed = true;
};

struct KanReport {
    std::string check;
    int max_dim = 0;
    bool passed = true;
    std::vector<HornCellStats> cells;
    std::optional<FillCertificate> failure;
    /// Copy of the checked map; the failure's family points into it, so the
    /// report stays usable after the caller's map is gone.
    std::shared_ptr<const SimplicialMap> map;

    std::size_t families() const {
        std::size_t s = 0;
        for (const auto& c : cells) s += c.families;
        return s;
    }
};

namespace detail {

struct CellResult {
    HornCellStats stats;
    std::optional<FillCertificate> failure;
};

inline CellResult run_cell(const SimplicialMap& f, int n, int k, const std::vector<int>& indices) {
    CellResult r;
    r.stats.n = n;
    r.stats.k = k;
    r.stats.families = enumerate_families(f, n, indices, [&](const CompatibleFamily& fam) {
        FillCertificate c = brute_force_fill(fam);
        r.stats.candidates += c.candidates_examined;
        r.stats.max_search = std::max(r.stats.max_search, c.candidates_examined);
        if (!c.filled()) {
            r.stats.passed = false;
            r.failure = std::move(c);
            return false;
        }
        return true;
    });
    return r;
}

inline KanReport collect(const SimplicialMap& f, std::string check, int max_dim, std::vector<CellResult>& results) {
    KanReport report;
    report.check = std::move(check);
    report.max_dim = max_dim;
    report.map = std::make_shared<const SimplicialMap>(f);
    for (auto& r : results) {
        report.cells.push_back(r.stats);
        if (!r.stats.passed) {
            report.passed = false;
            report.failure = std::move(r.failure);
            if (report.failure) report.failure->family.map = report.map.get();
            break; // later cells are dropped so the report is schedule independent
        }
    }
    return report;
}

} // namespace detail

/// Every horn (I = [n] minus k) for 1 <= n <= max_dim has a filler.
/// Verdicts hold up to max_dim only.
inline KanReport check_kan_fibration(const SimplicialMap& f, int max_dim, unsigned threads = 1) {
    if (max_dim < 0 || f.bound() < max_dim)
        throw RejectedInput("Kan check to dimension " + std::to_string(max_dim) + " needs bound >= max_dim (bound " +
                            std::to_string(f.bound()) + ")");
    std::vector<std::pair<int, int>> cells;
    for (int n = 1; n <= max_dim; ++n)
        for (int k = 0; k <= n; ++k) cells.emplace_back(n, k);
    std::vector<detail::CellResult> results(cells.size());
    parallel_for(cells.size(), threads, [&](std::size_t c) {
        auto [n, k] = cells[c];
        results[c] = detail::run_cell(f, n, k, horn_indices(n, k));
    });
    return detail::collect(f, "kan-fibration", max_dim, results);
}

/// X_0 nonempty and every full boundary (I = [n]) for 1 <= n <= max_dim has
/// a filler, for the map X -> point.
inline KanReport check_trivial_fibration_to_point(std::shared_ptr<const TruncatedSimplicialSet> X, int max_dim,
                                                  unsigned threads = 1) {
    if (max_dim < 0 || X->bound() < max_dim)
        throw RejectedInput("trivial-fibration check needs bound >= max_dim");
    const SimplicialMap f = SimplicialMap::to_point(X);
    std::vector<detail::CellResult> results(static_cast<std::size_t>(max_dim) + 1);
    results[0].stats.n = 0;
    results[0].stats.families = 1;
    results[0].stats.passed = X->count(0) > 0;
    parallel_for(static_cast<std::size_t>(max_dim), threads, [&](std::size_t c) {
        const int n = static_cast<int>(c) + 1;
        results[c + 1] = detail::run_cell(f, n, -1, horn_indices(n, -1));
    });
    return detail::collect(f, "trivial-fibration-to-point", max_dim, results);
}

/// Fills a full horn (|I| = n) or reports failure.
using FullHornOracle = std::function<FillCertificate(const CompatibleFamily&)>;

/// Fills a compatible family with 1 <= |I| <= n using only full-horn fills.
///
/// If |I| < n, let k be the largest missing index. The family restricted by
/// d_{k-1} (indices below k) and d_k (indices above k, shifted down) is
/// compatible in dimension n-1 with target d_k y; filling it gives a
/// candidate x_k, and the family enlarged by x_k is filled recursively.
inline FillCertificate fill_partial_horn(const CompatibleFamily& fam, const FullHornOracle& oracle) {
    const int n = fam.n;
    const auto r = static_cast<int>(fam.faces.size());
    if (r < 1 || r > n)
        throw RejectedInput("partial horn filling needs 1 <= |I| <= n, got |I|=" + std::to_string(r) +
                            " with n=" + std::to_string(n));
    if (!is_compatible(fam)) throw RejectedInput("family is not compatible: " + fam.describe());

    if (r == n) {
        FillCertificate c = oracle(fam);
        if (c.filled() && !fills(fam, *c.witness))
            throw InvariantError("full-horn oracle returned a wrong filler for " + fam.describe());
        if (!c.filled() && !c.failing_subfamily) c.failing_subfamily = fam;
        return c;
    }

    const auto& X = fam.map->domain();
    const auto& Y = fam.map->codomain();
    int k = n;
    while (fam.faces.count(k)) --k;

    CompatibleFamily sub;
    sub.map = fam.map;
    sub.n = n - 1;
    sub.target = Y.face(n, k, fam.target);
    for (const auto& [i, xi] : fam.faces) {
        if (i < k)
            sub.faces.emplace(i, X.face(n - 1, k - 1, xi));
        else
            sub.faces.emplace(i - 1, X.face(n - 1, k, xi));
    }
    if (!is_compatible(sub)) throw InvariantError("restricted family is not compatible: " + sub.describe());

    FillCertificate lower = fill_partial_horn(sub, oracle);
    if (!lower.filled()) {
        FillCertificate out = FillCertificate::make_unfillable(fam, lower.candidates_examined);
        out.failing_subfamily = lower.failing_subfamily;
        return out;
    }

    CompatibleFamily enlarged = fam;
    enlarged.faces.emplace(k, *lower.witness);
    if (!is_compatible(enlarged)) throw InvariantError("enlarged family is not compatible: " + enlarged.describe());

    FillCertificate upper = fill_partial_horn(enlarged, oracle);
    const std::size_t examined = lower.candidates_examined + upper.candidates_examined;
    if (!upper.filled()) {
        FillCertificate out = FillCertificate::make_unfillable(fam, examined);
        out.failing_subfamily = upper.failing_subfamily;
        return out;
    }
    return FillCertificate::make_filled(fam, *upper.witness, examined);
}

/// The default oracle: exhaustive search on the full horn.
inline FillCertificate brute_force_oracle(const CompatibleFamily& fam) { return brute_force_fill(fam); }

} // namespace bisimp
