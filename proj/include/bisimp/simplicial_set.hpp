#pragma once

// Finite truncated simplicial sets stored as flat face/degeneracy tables.

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "bisimp/errors.hpp"
#include "bisimp/ordinal.hpp"

namespace bisimp {

using SimplexId = std::uint32_t;

/// A simplex is identified by its dimension and a dense id within X_dim.
struct Simplex {
    int dim = 0;
    SimplexId id = 0;

    friend bool operator==(const Simplex&, const Simplex&) = default;
    friend auto operator<=>(const Simplex&, const Simplex&) = default;
};

/// Table of one operator X_n -> X_m, indexed by simplex id.
using Table = std::vector<SimplexId>;

class TruncatedSimplicialSet {
public:
    TruncatedSimplicialSet() : TruncatedSimplicialSet(0, {1}, {{}}, {}) {}

    /// `faces[n][i]` for 1 <= n <= bound (faces[0] must be empty) and
    /// `degeneracies[n][i]` for 0 <= n < bound. Only shapes and ranges are
    /// checked here; the simplicial identities are audited separately by
    /// validate_simplicial_identities().
    TruncatedSimplicialSet(int bound, std::vector<std::size_t> counts, std::vector<std::vector<Table>> faces,
                           std::vector<std::vector<Table>> degeneracies,
                           std::vector<std::vector<std::string>> labels = {})
        : bound_(bound), counts_(std::move(counts)), faces_(std::move(faces)),
          degeneracies_(std::move(degeneracies)), labels_(std::move(labels)) {
        if (bound_ < 0) throw RejectedInput("bound must be nonnegative");
        if (counts_.size() != static_cast<std::size_t>(bound_ + 1))
            throw RejectedInput("need one simplex count per dimension 0..bound");
        if (faces_.size() != counts_.size()) throw RejectedInput("need one face block per dimension");
        if (degeneracies_.size() != static_cast<std::size_t>(bound_))
            throw RejectedInput("need one degeneracy block per dimension 0..bound-1");
        if (!faces_[0].empty()) throw RejectedInput("0-simplices have no faces");
        for (int n = 1; n <= bound_; ++n) {
            if (faces_[n].size() != static_cast<std::size_t>(n + 1))
                throw RejectedInput("dimension " + std::to_string(n) + " needs n+1 face tables");
            for (const Table& t : faces_[n]) check_table(t, counts_[n], counts_[n - 1]);
        }
        for (int n = 0; n < bound_; ++n) {
            if (degeneracies_[n].size() != static_cast<std::size_t>(n + 1))
                throw RejectedInput("dimension " + std::to_string(n) + " needs n+1 degeneracy tables");
            for (const Table& t : degeneracies_[n]) check_table(t, counts_[n], counts_[n + 1]);
        }
        if (!labels_.empty()) {
            if (labels_.size() != counts_.size()) throw RejectedInput("labels must cover every dimension");
            for (int n = 0; n <= bound_; ++n)
                if (labels_[n].size() != counts_[n]) throw RejectedInput("label count mismatch");
        }
        build_preimages();
    }

    /// The constant simplicial set on one point.
    static TruncatedSimplicialSet point(int bound) {
        std::vector<std::size_t> counts(bound + 1, 1);
        std::vector<std::vector<Table>> faces(bound + 1);
        std::vector<std::vector<Table>> degs(bound);
        for (int n = 1; n <= bound; ++n) faces[n].assign(n + 1, Table{0});
        for (int n = 0; n < bound; ++n) degs[n].assign(n + 1, Table{0});
        std::vector<std::vector<std::string>> labels(bound + 1, std::vector<std::string>{"*"});
        return {bound, std::move(counts), std::move(faces), std::move(degs), std::move(labels)};
    }

    /// Builds the tables from a combinatorial model: `enumerate(n)` lists the
    /// n-simplices as keys in id order, `face(n, i, key)` and
    /// `degeneracy(n, i, key)` act on keys of dimension n. `label(key)` is
    /// optional.
    template <class Key, class Enumerate, class Face, class Degen>
    static TruncatedSimplicialSet from_model(int bound, Enumerate&& enumerate, Face&& face, Degen&& degeneracy,
                                             std::function<std::string(const Key&)> label = nullptr) {
        std::vector<std::vector<Key>> keys(bound + 1);
        std::vector<std::map<Key, SimplexId>> index(bound + 1);
        for (int n = 0; n <= bound; ++n) {
            keys[n] = enumerate(n);
            for (std::size_t k = 0; k < keys[n].size(); ++k) {
                auto [it, fresh] = index[n].emplace(keys[n][k], static_cast<SimplexId>(k));
                if (!fresh) throw InvariantError("model enumerated a simplex twice");
            }
        }
        auto lookup = [&](int n, const Key& key) {
            auto it = index[n].find(key);
            if (it == index[n].end())
                throw InvariantError("model operator left the enumerated simplices in dimension " +
                                     std::to_string(n));
            return it->second;
        };
        std::vector<std::size_t> counts(bound + 1);
        std::vector<std::vector<Table>> faces(bound + 1);
        std::vector<std::vector<Table>> degs(bound);
        for (int n = 0; n <= bound; ++n) {
            counts[n] = keys[n].size();
            if (n >= 1) {
                faces[n].assign(n + 1, Table(counts[n]));
                for (int i = 0; i <= n; ++i)
                    for (std::size_t k = 0; k < counts[n]; ++k)
                        faces[n][i][k] = lookup(n - 1, face(n, i, keys[n][k]));
            }
        }
        for (int n = 0; n < bound; ++n) {
            degs[n].assign(n + 1, Table(counts[n]));
            for (int i = 0; i <= n; ++i)
                for (std::size_t k = 0; k < counts[n]; ++k) degs[n][i][k] = lookup(n + 1, degeneracy(n, i, keys[n][k]));
        }
        std::vector<std::vector<std::string>> labels;
        if (label) {
            labels.resize(bound + 1);
            for (int n = 0; n <= bound; ++n)
                for (const Key& key : keys[n]) labels[n].push_back(label(key));
        }
        return {bound, std::move(counts), std::move(faces), std::move(degs), std::move(labels)};
    }

    int bound() const { return bound_; }

    std::size_t count(int n) const {
        if (n < 0 || n > bound_) throw TruncationError(out_of_bound(n));
        return counts_[n];
    }

    std::size_t total_simplices() const { return std::accumulate(counts_.begin(), counts_.end(), std::size_t{0}); }

    /// d_i : X_n -> X_{n-1}.
    SimplexId face(int n, int i, SimplexId x) const {
        if (n < 1 || n > bound_) throw TruncationError("no face maps on dimension " + std::to_string(n) + " (" + out_of_bound(n) + ")");
        if (i < 0 || i > n) throw RejectedInput("face index " + std::to_string(i) + " invalid on dimension " + std::to_string(n));
        return faces_[n][i].at(x);
    }

    /// s_i : X_n -> X_{n+1}.
    SimplexId degeneracy(int n, int i, SimplexId x) const {
        if (n < 0 || n >= bound_)
            throw TruncationError("degeneracy out of dimension " + std::to_string(n) + " leaves bound " +
                                  std::to_string(bound_));
        if (i < 0 || i > n)
            throw RejectedInput("degeneracy index " + std::to_string(i) + " invalid on dimension " + std::to_string(n));
        return degeneracies_[n][i].at(x);
    }

    Simplex face(Simplex x, int i) const { return {x.dim - 1, face(x.dim, i, x.id)}; }
    Simplex degeneracy(Simplex x, int i) const { return {x.dim + 1, degeneracy(x.dim, i, x.id)}; }

    /// Ids x in X_n with d_i x == value, ascending.
    std::span<const SimplexId> face_preimage(int n, int i, SimplexId value) const {
        if (n < 1 || n > bound_) throw TruncationError(out_of_bound(n));
        const auto& pre = preimages_[n][i];
        return {pre.ids.data() + pre.offsets.at(value), pre.ids.data() + pre.offsets.at(value + 1)};
    }

    bool has_labels() const { return !labels_.empty(); }

    std::string label(Simplex x) const {
        if (has_labels()) return labels_.at(x.dim).at(x.id);
        return std::to_string(x.dim) + ":" + std::to_string(x.id);
    }

    const std::vector<std::size_t>& counts() const { return counts_; }
    const std::vector<std::vector<Table>>& face_tables() const { return faces_; }
    const std::vector<std::vector<Table>>& degeneracy_tables() const { return degeneracies_; }
    const std::vector<std::vector<std::string>>& labels() const { return labels_; }

    friend bool operator==(const TruncatedSimplicialSet& a, const TruncatedSimplicialSet& b) {
        return a.bound_ == b.bound_ && a.counts_ == b.counts_ && a.faces_ == b.faces_ &&
               a.degeneracies_ == b.degeneracies_;
    }

private:
    struct Preimage {
        std::vector<std::size_t> offsets;
        std::vector<SimplexId> ids;
    };

    static void check_table(const Table& t, std::size_t from, std::size_t to) {
        if (t.size() != from) throw RejectedInput("operator table has the wrong length");
        for (SimplexId v : t)
            if (v >= to) throw RejectedInput("operator table entry out of range");
    }

    std::string out_of_bound(int n) const {
        return "dimension " + std::to_string(n) + " outside truncation bound " + std::to_string(bound_);
    }

    void build_preimages() {
        preimages_.assign(bound_ + 1, {});
        for (int n = 1; n <= bound_; ++n) {
            preimages_[n].resize(n + 1);
            for (int i = 0; i <= n; ++i) {
                Preimage& pre = preimages_[n][i];
                const Table& t = faces_[n][i];
                pre.offsets.assign(counts_[n - 1] + 1, 0);
                for (SimplexId v : t) ++pre.offsets[v + 1];
                std::partial_sum(pre.offsets.begin(), pre.offsets.end(), pre.offsets.begin());
                pre.ids.resize(t.size());
                std::vector<std::size_t> cursor(pre.offsets.begin(), pre.offsets.end() - 1);
                for (std::size_t k = 0; k < t.size(); ++k) pre.ids[cursor[t[k]]++] = static_cast<SimplexId>(k);
            }
        }
    }

    int bound_;
    std::vector<std::size_t> counts_;
    std::vector<std::vector<Table>> faces_;
    std::vector<std::vector<Table>> degeneracies_;
    std::vector<std::vector<std::string>> labels_;
    std::vector<std::vector<Preimage>> preimages_;
};

/// Applies a written-order word (rightmost token first) to x.
inline Simplex apply_word(const TruncatedSimplicialSet& X, const Word& word, Simplex x) {
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        if (it->kind == Token::Kind::Face) {
            if (x.dim < 1) throw TruncationError("face applied to a 0-simplex");
            x = X.face(x, it->index);
        } else {
            if (x.dim + 1 > X.bound())
                throw TruncationError("operator climbs to dimension " + std::to_string(x.dim + 1) +
                                      " past bound " + std::to_string(X.bound()));
            x = X.degeneracy(x, it->index);
        }
    }
    return x;
}

inline Simplex apply_operator(const TruncatedSimplicialSet& X, const SimplicialOperator& op, Simplex x) {
    if (x.dim != op.source_dim())
        throw RejectedInput("operator acts on dimension " + std::to_string(op.source_dim()) + ", simplex has " +
                            std::to_string(x.dim));
    return apply_word(X, op.tokens(), x);
}

/// alpha^* x for an arbitrary ordinal map alpha : [m] -> [x.dim].
inline Simplex apply_ordinal(const TruncatedSimplicialSet& X, const OrdinalMap& alpha, Simplex x) {
    return apply_operator(X, factorize(alpha), x);
}

struct IdentityViolation {
    std::string identity;
    Simplex witness;
    Simplex lhs;
    Simplex rhs;
};

struct ValidationReport {
    std::vector<IdentityViolation> violations;
    std::size_t checks = 0;
    bool ok() const { return violations.empty(); }
};

/// Audits every basic simplicial identity on every simplex where both sides
/// stay inside the bound, plus injectivity of degeneracies.
inline ValidationReport validate_simplicial_identities(const TruncatedSimplicialSet& X) {
    ValidationReport report;
    const int N = X.bound();
    for (int n = 0; n <= N; ++n) {
        for (int fam = 1; fam <= 5; ++fam) {
            for (int i = 0; i <= n + 2; ++i) {
                for (int j = 0; j <= n + 2; ++j) {
                    auto inst = basic_identity(fam, i, j, n);
                    if (!inst) continue;
                    auto top = [&](const Word& w) {
                        int dim = n, peak = n;
                        for (auto it = w.rbegin(); it != w.rend(); ++it) {
                            dim += it->kind == Token::Kind::Face ? -1 : 1;
                            peak = std::max(peak, dim);
                        }
                        return peak;
                    };
                    if (top(inst->lhs) > N || top(inst->rhs) > N) continue;
                    for (SimplexId x = 0; x < X.count(n); ++x) {
                        ++report.checks;
                        Simplex s{n, x};
                        Simplex l = apply_word(X, inst->lhs, s);
                        Simplex r = apply_word(X, inst->rhs, s);
                        if (l != r) report.violations.push_back({inst->name, s, l, r});
                    }
                }
            }
        }
    }
    for (int n = 0; n < N; ++n) {
        for (int i = 0; i <= n; ++i) {
            std::vector<SimplexId> seen(X.count(n + 1), static_cast<SimplexId>(-1));
            for (SimplexId x = 0; x < X.count(n); ++x) {
                ++report.checks;
                SimplexId y = X.degeneracy(n, i, x);
                if (seen[y] != static_cast<SimplexId>(-1)) {
                    report.violations.push_back({"degeneracy s" + std::to_string(i) + " not injective", {n, x},
                                                 {n + 1, y}, {n, seen[y]}});
                } else {
                    seen[y] = x;
                }
            }
        }
    }
    return report;
}

/// A simplicial map between truncated sets of the same bound.
class SimplicialMap {
public:
    SimplicialMap(std::shared_ptr<const TruncatedSimplicialSet> domain,
                  std::shared_ptr<const TruncatedSimplicialSet> codomain, std::vector<Table> components)
        : domain_(std::move(domain)), codomain_(std::move(codomain)), components_(std::move(components)) {
        if (!domain_ || !codomain_) throw RejectedInput("simplicial map needs a domain and codomain");
        if (domain_->bound() != codomain_->bound()) throw RejectedInput("domain and codomain bounds differ");
        if (components_.size() != static_cast<std::size_t>(domain_->bound() + 1))
            throw RejectedInput("need one component per dimension");
        for (int n = 0; n <= domain_->bound(); ++n) {
            if (components_[n].size() != domain_->count(n)) throw RejectedInput("component has the wrong length");
            for (SimplexId v : components_[n])
                if (v >= codomain_->count(n)) throw RejectedInput("component entry out of range");
        }
    }

    static SimplicialMap identity(std::shared_ptr<const TruncatedSimplicialSet> X) {
        std::vector<Table> comps(X->bound() + 1);
        for (int n = 0; n <= X->bound(); ++n) {
            comps[n].resize(X->count(n));
            std::iota(comps[n].begin(), comps[n].end(), SimplexId{0});
        }
        return {X, X, std::move(comps)};
    }

    static SimplicialMap to_point(std::shared_ptr<const TruncatedSimplicialSet> X) {
        auto pt = std::make_shared<const TruncatedSimplicialSet>(TruncatedSimplicialSet::point(X->bound()));
        std::vector<Table> comps(X->bound() + 1);
        for (int n = 0; n <= X->bound(); ++n) comps[n].assign(X->count(n), 0);
        return {std::move(X), std::move(pt), std::move(comps)};
    }

    const TruncatedSimplicialSet& domain() const { return *domain_; }
    const TruncatedSimplicialSet& codomain() const { return *codomain_; }
    std::shared_ptr<const TruncatedSimplicialSet> domain_ptr() const { return domain_; }
    std::shared_ptr<const TruncatedSimplicialSet> codomain_ptr() const { return codomain_; }
    int bound() const { return domain_->bound(); }

    SimplexId operator()(int n, SimplexId x) const { return components_.at(n).at(x); }
    Simplex operator()(Simplex x) const { return {x.dim, (*this)(x.dim, x.id)}; }

    const std::vector<Table>& components() const { return components_; }

private:
    std::shared_ptr<const TruncatedSimplicialSet> domain_;
    std::shared_ptr<const TruncatedSimplicialSet> codomain_;
    std::vector<Table> components_;
};

/// Naturality audit: f d_i = d_i f and f s_i = s_i f on every simplex.
inline ValidationReport validate_naturality(const SimplicialMap& f) {
    ValidationReport report;
    const auto& X = f.domain();
    const auto& Y = f.codomain();
    for (int n = 0; n <= f.bound(); ++n) {
        for (SimplexId x = 0; x < X.count(n); ++x) {
            for (int i = 0; n >= 1 && i <= n; ++i) {
                ++report.checks;
                Simplex l{n - 1, f(n - 1, X.face(n, i, x))};
                Simplex r{n - 1, Y.face(n, i, f(n, x))};
                if (l != r) report.violations.push_back({"f d" + std::to_string(i) + " = d" + std::to_string(i) + " f", {n, x}, l, r});
            }
            for (int i = 0; n < f.bound() && i <= n; ++i) {
                ++report.checks;
                Simplex l{n + 1, f(n + 1, X.degeneracy(n, i, x))};
                Simplex r{n + 1, Y.degeneracy(n, i, f(n, x))};
                if (l != r) report.violations.push_back({"f s" + std::to_string(i) + " = s" + std::to_string(i) + " f", {n, x}, l, r});
            }
        }
    }
    return report;
}

/// Disjoint-set forest with path halving and union by size.
class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1), components_(n) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        --components_;
        return true;
    }

    std::size_t components() const { return components_; }

private:
    std::vector<std::size_t> parent_;
    std::vector<std::size_t> size_;
    std::size_t components_;
};

/// Connected components of X_0 under d_0 x ~ d_1 x. Each component is listed
/// with ascending vertex ids; components are ordered by their smallest vertex.
inline std::vector<std::vector<SimplexId>> pi0(const TruncatedSimplicialSet& X) {
    if (X.bound() < 1) throw TruncationError("pi0 needs the 1-simplices (bound >= 1)");
    UnionFind uf(X.count(0));
    for (SimplexId e = 0; e < X.count(1); ++e) uf.unite(X.face(1, 0, e), X.face(1, 1, e));
    std::map<std::size_t, std::size_t> slot;
    std::vector<std::vector<SimplexId>> out;
    for (SimplexId v = 0; v < X.count(0); ++v) {
        auto [it, fresh] = slot.emplace(uf.find(v), out.size());
        if (fresh) out.emplace_back();
        out[it->second].push_back(v);
    }
    return out;
}

} // namespace bisimp
