#pragma once

// Truncated bisimplicial sets: X_{p,q} with horizontal operators on the first
// index and vertical operators on the second.

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "bisimp/errors.hpp"
#include "bisimp/simplicial_set.hpp"

namespace bisimp {

struct Bisimplex {
    int p = 0;
    int q = 0;
    SimplexId id = 0;

    friend bool operator==(const Bisimplex&, const Bisimplex&) = default;
};

template <class T>
using Grid = std::vector<std::vector<T>>; // indexed [p][q]

class TruncatedBisimplicialSet {
public:
    /// Tables are indexed [p][q][i]. Horizontal faces exist for p >= 1,
    /// horizontal degeneracies for p < P, and likewise vertically.
    TruncatedBisimplicialSet(int P, int Q, Grid<std::size_t> counts, Grid<std::vector<Table>> hfaces,
                             Grid<std::vector<Table>> hdegs, Grid<std::vector<Table>> vfaces,
                             Grid<std::vector<Table>> vdegs, Grid<std::vector<std::string>> labels = {})
        : P_(P), Q_(Q), counts_(std::move(counts)), hfaces_(std::move(hfaces)), hdegs_(std::move(hdegs)),
          vfaces_(std::move(vfaces)), vdegs_(std::move(vdegs)), labels_(std::move(labels)) {
        if (P_ < 0 || Q_ < 0) throw RejectedInput("bisimplicial bounds must be nonnegative");
        auto shape = [&](const auto& g) {
            if (g.size() != static_cast<std::size_t>(P_ + 1)) return false;
            for (const auto& col : g)
                if (col.size() != static_cast<std::size_t>(Q_ + 1)) return false;
            return true;
        };
        if (!shape(counts_) || !shape(hfaces_) || !shape(hdegs_) || !shape(vfaces_) || !shape(vdegs_))
            throw RejectedInput("bisimplicial tables must be (P+1) x (Q+1)");
        if (!labels_.empty() && !shape(labels_)) throw RejectedInput("label grid has the wrong shape");
        for (int p = 0; p <= P_; ++p) {
            for (int q = 0; q <= Q_; ++q) {
                check_block(hfaces_[p][q], p >= 1 ? p + 1 : 0, counts_[p][q], p >= 1 ? counts_[p - 1][q] : 0);
                check_block(hdegs_[p][q], p < P_ ? p + 1 : 0, counts_[p][q], p < P_ ? counts_[p + 1][q] : 0);
                check_block(vfaces_[p][q], q >= 1 ? q + 1 : 0, counts_[p][q], q >= 1 ? counts_[p][q - 1] : 0);
                check_block(vdegs_[p][q], q < Q_ ? q + 1 : 0, counts_[p][q], q < Q_ ? counts_[p][q + 1] : 0);
                if (!labels_.empty() && labels_[p][q].size() != counts_[p][q])
                    throw RejectedInput("label count mismatch");
            }
        }
    }

    static TruncatedBisimplicialSet point(int P, int Q) {
        return from_model<int>(
            P, Q, [](int, int) { return std::vector<int>{0}; }, [](int, int, int, int) { return 0; },
            [](int, int, int, int) { return 0; }, [](int, int, int, int) { return 0; },
            [](int, int, int, int) { return 0; }, [](const int&) { return std::string("*"); });
    }

    /// Builds tables from a model: `enumerate(p, q)` lists keys in id order;
    /// the four operators map (p, q, i, key) to a key in the target bidegree.
    template <class Key, class Enumerate, class HFace, class HDeg, class VFace, class VDeg>
    static TruncatedBisimplicialSet from_model(int P, int Q, Enumerate&& enumerate, HFace&& hface, HDeg&& hdeg,
                                               VFace&& vface, VDeg&& vdeg,
                                               std::function<std::string(const Key&)> label = nullptr) {
        Grid<std::vector<Key>> keys(P + 1, std::vector<std::vector<Key>>(Q + 1));
        Grid<std::map<Key, SimplexId>> index(P + 1, std::vector<std::map<Key, SimplexId>>(Q + 1));
        Grid<std::size_t> counts(P + 1, std::vector<std::size_t>(Q + 1));
        for (int p = 0; p <= P; ++p) {
            for (int q = 0; q <= Q; ++q) {
                keys[p][q] = enumerate(p, q);
                counts[p][q] = keys[p][q].size();
                for (std::size_t k = 0; k < keys[p][q].size(); ++k)
                    if (!index[p][q].emplace(keys[p][q][k], static_cast<SimplexId>(k)).second)
                        throw InvariantError("model enumerated a bisimplex twice");
            }
        }
        auto lookup = [&](int p, int q, const Key& key) {
            auto it = index[p][q].find(key);
            if (it == index[p][q].end())
                throw InvariantError("model operator left the enumerated bisimplices at (" + std::to_string(p) + "," +
                                     std::to_string(q) + ")");
            return it->second;
        };
        auto empty_grid = [&] { return Grid<std::vector<Table>>(P + 1, std::vector<std::vector<Table>>(Q + 1)); };
        auto hf = empty_grid(), hd = empty_grid(), vf = empty_grid(), vd = empty_grid();
        for (int p = 0; p <= P; ++p) {
            for (int q = 0; q <= Q; ++q) {
                const auto& ks = keys[p][q];
                auto fill = [&](std::vector<Table>& block, int ops, int tp, int tq, auto&& op) {
                    block.assign(ops, Table(ks.size()));
                    for (int i = 0; i < ops; ++i)
                        for (std::size_t k = 0; k < ks.size(); ++k) block[i][k] = lookup(tp, tq, op(p, q, i, ks[k]));
                };
                if (p >= 1) fill(hf[p][q], p + 1, p - 1, q, hface);
                if (p < P) fill(hd[p][q], p + 1, p + 1, q, hdeg);
                if (q >= 1) fill(vf[p][q], q + 1, p, q - 1, vface);
                if (q < Q) fill(vd[p][q], q + 1, p, q + 1, vdeg);
            }
        }
        Grid<std::vector<std::string>> labels;
        if (label) {
            labels.assign(P + 1, std::vector<std::vector<std::string>>(Q + 1));
            for (int p = 0; p <= P; ++p)
                for (int q = 0; q <= Q; ++q)
                    for (const Key& key : keys[p][q]) labels[p][q].push_back(label(key));
        }
        return {P, Q, std::move(counts), std::move(hf), std::move(hd), std::move(vf), std::move(vd), std::move(labels)};
    }

    int horizontal_bound() const { return P_; }
    int vertical_bound() const { return Q_; }

    std::size_t count(int p, int q) const {
        check_bidegree(p, q);
        return counts_[p][q];
    }

    /// d_i^h : X_{p,q} -> X_{p-1,q}
    SimplexId hface(int p, int q, int i, SimplexId x) const {
        check_bidegree(p, q);
        if (p < 1) throw TruncationError("no horizontal faces at p=0");
        if (i < 0 || i > p) throw RejectedInput("horizontal face index out of range");
        return hfaces_[p][q][i].at(x);
    }
    /// s_i^h : X_{p,q} -> X_{p+1,q}
    SimplexId hdeg(int p, int q, int i, SimplexId x) const {
        check_bidegree(p, q);
        if (p >= P_) throw TruncationError("horizontal degeneracy leaves bound P=" + std::to_string(P_));
        if (i < 0 || i > p) throw RejectedInput("horizontal degeneracy index out of range");
        return hdegs_[p][q][i].at(x);
    }
    /// d_i^v : X_{p,q} -> X_{p,q-1}
    SimplexId vface(int p, int q, int i, SimplexId x) const {
        check_bidegree(p, q);
        if (q < 1) throw TruncationError("no vertical faces at q=0");
        if (i < 0 || i > q) throw RejectedInput("vertical face index out of range");
        return vfaces_[p][q][i].at(x);
    }
    /// s_i^v : X_{p,q} -> X_{p,q+1}
    SimplexId vdeg(int p, int q, int i, SimplexId x) const {
        check_bidegree(p, q);
        if (q >= Q_) throw TruncationError("vertical degeneracy leaves bound Q=" + std::to_string(Q_));
        if (i < 0 || i > q) throw RejectedInput("vertical degeneracy index out of range");
        return vdegs_[p][q][i].at(x);
    }

    Bisimplex hface(Bisimplex x, int i) const { return {x.p - 1, x.q, hface(x.p, x.q, i, x.id)}; }
    Bisimplex hdeg(Bisimplex x, int i) const { return {x.p + 1, x.q, hdeg(x.p, x.q, i, x.id)}; }
    Bisimplex vface(Bisimplex x, int i) const { return {x.p, x.q - 1, vface(x.p, x.q, i, x.id)}; }
    Bisimplex vdeg(Bisimplex x, int i) const { return {x.p, x.q + 1, vdeg(x.p, x.q, i, x.id)}; }

    bool has_labels() const { return !labels_.empty(); }
    std::string label(Bisimplex x) const {
        if (has_labels()) return labels_.at(x.p).at(x.q).at(x.id);
        return "(" + std::to_string(x.p) + "," + std::to_string(x.q) + "):" + std::to_string(x.id);
    }

    const Grid<std::size_t>& counts() const { return counts_; }
    const Grid<std::vector<Table>>& hface_tables() const { return hfaces_; }
    const Grid<std::vector<Table>>& hdeg_tables() const { return hdegs_; }
    const Grid<std::vector<Table>>& vface_tables() const { return vfaces_; }
    const Grid<std::vector<Table>>& vdeg_tables() const { return vdegs_; }
    const Grid<std::vector<std::string>>& labels() const { return labels_; }

    friend bool operator==(const TruncatedBisimplicialSet& a, const TruncatedBisimplicialSet& b) {
        return a.P_ == b.P_ && a.Q_ == b.Q_ && a.counts_ == b.counts_ && a.hfaces_ == b.hfaces_ &&
               a.hdegs_ == b.hdegs_ && a.vfaces_ == b.vfaces_ && a.vdegs_ == b.vdegs_;
    }

private:
    void check_bidegree(int p, int q) const {
        if (p < 0 || q < 0 || p > P_ || q > Q_)
            throw TruncationError("bidegree (" + std::to_string(p) + "," + std::to_string(q) + ") outside bounds (" +
                                  std::to_string(P_) + "," + std::to_string(Q_) + ")");
    }

    static void check_block(const std::vector<Table>& block, int ops, std::size_t from, std::size_t to) {
        if (block.size() != static_cast<std::size_t>(ops)) throw RejectedInput("operator block has the wrong arity");
        for (const Table& t : block) {
            if (t.size() != from) throw RejectedInput("operator table has the wrong length");
            for (SimplexId v : t)
                if (v >= to) throw RejectedInput("operator table entry out of range");
        }
    }

    int P_;
    int Q_;
    Grid<std::size_t> counts_;
    Grid<std::vector<Table>> hfaces_;
    Grid<std::vector<Table>> hdegs_;
    Grid<std::vector<Table>> vfaces_;
    Grid<std::vector<Table>> vdegs_;
    Grid<std::vector<std::string>> labels_;
};

/// diag X : n -> X_{n,n} with d_i = d_i^h d_i^v and s_i = s_i^h s_i^v.
/// Simplex ids of (diag X)_n coincide with ids of X_{n,n}.
inline TruncatedSimplicialSet diagonal(const TruncatedBisimplicialSet& X) {
    const int N = std::min(X.horizontal_bound(), X.vertical_bound());
    std::vector<std::size_t> counts(N + 1);
    std::vector<std::vector<Table>> faces(N + 1), degs(N);
    std::vector<std::vector<std::string>> labels;
    for (int n = 0; n <= N; ++n) {
        counts[n] = X.count(n, n);
        if (n >= 1) {
            faces[n].assign(n + 1, Table(counts[n]));
            for (int i = 0; i <= n; ++i)
                for (SimplexId x = 0; x < counts[n]; ++x) faces[n][i][x] = X.hface(n, n - 1, i, X.vface(n, n, i, x));
        }
        if (n < N) {
            degs[n].assign(n + 1, Table(counts[n]));
            for (int i = 0; i <= n; ++i)
                for (SimplexId x = 0; x < counts[n]; ++x) degs[n][i][x] = X.hdeg(n, n + 1, i, X.vdeg(n, n, i, x));
        }
    }
    if (X.has_labels()) {
        labels.resize(N + 1);
        for (int n = 0; n <= N; ++n) labels[n] = X.labels()[n][n];
    }
    return {N, std::move(counts), std::move(faces), std::move(degs), std::move(labels)};
}

/// X_{*,q}: the horizontal simplicial set at vertical level q.
inline TruncatedSimplicialSet row(const TruncatedBisimplicialSet& X, int q) {
    if (q < 0 || q > X.vertical_bound()) throw TruncationError("row index " + std::to_string(q) + " out of bounds");
    const int N = X.horizontal_bound();
    std::vector<std::size_t> counts(N + 1);
    std::vector<std::vector<Table>> faces(N + 1), degs(N);
    std::vector<std::vector<std::string>> labels;
    for (int n = 0; n <= N; ++n) {
        counts[n] = X.count(n, q);
        if (n >= 1) faces[n] = X.hface_tables()[n][q];
        if (n < N) degs[n] = X.hdeg_tables()[n][q];
        if (X.has_labels()) labels.push_back(X.labels()[n][q]);
    }
    return {N, std::move(counts), std::move(faces), std::move(degs), std::move(labels)};
}

/// X_{p,*}: the vertical simplicial set at horizontal level p.
inline TruncatedSimplicialSet column(const TruncatedBisimplicialSet& X, int p) {
    if (p < 0 || p > X.horizontal_bound()) throw TruncationError("column index " + std::to_string(p) + " out of bounds");
    const int N = X.vertical_bound();
    std::vector<std::size_t> counts(N + 1);
    std::vector<std::vector<Table>> faces(N + 1), degs(N);
    std::vector<std::vector<std::string>> labels;
    for (int n = 0; n <= N; ++n) {
        counts[n] = X.count(p, n);
        if (n >= 1) faces[n] = X.vface_tables()[p][n];
        if (n < N) degs[n] = X.vdeg_tables()[p][n];
        if (X.has_labels()) labels.push_back(X.labels()[p][n]);
    }
    return {N, std::move(counts), std::move(faces), std::move(degs), std::move(labels)};
}

/// Swaps the two directions: (X^T)_{p,q} = X_{q,p}.
inline TruncatedBisimplicialSet transpose(const TruncatedBisimplicialSet& X) {
    const int P = X.vertical_bound(), Q = X.horizontal_bound();
    auto swap_grid = [&](const auto& g) {
        using T = typename std::decay_t<decltype(g)>::value_type::value_type;
        Grid<T> out(P + 1, std::vector<T>(Q + 1));
        for (int p = 0; p <= P; ++p)
            for (int q = 0; q <= Q; ++q) out[p][q] = g[q][p];
        return out;
    };
    Grid<std::vector<std::string>> labels;
    if (X.has_labels()) labels = swap_grid(X.labels());
    return {P,
            Q,
            swap_grid(X.counts()),
            swap_grid(X.vface_tables()),
            swap_grid(X.vdeg_tables()),
            swap_grid(X.hface_tables()),
            swap_grid(X.hdeg_tables()),
            std::move(labels)};
}

/// (A (x) B)_{p,q} = A_p x B_q; horizontal operators act on A, vertical on B.
/// The pair (a, b) has id a * |B_q| + b.
inline TruncatedBisimplicialSet tensor(const TruncatedSimplicialSet& A, const TruncatedSimplicialSet& B) {
    using Key = std::pair<SimplexId, SimplexId>;
    std::function<std::string(const Key&)> no_label;
    auto enumerate = [&](int p, int q) {
        std::vector<Key> out;
        out.reserve(A.count(p) * B.count(q));
        for (SimplexId a = 0; a < A.count(p); ++a)
            for (SimplexId b = 0; b < B.count(q); ++b) out.emplace_back(a, b);
        return out;
    };
    auto X = TruncatedBisimplicialSet::from_model<Key>(
        A.bound(), B.bound(), enumerate,
        [&](int p, int, int i, const Key& k) { return Key{A.face(p, i, k.first), k.second}; },
        [&](int p, int, int i, const Key& k) { return Key{A.degeneracy(p, i, k.first), k.second}; },
        [&](int, int q, int i, const Key& k) { return Key{k.first, B.face(q, i, k.second)}; },
        [&](int, int q, int i, const Key& k) { return Key{k.first, B.degeneracy(q, i, k.second)}; }, no_label);
    if (!A.has_labels() && !B.has_labels()) return X;
    Grid<std::vector<std::string>> labels(A.bound() + 1, std::vector<std::vector<std::string>>(B.bound() + 1));
    for (int p = 0; p <= A.bound(); ++p)
        for (int q = 0; q <= B.bound(); ++q)
            for (SimplexId a = 0; a < A.count(p); ++a)
                for (SimplexId b = 0; b < B.count(q); ++b)
                    labels[p][q].push_back(A.label({p, a}) + "|" + B.label({q, b}));
    return {X.horizontal_bound(), X.vertical_bound(), X.counts(),      X.hface_tables(),
            X.hdeg_tables(),      X.vface_tables(),   X.vdeg_tables(), std::move(labels)};
}

/// Audits every row and column for the simplicial identities and checks that
/// each horizontal generator commutes with each vertical generator wherever
/// both composites stay in bounds.
inline ValidationReport validate_bisimplicial(const TruncatedBisimplicialSet& X) {
    ValidationReport report;
    auto absorb = [&](ValidationReport r, const std::string& where) {
        report.checks += r.checks;
        for (auto& v : r.violations) {
            v.identity = where + ": " + v.identity;
            report.violations.push_back(std::move(v));
        }
    };
    for (int q = 0; q <= X.vertical_bound(); ++q) absorb(validate_simplicial_identities(row(X, q)), "row " + std::to_string(q));
    for (int p = 0; p <= X.horizontal_bound(); ++p)
        absorb(validate_simplicial_identities(column(X, p)), "column " + std::to_string(p));

    const int P = X.horizontal_bound(), Q = X.vertical_bound();
    struct Gen {
        bool face;
        int i;
    };
    for (int p = 0; p <= P; ++p) {
        for (int q = 0; q <= Q; ++q) {
            std::vector<Gen> hs, vs;
            for (int i = 0; p >= 1 && i <= p; ++i) hs.push_back({true, i});
            for (int i = 0; p < P && i <= p; ++i) hs.push_back({false, i});
            for (int i = 0; q >= 1 && i <= q; ++i) vs.push_back({true, i});
            for (int i = 0; q < Q && i <= q; ++i) vs.push_back({false, i});
            for (const Gen& h : hs) {
                for (const Gen& v : vs) {
                    for (SimplexId x = 0; x < X.count(p, q); ++x) {
                        ++report.checks;
                        Bisimplex b{p, q, x};
                        auto H = [&](Bisimplex s) { return h.face ? X.hface(s, h.i) : X.hdeg(s, h.i); };
                        auto V = [&](Bisimplex s) { return v.face ? X.vface(s, v.i) : X.vdeg(s, v.i); };
                        Bisimplex hv = H(V(b));
                        Bisimplex vh = V(H(b));
                        if (hv != vh) {
                            std::string name = std::string(h.face ? "d" : "s") + std::to_string(h.i) + "^h " +
                                               (v.face ? "d" : "s") + std::to_string(v.i) + "^v commute at (" +
                                               std::to_string(p) + "," + std::to_string(q) + ")";
                            report.violations.push_back({name, {p + q, x}, {hv.p + hv.q, hv.id}, {vh.p + vh.q, vh.id}});
                        }
                    }
                }
            }
        }
    }
    return report;
}

class BisimplicialMap {
public:
    BisimplicialMap(std::shared_ptr<const TruncatedBisimplicialSet> domain,
                    std::shared_ptr<const TruncatedBisimplicialSet> codomain, Grid<Table> components)
        : domain_(std::move(domain)), codomain_(std::move(codomain)), components_(std::move(components)) {
        if (!domain_ || !codomain_) throw RejectedInput("bisimplicial map needs a domain and codomain");
        if (domain_->horizontal_bound() != codomain_->horizontal_bound() ||
            domain_->vertical_bound() != codomain_->vertical_bound())
            throw RejectedInput("domain and codomain bounds differ");
        const int P = domain_->horizontal_bound(), Q = domain_->vertical_bound();
        if (components_.size() != static_cast<std::size_t>(P + 1)) throw RejectedInput("component grid has the wrong shape");
        for (int p = 0; p <= P; ++p) {
            if (components_[p].size() != static_cast<std::size_t>(Q + 1))
                throw RejectedInput("component grid has the wrong shape");
            for (int q = 0; q <= Q; ++q) {
                if (components_[p][q].size() != domain_->count(p, q)) throw RejectedInput("component has the wrong length");
                for (SimplexId v : components_[p][q])
                    if (v >= codomain_->count(p, q)) throw RejectedInput("component entry out of range");
            }
        }
    }

    static BisimplicialMap identity(std::shared_ptr<const TruncatedBisimplicialSet> X) {
        Grid<Table> comps(X->horizontal_bound() + 1, std::vector<Table>(X->vertical_bound() + 1));
        for (int p = 0; p <= X->horizontal_bound(); ++p)
            for (int q = 0; q <= X->vertical_bound(); ++q) {
                comps[p][q].resize(X->count(p, q));
                std::iota(comps[p][q].begin(), comps[p][q].end(), SimplexId{0});
            }
        return {X, X, std::move(comps)};
    }

    static BisimplicialMap to_point(std::shared_ptr<const TruncatedBisimplicialSet> X) {
        auto pt = std::make_shared<const TruncatedBisimplicialSet>(
            TruncatedBisimplicialSet::point(X->horizontal_bound(), X->vertical_bound()));
        Grid<Table> comps(X->horizontal_bound() + 1, std::vector<Table>(X->vertical_bound() + 1));
        for (int p = 0; p <= X->horizontal_bound(); ++p)
            for (int q = 0; q <= X->vertical_bound(); ++q) comps[p][q].assign(X->count(p, q), 0);
        return {std::move(X), std::move(pt), std::move(comps)};
    }

    const TruncatedBisimplicialSet& domain() const { return *domain_; }
    const TruncatedBisimplicialSet& codomain() const { return *codomain_; }
    std::shared_ptr<const TruncatedBisimplicialSet> domain_ptr() const { return domain_; }
    std::shared_ptr<const TruncatedBisimplicialSet> codomain_ptr() const { return codomain_; }

    SimplexId operator()(int p, int q, SimplexId x) const { return components_.at(p).at(q).at(x); }
    Bisimplex operator()(Bisimplex x) const { return {x.p, x.q, (*this)(x.p, x.q, x.id)}; }
    const Grid<Table>& components() const { return components_; }

private:
    std::shared_ptr<const TruncatedBisimplicialSet> domain_;
    std::shared_ptr<const TruncatedBisimplicialSet> codomain_;
    Grid<Table> components_;
};

inline ValidationReport validate_naturality(const BisimplicialMap& f) {
    ValidationReport report;
    const auto& X = f.domain();
    const auto& Y = f.codomain();
    const int P = X.horizontal_bound(), Q = X.vertical_bound();
    auto check = [&](const std::string& name, Bisimplex x, Bisimplex l, Bisimplex r) {
        ++report.checks;
        if (l != r) report.violations.push_back({name, {x.p + x.q, x.id}, {l.p + l.q, l.id}, {r.p + r.q, r.id}});
    };
    for (int p = 0; p <= P; ++p)
        for (int q = 0; q <= Q; ++q)
            for (SimplexId id = 0; id < X.count(p, q); ++id) {
                Bisimplex x{p, q, id};
                for (int i = 0; p >= 1 && i <= p; ++i) check("f d^h", x, f(X.hface(x, i)), Y.hface(f(x), i));
                for (int i = 0; p < P && i <= p; ++i) check("f s^h", x, f(X.hdeg(x, i)), Y.hdeg(f(x), i));
                for (int i = 0; q >= 1 && i <= q; ++i) check("f d^v", x, f(X.vface(x, i)), Y.vface(f(x), i));
                for (int i = 0; q < Q && i <= q; ++i) check("f s^v", x, f(X.vdeg(x, i)), Y.vdeg(f(x), i));
            }
    return report;
}

/// diag f : diag X -> diag Y.
inline SimplicialMap diagonal_map(const BisimplicialMap& f) {
    auto dX = std::make_shared<const TruncatedSimplicialSet>(diagonal(f.domain()));
    auto dY = std::make_shared<const TruncatedSimplicialSet>(diagonal(f.codomain()));
    std::vector<Table> comps(dX->bound() + 1);
    for (int n = 0; n <= dX->bound(); ++n) comps[n] = f.components()[n][n];
    return {std::move(dX), std::move(dY), std::move(comps)};
}

/// f_{p,*} : X_{p,*} -> Y_{p,*}.
inline SimplicialMap column_map(const BisimplicialMap& f, int p) {
    auto cX = std::make_shared<const TruncatedSimplicialSet>(column(f.domain(), p));
    auto cY = std::make_shared<const TruncatedSimplicialSet>(column(f.codomain(), p));
    std::vector<Table> comps(cX->bound() + 1);
    for (int q = 0; q <= cX->bound(); ++q) comps[q] = f.components()[p][q];
    return {std::move(cX), std::move(cY), std::move(comps)};
}

/// f_{*,q} : X_{*,q} -> Y_{*,q}.
inline SimplicialMap row_map(const BisimplicialMap& f, int q) {
    auto rX = std::make_shared<const TruncatedSimplicialSet>(row(f.domain(), q));
    auto rY = std::make_shared<const TruncatedSimplicialSet>(row(f.codomain(), q));
    std::vector<Table> comps(rX->bound() + 1);
    for (int p = 0; p <= rX->bound(); ++p) comps[p] = f.components()[p][q];
    return {std::move(rX), std::move(rY), std::move(comps)};
}

inline BisimplicialMap transpose_map(const BisimplicialMap& f) {
    auto tX = std::make_shared<const TruncatedBisimplicialSet>(transpose(f.domain()));
    auto tY = std::make_shared<const TruncatedBisimplicialSet>(transpose(f.codomain()));
    const int P = tX->horizontal_bound(), Q = tX->vertical_bound();
    Grid<Table> comps(P + 1, std::vector<Table>(Q + 1));
    for (int p = 0; p <= P; ++p)
        for (int q = 0; q <= Q; ++q) comps[p][q] = f.components()[q][p];
    return {std::move(tX), std::move(tY), std::move(comps)};
}

} // namespace bisimp
