#pragma once

// Double groupoids, the group-pair double groupoid C(A,B), and the double
// nerve.

#include <functional>
#include <string>
#include <vector>

#include "bisimp/bisimplicial.hpp"
#include "bisimp/errors.hpp"
#include "bisimp/groups.hpp"

namespace bisimp {

/// Boundary of a square. Horizontal arrows point left and vertical arrows
/// point up:
///
///     c <-top-- b
///     ^         ^
///    left     right
///     |         |
///     d <-bottom- a
struct SquareEdges {
    int top;    ///< horizontal arrow b -> c
    int bottom; ///< horizontal arrow a -> d
    int left;   ///< vertical arrow d -> c
    int right;  ///< vertical arrow a -> b

    friend bool operator==(const SquareEdges&, const SquareEdges&) = default;
};

/// Squares with horizontal composition s .h t (t to the right of s, defined
/// when right(s) == left(t)) and vertical composition s .v t (t below s,
/// defined when bottom(s) == top(t)). Composition tables hold -1 where
/// undefined.
struct DoubleGroupoid {
    FiniteGroupoid horizontal;
    FiniteGroupoid vertical;
    std::vector<SquareEdges> squares;
    std::vector<std::string> square_labels;
    std::vector<std::vector<int>> hcomp;
    std::vector<std::vector<int>> vcomp;
    std::vector<int> id_h; ///< per vertical arrow: its horizontal identity square
    std::vector<int> id_v; ///< per horizontal arrow: its vertical identity square

    int square_count() const { return static_cast<int>(squares.size()); }

    int hcompose(int s, int t) const {
        const int r = hcomp.at(s).at(t);
        if (r < 0) throw RejectedInput("squares are not horizontally composable");
        return r;
    }
    int vcompose(int s, int t) const {
        const int r = vcomp.at(s).at(t);
        if (r < 0) throw RejectedInput("squares are not vertically composable");
        return r;
    }
};

/// Every double groupoid axiom checked exhaustively. Returns the list of
/// violated laws with witnesses; empty means lawful.
inline std::vector<std::string> double_groupoid_violations(const DoubleGroupoid& D) {
    std::vector<std::string> out;
    const auto& H = D.horizontal;
    const auto& V = D.vertical;
    const int S = D.square_count();
    auto name = [&](int s) { return s < static_cast<int>(D.square_labels.size()) ? D.square_labels[s] : "#" + std::to_string(s); };

    if (H.object_count() != V.object_count()) out.push_back("horizontal and vertical object sets differ");
    if (static_cast<int>(D.hcomp.size()) != S || static_cast<int>(D.vcomp.size()) != S) {
        out.push_back("composition tables have the wrong size");
        return out;
    }
    if (static_cast<int>(D.id_h.size()) != V.arrow_count() || static_cast<int>(D.id_v.size()) != H.arrow_count()) {
        out.push_back("identity square tables have the wrong size");
        return out;
    }
    for (int s = 0; s < S; ++s) {
        const auto& e = D.squares[s];
        if (H.target(e.top) != V.target(e.left) || H.source(e.top) != V.target(e.right) ||
            H.source(e.bottom) != V.source(e.right) || H.target(e.bottom) != V.source(e.left))
            out.push_back("square " + name(s) + " has inconsistent corners");
    }
    for (int s = 0; s < S; ++s) {
        for (int t = 0; t < S; ++t) {
            const auto& a = D.squares[s];
            const auto& b = D.squares[t];
            const int h = D.hcomp[s][t];
            if ((a.right == b.left) != (h >= 0)) out.push_back("horizontal composite definedness wrong at " + name(s) + ", " + name(t));
            else if (h >= 0) {
                const SquareEdges want{H.compose(a.top, b.top), H.compose(a.bottom, b.bottom), a.left, b.right};
                if (D.squares[h] != want) out.push_back("horizontal composite boundary wrong at " + name(s) + ", " + name(t));
            }
            const int v = D.vcomp[s][t];
            if ((a.bottom == b.top) != (v >= 0)) out.push_back("vertical composite definedness wrong at " + name(s) + ", " + name(t));
            else if (v >= 0) {
                const SquareEdges want{a.top, b.bottom, V.compose(a.left, b.left), V.compose(a.right, b.right)};
                if (D.squares[v] != want) out.push_back("vertical composite boundary wrong at " + name(s) + ", " + name(t));
            }
        }
    }
    if (!out.empty()) return out;

    // Associativity.
    for (int s = 0; s < S; ++s)
        for (int t = 0; t < S; ++t)
            for (int u = 0; u < S; ++u) {
                if (D.hcomp[s][t] >= 0 && D.hcomp[t][u] >= 0 &&
                    D.hcomp[D.hcomp[s][t]][u] != D.hcomp[s][D.hcomp[t][u]])
                    out.push_back("horizontal composition not associative at " + name(s) + ", " + name(t) + ", " + name(u));
                if (D.vcomp[s][t] >= 0 && D.vcomp[t][u] >= 0 &&
                    D.vcomp[D.vcomp[s][t]][u] != D.vcomp[s][D.vcomp[t][u]])
                    out.push_back("vertical composition not associative at " + name(s) + ", " + name(t) + ", " + name(u));
            }

    // Identity squares: boundaries, unit laws, compatibility with composition.
    for (int v = 0; v < V.arrow_count(); ++v) {
        const int sq = D.id_h[v];
        if (sq < 0 || sq >= S) { out.push_back("missing horizontal identity square"); continue; }
        const SquareEdges want{H.identity(V.target(v)), H.identity(V.source(v)), v, v};
        if (D.squares[sq] != want) out.push_back("horizontal identity square has the wrong boundary");
    }
    for (int h = 0; h < H.arrow_count(); ++h) {
        const int sq = D.id_v[h];
        if (sq < 0 || sq >= S) { out.push_back("missing vertical identity square"); continue; }
        const SquareEdges want{h, h, V.identity(H.target(h)), V.identity(H.source(h))};
        if (D.squares[sq] != want) out.push_back("vertical identity square has the wrong boundary");
    }
    if (!out.empty()) return out;
    for (int s = 0; s < S; ++s) {
        const auto& e = D.squares[s];
        if (D.hcomp[D.id_h[e.left]][s] != s || D.hcomp[s][D.id_h[e.right]] != s)
            out.push_back("horizontal unit law fails at " + name(s));
        if (D.vcomp[D.id_v[e.top]][s] != s || D.vcomp[s][D.id_v[e.bottom]] != s)
            out.push_back("vertical unit law fails at " + name(s));
        bool hinv = false, vinv = false;
        for (int t = 0; t < S; ++t) {
            if (D.hcomp[s][t] == D.id_h[e.left] && D.hcomp[t][s] == D.id_h[e.right]) hinv = true;
            if (D.vcomp[s][t] == D.id_v[e.top] && D.vcomp[t][s] == D.id_v[e.bottom]) vinv = true;
        }
        if (!hinv) out.push_back("square " + name(s) + " has no horizontal inverse");
        if (!vinv) out.push_back("square " + name(s) + " has no vertical inverse");
    }
    for (int v = 0; v < V.arrow_count(); ++v)
        for (int w = 0; w < V.arrow_count(); ++w)
            if (V.composable(v, w) && D.id_h[V.compose(v, w)] != D.vcomp[D.id_h[v]][D.id_h[w]])
                out.push_back("horizontal identity squares do not respect vertical composition");
    for (int h = 0; h < H.arrow_count(); ++h)
        for (int k = 0; k < H.arrow_count(); ++k)
            if (H.composable(h, k) && D.id_v[H.compose(h, k)] != D.hcomp[D.id_v[h]][D.id_v[k]])
                out.push_back("vertical identity squares do not respect horizontal composition");
    for (int o = 0; o < H.object_count(); ++o)
        if (D.id_h[V.identity(o)] != D.id_v[H.identity(o)])
            out.push_back("identity squares of object " + H.object_label(o) + " differ");

    // Interchange: (s .h t) .v (g .h d) == (s .v g) .h (t .v d).
    for (int s = 0; s < S; ++s)
        for (int t = 0; t < S; ++t) {
            if (D.hcomp[s][t] < 0) continue;
            for (int g = 0; g < S; ++g) {
                if (D.vcomp[s][g] < 0) continue;
                for (int d = 0; d < S; ++d) {
                    if (D.hcomp[g][d] < 0 || D.vcomp[t][d] < 0) continue;
                    const int lhs = D.vcomp[D.hcomp[s][t]][D.hcomp[g][d]];
                    const int rhs = D.hcomp[D.vcomp[s][g]][D.vcomp[t][d]];
                    if (lhs < 0 || rhs < 0 || lhs != rhs)
                        out.push_back("interchange fails at " + name(s) + ", " + name(t) + ", " + name(g) + ", " + name(d));
                }
            }
        }
    return out;
}

/// Number of quadruples on which the interchange law was exercised.
inline std::size_t interchange_instances(const DoubleGroupoid& D) {
    std::size_t count = 0;
    const int S = D.square_count();
    for (int s = 0; s < S; ++s)
        for (int t = 0; t < S; ++t)
            for (int g = 0; g < S; ++g)
                for (int d = 0; d < S; ++d)
                    if (D.hcomp[s][t] >= 0 && D.vcomp[s][g] >= 0 && D.hcomp[g][d] >= 0 && D.vcomp[t][d] >= 0) ++count;
    return count;
}

inline void validate_double_groupoid(const DoubleGroupoid& D) {
    auto v = double_groupoid_violations(D);
    if (!v.empty()) throw RejectedInput("double groupoid axiom violated: " + v.front());
}

/// C(A, B): one object, horizontal arrows A, vertical arrows B, squares the
/// quadruples (a, b, a', b') with ab = b'a' (top a, right b, bottom a',
/// left b'), and
///   (a,b,a',b') .h (a1,b1,a1',b)   = (a a1, b1, a' a1', b')
///   (a,b,a',b') .v (a',b1,a1',b1') = (a, b b1, a1', b' b1')
///   id^v(a) = (a,e,a,e),  id^h(b) = (e,b,e,b).
/// The vertical composite requires the bottom of the first square to equal
/// the top of the second.
inline DoubleGroupoid group_pair_double_groupoid(const FiniteGroup& G, const std::vector<int>& A_in,
                                                 const std::vector<int>& B_in) {
    const auto A = validate_subgroup(G, A_in);
    const auto B = validate_subgroup(G, B_in);
    auto slot = [](const std::vector<int>& set, int g) {
        auto it = std::find(set.begin(), set.end(), g);
        if (it == set.end()) throw InvariantError("product left the subgroup");
        return static_cast<int>(it - set.begin());
    };
    DoubleGroupoid D{FiniteGroupoid::from_group(G, A), FiniteGroupoid::from_group(G, B), {}, {}, {}, {}, {}, {}};
    struct Quad {
        int a, b, a2, b2;
    }; // group element indices
    std::vector<Quad> quads;
    for (int a : A)
        for (int b : B)
            for (int a2 : A)
                for (int b2 : B)
                    if (G.mul(a, b) == G.mul(b2, a2)) quads.push_back({a, b, a2, b2});
    for (const auto& q : quads) {
        D.squares.push_back({slot(A, q.a), slot(A, q.a2), slot(B, q.b2), slot(B, q.b)});
        D.square_labels.push_back("(" + G.label(q.a) + "," + G.label(q.b) + "," + G.label(q.a2) + "," + G.label(q.b2) + ")");
    }
    auto find = [&](int a, int b, int a2, int b2) {
        for (std::size_t k = 0; k < quads.size(); ++k)
            if (quads[k].a == a && quads[k].b == b && quads[k].a2 == a2 && quads[k].b2 == b2) return static_cast<int>(k);
        throw InvariantError("composite square missing from C(A,B)");
    };
    const int S = static_cast<int>(quads.size());
    D.hcomp.assign(S, std::vector<int>(S, -1));
    D.vcomp.assign(S, std::vector<int>(S, -1));
    for (int s = 0; s < S; ++s)
        for (int t = 0; t < S; ++t) {
            const Quad& x = quads[s];
            const Quad& y = quads[t];
            if (y.b2 == x.b) D.hcomp[s][t] = find(G.mul(x.a, y.a), y.b, G.mul(x.a2, y.a2), x.b2);
            if (y.a == x.a2) D.vcomp[s][t] = find(x.a, G.mul(x.b, y.b), y.a2, G.mul(x.b2, y.b2));
        }
    const int e = G.identity();
    for (int b : B) D.id_h.push_back(find(e, b, e, b));
    for (int a : A) D.id_v.push_back(find(a, e, a, e));
    validate_double_groupoid(D);
    return D;
}

namespace detail {

/// Key of a (p,q)-simplex of the double nerve:
///   p,q >= 1: squares sigma_{ij} stored column-major at (i-1)*q + (j-1);
///   q == 0:   horizontal string (f_1..f_p);
///   p == 0:   vertical string (g_1..g_q), g_1 on top;
///   p == q == 0: {object}.
using GridKey = std::vector<int>;

struct DoubleNerveModel {
    const DoubleGroupoid& D;

    const FiniteGroupoid& H() const { return D.horizontal; }
    const FiniteGroupoid& V() const { return D.vertical; }

    static int at(const GridKey& k, int q, int i, int j) { return k[static_cast<std::size_t>((i - 1) * q + (j - 1))]; }

    std::vector<GridKey> enumerate(int p, int q) const {
        if (q == 0) return nerve_strings(H(), p);
        if (p == 0) return nerve_strings(V(), q);
        std::vector<GridKey> out;
        GridKey cur(static_cast<std::size_t>(p * q));
        const int S = D.square_count();
        std::function<void(int)> place = [&](int pos) {
            if (pos == p * q) {
                out.push_back(cur);
                return;
            }
            const int i = pos / q + 1, j = pos % q + 1;
            for (int s = 0; s < S; ++s) {
                if (i > 1 && D.squares[at(cur, q, i - 1, j)].right != D.squares[s].left) continue;
                if (j > 1 && D.squares[at(cur, q, i, j - 1)].bottom != D.squares[s].top) continue;
                cur[static_cast<std::size_t>(pos)] = s;
                place(pos + 1);
            }
        };
        place(0);
        return out;
    }

    /// Vertical edge on vertical line `line` (0..p) in row j.
    int vertical_edge(int p, int q, const GridKey& k, int line, int j) const {
        if (p == 0) return k[static_cast<std::size_t>(j - 1)];
        return line == 0 ? D.squares[at(k, q, 1, j)].left : D.squares[at(k, q, line, j)].right;
    }

    /// Horizontal edge on horizontal line `line` (0..q) in column i.
    int horizontal_edge(int /*p*/, int q, const GridKey& k, int line, int i) const {
        if (q == 0) return k[static_cast<std::size_t>(i - 1)];
        return line == 0 ? D.squares[at(k, q, i, 1)].top : D.squares[at(k, q, i, line)].bottom;
    }

    GridKey columns_to_key(const std::vector<std::vector<int>>& cols) const {
        GridKey out;
        for (const auto& c : cols) out.insert(out.end(), c.begin(), c.end());
        return out;
    }

    std::vector<std::vector<int>> key_to_columns(int p, int q, const GridKey& k) const {
        std::vector<std::vector<int>> cols(p);
        for (int i = 1; i <= p; ++i)
            for (int j = 1; j <= q; ++j) cols[i - 1].push_back(at(k, q, i, j));
        return cols;
    }

    GridKey hface(int p, int q, int i, const GridKey& k) const {
        if (q == 0) return nerve_face(H(), p, i, k);
        if (p == 1) {
            GridKey out;
            for (int j = 1; j <= q; ++j) out.push_back(vertical_edge(p, q, k, i == 0 ? 1 : 0, j));
            return out;
        }
        auto cols = key_to_columns(p, q, k);
        if (i == 0) cols.erase(cols.begin());
        else if (i == p) cols.pop_back();
        else {
            for (int j = 0; j < q; ++j) cols[i - 1][j] = D.hcompose(cols[i - 1][j], cols[i][j]);
            cols.erase(cols.begin() + i);
        }
        return columns_to_key(cols);
    }

    GridKey hdeg(int p, int q, int i, const GridKey& k) const {
        if (q == 0) return nerve_degeneracy(H(), p, i, k);
        std::vector<int> fresh;
        for (int j = 1; j <= q; ++j) fresh.push_back(D.id_h[vertical_edge(p, q, k, i, j)]);
        if (p == 0) return fresh;
        auto cols = key_to_columns(p, q, k);
        cols.insert(cols.begin() + i, fresh);
        return columns_to_key(cols);
    }

    GridKey vface(int p, int q, int j, const GridKey& k) const {
        if (p == 0) return nerve_face(V(), q, j, k);
        if (q == 1) {
            GridKey out;
            for (int i = 1; i <= p; ++i) out.push_back(horizontal_edge(p, q, k, j == 0 ? 1 : 0, i));
            return out;
        }
        auto cols = key_to_columns(p, q, k);
        for (auto& c : cols) {
            if (j == 0) c.erase(c.begin());
            else if (j == q) c.pop_back();
            else {
                c[j - 1] = D.vcompose(c[j - 1], c[j]);
                c.erase(c.begin() + j);
            }
        }
        return columns_to_key(cols);
    }

    GridKey vdeg(int p, int q, int j, const GridKey& k) const {
        if (p == 0) return nerve_degeneracy(V(), q, j, k);
        std::vector<int> fresh;
        for (int i = 1; i <= p; ++i) fresh.push_back(D.id_v[horizontal_edge(p, q, k, j, i)]);
        if (q == 0) return fresh; // a (p,1)-simplex: one row, stored column-major
        auto cols = key_to_columns(p, q, k);
        for (int i = 0; i < p; ++i) cols[i].insert(cols[i].begin() + j, fresh[i]);
        return columns_to_key(cols);
    }

    std::string label(int p, int q, const GridKey& k) const {
        if (q == 0) return nerve_label(H(), p, k);
        if (p == 0) return nerve_label(V(), q, k);
        std::string out = "[";
        for (int j = 1; j <= q; ++j) {
            for (int i = 1; i <= p; ++i) out += (i > 1 ? " " : "") + D.square_labels[at(k, q, i, j)];
            out += j < q ? "; " : "";
        }
        return out + "]";
    }
};

} // namespace detail

/// Bisimplicial nerve with (p,q)-simplices the p x q matrices of squares,
/// sigma_{ij} in column i and row j, adjacent squares sharing edges.
/// Horizontal faces compose or drop columns, vertical faces compose or drop
/// rows; degeneracies insert identity columns or rows.
inline TruncatedBisimplicialSet double_nerve(const DoubleGroupoid& D, int P, int Q) {
    validate_double_groupoid(D);
    detail::DoubleNerveModel model{D};
    using Key = std::pair<std::pair<int, int>, detail::GridKey>;
    // Keys carry their bidegree so different shapes never collide.
    auto enumerate = [&](int p, int q) {
        std::vector<Key> out;
        for (auto& k : model.enumerate(p, q)) out.push_back({{p, q}, std::move(k)});
        return out;
    };
    auto wrap = [](int p, int q, detail::GridKey k) { return Key{{p, q}, std::move(k)}; };
    auto X = TruncatedBisimplicialSet::from_model<Key>(
        P, Q, enumerate,
        [&](int p, int q, int i, const Key& k) { return wrap(p - 1, q, model.hface(p, q, i, k.second)); },
        [&](int p, int q, int i, const Key& k) { return wrap(p + 1, q, model.hdeg(p, q, i, k.second)); },
        [&](int p, int q, int j, const Key& k) { return wrap(p, q - 1, model.vface(p, q, j, k.second)); },
        [&](int p, int q, int j, const Key& k) { return wrap(p, q + 1, model.vdeg(p, q, j, k.second)); },
        std::function<std::string(const Key&)>(
            [&](const Key& k) { return model.label(k.first.first, k.first.second, k.second); }));
    return X;
}

} // namespace bisimp
