#pragma once

// Finite groups, finite groupoids, their nerves, EG, and arrow-algebraic horn
// fillers on groupoid nerves.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bisimp/errors.hpp"
#include "bisimp/kan.hpp"
#include "bisimp/simplicial_set.hpp"

namespace bisimp {

/// Convention used for products of permutations.
inline constexpr const char* kPermutationConvention = "right-to-left: (st)(x) = s(t(x))";

class FiniteGroup {
public:
    int size() const { return static_cast<int>(labels_.size()); }
    int mul(int a, int b) const { return table_.at(a).at(b); }
    int identity() const { return identity_; }
    int inverse(int a) const { return inverse_.at(a); }
    const std::string& label(int a) const { return labels_.at(a); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<std::vector<int>>& table() const { return table_; }

    int index_of(const std::string& label) const {
        auto it = std::find(labels_.begin(), labels_.end(), label);
        if (it == labels_.end()) throw RejectedInput("no group element labelled '" + label + "'");
        return static_cast<int>(it - labels_.begin());
    }

    bool is_abelian() const {
        for (int a = 0; a < size(); ++a)
            for (int b = 0; b < size(); ++b)
                if (mul(a, b) != mul(b, a)) return false;
        return true;
    }

    friend FiniteGroup group_from_table(std::vector<std::string> labels, std::vector<std::vector<int>> table);

private:
    std::vector<std::string> labels_;
    std::vector<std::vector<int>> table_;
    int identity_ = 0;
    std::vector<int> inverse_;
};

/// Validates closure, associativity, identity and inverses over the whole
/// table; a violation is rejected with its witness.
inline FiniteGroup group_from_table(std::vector<std::string> labels, std::vector<std::vector<int>> table) {
    const int n = static_cast<int>(labels.size());
    if (n == 0) throw RejectedInput("a group needs at least one element");
    if (static_cast<int>(table.size()) != n) throw RejectedInput("multiplication table must be n x n");
    for (const auto& r : table) {
        if (static_cast<int>(r.size()) != n) throw RejectedInput("multiplication table must be n x n");
        for (int v : r)
            if (v < 0 || v >= n) throw RejectedInput("multiplication table entry out of range");
    }
    std::set<std::string> distinct(labels.begin(), labels.end());
    if (static_cast<int>(distinct.size()) != n) throw RejectedInput("element labels must be distinct");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]])
                    throw RejectedInput("not associative: (" + labels[a] + ", " + labels[b] + ", " + labels[c] + ")");
    int e = -1;
    for (int a = 0; a < n && e < 0; ++a) {
        bool unit = true;
        for (int b = 0; b < n && unit; ++b) unit = table[a][b] == b && table[b][a] == b;
        if (unit) e = a;
    }
    if (e < 0) throw RejectedInput("no identity element");
    std::vector<int> inv(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            if (table[a][b] == e && table[b][a] == e) inv[a] = b;
        if (inv[a] < 0) throw RejectedInput("element " + labels[a] + " has no inverse");
    }
    FiniteGroup g;
    g.labels_ = std::move(labels);
    g.table_ = std::move(table);
    g.identity_ = e;
    g.inverse_ = std::move(inv);
    return g;
}

inline FiniteGroup cyclic_group(int n) {
    if (n < 1) throw RejectedInput("cyclic group order must be positive");
    std::vector<std::string> labels;
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a) {
        labels.push_back(a == 0 ? "e" : (n == 2 ? "g" : "g" + std::to_string(a)));
        for (int b = 0; b < n; ++b) table[a][b] = (a + b) % n;
    }
    return group_from_table(std::move(labels), std::move(table));
}

using Permutation = std::vector<int>; // images of 0..d-1

/// Cycle notation on points 1..d, e.g. "(1,3,2)"; the identity is "id".
inline std::string cycle_label(const Permutation& perm) {
    std::ostringstream os;
    std::vector<bool> seen(perm.size(), false);
    for (std::size_t s = 0; s < perm.size(); ++s) {
        if (seen[s] || perm[s] == static_cast<int>(s)) continue;
        os << "(";
        for (std::size_t x = s; !seen[x]; x = static_cast<std::size_t>(perm[x])) {
            seen[x] = true;
            os << (x == s ? "" : ",") << x + 1;
        }
        os << ")";
    }
    std::string out = os.str();
    return out.empty() ? "id" : out;
}

namespace detail {

inline Permutation compose_perm(const Permutation& s, const Permutation& t) {
    Permutation out(t.size());
    for (std::size_t x = 0; x < t.size(); ++x) out[x] = s[static_cast<std::size_t>(t[x])];
    return out;
}

inline FiniteGroup group_from_permutations(std::vector<Permutation> elements) {
    std::sort(elements.begin(), elements.end());
    std::map<Permutation, int> index;
    for (std::size_t k = 0; k < elements.size(); ++k) index.emplace(elements[k], static_cast<int>(k));
    const int n = static_cast<int>(elements.size());
    std::vector<std::string> labels;
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a) {
        labels.push_back(cycle_label(elements[a]));
        for (int b = 0; b < n; ++b) table[a][b] = index.at(compose_perm(elements[a], elements[b]));
    }
    return group_from_table(std::move(labels), std::move(table));
}

} // namespace detail

/// The group generated by permutations of {1..degree} (degree <= 6), each
/// generator given as its list of images in 1-based notation. Elements are
/// ordered lexicographically by image list, so the identity comes first.
inline FiniteGroup permutation_group(int degree, const std::vector<std::vector<int>>& generators) {
    if (degree < 1 || degree > 6) throw RejectedInput("permutation degree must be 1..6");
    std::vector<Permutation> gens;
    for (const auto& g : generators) {
        if (static_cast<int>(g.size()) != degree) throw RejectedInput("generator has the wrong length");
        Permutation p(degree);
        std::vector<bool> hit(degree, false);
        for (int x = 0; x < degree; ++x) {
            if (g[x] < 1 || g[x] > degree || hit[g[x] - 1]) throw RejectedInput("generator is not a permutation");
            hit[g[x] - 1] = true;
            p[x] = g[x] - 1;
        }
        gens.push_back(std::move(p));
    }
    Permutation id(degree);
    std::iota(id.begin(), id.end(), 0);
    std::set<Permutation> closure{id};
    std::vector<Permutation> frontier{id};
    while (!frontier.empty()) {
        std::vector<Permutation> next;
        for (const auto& x : frontier)
            for (const auto& g : gens) {
                Permutation y = detail::compose_perm(g, x);
                if (closure.insert(y).second) next.push_back(std::move(y));
            }
        frontier = std::move(next);
    }
    return detail::group_from_permutations({closure.begin(), closure.end()});
}

/// S_n for n <= 4, labelled in cycle notation.
inline FiniteGroup symmetric_group_preset(int n) {
    if (n < 1 || n > 4) throw RejectedInput("symmetric group preset supports n <= 4");
    Permutation p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<Permutation> all;
    do all.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return detail::group_from_permutations(std::move(all));
}

/// Sorted element indices of a subgroup; rejects anything not closed under
/// products and inverses.
inline std::vector<int> validate_subgroup(const FiniteGroup& G, std::vector<int> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    if (elements.empty()) throw RejectedInput("a subgroup cannot be empty");
    std::set<int> s(elements.begin(), elements.end());
    for (int a : elements) {
        if (a < 0 || a >= G.size()) throw RejectedInput("subgroup element out of range");
        if (!s.count(G.inverse(a))) throw RejectedInput("not closed under inverse: " + G.label(a));
        for (int b : elements)
            if (!s.count(G.mul(a, b)))
                throw RejectedInput("not closed under product: " + G.label(a) + " * " + G.label(b));
    }
    return elements;
}

inline std::vector<int> subgroup_from_labels(const FiniteGroup& G, const std::vector<std::string>& labels) {
    std::vector<int> out;
    for (const auto& l : labels) out.push_back(G.index_of(l));
    return validate_subgroup(G, std::move(out));
}

/// The product sets AB and BA, each sorted.
inline std::pair<std::vector<int>, std::vector<int>> product_sets(const FiniteGroup& G, const std::vector<int>& A,
                                                                  const std::vector<int>& B) {
    std::set<int> ab, ba;
    for (int a : A)
        for (int b : B) {
            ab.insert(G.mul(a, b));
            ba.insert(G.mul(b, a));
        }
    return {{ab.begin(), ab.end()}, {ba.begin(), ba.end()}};
}

/// True iff AB != BA.
inline bool subgroup_products_distinct(const FiniteGroup& G, const std::vector<int>& A, const std::vector<int>& B) {
    auto va = validate_subgroup(G, A);
    auto vb = validate_subgroup(G, B);
    auto [ab, ba] = product_sets(G, va, vb);
    return ab != ba;
}

/// Finite groupoid. An arrow f : s -> t is drawn t <-f- s; compose(g, f) is
/// g after f and is defined when source(g) == target(f).
class FiniteGroupoid {
public:
    struct Arrow {
        int source;
        int target;
        std::string label;
    };

    FiniteGroupoid(std::vector<std::string> object_labels, std::vector<Arrow> arrows,
                   std::vector<std::vector<int>> compose_table)
        : objects_(std::move(object_labels)), arrows_(std::move(arrows)), compose_(std::move(compose_table)) {
        const int m = static_cast<int>(arrows_.size());
        if (objects_.empty()) throw RejectedInput("groupoid needs an object");
        if (static_cast<int>(compose_.size()) != m) throw RejectedInput("composition table must be arrows x arrows");
        for (const auto& a : arrows_)
            if (a.source < 0 || a.target < 0 || a.source >= object_count() || a.target >= object_count())
                throw RejectedInput("arrow endpoint out of range");
        for (int g = 0; g < m; ++g) {
            if (static_cast<int>(compose_[g].size()) != m) throw RejectedInput("composition table must be arrows x arrows");
            for (int f = 0; f < m; ++f) {
                const int h = compose_[g][f];
                const bool composable = arrows_[g].source == arrows_[f].target;
                if (composable != (h >= 0))
                    throw RejectedInput("composite of " + arrows_[g].label + " and " + arrows_[f].label +
                                        (composable ? " missing" : " defined for non-composable arrows"));
                if (h >= m) throw RejectedInput("composite out of range");
                if (h >= 0 && (arrows_[h].source != arrows_[f].source || arrows_[h].target != arrows_[g].target))
                    throw RejectedInput("composite of " + arrows_[g].label + " and " + arrows_[f].label +
                                        " has the wrong endpoints");
            }
        }
        for (int g = 0; g < m; ++g)
            for (int f = 0; f < m; ++f)
                for (int e = 0; e < m; ++e) {
                    if (compose_[g][f] < 0 || compose_[f][e] < 0) continue;
                    if (compose_[compose_[g][f]][e] != compose_[g][compose_[f][e]])
                        throw RejectedInput("groupoid composition not associative at (" + arrows_[g].label + ", " +
                                            arrows_[f].label + ", " + arrows_[e].label + ")");
                }
        identity_.assign(object_count(), -1);
        for (int o = 0; o < object_count(); ++o) {
            for (int u = 0; u < m && identity_[o] < 0; ++u) {
                if (arrows_[u].source != o || arrows_[u].target != o) continue;
                bool unit = true;
                for (int f = 0; f < m && unit; ++f) {
                    if (arrows_[f].target == o) unit = compose_[u][f] == f;
                    if (unit && arrows_[f].source == o) unit = compose_[f][u] == f;
                }
                if (unit) identity_[o] = u;
            }
            if (identity_[o] < 0) throw RejectedInput("object " + objects_[o] + " has no identity arrow");
        }
        inverse_.assign(m, -1);
        for (int f = 0; f < m; ++f) {
            for (int g = 0; g < m; ++g)
                if (compose_[g][f] == identity_[arrows_[f].source] && compose_[f][g] == identity_[arrows_[f].target])
                    inverse_[f] = g;
            if (inverse_[f] < 0) throw RejectedInput("arrow " + arrows_[f].label + " has no inverse");
        }
    }

    /// One object, arrows the group elements, composition the group product.
    static FiniteGroupoid from_group(const FiniteGroup& G, const std::vector<int>& elements) {
        std::vector<Arrow> arrows;
        std::map<int, int> slot;
        for (int e : elements) {
            slot.emplace(e, static_cast<int>(arrows.size()));
            arrows.push_back({0, 0, G.label(e)});
        }
        const int m = static_cast<int>(elements.size());
        std::vector<std::vector<int>> table(m, std::vector<int>(m));
        for (int g = 0; g < m; ++g)
            for (int f = 0; f < m; ++f) {
                auto it = slot.find(G.mul(elements[g], elements[f]));
                if (it == slot.end()) throw RejectedInput("element set is not closed under the product");
                table[g][f] = it->second;
            }
        return {{"*"}, std::move(arrows), std::move(table)};
    }

    static FiniteGroupoid from_group(const FiniteGroup& G) {
        std::vector<int> all(G.size());
        std::iota(all.begin(), all.end(), 0);
        return from_group(G, all);
    }

    /// Only identity arrows.
    static FiniteGroupoid discrete(int objects) {
        std::vector<std::string> labels;
        std::vector<Arrow> arrows;
        std::vector<std::vector<int>> table(objects, std::vector<int>(objects, -1));
        for (int o = 0; o < objects; ++o) {
            labels.push_back("o" + std::to_string(o));
            arrows.push_back({o, o, "1_o" + std::to_string(o)});
            table[o][o] = o;
        }
        return {std::move(labels), std::move(arrows), std::move(table)};
    }

    int object_count() const { return static_cast<int>(objects_.size()); }
    int arrow_count() const { return static_cast<int>(arrows_.size()); }
    const Arrow& arrow(int f) const { return arrows_.at(f); }
    const std::string& object_label(int o) const { return objects_.at(o); }
    int source(int f) const { return arrows_.at(f).source; }
    int target(int f) const { return arrows_.at(f).target; }
    int identity(int object) const { return identity_.at(object); }
    int inverse(int f) const { return inverse_.at(f); }
    bool composable(int g, int f) const { return source(g) == target(f); }

    int compose(int g, int f) const {
        const int h = compose_.at(g).at(f);
        if (h < 0) throw RejectedInput("arrows " + arrows_[g].label + " and " + arrows_[f].label + " do not compose");
        return h;
    }

private:
    std::vector<std::string> objects_;
    std::vector<Arrow> arrows_;
    std::vector<std::vector<int>> compose_;
    std::vector<int> identity_;
    std::vector<int> inverse_;
};

/// n-simplices of the nerve as keys: {object} for n = 0, otherwise the string
/// (f_1, ..., f_n) of arrows a_0 <-f_1- a_1 <- ... <-f_n- a_n. Strings are
/// listed lexicographically by arrow index.
inline std::vector<std::vector<int>> nerve_strings(const FiniteGroupoid& C, int n) {
    std::vector<std::vector<int>> out;
    if (n == 0) {
        for (int o = 0; o < C.object_count(); ++o) out.push_back({o});
        return out;
    }
    std::vector<int> cur;
    std::function<void()> extend = [&] {
        if (static_cast<int>(cur.size()) == n) {
            out.push_back(cur);
            return;
        }
        for (int f = 0; f < C.arrow_count(); ++f) {
            if (!cur.empty() && C.source(cur.back()) != C.target(f)) continue;
            cur.push_back(f);
            extend();
            cur.pop_back();
        }
    };
    extend();
    return out;
}

namespace detail {

inline std::vector<int> nerve_face(const FiniteGroupoid& C, int n, int i, const std::vector<int>& s) {
    if (n == 1) return {i == 0 ? C.source(s[0]) : C.target(s[0])};
    std::vector<int> out;
    for (int k = 0; k < n; ++k) {
        if (i == 0 && k == 0) continue;
        if (i == n && k == n - 1) continue;
        if (i > 0 && i < n && k == i - 1) {
            out.push_back(C.compose(s[k], s[k + 1]));
            ++k;
            continue;
        }
        out.push_back(s[k]);
    }
    return out;
}

inline std::vector<int> nerve_degeneracy(const FiniteGroupoid& C, int n, int i, const std::vector<int>& s) {
    if (n == 0) return {C.identity(s[0])};
    const int vertex = i < n ? C.target(s[i]) : C.source(s[n - 1]);
    std::vector<int> out(s.begin(), s.begin() + i);
    out.push_back(C.identity(vertex));
    out.insert(out.end(), s.begin() + i, s.end());
    return out;
}

inline std::string nerve_label(const FiniteGroupoid& C, int n, const std::vector<int>& s) {
    if (n == 0) return C.object_label(s[0]);
    std::string out = "[";
    for (std::size_t k = 0; k < s.size(); ++k) out += (k ? "|" : "") + C.arrow(s[k]).label;
    return out + "]";
}

} // namespace detail

/// Nerve truncated at `bound`: d_0 and d_n drop the outer arrows, inner d_i
/// composes f_i and f_{i+1}, s_i inserts the identity at a_i.
inline TruncatedSimplicialSet nerve(const FiniteGroupoid& C, int bound) {
    // Keys carry their dimension so that objects and 1-strings never collide.
    using Key = std::vector<int>;
    std::vector<std::vector<Key>> strings(bound + 1);
    for (int n = 0; n <= bound; ++n) strings[n] = nerve_strings(C, n);
    std::vector<std::map<Key, SimplexId>> index(bound + 1);
    for (int n = 0; n <= bound; ++n)
        for (std::size_t k = 0; k < strings[n].size(); ++k) index[n].emplace(strings[n][k], static_cast<SimplexId>(k));
    std::vector<std::size_t> counts(bound + 1);
    std::vector<std::vector<Table>> faces(bound + 1), degs(bound);
    std::vector<std::vector<std::string>> labels(bound + 1);
    for (int n = 0; n <= bound; ++n) {
        counts[n] = strings[n].size();
        for (const auto& s : strings[n]) labels[n].push_back(detail::nerve_label(C, n, s));
        if (n >= 1) {
            faces[n].assign(n + 1, Table(counts[n]));
            for (int i = 0; i <= n; ++i)
                for (std::size_t k = 0; k < counts[n]; ++k)
                    faces[n][i][k] = index[n - 1].at(detail::nerve_face(C, n, i, strings[n][k]));
        }
        if (n < bound) {
            degs[n].assign(n + 1, Table(counts[n]));
        }
    }
    for (int n = 0; n < bound; ++n)
        for (int i = 0; i <= n; ++i)
            for (std::size_t k = 0; k < counts[n]; ++k)
                degs[n][i][k] = index[n + 1].at(detail::nerve_degeneracy(C, n, i, strings[n][k]));
    return {bound, std::move(counts), std::move(faces), std::move(degs), std::move(labels)};
}

/// Solves a full horn on nerve(C) -> point from the arrows of its faces,
/// without search. The family's map must have nerve(C, bound) as domain.
inline FillCertificate groupoid_horn_filler(const FiniteGroupoid& C, const CompatibleFamily& fam) {
    const int n = fam.n;
    if (static_cast<int>(fam.faces.size()) != n)
        throw RejectedInput("groupoid_horn_filler needs a full horn (|I| = n): " + fam.describe());
    if (!is_compatible(fam)) throw RejectedInput("family is not compatible: " + fam.describe());
    int k = 0;
    while (fam.faces.count(k)) ++k;

    const auto lower = nerve_strings(C, n - 1);
    auto face = [&](int i) { return lower.at(fam.faces.at(i)); };

    std::vector<int> s;
    if (n == 1) {
        const int vertex = face(k == 0 ? 1 : 0)[0];
        s = {C.identity(vertex)};
    } else if (k != 0 && k != n) {
        s = {face(n)[0]};
        const auto tail = face(0);
        s.insert(s.end(), tail.begin(), tail.end());
    } else if (k == 0) {
        s = face(n);
        const auto d1 = face(1);
        if (n >= 3)
            s.push_back(d1.back());
        else
            s.push_back(C.compose(C.inverse(s[0]), d1[0]));
    } else {
        const auto tail = face(0);
        if (n >= 3)
            s = {face(n - 1)[0]};
        else
            s = {C.compose(face(1)[0], C.inverse(tail[0]))};
        s.insert(s.end(), tail.begin(), tail.end());
    }

    const auto upper = nerve_strings(C, n);
    auto it = std::find(upper.begin(), upper.end(), s);
    if (it == upper.end()) return FillCertificate::make_unfillable(fam, 0);
    const auto x = static_cast<SimplexId>(it - upper.begin());
    if (!fills(fam, x)) return FillCertificate::make_unfillable(fam, 0);
    return FillCertificate::make_filled(fam, x, 0);
}

/// EG_n = G^{n+1}; d_i deletes coordinate i, s_i repeats coordinate i.
inline TruncatedSimplicialSet eg_construction(const FiniteGroup& G, int bound) {
    using Key = std::vector<int>;
    auto enumerate = [&](int n) {
        std::vector<Key> out;
        Key cur(n + 1, 0);
        while (true) {
            out.push_back(cur);
            int pos = n;
            while (pos >= 0 && ++cur[pos] == G.size()) cur[pos--] = 0;
            if (pos < 0) break;
        }
        return out;
    };
    auto face = [](int, int i, const Key& x) {
        Key out = x;
        out.erase(out.begin() + i);
        return out;
    };
    auto degen = [](int, int i, const Key& x) {
        Key out = x;
        out.insert(out.begin() + i, x[i]);
        return out;
    };
    std::function<std::string(const Key&)> label = [&](const Key& x) {
        std::string s = "(";
        for (std::size_t k = 0; k < x.size(); ++k) s += (k ? "," : "") + G.label(x[k]);
        return s + ")";
    };
    return TruncatedSimplicialSet::from_model<Key>(bound, enumerate, face, degen, label);
}

} // namespace bisimp
