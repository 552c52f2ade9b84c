#include <gtest/gtest.h>

#include <random>

#include "bisimp/groups.hpp"
#include "bisimp/simplicial_set.hpp"

using namespace bisimp;

namespace {

std::vector<OrdinalMap> all_maps(int m, int n) {
    std::vector<OrdinalMap> out;
    std::vector<int> v(m + 1, 0);
    std::function<void(int, int)> rec = [&](int k, int lo) {
        if (k > m) {
            out.emplace_back(m, n, v);
            return;
        }
        for (int x = lo; x <= n; ++x) {
            v[k] = x;
            rec(k + 1, x);
        }
    };
    rec(0, 0);
    return out;
}

SimplexId find_label(const TruncatedSimplicialSet& X, int n, const std::string& label) {
    for (SimplexId x = 0; x < X.count(n); ++x)
        if (X.label({n, x}) == label) return x;
    ADD_FAILURE() << "no simplex labelled " << label;
    return 0;
}

} // namespace

TEST(TruncatedSimplicialSet, PointIsLawful) {
    const auto P = TruncatedSimplicialSet::point(4);
    EXPECT_EQ(P.total_simplices(), 5u);
    const auto r = validate_simplicial_identities(P);
    EXPECT_TRUE(r.ok());
    EXPECT_GT(r.checks, 0u);
}

TEST(TruncatedSimplicialSet, RejectsBadShapes) {
    EXPECT_THROW(TruncatedSimplicialSet(1, {1}, {{}, {}}, {{}}), RejectedInput);
    EXPECT_THROW(TruncatedSimplicialSet(1, {1, 1}, {{}, {Table{0}}}, {{Table{0}}}), RejectedInput);
    EXPECT_THROW(TruncatedSimplicialSet(1, {1, 1}, {{}, {Table{0}, Table{1}}}, {{Table{0}}}), RejectedInput);
    EXPECT_THROW(TruncatedSimplicialSet(1, {1, 1}, {{}, {Table{0}, Table{0}}}, {{Table{0}}}, {{"a"}}),
                 RejectedInput);
}

TEST(TruncatedSimplicialSet, AccessBeyondBoundThrows) {
    const auto P = TruncatedSimplicialSet::point(2);
    EXPECT_THROW(P.count(3), TruncationError);
    EXPECT_THROW(P.face(3, 0, 0), TruncationError);
    EXPECT_THROW(P.degeneracy(2, 0, 0), TruncationError);
    EXPECT_THROW(apply_word(P, {Token::degeneracy(0)}, {2, 0}), TruncationError);
}

TEST(ApplyOperator, Examples) {
    const auto X = nerve(FiniteGroupoid::from_group(symmetric_group_preset(3)), 3);
    for (SimplexId x = 0; x < X.count(2); ++x) {
        EXPECT_EQ(apply_operator(X, SimplicialOperator({}, 2), {2, x}), (Simplex{2, x}));
        EXPECT_EQ(apply_operator(X, SimplicialOperator({Token::face(1), Token::degeneracy(1)}, 2), {2, x}),
                  (Simplex{2, x}));
    }
    EXPECT_THROW(apply_operator(X, SimplicialOperator({Token::face(0)}, 2), {1, 0}), RejectedInput);
}

TEST(ApplyOperator, NerveFaceComposesArrows) {
    const auto Z = cyclic_group(2);
    const auto X = nerve(FiniteGroupoid::from_group(Z), 2);
    const SimplexId gg = find_label(X, 2, "[g|g]");
    EXPECT_EQ(X.label(X.face({2, gg}, 1)), "[e]");
    EXPECT_EQ(X.label(X.face({2, gg}, 0)), "[g]");
}

// Nerve faces recomputed straight from the multiplication table.
TEST(Nerve, FacesMatchTableOracle) {
    const auto G = symmetric_group_preset(3);
    const auto X = nerve(FiniteGroupoid::from_group(G), 3);
    ASSERT_EQ(X.count(3), 216u);
    for (SimplexId x = 0; x < X.count(3); ++x) {
        const auto s = nerve_strings(FiniteGroupoid::from_group(G), 3)[x];
        const std::vector<std::vector<int>> expect{
            {s[1], s[2]}, {G.mul(s[0], s[1]), s[2]}, {s[0], G.mul(s[1], s[2])}, {s[0], s[1]}};
        for (int i = 0; i <= 3; ++i) {
            const SimplexId y = X.face(3, i, x);
            std::string want = "[" + G.label(expect[i][0]) + "|" + G.label(expect[i][1]) + "]";
            EXPECT_EQ(X.label({2, y}), want);
        }
    }
}

TEST(Validation, ConstructorsAreLawful) {
    const auto G = symmetric_group_preset(3);
    EXPECT_TRUE(validate_simplicial_identities(nerve(FiniteGroupoid::from_group(G), 4)).ok());
    EXPECT_TRUE(validate_simplicial_identities(nerve(FiniteGroupoid::discrete(3), 3)).ok());
    EXPECT_TRUE(validate_simplicial_identities(eg_construction(cyclic_group(2), 4)).ok());
    EXPECT_TRUE(validate_simplicial_identities(eg_construction(G, 2)).ok());
}

// Swap two distinct entries of one face table; the validator must notice.
TEST(Validation, CorruptedFaceTableIsDetected) {
    const auto X = nerve(FiniteGroupoid::from_group(symmetric_group_preset(3)), 3);
    std::mt19937 rng(7);
    int trials = 0;
    while (trials < 40) {
        auto faces = X.face_tables();
        const int n = 1 + static_cast<int>(rng() % 3);
        const int i = static_cast<int>(rng() % (n + 1));
        auto& t = faces[n][i];
        const std::size_t a = rng() % t.size(), b = rng() % t.size();
        if (t[a] == t[b]) continue;
        std::swap(t[a], t[b]);
        const TruncatedSimplicialSet bad(X.bound(), X.counts(), faces, X.degeneracy_tables(), X.labels());
        const auto r = validate_simplicial_identities(bad);
        ASSERT_FALSE(r.ok()) << "swap in d" << i << " on dim " << n;
        EXPECT_NE(r.violations.front().lhs, r.violations.front().rhs);
        ++trials;
    }
}

TEST(Validation, NonInjectiveDegeneracyIsDetected) {
    const auto X = eg_construction(cyclic_group(2), 2);
    auto degs = X.degeneracy_tables();
    degs[0][0][1] = degs[0][0][0];
    const TruncatedSimplicialSet bad(X.bound(), X.counts(), X.face_tables(), degs);
    EXPECT_FALSE(validate_simplicial_identities(bad).ok());
}

// (alpha beta)^* = beta^* alpha^* on every simplex, every composable pair.
TEST(ApplyOrdinal, Functorial) {
    const auto X = nerve(FiniteGroupoid::from_group(cyclic_group(3)), 3);
    std::size_t checks = 0;
    for (int n = 0; n <= 3; ++n)
        for (int m = 0; m <= 3; ++m)
            for (int k = 0; k <= 3; ++k)
                for (const auto& alpha : all_maps(m, n))
                    for (const auto& beta : all_maps(k, m)) {
                        const auto ab = compose_ordinal(alpha, beta);
                        for (SimplexId x = 0; x < X.count(n); ++x) {
                            const Simplex s{n, x};
                            ASSERT_EQ(apply_ordinal(X, ab, s), apply_ordinal(X, beta, apply_ordinal(X, alpha, s)));
                            ++checks;
                        }
                    }
    EXPECT_GT(checks, 10000u);
}

TEST(SimplicialMap, NaturalityAndBoundChecks) {
    auto X = std::make_shared<const TruncatedSimplicialSet>(eg_construction(cyclic_group(2), 2));
    EXPECT_TRUE(validate_naturality(SimplicialMap::to_point(X)).ok());
    EXPECT_TRUE(validate_naturality(SimplicialMap::identity(X)).ok());

    // Swapping the two vertices but fixing edges is not natural.
    auto comps = SimplicialMap::identity(X).components();
    std::swap(comps[0][0], comps[0][1]);
    SimplicialMap bad(X, X, comps);
    EXPECT_FALSE(validate_naturality(bad).ok());
}

TEST(Pi0, Examples) {
    EXPECT_EQ(pi0(TruncatedSimplicialSet::point(1)).size(), 1u);
    EXPECT_EQ(pi0(eg_construction(cyclic_group(2), 1)).size(), 1u);
    const auto d = pi0(nerve(FiniteGroupoid::discrete(3), 1));
    ASSERT_EQ(d.size(), 3u);
    EXPECT_EQ(d[2], (std::vector<SimplexId>{2}));
    EXPECT_THROW(pi0(TruncatedSimplicialSet::point(0)), TruncationError);
}

// Union-find against a plain graph search.
TEST(Pi0, MatchesBreadthFirstSearch) {
    const auto G = symmetric_group_preset(3);
    const auto A = subgroup_from_labels(G, {"id", "(1,2)"});
    // Translation groupoid on cosets: objects G, arrows g -> a g.
    std::vector<std::string> objects = G.labels();
    std::vector<FiniteGroupoid::Arrow> arrows;
    std::vector<std::pair<int, int>> ends;
    for (int g = 0; g < G.size(); ++g)
        for (int a : A) {
            arrows.push_back({g, G.mul(a, g), G.label(a) + "." + G.label(g)});
            ends.emplace_back(g, a);
        }
    const int m = static_cast<int>(arrows.size());
    std::vector<std::vector<int>> table(m, std::vector<int>(m, -1));
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y)
            if (arrows[x].source == arrows[y].target) {
                const int a = G.mul(ends[x].second, ends[y].second);
                for (int z = 0; z < m; ++z)
                    if (ends[z].first == ends[y].first && ends[z].second == a) table[x][y] = z;
            }
    const auto X = nerve(FiniteGroupoid(objects, arrows, table), 1);

    std::vector<int> comp(X.count(0), -1);
    int count = 0;
    for (SimplexId s = 0; s < X.count(0); ++s) {
        if (comp[s] >= 0) continue;
        std::vector<SimplexId> stack{s};
        comp[s] = count;
        while (!stack.empty()) {
            const SimplexId v = stack.back();
            stack.pop_back();
            for (SimplexId e = 0; e < X.count(1); ++e) {
                const SimplexId u = X.face(1, 0, e), w = X.face(1, 1, e);
                for (auto [p, q] : {std::pair{u, w}, std::pair{w, u}})
                    if (p == v && comp[q] < 0) {
                        comp[q] = count;
                        stack.push_back(q);
                    }
            }
        }
        ++count;
    }
    EXPECT_EQ(count, 3);
    EXPECT_EQ(pi0(X).size(), static_cast<std::size_t>(count));
}
