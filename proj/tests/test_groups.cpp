#include <gtest/gtest.h>

#include <set>

#include "bisimp/bisimplicial.hpp"
#include "bisimp/double_groupoid.hpp"
#include "bisimp/groups.hpp"
#include "bisimp/kan.hpp"

using namespace bisimp;

namespace {

// Oracle: compose permutations given as 1-based image lists, right factor first.
std::vector<int> perm_mul(const std::vector<int>& s, const std::vector<int>& t) {
    std::vector<int> out(t.size());
    for (std::size_t x = 0; x < t.size(); ++x) out[x] = s[static_cast<std::size_t>(t[x] - 1)];
    return out;
}

std::vector<std::vector<int>> all_horns(int n) {
    std::vector<std::vector<int>> out;
    for (int k = 0; k <= n; ++k) out.push_back(horn_indices(n, k));
    return out;
}

} // namespace

TEST(FiniteGroup, CyclicAndTable) {
    const auto Z = cyclic_group(2);
    EXPECT_EQ(Z.size(), 2);
    EXPECT_EQ(Z.label(1), "g");
    EXPECT_EQ(Z.mul(1, 1), Z.identity());
    EXPECT_TRUE(Z.is_abelian());
    const auto T = group_from_table({"e", "g"}, {{0, 1}, {1, 0}});
    EXPECT_EQ(T.table(), Z.table());
}

TEST(FiniteGroup, CorruptedTableRejectedWithWitness) {
    // (a a) b = b b = a but a (a b) = a a = b.
    std::vector<std::vector<int>> table{{0, 1, 2}, {1, 2, 1}, {2, 0, 1}};
    try {
        group_from_table({"e", "a", "b"}, table);
        FAIL() << "non-associative table accepted";
    } catch (const RejectedInput& e) {
        EXPECT_NE(std::string(e.what()).find("not associative: ("), std::string::npos) << e.what();
    }
    EXPECT_THROW(group_from_table({"e", "g"}, {{0, 1}, {1, 2}}), RejectedInput);
    EXPECT_THROW(group_from_table({"e", "e"}, {{0, 1}, {1, 0}}), RejectedInput);
    EXPECT_THROW(group_from_table({"a", "b"}, {{1, 1}, {1, 1}}), RejectedInput);
}

TEST(FiniteGroup, SymmetricPresetMatchesPermutationOracle) {
    const auto G = symmetric_group_preset(3);
    EXPECT_EQ(G.size(), 6);
    EXPECT_FALSE(G.is_abelian());
    const std::set<std::string> names(G.labels().begin(), G.labels().end());
    EXPECT_EQ(names, (std::set<std::string>{"id", "(1,2)", "(1,3)", "(2,3)", "(1,2,3)", "(1,3,2)"}));
    EXPECT_EQ(G.label(G.identity()), "id");

    const std::map<std::string, std::vector<int>> images{{"id", {1, 2, 3}},      {"(1,2)", {2, 1, 3}},
                                                         {"(1,3)", {3, 2, 1}},   {"(2,3)", {1, 3, 2}},
                                                         {"(1,2,3)", {2, 3, 1}}, {"(1,3,2)", {3, 1, 2}}};
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
            const auto want = perm_mul(images.at(G.label(a)), images.at(G.label(b)));
            EXPECT_EQ(images.at(G.label(G.mul(a, b))), want) << G.label(a) << " * " << G.label(b);
        }
}

TEST(FiniteGroup, PermutationGeneratorsAndLimits) {
    const auto G = permutation_group(3, {{2, 1, 3}, {1, 3, 2}});
    EXPECT_EQ(G.size(), 6);
    EXPECT_EQ(permutation_group(4, {{2, 3, 4, 1}}).size(), 4);
    EXPECT_THROW(permutation_group(7, {}), RejectedInput);
    EXPECT_THROW(permutation_group(3, {{1, 1, 2}}), RejectedInput);
    EXPECT_THROW(symmetric_group_preset(5), RejectedInput);
    EXPECT_EQ(symmetric_group_preset(4).size(), 24);
}

TEST(Subgroups, ProductsDistinct) {
    const auto G = symmetric_group_preset(3);
    const auto A = subgroup_from_labels(G, {"id", "(1,2)"});
    const auto B = subgroup_from_labels(G, {"id", "(1,3)"});
    EXPECT_TRUE(subgroup_products_distinct(G, A, B));
    auto [ab, ba] = product_sets(G, A, B);
    EXPECT_EQ(ab.size(), 4u);
    EXPECT_EQ(ba.size(), 4u);
    EXPECT_FALSE(subgroup_products_distinct(G, A, A));
    const auto Z = cyclic_group(4);
    EXPECT_FALSE(subgroup_products_distinct(Z, {0, 2}, {0, 1, 2, 3}));
    EXPECT_THROW(subgroup_from_labels(G, {"(1,2)"}), RejectedInput);
    EXPECT_THROW(subgroup_from_labels(G, {"id", "(1,2,3)"}), RejectedInput);
    EXPECT_THROW(subgroup_from_labels(G, {"id", "nope"}), RejectedInput);
}

TEST(Groupoid, LawsAreValidated) {
    const std::vector<std::string> objects{"x"};
    // Two loops where the claimed composition has no identity.
    EXPECT_THROW(FiniteGroupoid(objects, {{0, 0, "f"}, {0, 0, "g"}}, {{1, 1}, {1, 1}}), RejectedInput);
    EXPECT_THROW(FiniteGroupoid(objects, {{0, 1, "f"}}, {{0}}), RejectedInput);
    const auto C = FiniteGroupoid::discrete(2);
    EXPECT_EQ(C.compose(1, 1), 1);
    EXPECT_FALSE(C.composable(0, 1));
    EXPECT_THROW(C.compose(0, 1), RejectedInput);
}

TEST(Nerve, CountsAndTrivialCases) {
    const auto N = nerve(FiniteGroupoid::from_group(cyclic_group(2)), 4);
    for (int n = 0; n <= 4; ++n) EXPECT_EQ(N.count(n), std::size_t{1} << n);
    EXPECT_EQ(nerve(FiniteGroupoid::from_group(cyclic_group(1)), 3), TruncatedSimplicialSet::point(3));
}

TEST(EG, FacesAndCounts) {
    const auto Z = cyclic_group(2);
    const auto E = eg_construction(Z, 3);
    EXPECT_EQ(E.count(2), 8u);
    for (SimplexId x = 0; x < E.count(2); ++x) {
        const std::string l = E.label({2, x}); // "(x0,x1,x2)"
        const std::string d1 = "(" + l.substr(1, 1) + "," + l.substr(5, 1) + ")";
        EXPECT_EQ(E.label(E.face({2, x}, 1)), d1);
    }
    EXPECT_EQ(pi0(E).size(), 1u);
    EXPECT_EQ(eg_construction(cyclic_group(1), 2), TruncatedSimplicialSet::point(2));
}

TEST(GroupoidHornFiller, InnerHornOnZ2) {
    auto X = std::make_shared<const TruncatedSimplicialSet>(nerve(FiniteGroupoid::from_group(cyclic_group(2)), 2));
    const auto f = SimplicialMap::to_point(X);
    const auto C = FiniteGroupoid::from_group(cyclic_group(2));
    // faces x_0 = [h], x_2 = [g]  ->  filler [g|h]
    CompatibleFamily fam{&f, 2, {{0, 1}, {2, 1}}, 0};
    const auto cert = groupoid_horn_filler(C, fam);
    ASSERT_TRUE(cert.filled());
    EXPECT_EQ(X->label({2, *cert.witness}), "[g|g]");
    EXPECT_EQ(X->label(X->face({2, *cert.witness}, 1)), "[e]");
    CompatibleFamily partial{&f, 2, {{0, 1}}, 0};
    EXPECT_THROW(groupoid_horn_filler(C, partial), RejectedInput);
}

// Arrow-algebraic fillers agree with search on every full horn, n <= 3.
TEST(GroupoidHornFiller, AgreesWithBruteForce) {
    const auto G = symmetric_group_preset(3);
    const std::vector<FiniteGroupoid> groupoids{FiniteGroupoid::from_group(G), FiniteGroupoid::from_group(cyclic_group(2)),
                                               FiniteGroupoid::from_group(G, subgroup_from_labels(G, {"id", "(1,3)"})),
                                               FiniteGroupoid::discrete(2)};
    for (const auto& C : groupoids) {
        auto X = std::make_shared<const TruncatedSimplicialSet>(nerve(C, 3));
        const auto f = SimplicialMap::to_point(X);
        std::size_t checked = 0;
        for (int n = 1; n <= 3; ++n)
            for (const auto& I : all_horns(n))
                enumerate_families(f, n, I, [&](const CompatibleFamily& fam) {
                    const auto a = groupoid_horn_filler(C, fam);
                    const auto b = brute_force_fill(fam);
                    EXPECT_EQ(a.filled(), b.filled()) << fam.describe();
                    if (a.filled()) {
                        EXPECT_TRUE(fills(fam, *a.witness));
                    }
                    ++checked;
                    return true;
                });
        EXPECT_GT(checked, 0u);
    }
}

TEST(DoubleGroupoid, S3PresetSquares) {
    const auto G = symmetric_group_preset(3);
    const auto A = subgroup_from_labels(G, {"id", "(1,2)"});
    const auto B = subgroup_from_labels(G, {"id", "(1,3)"});
    const auto D = group_pair_double_groupoid(G, A, B);
    EXPECT_EQ(D.square_count(), 3);

    // Oracle: filter all 16 quadruples by ab = b'a'.
    std::set<std::string> expect;
    for (int a : A)
        for (int b : B)
            for (int a2 : A)
                for (int b2 : B)
                    if (G.mul(a, b) == G.mul(b2, a2))
                        expect.insert("(" + G.label(a) + "," + G.label(b) + "," + G.label(a2) + "," + G.label(b2) + ")");
    EXPECT_EQ(std::set<std::string>(D.square_labels.begin(), D.square_labels.end()), expect);

    // No square has a = (1,2) on top and b = (1,3) on the right.
    const int a = 1, b = 1; // slots of the non-identity elements
    for (const auto& s : D.squares) EXPECT_FALSE(s.top == a && s.right == b);
    EXPECT_TRUE(double_groupoid_violations(D).empty());
    EXPECT_GT(interchange_instances(D), 0u);
}

TEST(DoubleGroupoid, TrivialAndCommuting) {
    const auto Z = cyclic_group(2);
    const auto T = group_pair_double_groupoid(Z, {0}, {0});
    EXPECT_EQ(T.square_count(), 1);
    EXPECT_EQ(double_nerve(T, 2, 2), TruncatedBisimplicialSet::point(2, 2));
    const auto D = group_pair_double_groupoid(Z, {0, 1}, {0, 1});
    EXPECT_EQ(D.square_count(), 8);
    EXPECT_TRUE(double_groupoid_violations(D).empty());
}

TEST(DoubleGroupoid, CorruptionIsDetected) {
    const auto G = symmetric_group_preset(3);
    auto D = group_pair_double_groupoid(G, subgroup_from_labels(G, {"id", "(1,2)"}), subgroup_from_labels(G, {"id", "(1,3)"}));
    auto broken = D;
    // Redirect one defined horizontal composite to a different square.
    for (int s = 0; s < D.square_count(); ++s)
        for (int t = 0; t < D.square_count(); ++t)
            if (broken.hcomp[s][t] >= 0 && broken.hcomp == D.hcomp) broken.hcomp[s][t] = (D.hcomp[s][t] + 1) % D.square_count();
    EXPECT_FALSE(double_groupoid_violations(broken).empty());
    EXPECT_THROW(double_nerve(broken, 1, 1), RejectedInput);

    auto ids = D;
    std::swap(ids.id_v[0], ids.id_v[1]);
    EXPECT_FALSE(double_groupoid_violations(ids).empty());
}
