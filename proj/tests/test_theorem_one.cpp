#include <gtest/gtest.h>

#include <atomic>

#include "bisimp/presets.hpp"
#include "bisimp/theorem_one.hpp"

using namespace bisimp;

namespace {

std::shared_ptr<const TruncatedBisimplicialSet> eg_tensor(int N) {
    return std::make_shared<const TruncatedBisimplicialSet>(preset_bisimplicial(make_preset("eg-tensor"), N, N));
}

// Oracle: scan X_{p,q} for a bisimplex with the requested vertical faces and image.
bool column_fillable(const PointwiseHornProblem& pr) {
    const auto& X = pr.map->domain();
    for (SimplexId x = 0; x < X.count(pr.p, pr.q); ++x) {
        bool ok = (*pr.map)(pr.p, pr.q, x) == pr.target;
        for (const auto& [i, xi] : pr.faces) ok = ok && X.vface(pr.p, pr.q, i, x) == xi;
        if (ok) return true;
    }
    return false;
}

} // namespace

TEST(DiagonalIndexSet, Examples) {
    EXPECT_EQ(diagonal_index_set(0, 1, 1), (std::vector<int>{0}));
    EXPECT_EQ(diagonal_index_set(2, 1, 1), (std::vector<int>{0}));
    EXPECT_EQ(diagonal_index_set(2, 3, 0), (std::vector<int>{3, 4, 5}));
    EXPECT_EQ(diagonal_index_set(1, 2, 1), (std::vector<int>{0, 3}));
    for (int p = 0; p <= 3; ++p)
        for (int q = 1; q <= 3; ++q)
            for (int l = 0; l <= q; ++l) {
                const auto I = diagonal_index_set(p, q, l);
                EXPECT_EQ(static_cast<int>(I.size()), q);
                for (int i : I) EXPECT_TRUE(i >= 0 && i <= p + q);
            }
}

TEST(DiagonalFamily, EgTensorExample) {
    auto X = eg_tensor(3);
    const auto f = BisimplicialMap::to_point(X);
    const auto df = diagonal_map(f);
    const auto col = column_map(f, 1);
    std::size_t seen = 0;
    enumerate_families(col, 2, horn_indices(2, 1), [&](const CompatibleFamily& fam) {
        PointwiseHornProblem pr{&f, 1, 2, 1, fam.faces, fam.target};
        ConstructionAudit audit;
        const auto bar = build_diagonal_family(pr, df, &audit);
        EXPECT_EQ(bar.n, 3);
        EXPECT_EQ(bar.index_set(), (std::vector<int>{0, 3}));
        EXPECT_TRUE(is_compatible(bar));
        EXPECT_EQ(audit.compatibility_passed, 1u);
        ++seen;
        return true;
    });
    EXPECT_GT(seen, 0u);
}

TEST(PointwiseFiller, SatisfiesRelationsAndAgreesWithColumnSearch) {
    auto X = eg_tensor(3);
    const auto f = BisimplicialMap::to_point(X);
    const auto df = diagonal_map(f);
    const auto oracle = default_partial_oracle();
    std::size_t solved = 0;
    for (int p = 0; p <= 1; ++p)
        for (int q = 1; p + q <= 3; ++q)
            for (int l = 0; l <= q; ++l)
                enumerate_families(column_map(f, p), q, horn_indices(q, l), [&](const CompatibleFamily& fam) {
                    PointwiseHornProblem pr{&f, p, q, l, fam.faces, fam.target};
                    const auto fill = pointwise_filler_via_diagonal(pr, df, oracle);
                    EXPECT_EQ(fill.filled, column_fillable(pr)) << pr.describe();
                    if (fill.filled) {
                        for (const auto& [i, xi] : pr.faces) EXPECT_EQ(X->vface(p, q, i, *fill.answer), xi);
                        ++solved;
                    }
                    return true;
                });
    EXPECT_GT(solved, 100u);
}

TEST(PointwiseFiller, RejectsMalformedProblems) {
    auto X = eg_tensor(2);
    const auto f = BisimplicialMap::to_point(X);
    const auto df = diagonal_map(f);
    PointwiseHornProblem missing_face{&f, 0, 2, 1, {{0, 0}}, 0};
    EXPECT_THROW(build_diagonal_family(missing_face, df), RejectedInput);
    PointwiseHornProblem extra_face{&f, 0, 1, 0, {{0, 0}, {1, 0}}, 0};
    EXPECT_THROW(build_diagonal_family(extra_face, df), RejectedInput);
    PointwiseHornProblem too_high{&f, 2, 1, 0, {{1, 0}}, 0};
    EXPECT_THROW(build_diagonal_family(too_high, df), RejectedInput);
    PointwiseHornProblem bad_l{&f, 0, 1, 2, {{0, 0}}, 0};
    EXPECT_THROW(build_diagonal_family(bad_l, df), RejectedInput);
}

TEST(Theorem1Sweep, EgTensorPassesToDimensionThree) {
    auto X = eg_tensor(3);
    const auto r = verify_theorem1_sweep(BisimplicialMap::to_point(X), 3, 4);
    EXPECT_TRUE(r.passed) << r.failure.value_or("");
    EXPECT_TRUE(r.diagonal_check.passed);
    EXPECT_EQ(r.audit.families_built, r.problems());
    EXPECT_EQ(r.audit.compatibility_passed, r.audit.families_built);
    EXPECT_GT(r.audit.relations_checked, r.problems());
    // (p,q) with p < 3, q >= 1, p+q <= 3, each l in 0..q
    EXPECT_EQ(r.direct.size(), 9u + 5u + 2u);
    EXPECT_EQ(r.transposed.size(), r.direct.size());
    for (const auto& c : r.direct) EXPECT_EQ(c.fills, c.problems);
    EXPECT_EQ(r.problems(), 656u);
}

TEST(Theorem1Sweep, ThreadCountDoesNotChangeResults) {
    auto X = eg_tensor(2);
    const auto f = BisimplicialMap::to_point(X);
    const auto a = verify_theorem1_sweep(f, 2, 1);
    const auto b = verify_theorem1_sweep(f, 2, 8);
    ASSERT_EQ(a.direct.size(), b.direct.size());
    for (std::size_t k = 0; k < a.direct.size(); ++k) {
        EXPECT_EQ(a.direct[k].problems, b.direct[k].problems);
        EXPECT_EQ(a.direct[k].max_search, b.direct[k].max_search);
    }
    EXPECT_EQ(a.audit.relations_checked, b.audit.relations_checked);
}

TEST(Theorem1Sweep, PointPasses) {
    auto P = std::make_shared<const TruncatedBisimplicialSet>(TruncatedBisimplicialSet::point(3, 3));
    const auto r = verify_theorem1_sweep(BisimplicialMap::identity(P), 3);
    EXPECT_TRUE(r.passed);
    for (const auto& c : r.direct) EXPECT_EQ(c.problems, 1u);
}

TEST(Theorem1Sweep, RefusesNonKanDiagonal) {
    auto X = std::make_shared<const TruncatedBisimplicialSet>(
        preset_bisimplicial(make_preset("s3-counterexample"), 2, 2));
    try {
        verify_theorem1_sweep(BisimplicialMap::to_point(X), 2);
        FAIL() << "sweep accepted a non-Kan diagonal";
    } catch (const RejectedInput& e) {
        EXPECT_NE(std::string(e.what()).find("failing horn n=2 I={1,2}"), std::string::npos) << e.what();
    }
}

TEST(Theorem1Sweep, BoundsAreChecked) {
    auto X = eg_tensor(2);
    EXPECT_THROW(verify_theorem1_sweep(BisimplicialMap::to_point(X), 3), RejectedInput);
    EXPECT_THROW(verify_theorem1_sweep(BisimplicialMap::to_point(X), 0), RejectedInput);
}

TEST(Theorem1Sweep, OracleIsPluggable) {
    auto X = eg_tensor(2);
    const auto f = BisimplicialMap::to_point(X);
    std::atomic<std::size_t> calls{0};
    const auto counted = verify_theorem1_sweep(f, 2, 2, [&](const SimplicialMap&) -> PartialHornOracle {
        return [&](const CompatibleFamily& fam) {
            ++calls;
            return fill_partial_horn(fam, brute_force_oracle);
        };
    });
    EXPECT_TRUE(counted.passed);
    EXPECT_EQ(calls.load(), counted.problems());

    const auto refusing = verify_theorem1_sweep(f, 2, 1, [](const SimplicialMap&) -> PartialHornOracle {
        return [](const CompatibleFamily& fam) { return FillCertificate::make_unfillable(fam, 0); };
    });
    EXPECT_FALSE(refusing.passed);
    ASSERT_TRUE(refusing.failure);
    EXPECT_NE(refusing.failure->find("could not fill"), std::string::npos);

    // A lying oracle is caught by the filler re-check.
    const auto liar = [](const SimplicialMap&) -> PartialHornOracle {
        return [](const CompatibleFamily& fam) {
            FillCertificate c = FillCertificate::make_unfillable(fam, 0);
            c.outcome = FillCertificate::Outcome::Filled;
            c.witness = fam.map->domain().count(fam.n) - 1;
            if (fills(fam, *c.witness)) c.witness = 0;
            return c;
        };
    };
    EXPECT_THROW(verify_theorem1_sweep(f, 2, 1, liar), InvariantError);
}
