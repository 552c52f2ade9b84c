#include <gtest/gtest.h>

#include "bisimp/io.hpp"
#include "bisimp/presets.hpp"
#include "bisimp/report.hpp"

using namespace bisimp;

TEST(Json, SimplicialSetRoundTrip) {
    for (const auto& X : {nerve(FiniteGroupoid::from_group(symmetric_group_preset(3)), 2), TruncatedSimplicialSet::point(3),
                          eg_construction(cyclic_group(2), 3)}) {
        const json j = to_json(X);
        EXPECT_EQ(simplicial_set_from_json(json::parse(j.dump())), X);
    }
}

TEST(Json, BisimplicialSetRoundTrip) {
    for (const auto& X : {preset_bisimplicial(make_preset("s3-counterexample"), 2, 3),
                          preset_bisimplicial(make_preset("eg-tensor"), 2, 2)}) {
        const json j = to_json(X);
        EXPECT_EQ(j["kind"], "bisimplicial_set");
        EXPECT_EQ(bisimplicial_set_from_json(json::parse(j.dump())), X);
    }
}

TEST(Json, MalformedInputIsRejected) {
    EXPECT_THROW(simplicial_set_from_json(json{{"kind", "bisimplicial_set"}}), RejectedInput);
    EXPECT_THROW(simplicial_set_from_json(json{{"kind", "simplicial_set"}, {"bound", 1}}), RejectedInput);
    auto j = to_json(TruncatedSimplicialSet::point(2));
    j["faces"][1][0][0] = 5;
    EXPECT_THROW(simplicial_set_from_json(j), RejectedInput);
    j = to_json(TruncatedSimplicialSet::point(2));
    j["counts"] = "three";
    EXPECT_THROW(simplicial_set_from_json(j), RejectedInput);
    EXPECT_THROW(bisimplicial_set_from_json(json::array()), RejectedInput);
    EXPECT_THROW(read_json_file("/nonexistent/input.json"), RejectedInput);
}

// A set that parses but violates an identity is still loaded; the validator
// is what reports it.
TEST(Json, UnlawfulButWellFormedSetLoads) {
    auto j = to_json(eg_construction(cyclic_group(2), 2));
    std::swap(j["faces"][2][0][0], j["faces"][2][0][1]);
    const auto X = simplicial_set_from_json(j);
    EXPECT_FALSE(validate_simplicial_identities(X).ok());
    EXPECT_FALSE(to_json(validate_simplicial_identities(X))["violations"].empty());
}

TEST(Json, GroupBothForms) {
    const auto a = group_from_json(json{{"labels", {"e", "g"}}, {"table", {{0, 1}, {1, 0}}}});
    EXPECT_EQ(a.size(), 2);
    const auto b = group_from_json(json{{"degree", 3}, {"generators", {{2, 1, 3}, {2, 3, 1}}}});
    EXPECT_EQ(b.size(), 6);
    EXPECT_THROW(group_from_json(json{{"order", 3}}), RejectedInput);
    EXPECT_THROW(group_from_json(json{{"labels", {"e"}}, {"table", "x"}}), RejectedInput);
}

TEST(RunReport, JsonRoundTripIsLossless) {
    RunReport r;
    r.command = "kan";
    r.arguments = {"bisimp", "kan", "--preset", "point"};
    r.configuration = {{"threads", 2}, {"source", "point"}};
    r.add("first", true, true, "detail text");
    r.add("second", false, false, {}, json{{"n", 2}});
    r.statistics = {{"families", 12}};
    r.timing_ms["check"] = 1.25;
    const json j = r;
    EXPECT_TRUE(j["all_as_expected"].get<bool>());
    EXPECT_TRUE(j["verdicts"][1]["as_expected"].get<bool>());
    EXPECT_EQ(json::parse(j.dump()).get<RunReport>(), r);

    r.add("third", true, false);
    EXPECT_FALSE(r.all_as_expected());
    const auto text = render_text(r);
    EXPECT_NE(text.find("FAIL second (expected to fail)"), std::string::npos);
    EXPECT_NE(text.find("FAIL third [UNEXPECTED]"), std::string::npos);
    EXPECT_NE(text.find("result: some checks NOT as expected"), std::string::npos);
}

// The serialized failing horn can be rebuilt and re-checked independently.
TEST(Witness, KanFailureReverifiesFromJson) {
    auto X = std::make_shared<const TruncatedBisimplicialSet>(preset_bisimplicial(make_preset("s3-counterexample"), 2, 2));
    const auto df = diagonal_map(BisimplicialMap::to_point(X));
    json j;
    {
        const auto r = check_kan_fibration(df, 2);
        ASSERT_FALSE(r.passed);
        j = json::parse(to_json(r).dump());
    }
    ASSERT_TRUE(j.contains("failure"));
    EXPECT_EQ(j["failure"]["outcome"], "unfillable");
    const auto fam = family_from_json(j["failure"]["family"], df);
    EXPECT_EQ(fam.n, 2);
    EXPECT_TRUE(is_compatible(fam));
    const auto& D = df.domain();
    for (SimplexId x = 0; x < D.count(2); ++x) EXPECT_FALSE(fills(fam, x));

    json bad = j["failure"]["family"];
    bad["faces"][0]["id"] = 999;
    EXPECT_THROW(family_from_json(bad, df), RejectedInput);
    EXPECT_THROW(family_from_json(json{{"n", 2}}, df), RejectedInput);
}

TEST(Witness, FilledCertificateSerializesWitness) {
    auto X = std::make_shared<const TruncatedSimplicialSet>(nerve(FiniteGroupoid::from_group(cyclic_group(2)), 2));
    const auto f = SimplicialMap::to_point(X);
    CompatibleFamily fam{&f, 2, {{0, 1}, {2, 1}}, 0};
    const json j = to_json(brute_force_fill(fam));
    EXPECT_EQ(j["outcome"], "filled");
    EXPECT_EQ(j["witness"]["label"], "[g|g]");
    EXPECT_EQ(j["family"]["index_set"], json({0, 2}));
}
