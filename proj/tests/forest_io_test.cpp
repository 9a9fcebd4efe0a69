// Copyright 2026 The qrf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qrf/forest_io.hpp"

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qrf/errors.hpp"

using namespace qrf;

namespace {

const char* kMinimal = R"({
  "n": 1, "h": 1,
  "schema": [{"kind": "real"}],
  "trees": [{"nodes": {"1": {"kind": "greater", "attr": 1, "threshold": 0.5}},
             "leaves": {"2": 3.0, "3": 7.0}}]
})";

std::string where_of(const std::string& text) {
    try {
        load_forest(text);
    } catch (const ParseError& e) {
        return e.where() + " | " + e.what();
    }
    return "no error";
}

}  // namespace

TEST(LoadForest, MinimalDocument) {
    const auto forest = load_forest(kMinimal);
    EXPECT_EQ(forest.size(), 1u);
    EXPECT_EQ(forest.height(), 1);
    EXPECT_EQ(walk_tree(forest.tree(0), {{0.9}}).value, 7.0);
}

TEST(LoadForest, MissingLeafNamesIndex) {
    const auto msg = where_of(R"({"n": 1, "h": 1, "schema": [{"kind": "real"}],
        "trees": [{"nodes": {"1": {"kind": "greater", "attr": 1, "threshold": 0}},
                   "leaves": {"2": 1.0}}]})");
    EXPECT_NE(msg.find("$.trees[0]"), std::string::npos) << msg;
    EXPECT_NE(msg.find("index 3"), std::string::npos) << msg;
}

TEST(LoadForest, RaggedTreeIsPadded) {
    const auto forest = load_forest(R"({"n": 1, "h": 3, "schema": [{"kind": "real"}],
        "trees": [{"nodes": {"1": {"kind": "greater", "attr": 1, "threshold": 0}},
                   "leaves": {"2": 1.0, "3": 2.0}}]})");
    EXPECT_EQ(forest.height(), 3);
    EXPECT_EQ(walk_tree(forest.tree(0), {{-1.0}}).value, 1.0);
    EXPECT_EQ(walk_tree(forest.tree(0), {{1.0}}).value, 2.0);
    EXPECT_EQ(walk_tree(forest.tree(0), {{1.0}}).index, 15);
}

TEST(LoadForest, RejectsMalformedDocuments) {
    struct Case {
        const char* text;
        const char* where;
    };
    const Case cases[] = {
        {"{", "byte"},
        {R"({"n": 1, "h": 1, "schema": [], "trees": [], "extra": 1})", "$"},
        {R"({"n": 2, "h": 1, "schema": [], "trees": []})", "$.trees"},
        {R"({"n": 1, "h": 0, "schema": [], "trees": [{}]})", "$.h"},
        {R"({"n": 1, "h": 1, "schema": [{"kind": "complex"}], "trees": [{}]})", "$.schema[0].kind"},
        {R"({"n": 1, "h": 1, "schema": [{"kind": "discrete"}], "trees": [{}]})", "$.schema[0].categories"},
        {R"({"n": 1, "h": 1, "schema": [{"kind": "real"}],
             "trees": [{"nodes": {"01": {"kind": "greater", "attr": 1, "threshold": 0}},
                        "leaves": {"2": 0, "3": 1}}]})", "$.trees[0].nodes[\"01\"]"},
        {R"({"n": 1, "h": 1, "schema": [{"kind": "real"}],
             "trees": [{"nodes": {"1": {"kind": "less", "attr": 1, "threshold": 0}},
                        "leaves": {"2": 0, "3": 1}}]})", "$.trees[0].nodes[\"1\"].kind"},
        {R"({"n": 1, "h": 1, "schema": [{"kind": "real"}],
             "trees": [{"nodes": {"1": {"kind": "greater", "attr": 2, "threshold": 0}},
                        "leaves": {"2": 0, "3": 1}}]})", "$"},
        {R"({"n": 1, "h": 1, "schema": [{"kind": "real"}],
             "trees": [{"nodes": {"1": {"kind": "greater", "attr": 1, "threshold": "x"}},
                        "leaves": {"2": 0, "3": 1}}]})", "$.trees[0].nodes[\"1\"].threshold"},
        {R"({"n": 1, "h": 1, "schema": [{"kind": "real"}],
             "trees": [{"nodes": {}, "leaves": {"1": 0}, "weights": []}]})", "$.trees[0]"},
    };
    for (const auto& c : cases) {
        try {
            load_forest(c.text);
            ADD_FAILURE() << "accepted: " << c.text;
        } catch (const ParseError& e) {
            EXPECT_EQ(e.where().rfind(c.where, 0), 0u) << e.where() << " vs " << c.where;
        }
    }
}

TEST(SaveForest, CanonicalRoundTrip) {
    const Schema schema{AttributeSpec::real(), AttributeSpec::discrete({0, 1, 2.5})};
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const auto forest = generate_random_forest({1 + static_cast<int>(seed % 4), 1 + static_cast<int>(seed % 3),
                                                    schema, -1e3, 1e3},
                                                   seed);
        const auto text = save_forest(forest);
        const auto loaded = load_forest(text);
        ASSERT_EQ(loaded, forest);
        ASSERT_EQ(save_forest(loaded), text);
    }
}

TEST(SaveForest, IndicesAscendNumerically) {
    const auto forest = generate_random_forest({1, 3, {AttributeSpec::real()}, 0, 1}, 3);
    const auto text = save_forest(forest);
    EXPECT_LT(text.find("\"9\""), text.find("\"10\""));
    EXPECT_LT(text.find("\"n\""), text.find("\"trees\""));
}

TEST(ParseInputCsv, ParsesAndRejects) {
    EXPECT_EQ(parse_input_csv("1, 0,0.25").values, (std::vector<double>{1.0, 0.0, 0.25}));
    EXPECT_EQ(parse_input_csv("-3e2").values, (std::vector<double>{-300.0}));
    EXPECT_THROW(parse_input_csv("1,,2"), ParseError);
    EXPECT_THROW(parse_input_csv("1,a"), ParseError);
    EXPECT_THROW(parse_input_csv(""), ParseError);
}
