/*
   Copyright 2026 The prmcodes Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <gtest/gtest.h>

#include "prm/codes.hpp"
#include "prm/dimension.hpp"
#include "prm/io.hpp"
#include "prm/minwt.hpp"
#include "prm/oracle.hpp"

using prm::gf::Field;
namespace io = prm::io;

TEST(FieldJson, RoundTrip) {
    for (unsigned q : {2u, 4u, 8u, 9u, 25u, 27u}) {
        const auto f = Field::of_order(q);
        const auto j = io::to_json(f);
        EXPECT_EQ(io::field_from_json(j).q(), q);
        EXPECT_EQ(io::field_from_json(j).modulus(), f.modulus());
    }
    auto bad = io::to_json(Field::of_order(4));
    bad["modulus"] = std::vector<unsigned>{1, 0, 1};
    EXPECT_THROW(io::field_from_json(bad), std::invalid_argument);
    EXPECT_THROW(io::field_from_json(io::json{{"p", 4}, {"e", 1}}), std::invalid_argument);
    EXPECT_THROW(io::field_from_json(io::json::array()), std::invalid_argument);
}

TEST(GeneratorMatrixCsv, SimplexShape) {
    const auto g = prm::codes::prm_generator_matrix(Field::of_order(2), 1, 2);
    const auto csv = io::to_csv(g);
    std::vector<std::string> lines;
    std::size_t start = 0;
    for (std::size_t i = 0; i < csv.size(); ++i)
        if (csv[i] == '\n') {
            lines.push_back(csv.substr(start, i - start));
            start = i + 1;
        }
    ASSERT_EQ(lines.size(), 4u);
    EXPECT_EQ(lines[0], "0:0:1,0:1:0,0:1:1,1:0:0,1:0:1,1:1:0,1:1:1");
    for (std::size_t r = 1; r < 4; ++r) EXPECT_EQ(std::count(lines[r].begin(), lines[r].end(), ','), 6);
}

TEST(GeneratorMatrixJson, Members) {
    const auto g = prm::codes::prm_generator_matrix(Field::of_order(3), 2, 2);
    const auto j = io::to_json(g);
    EXPECT_EQ(j.at("family"), "prm");
    EXPECT_EQ(j.at("q"), 3);
    EXPECT_EQ(j.at("points").size(), 13u);
    EXPECT_EQ(j.at("rows").size(), 6u);
    EXPECT_EQ(j.at("basis").size(), 6u);
}

TEST(WeightDistributionIo, Formats) {
    const auto wd = prm::oracle::weight_distribution(prm::codes::prm_generator_matrix(Field::of_order(2), 2, 2));
    EXPECT_EQ(io::to_csv(wd), "weight,count\n0,1\n2,21\n4,35\n6,7\n");
    EXPECT_EQ(io::to_json(wd).dump(), R"({"0":"1","2":"21","4":"35","6":"7"})");
}

TEST(ReportJson, CountsAreDecimalStrings) {
    const auto r = prm::minwt::count_report(Field::of_order(3), 2, 2, true);
    const auto j = io::to_json(r);
    EXPECT_EQ(j.at("formula_count"), "156");
    EXPECT_EQ(j.at("brute_count"), "156");
    EXPECT_EQ(j.at("ts").at("s"), 1);
    const auto dr = io::to_json(prm::dim::dim_report(Field::of_order(2), 2, 2, false));
    EXPECT_EQ(dr.at("gamma"), "6");
    EXPECT_TRUE(dr.at("rank").is_null());
}

TEST(Labels, PointsAndWords) {
    EXPECT_EQ(io::point_label({1, 0, 2}), "1:0:2");
    EXPECT_EQ(io::to_csv(prm::codes::Codeword{0, 1, 0}), "0,1,0");
}
