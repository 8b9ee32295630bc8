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

#include <random>

#include "naive.hpp"
#include "prm/codes.hpp"
#include "prm/combinatorics.hpp"
#include "prm/oracle.hpp"

using prm::gf::Elem;
using prm::gf::Field;
using prm::codes::Codeword;
using namespace prm::oracle;

namespace {

std::vector<std::uint64_t> as_vector(const std::map<std::size_t, std::uint64_t>& m, std::size_t n) {
    std::vector<std::uint64_t> v(n + 1, 0);
    for (auto [w, c] : m) v[w] = c;
    return v;
}

}  // namespace

TEST(WeightDistribution, Simplex) {
    const auto wd = weight_distribution(prm::codes::prm_generator_matrix(Field::of_order(2), 1, 2));
    EXPECT_EQ(wd.length, 7u);
    EXPECT_EQ(wd.dimension, 3u);
    EXPECT_EQ(wd.counts, (std::vector<std::uint64_t>{1, 0, 0, 0, 7, 0, 0, 0}));
    EXPECT_EQ(wd.min_distance(), 4u);
    EXPECT_EQ(wd.min_weight_count(), 7u);
}

TEST(WeightDistribution, Examples) {
    const auto a = weight_distribution(prm::codes::prm_generator_matrix(Field::of_order(2), 2, 2));
    EXPECT_EQ(a.counts, (std::vector<std::uint64_t>{1, 0, 21, 0, 35, 0, 7, 0}));
    EXPECT_EQ(a.total(), 64u);

    const auto b = weight_distribution(prm::codes::prm_generator_matrix(Field::of_order(3), 2, 2));
    EXPECT_EQ(b.min_distance(), 6u);
    EXPECT_EQ(b.min_weight_count(), 156u);

    const auto c = weight_distribution(prm::codes::rm_generator_matrix(Field::of_order(2), 1, 2));
    EXPECT_EQ(c.min_distance(), 2u);
    EXPECT_EQ(c.min_weight_count(), 6u);
}

TEST(WeightDistribution, ZeroCode) {
    const auto f = Field::of_order(3);
    const auto wd = weight_distribution(f, {Codeword(4, 0), Codeword(4, 0)});
    EXPECT_EQ(wd.dimension, 0u);
    EXPECT_EQ(wd.total(), 1u);
    EXPECT_EQ(wd.counts[0], 1u);
    EXPECT_THROW(wd.min_distance(), std::domain_error);
}

TEST(WeightDistribution, Guard) {
    const auto g = prm::codes::prm_generator_matrix(Field::of_order(3), 3, 2);
    EXPECT_THROW(weight_distribution(g, 1000), GuardExceeded);
    EXPECT_THROW(brute_min_distance(g, 1000), std::length_error);
    EXPECT_NO_THROW(weight_distribution(g, 3 * 3 * 3 * 3 * 3 * 3 * 3 * 3 * 3 * 3));
}

TEST(WeightDistribution, MatchesNaiveEnumeration) {
    for (unsigned q : {2u, 3u, 4u, 5u}) {
        const auto f = Field::of_order(q);
        for (unsigned m = 1; m <= 2; ++m)
            for (unsigned d = 1; d <= m * (q - 1) + 1; ++d) {
                const auto g = prm::codes::prm_generator_matrix(f, d, m);
                if (g.dimension() > 7) continue;
                const auto ours = weight_distribution(g);
                EXPECT_EQ(ours.counts, as_vector(naive::distribution(f, g.rows), g.length())) << q << " " << d << " " << m;
            }
    }
}

TEST(WeightDistribution, InvariantUnderChangeOfBasis) {
    std::mt19937_64 rng(5);
    for (unsigned q : {2u, 3u, 4u}) {
        const auto f = Field::of_order(q);
        const auto g = prm::codes::prm_generator_matrix(f, 2, 2);
        const auto base = weight_distribution(g);
        for (int trial = 0; trial < 5; ++trial) {
            // Random invertible row operations plus a redundant row.
            auto rows = g.rows;
            for (int op = 0; op < 20; ++op) {
                const auto i = rng() % rows.size(), j = rng() % rows.size();
                if (i == j) continue;
                const Elem c = static_cast<Elem>(rng() % q);
                for (std::size_t k = 0; k < rows[i].size(); ++k) rows[i][k] = f.add(rows[i][k], f.mul(c, rows[j][k]));
            }
            Codeword extra(rows[0].size(), 0);
            for (const auto& r : rows)
                for (std::size_t k = 0; k < r.size(); ++k) extra[k] = f.add(extra[k], r[k]);
            rows.push_back(extra);
            const auto wd = weight_distribution(f, rows);
            EXPECT_EQ(wd.counts, base.counts);
            EXPECT_EQ(wd.dimension, g.dimension());
        }
    }
}

TEST(WeightDistribution, NonzeroCountsDivisibleByQMinusOne) {
    for (unsigned q : {3u, 4u, 5u, 7u}) {
        const auto f = Field::of_order(q);
        for (unsigned d = 1; d <= 3; ++d) {
            const auto g = prm::codes::prm_generator_matrix(f, d, 2);
            if (prm::comb::ipow(q, static_cast<unsigned>(g.dimension())) > default_guard) continue;
            const auto wd = weight_distribution(g);
            for (std::size_t w = 1; w < wd.counts.size(); ++w) EXPECT_EQ(wd.counts[w] % (q - 1), 0u);
            EXPECT_EQ(wd.total(), prm::comb::ipow(q, static_cast<unsigned>(wd.dimension)));
        }
    }
}

TEST(WeightDistribution, ThreadCountDoesNotMatter) {
    const auto g = prm::codes::prm_generator_matrix(Field::of_order(3), 3, 2);
    const auto one = weight_distribution(g, default_guard, 1);
    for (unsigned t : {2u, 3u, 5u, 8u, 0u}) EXPECT_EQ(weight_distribution(g, default_guard, t).counts, one.counts);
}

TEST(BruteMinWords, SortedAndMinimal) {
    const auto g = prm::codes::prm_generator_matrix(Field::of_order(2), 2, 2);
    const auto words = brute_min_weight_words(g);
    EXPECT_EQ(words.size(), 21u);
    EXPECT_TRUE(std::is_sorted(words.begin(), words.end()));
    for (const auto& c : words) EXPECT_EQ(prm::codes::weight(c), 2u);
    EXPECT_EQ(brute_min_distance(g), 2u);
}
