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

#include "naive.hpp"
#include "prm/codes.hpp"
#include "prm/dimension.hpp"
#include "prm/poly.hpp"

using prm::BigInt;
namespace dim = prm::dim;

namespace {

// Reduced monomials of degree <= nu in n variables, counted by hand.
std::size_t count_affine_reduced(unsigned q, long long nu, unsigned n) {
    if (nu < 0) return 0;
    std::size_t total = 0;
    std::vector<unsigned> a(n, 0);
    while (true) {
        long long deg = 0;
        for (auto x : a) deg += x;
        if (deg <= nu) ++total;
        std::size_t i = 0;
        while (i < n && ++a[i] == q) a[i++] = 0;
        if (i == n) break;
    }
    return total;
}

}  // namespace

TEST(Rho, Examples) {
    EXPECT_EQ(dim::rho(2, 2, 2), 4);
    EXPECT_EQ(dim::rho(5, 0, 0), 1);
    EXPECT_EQ(dim::rho(3, -1, 2), 0);
    for (unsigned q = 2; q <= 7; ++q)
        for (long long n = 0; n <= 4; ++n)
            for (long long nu = 0; nu < q; ++nu) EXPECT_EQ(dim::rho(q, nu, n), prm::comb::binomial(n + nu, nu));
}

TEST(Rho, CountsReducedMonomials) {
    for (unsigned q : {2u, 3u, 4u, 5u})
        for (unsigned n = 0; n <= 4; ++n)
            for (long long nu = -1; nu <= n * (q - 1) + 3; ++nu)
                EXPECT_EQ(dim::rho(q, nu, n), count_affine_reduced(q, nu, n)) << q << " " << nu << " " << n;
}

TEST(Rho, MonotoneAndSaturating) {
    for (unsigned q : {2u, 3u, 5u, 7u})
        for (long long n = 0; n <= 4; ++n) {
            for (long long nu = 0; nu <= n * (q - 1) + 4; ++nu) EXPECT_LE(dim::rho(q, nu - 1, n), dim::rho(q, nu, n));
            for (long long nu = n * (q - 1); nu <= n * (q - 1) + 4; ++nu)
                EXPECT_EQ(dim::rho(q, nu, n), prm::comb::ipow(q, static_cast<unsigned>(n)));
        }
}

TEST(DimFormulas, Examples) {
    EXPECT_EQ(dim::dim_alpha(2, 2, 2), 6);
    EXPECT_EQ(dim::dim_alpha(2, 1, 2), 3);
    EXPECT_EQ(dim::dim_alpha(3, 5, 2), 13);
    EXPECT_EQ(dim::dim_beta(2, 2, 2), 6);
    EXPECT_EQ(dim::dim_beta(2, 1, 2), 3);
    EXPECT_EQ(dim::dim_beta(5, 3, 2), 10);
    EXPECT_EQ(dim::dim_gamma(2, 2, 2), 6);
    EXPECT_EQ(dim::dim_gamma(3, 2, 2), 6);
    EXPECT_EQ(dim::dim_delta(2, 2, 2), 6);
    EXPECT_EQ(dim::dim_delta(2, 3, 2), 7);
    EXPECT_EQ(dim::dim_delta(3, 4, 2), 12);
}

TEST(DimFormulas, RangeErrors) {
    EXPECT_THROW(dim::dim_alpha(2, 4, 2), std::invalid_argument);
    EXPECT_THROW(dim::dim_beta(2, 0, 2), std::invalid_argument);
    EXPECT_THROW(dim::dim_gamma(3, 6, 2), std::invalid_argument);
    EXPECT_THROW(dim::dim_delta(3, 1, 0), std::invalid_argument);
}

TEST(DimFormulas, FourWayAgreementAndReducedMonomialCount) {
    for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u})
        for (long long m = 1; m <= 4; ++m)
            for (long long d = 1; d <= m * (q - 1) + 1; ++d) {
                const BigInt a = dim::dim_alpha(q, d, m);
                ASSERT_EQ(a, dim::dim_beta(q, d, m)) << q << " " << d << " " << m;
                ASSERT_EQ(a, dim::dim_gamma(q, d, m)) << q << " " << d << " " << m;
                ASSERT_EQ(a, dim::dim_delta(q, d, m)) << q << " " << d << " " << m;
                if (q <= 5 && m <= 3)
                    ASSERT_EQ(a, naive::reduced_degree_d(q, static_cast<unsigned>(d), static_cast<unsigned>(m + 1)));
            }
}

TEST(DimFormulas, SimplexAndFullSpace) {
    for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u})
        for (long long m = 1; m <= 4; ++m) {
            EXPECT_EQ(dim::dim_gamma(q, 1, m), m + 1);
            EXPECT_EQ(dim::dim_gamma(q, m * (q - 1) + 1, m), prm::comb::p_k(q, m));
        }
}

TEST(DimReport, WithRank) {
    const auto r = dim::dim_report(prm::gf::Field::of_order(2), 2, 2, true);
    EXPECT_EQ(r.alpha, 6);
    EXPECT_EQ(r.beta, 6);
    EXPECT_EQ(r.gamma, 6);
    EXPECT_EQ(r.delta, 6);
    ASSERT_TRUE(r.rank);
    EXPECT_EQ(*r.rank, 6);
    EXPECT_TRUE(r.agree);

    const auto full = dim::dim_report(prm::gf::Field::of_order(3), 5, 2, true);
    EXPECT_EQ(*full.rank, 13);
    EXPECT_TRUE(full.agree);

    EXPECT_THROW(dim::dim_report(prm::gf::Field::of_order(2), 4, 2, false), std::invalid_argument);
    EXPECT_THROW(dim::dim_report(prm::gf::Field::of_order(2), 2, 20, true, 1000), std::length_error);
}

TEST(DimReport, RankMatchesGammaIndependently) {
    for (unsigned q : {2u, 3u})
        for (unsigned m = 1; m <= 2; ++m)
            for (unsigned d = 1; d <= m * (q - 1) + 1; ++d) {
                const auto f = prm::gf::Field::of_order(q);
                const auto g = prm::codes::prm_generator_matrix(f, d, m);
                if (g.dimension() > 8) continue;
                EXPECT_EQ(BigInt(naive::rank_by_span(f, g.rows)), dim::dim_gamma(q, d, m));
            }
}
