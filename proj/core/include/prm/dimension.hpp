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

#ifndef PRM_DIMENSION_HPP
#define PRM_DIMENSION_HPP

#include <optional>

#include "prm/combinatorics.hpp"
#include "prm/gf.hpp"

namespace prm::dim {

/// Dimension of RM_q(nu, n): the number of reduced monomials in n variables of
/// degree <= nu. Zero for nu < 0; rho(nu, 0) = 1 for nu >= 0; saturates at q^n
/// once nu >= n(q-1).
BigInt rho(unsigned q, long long nu, long long n);

// Four closed forms for dim PRM_q(d, m), 1 <= d <= m(q-1)+1. Each is coded
// from its own displayed expression so that agreement is a real cross-check.
// They throw std::invalid_argument outside that range.

/// Sum over e = d, d-(q-1), ... >= 1 of the inclusion-exclusion count of
/// degree-e monomials in m+1 variables with exponents <= q-1.
BigInt dim_alpha(unsigned q, long long d, long long m);
/// C(m+d, d) minus the vanishing-ideal correction double sum.
BigInt dim_beta(unsigned q, long long d, long long m);
/// sum_{i=0}^{m} rho(d-1, i).
BigInt dim_gamma(unsigned q, long long d, long long m);
/// Like alpha, with the inner sum cut at floor(e/q) and C(e-jq+m, m) terms.
BigInt dim_delta(unsigned q, long long d, long long m);

void check_prm_order(unsigned q, long long d, long long m);

struct DimReport {
    unsigned q;
    long long d, m;
    BigInt alpha, beta, gamma, delta;
    std::optional<BigInt> rank;
    bool agree;
};

inline constexpr std::size_t default_rank_guard = 100000;

/// All four formulas plus, when requested, the rank of the generator matrix.
/// Throws std::length_error if the code length p_m exceeds `rank_guard`.
DimReport dim_report(const gf::Field& f, long long d, long long m, bool with_rank,
                     std::size_t rank_guard = default_rank_guard);

}  // namespace prm::dim

#endif  // PRM_DIMENSION_HPP
