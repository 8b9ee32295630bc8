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

#include "prm/dimension.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "prm/codes.hpp"

namespace prm::dim {

using comb::binomial;

namespace {

BigInt signed_term(long long j, const BigInt& v) {
    return (j % 2 == 0) ? v : BigInt(-v);
}

}  // namespace

BigInt rho(unsigned q, long long nu, long long n) {
    if (nu < 0) return 0;
    if (n < 0) throw std::invalid_argument("rho needs n >= 0");
    nu = std::min<long long>(nu, n * (q - 1));
    // sum_i (-1)^i C(n,i) C(n+nu-iq, n), over the terms with nu - iq >= 0.
    // Terms with a negative top would be nonzero under the falling-factorial
    // convention and do not belong to the count.
    BigInt s = 0;
    for (long long i = 0; i <= n && nu - i * static_cast<long long>(q) >= 0; ++i)
        s += signed_term(i, binomial(n, i) * binomial(n + nu - i * q, n));
    return s;
}

void check_prm_order(unsigned q, long long d, long long m) {
    if (q < 2) throw std::invalid_argument("q must be at least 2");
    if (m < 1) throw std::invalid_argument("m must be at least 1");
    const long long top = m * (q - 1) + 1;
    if (d < 1 || d > top)
        throw std::invalid_argument("PRM order d=" + std::to_string(d) + " outside 1.." + std::to_string(top));
}

BigInt dim_alpha(unsigned q, long long d, long long m) {
    check_prm_order(q, d, m);
    const long long Q = q;
    BigInt total = 0;
    for (long long e = d; e >= 1; e -= Q - 1) {
        BigInt inner = 0;
        for (long long j = 0; j <= m + 1; ++j) inner += signed_term(j, binomial(m + 1, j) * binomial(e - j * Q + m, e - j * Q));
        total += inner;
    }
    return total;
}

BigInt dim_beta(unsigned q, long long d, long long m) {
    check_prm_order(q, d, m);
    const long long Q = q;
    BigInt correction = 0;
    for (long long j = 2; j <= m + 1; ++j) {
        BigInt inner = 0;
        for (long long i = 0; i <= j - 2; ++i) {
            const long long b = d + (i + 1) * (Q - 1) - j * Q;
            inner += binomial(b + m, b);
        }
        correction += signed_term(j, binomial(m + 1, j) * inner);
    }
    return binomial(m + d, d) - correction;
}

BigInt dim_gamma(unsigned q, long long d, long long m) {
    check_prm_order(q, d, m);
    BigInt s = 0;
    for (long long i = 0; i <= m; ++i) s += rho(q, d - 1, i);
    return s;
}

BigInt dim_delta(unsigned q, long long d, long long m) {
    check_prm_order(q, d, m);
    const long long Q = q;
    BigInt total = 0;
    for (long long e = d; e >= 1; e -= Q - 1) {
        BigInt inner = 0;
        for (long long j = 0; j <= e / Q; ++j) inner += signed_term(j, binomial(m + 1, j) * binomial(e - j * Q + m, m));
        total += inner;
    }
    return total;
}

DimReport dim_report(const gf::Field& f, long long d, long long m, bool with_rank, std::size_t rank_guard) {
    const unsigned q = f.q();
    DimReport r{q, d, m, dim_alpha(q, d, m), dim_beta(q, d, m), dim_gamma(q, d, m), dim_delta(q, d, m), std::nullopt,
                false};
    if (with_rank) {
        if (comb::p_k(q, m) > rank_guard) throw std::length_error("code length exceeds the rank guard");
        const auto g = codes::prm_generator_matrix(f, static_cast<unsigned>(d), static_cast<unsigned>(m));
        r.rank = BigInt(codes::rank(g));
    }
    r.agree = r.alpha == r.beta && r.beta == r.gamma && r.gamma == r.delta && (!r.rank || *r.rank == r.alpha);
    return r;
}

}  // namespace prm::dim
