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

#include "prm/combinatorics.hpp"

#include <stdexcept>

namespace prm::comb {

BigInt binomial(long long a, long long b) {
    if (b < 0) return 0;
    if (a >= 0 && b > a) return 0;
    if (a >= 0 && b > a - b) b = a - b;
    // C(a,i+1) = C(a,i) (a-i) / (i+1) stays integral at every step.
    BigInt r = 1;
    for (long long i = 0; i < b; ++i) {
        r *= (a - i);
        r /= (i + 1);
    }
    return r;
}

BigInt ipow(unsigned base, unsigned exp) {
    BigInt r = 1;
    for (unsigned i = 0; i < exp; ++i) r *= base;
    return r;
}

BigInt gaussian_binomial(long long a, long long b, unsigned q) {
    if (q < 2) throw std::invalid_argument("gaussian_binomial requires q >= 2");
    if (b < 0 || b > a) return 0;
    const BigInt qa = ipow(q, static_cast<unsigned>(a));
    const BigInt qb = ipow(q, static_cast<unsigned>(b));
    BigInt num = 1, den = 1, qi = 1;
    for (long long i = 0; i < b; ++i) {
        num *= qa - qi;
        den *= qb - qi;
        qi *= q;
    }
    return num / den;
}

BigInt p_k(unsigned q, long long k) {
    if (k < 0) return 0;
    BigInt s = 0, term = 1;
    for (long long i = 0; i <= k; ++i) {
        s += term;
        term *= q;
    }
    return s;
}

BigInt bounded_compositions(long long a, long long n, long long b) {
    if (a < 0 || n < 0 || b < 0) throw std::invalid_argument("bounded_compositions takes nonnegative arguments");
    BigInt s = 0;
    for (long long j = 0; j <= n; ++j) {
        const long long r = a - j * (b + 1);
        const BigInt term = binomial(n, j) * binomial(r + n - 1, r);
        if (j % 2 == 0)
            s += term;
        else
            s -= term;
    }
    return s;
}

}  // namespace prm::comb
