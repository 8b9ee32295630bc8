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

#include "naive.hpp"

#include <functional>

namespace naive {

namespace {

// Remainder of a modulo the monic b, coefficients mod p, low degree first.
std::vector<unsigned> poly_mod(std::vector<unsigned> a, const std::vector<unsigned>& b, unsigned p) {
    const std::size_t db = b.size() - 1;
    for (std::size_t k = a.size(); k-- > db;) {
        const unsigned c = a[k] % p;
        if (c == 0) continue;
        for (std::size_t i = 0; i <= db; ++i) a[k - db + i] = (a[k - db + i] + p * p - c * b[i] % p) % p;
    }
    a.resize(db);
    return a;
}

}  // namespace

bool irreducible(unsigned p, const std::vector<unsigned>& c) {
    const std::size_t e = c.size() - 1;
    for (std::size_t deg = 1; deg <= e / 2; ++deg) {
        std::size_t count = 1;
        for (std::size_t i = 0; i < deg; ++i) count *= p;
        for (std::size_t code = 0; code < count; ++code) {
            std::vector<unsigned> g(deg + 1);
            std::size_t x = code;
            for (std::size_t i = 0; i < deg; ++i, x /= p) g[i] = static_cast<unsigned>(x % p);
            g[deg] = 1;
            auto r = poly_mod(c, g, p);
            bool zero = true;
            for (auto v : r) zero = zero && v == 0;
            if (zero) return false;
        }
    }
    return true;
}

__int128 binomial(long long a, long long b) {
    if (b < 0) return 0;
    __int128 num = 1, den = 1;
    for (long long i = 0; i < b; ++i) {
        num *= (a - i);
        den *= (i + 1);
    }
    return num / den;
}

__int128 gaussian(long long a, long long b, unsigned q) {
    if (b < 0 || b > a) return 0;
    // ordered bases of a b-dim subspace of F_q^a divided by ordered bases of F_q^b
    __int128 num = 1, den = 1, qa = 1, qb = 1;
    for (long long i = 0; i < a; ++i) qa *= q;
    for (long long i = 0; i < b; ++i) qb *= q;
    __int128 qi = 1;
    for (long long i = 0; i < b; ++i) {
        num *= qa - qi;
        den *= qb - qi;
        qi *= q;
    }
    return num / den;
}

std::uint64_t compositions(long long a, long long n, long long b) {
    if (n == 0) return a == 0 ? 1 : 0;
    std::uint64_t total = 0;
    for (long long x = 0; x <= b && x <= a; ++x) total += compositions(a - x, n - 1, b);
    return total;
}

std::vector<prm::codes::Codeword> all_codewords(const prm::gf::Field& f, const std::vector<prm::codes::Codeword>& rows) {
    const std::size_t k = rows.size();
    const std::size_t n = rows.empty() ? 0 : rows[0].size();
    std::vector<prm::codes::Codeword> out;
    std::vector<unsigned> msg(k, 0);
    while (true) {
        prm::codes::Codeword c(n, 0);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < n; ++j) c[j] = f.add(c[j], f.mul(msg[i], rows[i][j]));
        out.push_back(std::move(c));
        std::size_t i = 0;
        while (i < k && ++msg[i] == f.q()) msg[i++] = 0;
        if (i == k) break;
    }
    return out;
}

std::map<std::size_t, std::uint64_t> distribution(const prm::gf::Field& f,
                                                  const std::vector<prm::codes::Codeword>& rows) {
    std::set<prm::codes::Codeword> distinct;
    for (auto& c : all_codewords(f, rows)) distinct.insert(std::move(c));
    std::map<std::size_t, std::uint64_t> out;
    for (const auto& c : distinct) ++out[prm::codes::weight(c)];
    return out;
}

std::size_t rank_by_span(const prm::gf::Field& f, const std::vector<prm::codes::Codeword>& rows) {
    std::set<prm::codes::Codeword> distinct;
    for (auto& c : all_codewords(f, rows)) distinct.insert(std::move(c));
    std::size_t r = 0, size = 1;
    while (size < distinct.size()) {
        size *= f.q();
        ++r;
    }
    return r;
}

std::size_t reduced_degree_d(unsigned q, unsigned d, unsigned n) {
    std::size_t count = 0;
    std::vector<unsigned> a(n, 0);
    std::function<void(unsigned, unsigned)> rec = [&](unsigned i, unsigned left) {
        if (i + 1 == n) {
            a[i] = left;
            std::size_t last = n;
            for (std::size_t j = n; j-- > 0;)
                if (a[j] != 0) {
                    last = j;
                    break;
                }
            bool ok = true;
            for (std::size_t j = 0; j < last; ++j) ok = ok && a[j] <= q - 1;
            if (ok) ++count;
            return;
        }
        for (unsigned x = 0; x <= left; ++x) {
            a[i] = x;
            rec(i + 1, left - x);
        }
    };
    rec(0, d);
    return count;
}

}  // namespace naive
