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

#include "prm/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <thread>

#include "prm/linalg.hpp"

namespace prm::oracle {

using codes::Codeword;

namespace {

struct Basis {
    gf::Field f;
    std::vector<Codeword> rows;
    std::size_t length;
};

Basis reduce(const gf::Field& f, const std::vector<Codeword>& rows, std::size_t length) {
    linalg::Matrix m(rows.begin(), rows.end());
    for (const auto& r : m)
        if (r.size() != length) throw std::invalid_argument("generator rows have different lengths");
    linalg::rref(f, m);
    return {f, std::move(m), length};
}

std::uint64_t checked_size(unsigned q, std::size_t k, std::uint64_t guard) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (total > guard / q)
            throw GuardExceeded("code has " + std::to_string(q) + "^" + std::to_string(k) +
                                " codewords, above the enumeration guard of " + std::to_string(guard));
        total *= q;
    }
    return total;
}

// Visits every codeword whose top message symbol is `top`, walking the
// remaining k-1 symbols in modular q-ary Gray order: the counter's number of
// trailing (q-1) digits picks the Gray digit to bump by one.
template <class Visit>
void walk_partition(const Basis& b, const std::vector<std::vector<Codeword>>& step, gf::Elem top, Visit&& visit) {
    const gf::Field& f = b.f;
    const std::size_t k = b.rows.size();
    const unsigned q = f.q();
    Codeword word(b.length, 0);
    for (std::size_t i = 0; i < b.length; ++i) word[i] = f.mul(top, b.rows[k - 1][i]);
    std::vector<unsigned> counter(k - 1, 0);
    std::vector<gf::Elem> gray(k - 1, 0);
    while (true) {
        visit(word);
        std::size_t j = 0;
        while (j < k - 1 && counter[j] == q - 1) {
            counter[j] = 0;
            ++j;
        }
        if (j == k - 1) return;
        ++counter[j];
        const Codeword& delta = step[j][gray[j]];
        for (std::size_t i = 0; i < b.length; ++i) word[i] = f.add(word[i], delta[i]);
        gray[j] = gray[j] + 1 == q ? 0 : gray[j] + 1;
    }
}

// step[j][v] = (elem(v+1 mod q) - elem(v)) * row_j.
std::vector<std::vector<Codeword>> step_table(const Basis& b) {
    const gf::Field& f = b.f;
    std::vector<std::vector<Codeword>> step(b.rows.size());
    for (std::size_t j = 0; j < b.rows.size(); ++j) {
        step[j].resize(f.q());
        for (gf::Elem v = 0; v < f.q(); ++v) {
            const gf::Elem c = f.sub(v + 1 == f.q() ? 0 : v + 1, v);
            Codeword row(b.length);
            for (std::size_t i = 0; i < b.length; ++i) row[i] = f.mul(c, b.rows[j][i]);
            step[j][v] = std::move(row);
        }
    }
    return step;
}

WeightDistribution distribution_of(const Basis& b, std::uint64_t guard, unsigned threads) {
    WeightDistribution out;
    out.length = b.length;
    out.dimension = b.rows.size();
    out.counts.assign(b.length + 1, 0);
    checked_size(b.f.q(), b.rows.size(), guard);
    if (b.rows.empty()) {
        out.counts[0] = 1;
        return out;
    }
    const auto step = step_table(b);
    const unsigned q = b.f.q();
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min(threads, q);

    std::vector<std::vector<std::uint64_t>> partial(threads, std::vector<std::uint64_t>(b.length + 1, 0));
    auto work = [&](unsigned id) {
        auto& counts = partial[id];
        for (gf::Elem top = id; top < q; top += threads)
            walk_partition(b, step, top, [&](const Codeword& w) { ++counts[codes::weight(w)]; });
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned id = 0; id < threads; ++id) pool.emplace_back(work, id);
    }
    for (const auto& p : partial)
        for (std::size_t w = 0; w <= b.length; ++w) out.counts[w] += p[w];
    return out;
}

}  // namespace

std::uint64_t WeightDistribution::total() const noexcept {
    return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

std::size_t WeightDistribution::min_distance() const {
    for (std::size_t w = 1; w < counts.size(); ++w)
        if (counts[w] != 0) return w;
    throw std::domain_error("the zero code has no minimum distance");
}

WeightDistribution weight_distribution(const gf::Field& f, const std::vector<Codeword>& rows, std::uint64_t guard,
                                       unsigned threads) {
    const std::size_t length = rows.empty() ? 0 : rows.front().size();
    return distribution_of(reduce(f, rows, length), guard, threads);
}

WeightDistribution weight_distribution(const codes::GeneratorMatrix& g, std::uint64_t guard, unsigned threads) {
    return distribution_of(reduce(g.field, g.rows, g.length()), guard, threads);
}

std::size_t brute_min_distance(const codes::GeneratorMatrix& g, std::uint64_t guard) {
    return weight_distribution(g, guard).min_distance();
}

std::vector<Codeword> brute_min_weight_words(const codes::GeneratorMatrix& g, std::uint64_t guard) {
    const Basis b = reduce(g.field, g.rows, g.length());
    const std::size_t dist = distribution_of(b, guard, 0).min_distance();
    const auto step = step_table(b);
    std::vector<Codeword> words;
    for (gf::Elem top = 0; top < g.field.q(); ++top)
        walk_partition(b, step, top, [&](const Codeword& w) {
            if (codes::weight(w) == dist) words.push_back(w);
        });
    std::sort(words.begin(), words.end());
    return words;
}

}  // namespace prm::oracle
