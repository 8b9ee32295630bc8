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

#include "prm/linalg.hpp"

#include <stdexcept>

namespace prm::linalg {

std::vector<std::size_t> rref(const gf::Field& f, Matrix& rows) {
    std::vector<std::size_t> pivots;
    if (rows.empty()) return pivots;
    const std::size_t ncols = rows.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        const gf::Elem s = f.inv(rows[r][c]);
        for (auto& x : rows[r]) x = f.mul(x, s);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            const gf::Elem factor = rows[i][c];
            for (std::size_t j = c; j < ncols; ++j) rows[i][j] = f.sub(rows[i][j], f.mul(factor, rows[r][j]));
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    return pivots;
}

std::size_t rank(const gf::Field& f, Matrix rows) {
    return rref(f, rows).size();
}

bool independent(const gf::Field& f, const Matrix& rows) {
    return rank(f, rows) == rows.size();
}

bool in_row_space(const gf::Field& f, const Matrix& basis, const std::vector<std::size_t>& pivots, Vector v) {
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const gf::Elem c = v[pivots[i]];
        if (c == 0) continue;
        for (std::size_t j = 0; j < v.size(); ++j) v[j] = f.sub(v[j], f.mul(c, basis[i][j]));
    }
    for (auto x : v)
        if (x != 0) return false;
    return true;
}

namespace {

void subspaces_with_pivots(const gf::Field& f, std::size_t n, const std::vector<std::size_t>& pivots,
                           std::vector<Matrix>& out) {
    const std::size_t k = pivots.size();
    // Free positions: (row i, column c) with c > pivots[i] and c not a pivot column.
    std::vector<std::pair<std::size_t, std::size_t>> free;
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots) is_pivot[c] = true;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t c = pivots[i] + 1; c < n; ++c)
            if (!is_pivot[c]) free.emplace_back(i, c);

    Matrix m(k, Vector(n, 0));
    for (std::size_t i = 0; i < k; ++i) m[i][pivots[i]] = 1;
    std::vector<gf::Elem> counter(free.size(), 0);
    while (true) {
        for (std::size_t j = 0; j < free.size(); ++j) m[free[j].first][free[j].second] = counter[j];
        out.push_back(m);
        std::size_t j = free.size();
        while (j > 0) {
            --j;
            if (++counter[j] < f.q()) break;
            counter[j] = 0;
            if (j == 0) return;
        }
        if (free.empty()) return;
    }
}

}  // namespace

std::vector<Matrix> enumerate_subspaces(const gf::Field& f, std::size_t n, std::size_t k) {
    std::vector<Matrix> out;
    if (k > n) return out;
    std::vector<std::size_t> pivots(k);
    for (std::size_t i = 0; i < k; ++i) pivots[i] = i;
    while (true) {
        subspaces_with_pivots(f, n, pivots, out);
        // Next k-subset of {0..n-1} in lexicographic order.
        std::size_t i = k;
        while (i > 0 && pivots[i - 1] == n - k + (i - 1)) --i;
        if (i == 0) break;
        ++pivots[i - 1];
        for (std::size_t j = i; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
    }
    return out;
}

std::vector<Vector> all_vectors(const gf::Field& f, std::size_t n) {
    std::size_t count = 1;
    for (std::size_t i = 0; i < n; ++i) {
        count *= f.q();
        if (count > (std::size_t{1} << 32)) throw std::length_error("all_vectors: space too large");
    }
    std::vector<Vector> out;
    out.reserve(count);
    Vector v(n, 0);
    for (std::size_t idx = 0; idx < count; ++idx) {
        out.push_back(v);
        for (std::size_t j = n; j-- > 0;) {
            if (++v[j] < f.q()) break;
            v[j] = 0;
        }
    }
    return out;
}

}  // namespace prm::linalg
