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

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "prm/linalg.hpp"
#include "prm/minwt.hpp"

namespace prm::minwt {

using comb::binomial;
using comb::gaussian_binomial;
using comb::ipow;

namespace {

using Support = std::vector<bool>;

// vals[L][P] = L(P) for every vector L of F_q^{m+1} in lexicographic order.
std::vector<std::vector<gf::Elem>> form_values(const gf::Field& f, const codes::PointList& pts,
                                               const std::vector<linalg::Vector>& forms) {
    std::vector<std::vector<gf::Elem>> vals(forms.size(), std::vector<gf::Elem>(pts.size()));
    for (std::size_t L = 0; L < forms.size(); ++L)
        for (std::size_t j = 0; j < pts.size(); ++j) {
            gf::Elem v = 0;
            for (std::size_t i = 0; i < forms[L].size(); ++i) v = f.add(v, f.mul(forms[L][i], pts[j][i]));
            vals[L][j] = v;
        }
    return vals;
}

// Indices of the points on which every row of `annihilator` vanishes.
std::vector<std::size_t> zero_locus(const gf::Field& f, const codes::PointList& pts, const linalg::Matrix& annihilator) {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < pts.size(); ++j) {
        bool on = true;
        for (const auto& row : annihilator) {
            gf::Elem v = 0;
            for (std::size_t i = 0; i < row.size(); ++i) v = f.add(v, f.mul(row[i], pts[j][i]));
            if (v != 0) {
                on = false;
                break;
            }
        }
        if (on) out.push_back(j);
    }
    return out;
}

void check_guard(const BigInt& work, std::uint64_t guard, const char* what) {
    if (work > guard)
        throw std::length_error(std::string(what) + " needs " + work.str() + " steps, above the guard of " +
                                std::to_string(guard));
}

}  // namespace

FiberReport support_fiber_check(const gf::Field& f, unsigned d, unsigned m, std::uint64_t guard) {
    const unsigned q = f.q();
    const TSDecomp ts = ts_decompose(Family::prm, q, d, m);
    if (ts.s == 0) throw std::invalid_argument("support_fiber_check needs s >= 1; use tau_bijection_check when s = 0");

    FiberReport r;
    r.q = q;
    r.d = d;
    r.m = m;
    r.ts = ts;
    r.grassmannian_size = gaussian_binomial(m + 1, ts.t, q);
    const BigInt qn = ipow(q, m + 1);
    check_guard(r.grassmannian_size * qn * qn * binomial(q, ts.s), guard, "support_fiber_check");

    r.j_closed_form = gaussian_binomial(m + 1, m - ts.t + 1, q) * (qn - ipow(q, ts.t)) * (qn - ipow(q, ts.t + 1)) *
                      binomial(q, ts.s);
    r.expected_fiber = BigInt(ts.s + 1) * ipow(q - 1, 2) * ipow(q, 2 * ts.t + 1);
    r.formula_count = prm_min_weight_count(q, d, m);
    const BigInt distance = prm_min_distance(q, d, m);

    const auto pts = codes::projective_points(f, m);
    const auto forms = linalg::all_vectors(f, m + 1);
    const auto vals = form_values(f, pts, forms);

    std::vector<std::vector<bool>> in_subset;  // in_subset[k][x]: x in the k-th s-subset
    {
        std::vector<gf::Elem> cur;
        auto rec = [&](auto&& self, gf::Elem next) -> void {
            if (cur.size() == ts.s) {
                std::vector<bool> mask(q, false);
                for (auto x : cur) mask[x] = true;
                in_subset.push_back(std::move(mask));
                return;
            }
            for (gf::Elem x = next; x < q; ++x) {
                cur.push_back(x);
                self(self, x + 1);
                cur.pop_back();
            }
        };
        rec(rec, 0);
    }

    std::map<Support, std::size_t> fibers;
    std::uint64_t j_size = 0;
    for (const auto& annihilator : linalg::enumerate_subspaces(f, m + 1, ts.t)) {
        const auto E = zero_locus(f, pts, annihilator);
        for (std::size_t Lt = 0; Lt < forms.size(); ++Lt) {
            const auto& vt = vals[Lt];
            if (std::none_of(E.begin(), E.end(), [&](std::size_t j) { return vt[j] != 0; })) continue;
            for (std::size_t Lt1 = 0; Lt1 < forms.size(); ++Lt1) {
                const auto& vt1 = vals[Lt1];
                if (std::none_of(E.begin(), E.end(), [&](std::size_t j) { return vt[j] == 0 && vt1[j] != 0; }))
                    continue;
                for (const auto& mask : in_subset) {
                    ++j_size;
                    Support psi(pts.size(), false);
                    for (auto j : E) {
                        if (vt[j] == 0) continue;
                        if (!mask[f.div(vt1[j], vt[j])]) psi[j] = true;
                    }
                    ++fibers[psi];
                }
            }
        }
    }

    r.j_size = j_size;
    r.supports = fibers.size();
    r.count = BigInt(q - 1) * r.supports;
    r.support_sizes_ok = true;
    if (!fibers.empty()) {
        r.fiber_min = r.fiber_max = fibers.begin()->second;
        for (const auto& [psi, n] : fibers) {
            r.fiber_min = std::min(r.fiber_min, n);
            r.fiber_max = std::max(r.fiber_max, n);
            if (BigInt(std::count(psi.begin(), psi.end(), true)) != distance) r.support_sizes_ok = false;
        }
    }
    r.ok = r.j_size == r.j_closed_form && BigInt(r.fiber_min) == r.expected_fiber &&
           BigInt(r.fiber_max) == r.expected_fiber && r.count == r.formula_count && r.support_sizes_ok;
    return r;
}

TauReport tau_bijection_check(const gf::Field& f, unsigned d, unsigned m, std::uint64_t guard) {
    const unsigned q = f.q();
    const TSDecomp ts = ts_decompose(Family::prm, q, d, m);
    if (ts.s != 0) throw std::invalid_argument("tau_bijection_check needs s = 0; use support_fiber_check when s >= 1");
    if (ts.t < 1) throw std::invalid_argument("tau_bijection_check needs t >= 1");

    TauReport r;
    r.q = q;
    r.d = d;
    r.m = m;
    r.ts = ts;
    // E = V(A_E) with dim A_E = t, H = V(A_H) with dim A_H = t+1; H inside E iff A_E inside A_H.
    check_guard(gaussian_binomial(m + 1, ts.t, q) * gaussian_binomial(m + 1, ts.t + 1, q), guard,
                "tau_bijection_check");
    r.pairs_closed_form = gaussian_binomial(m + 1, m - ts.t + 1, q) * gaussian_binomial(m - ts.t + 1, 1, q);
    r.formula_count = prm_min_weight_count(q, d, m);
    const BigInt distance = prm_min_distance(q, d, m);

    const auto pts = codes::projective_points(f, m);
    const auto Es = linalg::enumerate_subspaces(f, m + 1, ts.t);
    auto Hs = linalg::enumerate_subspaces(f, m + 1, ts.t + 1);
    std::vector<std::vector<std::size_t>> H_pivots;
    std::vector<std::vector<bool>> H_points;
    for (auto& h : Hs) {
        H_pivots.push_back(linalg::rref(f, h));
        std::vector<bool> on(pts.size(), false);
        for (auto j : zero_locus(f, pts, h)) on[j] = true;
        H_points.push_back(std::move(on));
    }

    std::set<Support> images;
    std::uint64_t pairs = 0;
    r.image_sizes_ok = true;
    for (const auto& ae : Es) {
        const auto E = zero_locus(f, pts, ae);
        for (std::size_t h = 0; h < Hs.size(); ++h) {
            const bool contained = std::all_of(ae.begin(), ae.end(), [&](const linalg::Vector& row) {
                return linalg::in_row_space(f, Hs[h], H_pivots[h], row);
            });
            if (!contained) continue;
            ++pairs;
            Support img(pts.size(), false);
            std::size_t size = 0;
            for (auto j : E)
                if (!H_points[h][j]) {
                    img[j] = true;
                    ++size;
                }
            if (BigInt(size) != distance) r.image_sizes_ok = false;
            images.insert(std::move(img));
        }
    }
    r.pairs = pairs;
    r.images = images.size();
    r.injective = images.size() == pairs;
    r.count = BigInt(q - 1) * r.pairs;
    r.ok = r.injective && r.image_sizes_ok && r.pairs == r.pairs_closed_form && r.count == r.formula_count;
    return r;
}

}  // namespace prm::minwt
