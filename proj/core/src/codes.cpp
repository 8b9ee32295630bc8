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

#include "prm/codes.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "prm/linalg.hpp"

namespace prm::codes {

std::string to_string(Family f) {
    return f == Family::rm ? "rm" : "prm";
}

Family parse_family(const std::string& s) {
    std::string lower = s;
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
    if (lower == "rm") return Family::rm;
    if (lower == "prm") return Family::prm;
    throw std::invalid_argument("unknown code family '" + s + "' (expected rm or prm)");
}

std::size_t PointList::index_of(std::span<const gf::Elem> p) const {
    Point key(p.begin(), p.end());
    if (kind == PointKind::projective) key = standard_representative(field, std::move(key));
    auto it = std::lower_bound(points.begin(), points.end(), key);
    if (it == points.end() || *it != key) throw std::out_of_range("point not in list");
    return static_cast<std::size_t>(it - points.begin());
}

Point standard_representative(const gf::Field& f, Point p) {
    for (std::size_t i = p.size(); i-- > 0;) {
        if (p[i] == 0) continue;
        const gf::Elem s = f.inv(p[i]);
        for (auto& x : p) x = f.mul(x, s);
        return p;
    }
    throw std::domain_error("zero vector has no projective representative");
}

namespace {

std::size_t checked_power(std::size_t base, std::size_t exp, std::size_t guard, const char* what) {
    std::size_t r = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        r *= base;
        if (r > guard) throw std::length_error(std::string(what) + " exceeds the point guard");
    }
    return r;
}

}  // namespace

PointList projective_points(const gf::Field& f, unsigned m, std::size_t guard) {
    if (m < 1) throw std::invalid_argument("projective_points requires m >= 1");
    std::size_t pm = 0, term = 1;
    for (unsigned i = 0; i <= m; ++i) {
        pm += term;
        if (pm > guard) throw std::length_error("p_m exceeds the point guard");
        term *= f.q();
    }
    PointList out{PointKind::projective, f, m, {}};
    out.points.reserve(pm);
    // Lexicographic walk of F_q^{m+1}, keeping standard representatives.
    Point v(m + 1, 0);
    const std::size_t total = checked_power(f.q(), m + 1, guard * f.q(), "q^(m+1)");
    for (std::size_t idx = 0; idx < total; ++idx) {
        std::size_t last = m + 1;
        for (std::size_t i = m + 1; i-- > 0;)
            if (v[i] != 0) {
                last = i;
                break;
            }
        if (last <= m && v[last] == 1) out.points.push_back(v);
        for (std::size_t j = m + 1; j-- > 0;) {
            if (++v[j] < f.q()) break;
            v[j] = 0;
        }
    }
    return out;
}

PointList affine_points(const gf::Field& f, unsigned m, std::size_t guard) {
    checked_power(f.q(), m, guard, "q^m");
    return PointList{PointKind::affine, f, m, linalg::all_vectors(f, m)};
}

Codeword evaluate_on(const poly::Poly& f, const PointList& points) {
    Codeword c;
    c.reserve(points.size());
    for (const auto& p : points.points) c.push_back(f.evaluate(p));
    return c;
}

namespace {

// Evaluates each monomial at every point with a table of powers per coordinate.
std::vector<Codeword> monomial_rows(const gf::Field& f, const std::vector<poly::Monomial>& basis,
                                    const PointList& pts) {
    unsigned max_exp = 0;
    for (const auto& mono : basis)
        for (auto a : mono.exps) max_exp = std::max(max_exp, a);
    // pow_table[x][a] = x^a
    std::vector<std::vector<gf::Elem>> pow_table(f.q(), std::vector<gf::Elem>(max_exp + 1));
    for (gf::Elem x = 0; x < f.q(); ++x)
        for (unsigned a = 0; a <= max_exp; ++a) pow_table[x][a] = f.pow(x, a);

    std::vector<Codeword> rows;
    rows.reserve(basis.size());
    for (const auto& mono : basis) {
        Codeword row(pts.size());
        for (std::size_t j = 0; j < pts.size(); ++j) {
            gf::Elem v = 1;
            for (std::size_t i = 0; i < mono.exps.size() && v != 0; ++i) v = f.mul(v, pow_table[pts[j][i]][mono.exps[i]]);
            row[j] = v;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

GeneratorMatrix rm_generator_matrix(const gf::Field& f, unsigned nu, unsigned m) {
    if (nu > m * (f.q() - 1))
        throw std::invalid_argument("RM order " + std::to_string(nu) + " outside 0.." + std::to_string(m * (f.q() - 1)));
    GeneratorMatrix g{Family::rm, f, nu, m, affine_points(f, m), poly::reduced_monomials_affine(f, nu, m), {}};
    g.rows = monomial_rows(f, g.basis, g.points);
    return g;
}

GeneratorMatrix prm_generator_matrix(const gf::Field& f, unsigned d, unsigned m) {
    if (m < 1) throw std::invalid_argument("PRM codes need m >= 1");
    if (d < 1 || d > m * (f.q() - 1) + 1)
        throw std::invalid_argument("PRM order " + std::to_string(d) + " outside 1.." +
                                    std::to_string(m * (f.q() - 1) + 1));
    GeneratorMatrix g{Family::prm, f, d, m, projective_points(f, m), poly::basis_C(f, d, m), {}};
    g.rows = monomial_rows(f, g.basis, g.points);
    return g;
}

std::size_t rank(const GeneratorMatrix& g) {
    return linalg::rank(g.field, g.rows);
}

poly::Poly interpolation_poly(const gf::Field& f, unsigned d, unsigned m, std::size_t nu, const PointList& points) {
    const unsigned full = m * (f.q() - 1);
    if (d < full + 1)
        throw std::invalid_argument("interpolation polynomial needs d >= m(q-1)+1 = " + std::to_string(full + 1));
    if (points.kind != PointKind::projective || points.m != m || !(points.field == f))
        throw std::invalid_argument("interpolation_poly needs the projective point list of P^m");
    if (nu < 1 || nu > points.size()) throw std::out_of_range("point index outside 1..p_m");

    const Point& P = points[nu - 1];
    std::size_t j = m;
    while (P[j] == 0) --j;  // P[j] == 1 for a standard representative

    using poly::Poly;
    const std::size_t n = m + 1;
    const unsigned q1 = f.q() - 1;
    const Poly Xj = Poly::variable(f, n, j);
    const Poly Xj_q1 = Xj.pow(q1);
    Poly F = Xj.pow(d - full);
    for (std::size_t i = 0; i < j; ++i) {
        const Poly shifted = Poly::variable(f, n, i) - Xj.scaled(P[i]);
        F = F * (Xj_q1 - shifted.pow(q1));
    }
    for (std::size_t k = j + 1; k <= m; ++k) F = F * (Xj_q1 - Poly::variable(f, n, k).pow(q1));
    return F;
}

poly::Poly interpolation_poly(const gf::Field& f, unsigned d, unsigned m, std::size_t nu) {
    return interpolation_poly(f, d, m, nu, projective_points(f, m));
}

std::size_t weight(std::span<const gf::Elem> c) noexcept {
    return static_cast<std::size_t>(std::count_if(c.begin(), c.end(), [](gf::Elem x) { return x != 0; }));
}

std::vector<std::size_t> support(std::span<const gf::Elem> c) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i] != 0) s.push_back(i);
    return s;
}

}  // namespace prm::codes
