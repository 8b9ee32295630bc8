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

#include "prm/poly.hpp"

#include <algorithm>
#include <numeric>

namespace prm::poly {

Monomial Monomial::var(std::size_t nvars, std::size_t i, unsigned power) {
    if (i >= nvars) throw std::out_of_range("variable index out of range");
    Monomial m = one(nvars);
    m.exps[i] = power;
    return m;
}

unsigned Monomial::degree() const noexcept {
    return std::accumulate(exps.begin(), exps.end(), 0u);
}

Monomial Monomial::operator*(const Monomial& o) const {
    if (o.nvars() != nvars()) throw std::invalid_argument("monomials over different variable counts");
    Monomial r = *this;
    for (std::size_t i = 0; i < exps.size(); ++i) r.exps[i] += o.exps[i];
    return r;
}

bool GradedLexLess::operator()(const Monomial& a, const Monomial& b) const noexcept {
    const unsigned da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return std::lexicographical_compare(b.exps.begin(), b.exps.end(), a.exps.begin(), a.exps.end());
}

// ---------------------------------------------------------------------------

Poly Poly::constant(gf::Field f, std::size_t nvars, gf::Elem c) {
    Poly p(std::move(f), nvars);
    p.add_term(Monomial::one(nvars), c);
    return p;
}

Poly Poly::variable(gf::Field f, std::size_t nvars, std::size_t i) {
    Poly p(std::move(f), nvars);
    p.add_term(Monomial::var(nvars, i), 1);
    return p;
}

Poly Poly::monomial(gf::Field f, const Monomial& m, gf::Elem c) {
    Poly p(std::move(f), m.nvars());
    p.add_term(m, c);
    return p;
}

void Poly::add_term(const Monomial& m, gf::Elem c) {
    if (m.nvars() != nvars_) throw std::invalid_argument("monomial variable count does not match polynomial");
    if (!f_.contains(c)) throw std::invalid_argument("coefficient not in " + f_.name());
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second = f_.add(it->second, c);
        if (it->second == 0) terms_.erase(it);
    }
}

gf::Elem Poly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? 0 : it->second;
}

bool Poly::is_homogeneous(unsigned d) const noexcept {
    return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return t.first.degree() == d; });
}

std::optional<unsigned> Poly::degree() const noexcept {
    if (terms_.empty()) return std::nullopt;
    return terms_.rbegin()->first.degree();
}

gf::Elem Poly::evaluate(std::span<const gf::Elem> point) const {
    if (point.size() != nvars_)
        throw std::domain_error("point has " + std::to_string(point.size()) + " coordinates, polynomial has " +
                                std::to_string(nvars_) + " variables");
    gf::Elem acc = 0;
    for (const auto& [m, c] : terms_) {
        gf::Elem v = c;
        for (std::size_t i = 0; i < nvars_ && v != 0; ++i)
            if (m.exps[i] != 0) v = f_.mul(v, f_.pow(point[i], m.exps[i]));
        acc = f_.add(acc, v);
    }
    return acc;
}

void Poly::check_compatible(const Poly& o) const {
    if (!(f_ == o.f_)) throw std::domain_error("polynomials over different fields");
    if (nvars_ != o.nvars_) throw std::domain_error("polynomials over different variable counts");
}

Poly Poly::operator+(const Poly& o) const {
    check_compatible(o);
    Poly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    check_compatible(o);
    Poly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, f_.neg(c));
    return r;
}

Poly Poly::operator-() const {
    return scaled(f_.neg(1));
}

Poly Poly::operator*(const Poly& o) const {
    check_compatible(o);
    Poly r(f_, nvars_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, f_.mul(ca, cb));
    return r;
}

Poly Poly::scaled(gf::Elem c) const {
    Poly r(f_, nvars_);
    if (c == 0) return r;
    for (const auto& [m, a] : terms_) r.terms_.emplace(m, f_.mul(a, c));
    return r;
}

Poly Poly::pow(unsigned k) const {
    Poly result = constant(f_, nvars_, 1);
    Poly base = *this;
    while (k > 0) {
        if (k & 1u) result = result * base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return result;
}

Poly Poly::substitute(const std::vector<Poly>& images) const {
    if (images.size() != nvars_) throw std::invalid_argument("substitute needs one image per variable");
    const std::size_t out_vars = images.empty() ? 0 : images.front().nvars();
    for (const auto& img : images)
        if (!(img.field() == f_) || img.nvars() != out_vars)
            throw std::invalid_argument("substitution images must share field and variable count");

    std::vector<std::vector<Poly>> powers(nvars_);  // powers[i][k] = images[i]^k
    Poly r(f_, out_vars);
    for (const auto& [m, c] : terms_) {
        Poly term = constant(f_, out_vars, c);
        for (std::size_t i = 0; i < nvars_; ++i) {
            const unsigned a = m.exps[i];
            if (a == 0) continue;
            auto& pw = powers[i];
            if (pw.empty()) pw.push_back(constant(f_, out_vars, 1));
            while (pw.size() <= a) pw.push_back(pw.back() * images[i]);
            term = term * pw[a];
        }
        r = r + term;
    }
    return r;
}

// ---------------------------------------------------------------------------

Monomial reduce_projective(const Monomial& m, unsigned q) {
    std::size_t last = m.nvars();
    for (std::size_t i = m.nvars(); i-- > 0;)
        if (m.exps[i] > 0) {
            last = i;
            break;
        }
    if (last == m.nvars()) return m;  // the constant monomial 1

    Monomial r = m;
    unsigned surplus = 0;
    for (std::size_t i = 0; i < last; ++i) {
        const unsigned a = m.exps[i];
        if (a >= q) {
            const unsigned folded = (a - 1) % (q - 1) + 1;
            surplus += a - folded;
            r.exps[i] = folded;
        }
    }
    r.exps[last] += surplus;
    return r;
}

bool is_projectively_reduced(const Monomial& m, unsigned q) {
    return reduce_projective(m, q) == m;
}

Poly reduce_projective(const Poly& f) {
    Poly r(f.field(), f.nvars());
    for (const auto& [m, c] : f.terms()) r.add_term(reduce_projective(m, f.field().q()), c);
    return r;
}

bool is_projectively_reduced(const Poly& f) {
    const unsigned q = f.field().q();
    return std::all_of(f.terms().begin(), f.terms().end(),
                       [q](const auto& t) { return is_projectively_reduced(t.first, q); });
}

namespace {

// Exponent vectors for variables [0, n) with each entry <= cap and sum in [lo, hi].
void bounded_vectors(std::size_t n, unsigned cap, unsigned lo, unsigned hi, std::vector<unsigned>& cur,
                     std::vector<std::vector<unsigned>>& out) {
    if (cur.size() == n) {
        const unsigned s = std::accumulate(cur.begin(), cur.end(), 0u);
        if (s >= lo && s <= hi) out.push_back(cur);
        return;
    }
    const unsigned used = std::accumulate(cur.begin(), cur.end(), 0u);
    for (unsigned a = 0; a <= cap && used + a <= hi; ++a) {
        cur.push_back(a);
        bounded_vectors(n, cap, lo, hi, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Monomial> basis_C(const gf::Field& f, unsigned d, unsigned m) {
    if (d < 1) throw std::invalid_argument("basis_C requires d >= 1");
    const unsigned q = f.q();
    std::vector<Monomial> out;
    // Split by the last variable X_l present: a_0..a_{l-1} <= q-1 summing to
    // at most d-1, and a_l takes the rest.
    for (std::size_t last = 0; last <= m; ++last) {
        std::vector<std::vector<unsigned>> heads;
        std::vector<unsigned> cur;
        bounded_vectors(last, q - 1, 0, d - 1, cur, heads);
        for (auto& h : heads) {
            std::vector<unsigned> e(m + 1, 0);
            std::copy(h.begin(), h.end(), e.begin());
            e[last] = d - std::accumulate(h.begin(), h.end(), 0u);
            out.emplace_back(std::move(e));
        }
    }
    std::sort(out.begin(), out.end(), GradedLexLess{});
    return out;
}

std::vector<Monomial> reduced_monomials_affine(const gf::Field& f, unsigned nu, unsigned n) {
    std::vector<std::vector<unsigned>> vecs;
    std::vector<unsigned> cur;
    bounded_vectors(n, f.q() - 1, 0, nu, cur, vecs);
    std::vector<Monomial> out;
    out.reserve(vecs.size());
    for (auto& v : vecs) out.emplace_back(std::move(v));
    std::sort(out.begin(), out.end(), GradedLexLess{});
    return out;
}

// ---------------------------------------------------------------------------

LinearForm::LinearForm(gf::Field f, std::vector<gf::Elem> coeffs) : f_(std::move(f)), c_(std::move(coeffs)) {
    bool nonzero = false;
    for (auto c : c_) {
        if (!f_.contains(c)) throw std::invalid_argument("linear form coefficient not in " + f_.name());
        nonzero = nonzero || c != 0;
    }
    if (!nonzero) throw std::invalid_argument("linear form must have a nonzero coefficient");
}

gf::Elem LinearForm::evaluate(std::span<const gf::Elem> point) const {
    if (point.size() != c_.size()) throw std::domain_error("point length does not match linear form");
    gf::Elem acc = 0;
    for (std::size_t i = 0; i < c_.size(); ++i) acc = f_.add(acc, f_.mul(c_[i], point[i]));
    return acc;
}

Poly LinearForm::to_poly() const {
    Poly p(f_, c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) p.add_term(Monomial::var(c_.size(), i), c_[i]);
    return p;
}

std::optional<Poly> divide_by_linear(const LinearForm& L, const Poly& f) {
    if (!(L.field() == f.field()) || L.nvars() != f.nvars())
        throw std::domain_error("linear form and polynomial live in different rings");
    const auto deg = f.degree();
    if (!deg) return Poly(f.field(), f.nvars());  // L divides 0
    if (!f.is_homogeneous(*deg)) throw std::invalid_argument("divide_by_linear expects a homogeneous polynomial");

    const gf::Field& F = f.field();
    const std::size_t n = f.nvars();
    std::size_t k = n;
    for (std::size_t i = n; i-- > 0;)
        if (L.coeffs()[i] != 0) {
            k = i;
            break;
        }

    // New coordinates Y: Y_k = L(X), Y_i = X_i otherwise. Then
    // X_k = (Y_k - sum_{i != k} c_i Y_i) / c_k.
    const gf::Elem ck_inv = F.inv(L.coeffs()[k]);
    std::vector<Poly> to_y;
    for (std::size_t i = 0; i < n; ++i) {
        if (i != k) {
            to_y.push_back(Poly::variable(F, n, i));
            continue;
        }
        Poly xk = Poly::variable(F, n, k);
        for (std::size_t j = 0; j < n; ++j)
            if (j != k && L.coeffs()[j] != 0) xk.add_term(Monomial::var(n, j), F.neg(L.coeffs()[j]));
        to_y.push_back(xk.scaled(ck_inv));
    }
    const Poly g = f.substitute(to_y);

    Poly h(F, n);
    for (const auto& [m, c] : g.terms()) {
        if (m.exps[k] == 0) return std::nullopt;
        Monomial lowered = m;
        --lowered.exps[k];
        h.add_term(lowered, c);
    }

    std::vector<Poly> back;
    for (std::size_t i = 0; i < n; ++i) back.push_back(i == k ? L.to_poly() : Poly::variable(F, n, i));
    return h.substitute(back);
}

LinearForm separating_form(const gf::Field& f, std::span<const gf::Elem> A, std::span<const gf::Elem> B) {
    if (A.size() != B.size()) throw std::domain_error("points of different dimensions");
    const auto is_zero = [](std::span<const gf::Elem> v) {
        return std::all_of(v.begin(), v.end(), [](gf::Elem x) { return x == 0; });
    };
    if (is_zero(A) || is_zero(B)) throw std::domain_error("zero vector is not a projective point");
    const std::size_t n = A.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const gf::Elem minor = f.sub(f.mul(A[i], B[j]), f.mul(A[j], B[i]));
            if (minor == 0) continue;
            std::vector<gf::Elem> c(n, 0);
            c[j] = A[i];
            c[i] = f.neg(A[j]);
            return LinearForm(f, std::move(c));
        }
    throw std::domain_error("separating_form: A and B are the same projective point");
}

}  // namespace prm::poly
