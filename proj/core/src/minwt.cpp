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

#include "prm/minwt.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "prm/linalg.hpp"
#include "prm/oracle.hpp"

namespace prm::minwt {

using comb::binomial;
using comb::gaussian_binomial;
using comb::ipow;
using poly::Poly;

namespace {

TSDecomp split(unsigned q, long long order) {
    const long long q1 = q - 1;
    return {static_cast<unsigned>(order / q1), static_cast<unsigned>(order % q1)};
}

// ceil((q-s) q^(m-t-1)); the exponent is negative only at the top order.
BigInt distance_from(unsigned q, TSDecomp ts, long long m) {
    const long long e = m - static_cast<long long>(ts.t) - 1;
    if (e >= 0) return BigInt(q - ts.s) * ipow(q, static_cast<unsigned>(e));
    const BigInt den = ipow(q, static_cast<unsigned>(-e));
    const BigInt num = q - ts.s;
    return (num + den - 1) / den;
}

BigInt exact_div(const BigInt& a, const BigInt& b, const char* what) {
    if (a % b != 0) throw std::logic_error(std::string(what) + ": division is not exact");
    return a / b;
}

unsigned form_count(Family kind, TSDecomp ts) {
    // PRM: L_0..L_t, plus L_{t+1} when s > 0. RM: l_1..l_t, plus l_{t+1}.
    const unsigned base = kind == Family::prm ? ts.t + 1 : ts.t;
    return ts.s > 0 ? base + 1 : base;
}

Poly linear_poly(const gf::Field& f, const std::vector<gf::Elem>& c) {
    Poly p(f, c.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i] != 0) p.add_term(poly::Monomial::var(c.size(), i), c[i]);
    return p;
}

Poly affine_poly(const gf::Field& f, const std::vector<gf::Elem>& c) {
    const std::size_t n = c.size() - 1;
    Poly p = Poly::constant(f, n, c[0]);
    for (std::size_t i = 0; i < n; ++i)
        if (c[i + 1] != 0) p.add_term(poly::Monomial::var(n, i), c[i + 1]);
    return p;
}

void check_omegas(const gf::Field& f, const std::vector<gf::Elem>& omegas, unsigned s) {
    if (omegas.size() != s)
        throw std::invalid_argument("expected " + std::to_string(s) + " omegas, got " + std::to_string(omegas.size()));
    std::set<gf::Elem> seen;
    for (auto w : omegas) {
        if (!f.contains(w)) throw std::invalid_argument("omega " + std::to_string(w) + " is not in " + f.name());
        if (!seen.insert(w).second) throw std::invalid_argument("omegas must be distinct");
    }
}

gf::Elem random_elem(const gf::Field& f, std::mt19937_64& rng) {
    return static_cast<gf::Elem>(rng() % f.q());
}

std::vector<gf::Elem> random_subset(const gf::Field& f, unsigned s, std::mt19937_64& rng) {
    std::vector<gf::Elem> all(f.q());
    for (gf::Elem i = 0; i < f.q(); ++i) all[i] = i;
    for (unsigned i = 0; i < s; ++i) std::swap(all[i], all[i + rng() % (f.q() - i)]);
    all.resize(s);
    return all;
}

linalg::Matrix random_independent(const gf::Field& f, unsigned count, std::size_t n, std::mt19937_64& rng) {
    linalg::Matrix out;
    while (out.size() < count) {
        linalg::Vector v(n);
        for (auto& x : v) x = random_elem(f, rng);
        out.push_back(v);
        if (!linalg::independent(f, out)) out.pop_back();
    }
    return out;
}

}  // namespace

TSDecomp ts_decompose(Family kind, unsigned q, long long order, long long m) {
    if (q < 2) throw std::invalid_argument("q must be at least 2");
    if (m < 1) throw std::invalid_argument("m must be at least 1");
    const long long top = m * (q - 1);
    if (kind == Family::rm) {
        if (order < 0 || order > top)
            throw std::invalid_argument("RM order nu=" + std::to_string(order) + " outside 0.." + std::to_string(top));
        return split(q, order);
    }
    if (order < 1 || order > top + 1)
        throw std::invalid_argument("PRM order d=" + std::to_string(order) + " outside 1.." + std::to_string(top + 1));
    return split(q, order - 1);
}

BigInt rm_min_distance(unsigned q, long long nu, long long m) {
    return distance_from(q, ts_decompose(Family::rm, q, nu, m), m);
}

BigInt prm_min_distance(unsigned q, long long d, long long m) {
    return distance_from(q, ts_decompose(Family::prm, q, d, m), m);
}

BigInt max_zero_bound(unsigned q, long long d, long long m) {
    if (q < 2) throw std::invalid_argument("q must be at least 2");
    if (m < 1) throw std::invalid_argument("m must be at least 1");
    if (d < 1) throw std::invalid_argument("degree must be at least 1");
    return comb::p_k(q, m) - distance_from(q, split(q, d - 1), m);
}

poly::Poly canonical_min_poly(const gf::Field& f, unsigned d, unsigned m, const std::vector<gf::Elem>& omegas) {
    const TSDecomp ts = ts_decompose(Family::prm, f.q(), d, m);
    check_omegas(f, omegas, ts.s);
    const std::size_t n = m + 1;
    const unsigned q1 = f.q() - 1;
    const Poly Xt = Poly::variable(f, n, ts.t);
    const Poly Xt_q1 = Xt.pow(q1);
    Poly F = Xt;
    for (unsigned i = 0; i < ts.t; ++i) F = F * (Poly::variable(f, n, i).pow(q1) - Xt_q1);
    if (ts.s > 0) {
        const Poly Xt1 = Poly::variable(f, n, ts.t + 1);
        for (auto w : omegas) F = F * (Xt1 - Xt.scaled(w));
    }
    return F;
}

void validate_witness(const MinWtWitness& w, const gf::Field& f, unsigned order, unsigned m) {
    const TSDecomp ts = ts_decompose(w.kind, f.q(), order, m);
    const unsigned k = form_count(w.kind, ts);
    if (w.linear_forms.size() != k)
        throw std::invalid_argument("expected " + std::to_string(k) + " linear forms, got " +
                                    std::to_string(w.linear_forms.size()));
    linalg::Matrix parts;
    for (const auto& c : w.linear_forms) {
        if (c.size() != m + 1)
            throw std::invalid_argument("each linear form needs " + std::to_string(m + 1) + " coefficients");
        for (auto x : c)
            if (!f.contains(x)) throw std::invalid_argument("coefficient " + std::to_string(x) + " is not in " + f.name());
        if (w.kind == Family::prm)
            parts.push_back(c);
        else
            parts.emplace_back(c.begin() + 1, c.end());
    }
    if (!linalg::independent(f, parts))
        throw std::invalid_argument(w.kind == Family::prm ? "linear forms are not linearly independent"
                                                          : "linear parts of the affine forms are not independent");
    check_omegas(f, w.omegas, ts.s);
    if (w.kind == Family::rm && (w.omega0 == 0 || !f.contains(w.omega0)))
        throw std::invalid_argument("omega0 must be a nonzero element of " + f.name());
}

poly::Poly prm_witness_poly(const MinWtWitness& w, const gf::Field& f, unsigned d, unsigned m) {
    if (w.kind != Family::prm) throw std::invalid_argument("prm_witness_poly needs a PRM witness");
    validate_witness(w, f, d, m);
    const TSDecomp ts = ts_decompose(Family::prm, f.q(), d, m);
    const unsigned q1 = f.q() - 1;
    const Poly Lt = linear_poly(f, w.linear_forms[ts.t]);
    const Poly Lt_q1 = Lt.pow(q1);
    Poly F = Lt;
    for (unsigned i = 0; i < ts.t; ++i) F = F * (Lt_q1 - linear_poly(f, w.linear_forms[i]).pow(q1));
    if (ts.s > 0) {
        const Poly Lt1 = linear_poly(f, w.linear_forms[ts.t + 1]);
        for (auto om : w.omegas) F = F * (Lt1 - Lt.scaled(om));
    }
    return F;
}

poly::Poly rm_witness_poly(const MinWtWitness& w, const gf::Field& f, unsigned nu, unsigned m) {
    if (w.kind != Family::rm) throw std::invalid_argument("rm_witness_poly needs an RM witness");
    validate_witness(w, f, nu, m);
    const TSDecomp ts = ts_decompose(Family::rm, f.q(), nu, m);
    const unsigned q1 = f.q() - 1;
    const Poly one = Poly::constant(f, m, 1);
    Poly F = Poly::constant(f, m, w.omega0);
    for (unsigned i = 0; i < ts.t; ++i) F = F * (one - affine_poly(f, w.linear_forms[i]).pow(q1));
    if (ts.s > 0) {
        const Poly l = affine_poly(f, w.linear_forms[ts.t]);
        for (auto om : w.omegas) F = F * (l - Poly::constant(f, m, om));
    }
    return F;
}

MinWtWitness random_prm_witness(const gf::Field& f, unsigned d, unsigned m, std::mt19937_64& rng) {
    const TSDecomp ts = ts_decompose(Family::prm, f.q(), d, m);
    MinWtWitness w;
    w.kind = Family::prm;
    w.linear_forms = random_independent(f, form_count(Family::prm, ts), m + 1, rng);
    w.omegas = random_subset(f, ts.s, rng);
    return w;
}

MinWtWitness random_rm_witness(const gf::Field& f, unsigned nu, unsigned m, std::mt19937_64& rng) {
    const TSDecomp ts = ts_decompose(Family::rm, f.q(), nu, m);
    MinWtWitness w;
    w.kind = Family::rm;
    for (auto& part : random_independent(f, form_count(Family::rm, ts), m, rng)) {
        std::vector<gf::Elem> c{random_elem(f, rng)};
        c.insert(c.end(), part.begin(), part.end());
        w.linear_forms.push_back(std::move(c));
    }
    w.omegas = random_subset(f, ts.s, rng);
    w.omega0 = 1 + static_cast<gf::Elem>(rng() % (f.q() - 1));
    return w;
}

BigInt rm_min_weight_count(unsigned q, long long nu, long long m) {
    const TSDecomp ts = ts_decompose(Family::rm, q, nu, m);
    BigInt ms = 1;
    if (ts.s > 0) ms = binomial(q, ts.s) * gaussian_binomial(m - ts.t, 1, q);
    return BigInt(q - 1) * ipow(q, ts.t) * gaussian_binomial(m, ts.t, q) * ms;
}

BigInt prm_min_weight_count(unsigned q, long long d, long long m) {
    const TSDecomp ts = ts_decompose(Family::prm, q, d, m);
    const BigInt lead = (ipow(q, static_cast<unsigned>(m + 1)) - 1) * gaussian_binomial(m, ts.t, q);
    if (ts.s == 0) return lead;
    return exact_div(lead * binomial(q, ts.s) * gaussian_binomial(m - ts.t, 1, q), BigInt(ts.s + 1),
                     "prm_min_weight_count");
}

BigInt prm_min_weight_count_alt(unsigned q, long long d, long long m) {
    const TSDecomp ts = ts_decompose(Family::prm, q, d, m);
    if (ts.s == 0) return prm_min_weight_count(q, d, m);
    const auto M = static_cast<unsigned>(m);
    const BigInt num = (ipow(q, M + 1) - 1) * (ipow(q, M) - 1) * gaussian_binomial(m - 1, ts.t, q) *
                       binomial(q + 1, ts.s + 1);
    return exact_div(num, BigInt(q + 1) * (q - 1), "prm_min_weight_count_alt");
}

CountReport count_report(const gf::Field& f, long long d, long long m, bool with_oracle, std::uint64_t oracle_guard) {
    CountReport r{f.q(), d, m, ts_decompose(Family::prm, f.q(), d, m), prm_min_distance(f.q(), d, m),
                  prm_min_weight_count(f.q(), d, m), prm_min_weight_count_alt(f.q(), d, m), std::nullopt,
                  std::nullopt, false};
    r.agree = r.formula_count == r.alt_count;
    if (with_oracle) {
        const auto g = codes::prm_generator_matrix(f, static_cast<unsigned>(d), static_cast<unsigned>(m));
        const auto dist = oracle::weight_distribution(g, oracle_guard);
        const std::size_t w = dist.min_distance();
        r.brute_distance = BigInt(w);
        r.brute_count = BigInt(dist.counts[w]);
        r.agree = r.agree && *r.brute_distance == r.distance && *r.brute_count == r.formula_count;
    }
    return r;
}

BigInt witness_tuple_count(const gf::Field& f, unsigned d, unsigned m) {
    const TSDecomp ts = ts_decompose(Family::prm, f.q(), d, m);
    const unsigned k = form_count(Family::prm, ts);
    const BigInt qn = ipow(f.q(), m + 1);
    BigInt n = 1;
    for (unsigned i = 0; i < k; ++i) n *= qn - ipow(f.q(), i);
    return n;
}

std::vector<codes::Codeword> enumerate_witness_codewords(const gf::Field& f, unsigned d, unsigned m,
                                                         std::uint64_t guard) {
    const TSDecomp ts = ts_decompose(Family::prm, f.q(), d, m);
    const BigInt tuples = witness_tuple_count(f, d, m) * binomial(f.q(), ts.s);
    if (tuples > guard)
        throw std::length_error("witness enumeration needs " + tuples.str() + " tuples, above the guard of " +
                                std::to_string(guard));

    const auto pts = codes::projective_points(f, m);
    const std::size_t n = pts.size();
    const auto forms = linalg::all_vectors(f, m + 1);
    // vals[L][P] = L(P) for every linear form, including zero.
    std::vector<std::vector<gf::Elem>> vals(forms.size(), std::vector<gf::Elem>(n));
    for (std::size_t L = 0; L < forms.size(); ++L)
        for (std::size_t j = 0; j < n; ++j) {
            gf::Elem v = 0;
            for (std::size_t i = 0; i <= m; ++i) v = f.add(v, f.mul(forms[L][i], pts[j][i]));
            vals[L][j] = v;
        }
    const auto pw = [&](gf::Elem x) -> gf::Elem { return x == 0 ? 0 : 1; };  // x^(q-1)

    // Omega subsets of size s.
    std::vector<std::vector<gf::Elem>> subsets;
    {
        std::vector<gf::Elem> cur;
        auto rec = [&](auto&& self, gf::Elem next) -> void {
            if (cur.size() == ts.s) {
                subsets.push_back(cur);
                return;
            }
            for (gf::Elem x = next; x < f.q(); ++x) {
                cur.push_back(x);
                self(self, x + 1);
                cur.pop_back();
            }
        };
        rec(rec, 0);
    }

    const unsigned k = form_count(Family::prm, ts);
    std::set<codes::Codeword> words;
    std::vector<std::size_t> chosen;
    linalg::Matrix chosen_rows;
    codes::Codeword base(n), word(n);

    auto emit = [&]() {
        const auto& lt = vals[chosen[ts.t]];
        for (std::size_t j = 0; j < n; ++j) {
            gf::Elem v = lt[j];
            for (unsigned i = 0; i < ts.t && v != 0; ++i) v = f.mul(v, f.sub(pw(lt[j]), pw(vals[chosen[i]][j])));
            base[j] = v;
        }
        if (ts.s == 0) {
            words.insert(base);
            return;
        }
        const auto& lt1 = vals[chosen[ts.t + 1]];
        for (const auto& S : subsets) {
            for (std::size_t j = 0; j < n; ++j) {
                gf::Elem v = base[j];
                for (auto om : S) {
                    if (v == 0) break;
                    v = f.mul(v, f.sub(lt1[j], f.mul(om, lt[j])));
                }
                word[j] = v;
            }
            words.insert(word);
        }
    };

    auto rec = [&](auto&& self) -> void {
        if (chosen.size() == k) {
            emit();
            return;
        }
        for (std::size_t L = 1; L < forms.size(); ++L) {
            chosen_rows.push_back(forms[L]);
            if (linalg::independent(f, chosen_rows)) {
                chosen.push_back(L);
                self(self);
                chosen.pop_back();
            }
            chosen_rows.pop_back();
        }
    };
    rec(rec);
    return {words.begin(), words.end()};
}

}  // namespace prm::minwt
