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

#include "prm/gf.hpp"

#include <algorithm>

namespace prm::gf {

namespace {

using Coeffs = std::vector<unsigned>;  // low degree first, over GF(p)

void trim(Coeffs& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic b over GF(p).
Coeffs poly_mod(Coeffs a, const Coeffs& b, unsigned p) {
    trim(a);
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        const unsigned lead = a.back();
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i) {
            a[shift + i] = (a[shift + i] + p - (lead * b[i]) % p) % p;
        }
        trim(a);
    }
    return a;
}

bool is_irreducible(const Coeffs& f, unsigned p) {
    const unsigned deg = static_cast<unsigned>(f.size() - 1);
    // Trial division by every monic polynomial of degree 1..deg/2.
    for (unsigned k = 1; k <= deg / 2; ++k) {
        unsigned count = 1;
        for (unsigned i = 0; i < k; ++i) count *= p;
        for (unsigned idx = 0; idx < count; ++idx) {
            Coeffs g(k + 1, 0);
            unsigned r = idx;
            for (unsigned i = 0; i < k; ++i) {
                g[i] = r % p;
                r /= p;
            }
            g[k] = 1;
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

// Lexicographically least monic irreducible of degree e, comparing c_0 first.
Coeffs least_irreducible(unsigned p, unsigned e) {
    unsigned count = 1;
    for (unsigned i = 0; i < e; ++i) count *= p;
    for (unsigned idx = 0; idx < count; ++idx) {
        Coeffs f(e + 1, 0);
        unsigned r = idx;
        for (unsigned i = e; i-- > 0;) {  // c_0 is the most significant digit
            f[i] = r % p;
            r /= p;
        }
        f[e] = 1;
        if (is_irreducible(f, p)) return f;
    }
    throw std::logic_error("no irreducible polynomial found");  // unreachable
}

}  // namespace

bool is_prime(unsigned n) noexcept {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Field Field::make(unsigned p, unsigned e) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
    if (e < 1) throw std::invalid_argument("field extension degree must be at least 1");
    unsigned long long q = 1;
    for (unsigned i = 0; i < e; ++i) {
        q *= p;
        if (q > max_order)
            throw std::invalid_argument("field order " + std::to_string(p) + "^" + std::to_string(e) +
                                        " exceeds the supported maximum 2^16");
    }

    auto t = std::make_shared<Tables>();
    t->p = p;
    t->e = e;
    t->q = static_cast<unsigned>(q);
    t->modulus = least_irreducible(p, e);

    auto digits_of = [&](Elem a) {
        Coeffs d(e, 0);
        for (unsigned i = 0; i < e; ++i) {
            d[i] = a % p;
            a /= p;
        }
        return d;
    };
    auto encode = [&](const Coeffs& d) {
        Elem v = 0;
        for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i];
        return v;
    };
    auto mul_slow = [&](Elem a, Elem b) {
        const Coeffs da = digits_of(a), db = digits_of(b);
        Coeffs prod(2 * e - 1, 0);
        for (unsigned i = 0; i < e; ++i)
            for (unsigned j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
        return encode(poly_mod(prod, t->modulus, p));
    };

    const unsigned order = t->q - 1;
    for (Elem g = 1; g < t->q; ++g) {
        unsigned k = 1;
        Elem x = g;
        while (x != 1) {
            x = mul_slow(x, g);
            ++k;
        }
        if (k == order) {
            t->generator = g;
            break;
        }
    }
    t->exp.assign(2 * order, 0);
    t->log.assign(t->q, 0);
    Elem x = 1;
    for (unsigned i = 0; i < order; ++i) {
        t->exp[i] = x;
        t->exp[i + order] = x;
        t->log[x] = i;
        x = mul_slow(x, t->generator);
    }

    if (e > 1 && p != 2 && t->q <= 256) {
        t->add_table.resize(static_cast<std::size_t>(t->q) * t->q);
        for (Elem a = 0; a < t->q; ++a)
            for (Elem b = 0; b < t->q; ++b) {
                const Coeffs da = digits_of(a), db = digits_of(b);
                Coeffs s(e);
                for (unsigned i = 0; i < e; ++i) s[i] = (da[i] + db[i]) % p;
                t->add_table[a * t->q + b] = encode(s);
            }
    }
    return Field(std::move(t));
}

Field Field::of_order(unsigned q) {
    if (q < 2) throw std::invalid_argument("field order must be at least 2");
    unsigned p = 2;
    while (q % p != 0) ++p;
    unsigned e = 0;
    unsigned r = q;
    while (r % p == 0) {
        r /= p;
        ++e;
    }
    if (r != 1) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
    return make(p, e);
}

Elem Field::add_digits(Elem a, Elem b) const noexcept {
    Elem out = 0, scale = 1;
    for (unsigned i = 0; i < t_->e; ++i) {
        out += ((a % t_->p + b % t_->p) % t_->p) * scale;
        a /= t_->p;
        b /= t_->p;
        scale *= t_->p;
    }
    return out;
}

Elem Field::neg_digits(Elem a) const noexcept {
    Elem out = 0, scale = 1;
    for (unsigned i = 0; i < t_->e; ++i) {
        out += ((t_->p - a % t_->p) % t_->p) * scale;
        a /= t_->p;
        scale *= t_->p;
    }
    return out;
}

Elem Field::inv(Elem a) const {
    if (a == 0) throw std::domain_error("division by zero in " + name());
    const unsigned order = t_->q - 1;
    return t_->exp[(order - t_->log[a]) % order];
}

Elem Field::pow(Elem a, long long n) const {
    if (a == 0) {
        if (n == 0) return 1;
        if (n < 0) throw std::domain_error("negative power of zero in " + name());
        return 0;
    }
    const long long order = t_->q - 1;
    long long k = (static_cast<long long>(t_->log[a]) * (n % order)) % order;
    if (k < 0) k += order;
    return t_->exp[static_cast<std::size_t>(k)];
}

std::vector<unsigned> Field::digits(Elem a) const {
    std::vector<unsigned> d(t_->e, 0);
    for (unsigned i = 0; i < t_->e; ++i) {
        d[i] = a % t_->p;
        a /= t_->p;
    }
    return d;
}

Elem Field::from_digits(std::span<const unsigned> digits) const {
    if (digits.size() > t_->e) throw std::invalid_argument("too many digits for " + name());
    Elem v = 0;
    for (std::size_t i = digits.size(); i-- > 0;) {
        if (digits[i] >= t_->p) throw std::invalid_argument("digit out of range for " + name());
        v = v * t_->p + digits[i];
    }
    return v;
}

std::string Field::name() const {
    return "GF(" + std::to_string(t_->q) + ")";
}

FieldElement::FieldElement(Field f, Elem v) : f_(std::move(f)), v_(v) {
    if (!f_.contains(v_))
        throw std::invalid_argument("element " + std::to_string(v) + " not in " + f_.name());
}

void FieldElement::check_same(const FieldElement& o) const {
    if (!(f_ == o.f_)) throw std::domain_error("mixed fields: " + f_.name() + " and " + o.f_.name());
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    check_same(o);
    return {f_, f_.add(v_, o.v_)};
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
    check_same(o);
    return {f_, f_.sub(v_, o.v_)};
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
    check_same(o);
    return {f_, f_.mul(v_, o.v_)};
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
    check_same(o);
    return {f_, f_.div(v_, o.v_)};
}

std::vector<FieldElement> elements(const Field& f) {
    std::vector<FieldElement> out;
    out.reserve(f.q());
    for (Elem a = 0; a < f.q(); ++a) out.emplace_back(f, a);
    return out;
}

}  // namespace prm::gf
