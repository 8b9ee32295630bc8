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

#ifndef PRM_GF_HPP
#define PRM_GF_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace prm::gf {

/// Canonical integer encoding of an element of GF(p^e): the base-p digits are
/// the coefficients of the polynomial representative, lowest degree first.
using Elem = std::uint32_t;

/// Largest field order accepted by Field::make.
inline constexpr unsigned max_order = 1u << 16;

/// GF(q), q = p^e, with the lexicographically least monic irreducible modulus.
///
/// A Field is an immutable value; copies share the arithmetic tables. Two
/// fields compare equal iff they have the same (p, e), which determines the
/// modulus uniquely.
class Field {
   public:
    /// Throws std::invalid_argument if p is not prime, e < 1 or p^e > max_order.
    static Field make(unsigned p, unsigned e);
    /// Factors q as a prime power; throws std::invalid_argument otherwise.
    static Field of_order(unsigned q);

    unsigned p() const noexcept { return t_->p; }
    unsigned e() const noexcept { return t_->e; }
    unsigned q() const noexcept { return t_->q; }
    /// Coefficients c_0..c_e of the monic modulus (c_e = 1). For e = 1 this is x.
    const std::vector<unsigned>& modulus() const noexcept { return t_->modulus; }

    Elem zero() const noexcept { return 0; }
    Elem one() const noexcept { return 1; }
    bool contains(Elem a) const noexcept { return a < t_->q; }

    Elem add(Elem a, Elem b) const noexcept {
        if (t_->e == 1) {
            Elem s = a + b;
            return s >= t_->p ? s - t_->p : s;
        }
        if (t_->p == 2) return a ^ b;
        if (!t_->add_table.empty()) return t_->add_table[a * t_->q + b];
        return add_digits(a, b);
    }
    Elem neg(Elem a) const noexcept {
        if (a == 0) return 0;
        if (t_->e == 1) return t_->p - a;
        if (t_->p == 2) return a;
        return neg_digits(a);
    }
    Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }
    Elem mul(Elem a, Elem b) const noexcept {
        if (a == 0 || b == 0) return 0;
        return t_->exp[t_->log[a] + t_->log[b]];
    }
    /// Throws std::domain_error on a == 0.
    Elem inv(Elem a) const;
    /// Throws std::domain_error on b == 0.
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    /// Any integer exponent; negative exponents go through the inverse.
    /// 0^0 = 1; 0^n for n < 0 throws std::domain_error.
    Elem pow(Elem a, long long n) const;

    std::vector<unsigned> digits(Elem a) const;
    /// Inverse of digits(); missing high digits are zero.
    Elem from_digits(std::span<const unsigned> digits) const;

    /// Primitive element used for the log tables.
    Elem generator() const noexcept { return t_->generator; }

    std::string name() const;

    friend bool operator==(const Field& a, const Field& b) noexcept {
        return a.t_ == b.t_ || (a.p() == b.p() && a.e() == b.e());
    }

   private:
    struct Tables {
        unsigned p = 0, e = 0, q = 0;
        std::vector<unsigned> modulus;
        Elem generator = 1;
        std::vector<Elem> exp;  // length 2(q-1), exp[i] = g^i
        std::vector<std::uint32_t> log;
        std::vector<Elem> add_table;  // only for composite fields with q <= 256
    };

    explicit Field(std::shared_ptr<const Tables> t) : t_(std::move(t)) {}
    Elem add_digits(Elem a, Elem b) const noexcept;
    Elem neg_digits(Elem a) const noexcept;

    std::shared_ptr<const Tables> t_;
};

bool is_prime(unsigned n) noexcept;

/// Field element carrying its field; arithmetic between elements of different
/// fields throws std::domain_error. Hot loops use Field with raw Elem instead.
class FieldElement {
   public:
    FieldElement(Field f, Elem v);

    const Field& field() const noexcept { return f_; }
    Elem value() const noexcept { return v_; }
    bool is_zero() const noexcept { return v_ == 0; }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement operator-() const { return {f_, f_.neg(v_)}; }
    FieldElement inverse() const { return {f_, f_.inv(v_)}; }
    FieldElement pow(long long n) const { return {f_, f_.pow(v_, n)}; }

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.f_ == b.f_ && a.v_ == b.v_;
    }

   private:
    void check_same(const FieldElement& o) const;
    Field f_;
    Elem v_;
};

/// All q elements in increasing canonical order, starting at 0.
std::vector<FieldElement> elements(const Field& f);

}  // namespace prm::gf

#endif  // PRM_GF_HPP
