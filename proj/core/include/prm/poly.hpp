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

#ifndef PRM_POLY_HPP
#define PRM_POLY_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "prm/gf.hpp"

namespace prm::poly {

/// Exponent vector (a_0, ..., a_n-1). The length is the ambient variable count.
struct Monomial {
    std::vector<unsigned> exps;

    Monomial() = default;
    explicit Monomial(std::vector<unsigned> e) : exps(std::move(e)) {}
    static Monomial one(std::size_t nvars) { return Monomial(std::vector<unsigned>(nvars, 0)); }
    static Monomial var(std::size_t nvars, std::size_t i, unsigned power = 1);

    std::size_t nvars() const noexcept { return exps.size(); }
    unsigned degree() const noexcept;
    Monomial operator*(const Monomial& o) const;

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded-lexicographic order: lower total degree first; within a degree,
/// larger exponent of X_0 first, then X_1, and so on.
struct GradedLexLess {
    bool operator()(const Monomial& a, const Monomial& b) const noexcept;
};

/// Sparse polynomial over GF(q) in a fixed number of variables X_0..X_{n-1}.
/// Zero coefficients are never stored; the empty map is the zero polynomial.
class Poly {
   public:
    using Terms = std::map<Monomial, gf::Elem, GradedLexLess>;

    Poly(gf::Field f, std::size_t nvars) : f_(std::move(f)), nvars_(nvars) {}

    static Poly constant(gf::Field f, std::size_t nvars, gf::Elem c);
    static Poly variable(gf::Field f, std::size_t nvars, std::size_t i);
    static Poly monomial(gf::Field f, const Monomial& m, gf::Elem c = 1);

    const gf::Field& field() const noexcept { return f_; }
    std::size_t nvars() const noexcept { return nvars_; }
    const Terms& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Adds c * m, dropping the term if the coefficient cancels.
    void add_term(const Monomial& m, gf::Elem c);
    gf::Elem coefficient(const Monomial& m) const;

    /// True when every stored monomial has degree d (the zero polynomial is
    /// homogeneous of every degree).
    bool is_homogeneous(unsigned d) const noexcept;
    /// Highest total degree; nullopt for the zero polynomial.
    std::optional<unsigned> degree() const noexcept;

    /// Exact evaluation, with 0^0 = 1. Throws std::domain_error on a length mismatch.
    gf::Elem evaluate(std::span<const gf::Elem> point) const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly scaled(gf::Elem c) const;
    Poly pow(unsigned k) const;

    /// Composition: X_i -> images[i]. All images share this field; their
    /// variable count becomes the result's.
    Poly substitute(const std::vector<Poly>& images) const;

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.f_ == b.f_ && a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

   private:
    void check_compatible(const Poly& o) const;

    gf::Field f_;
    std::size_t nvars_;
    Terms terms_;
};

/// Projective reduction of one monomial for the field order q. Exponents of
/// variables before the last one present are folded into [1, q-1] modulo q-1
/// (values already in [0, q-1] are kept); the surplus moves onto the last
/// variable, so the degree and the values on F_q^{n} are unchanged.
Monomial reduce_projective(const Monomial& m, unsigned q);
bool is_projectively_reduced(const Monomial& m, unsigned q);

/// Termwise projective reduction with like terms recombined; idempotent.
Poly reduce_projective(const Poly& f);
bool is_projectively_reduced(const Poly& f);

/// Projectively reduced monomials of degree d in m+1 variables, graded-lex
/// order. Their evaluations form a basis of the projective code of order d.
std::vector<Monomial> basis_C(const gf::Field& f, unsigned d, unsigned m);

/// Monomials in n variables with every exponent <= q-1 and degree <= nu,
/// graded-lex order.
std::vector<Monomial> reduced_monomials_affine(const gf::Field& f, unsigned nu, unsigned n);

/// Nonzero homogeneous linear polynomial c_0 X_0 + ... + c_m X_m.
class LinearForm {
   public:
    /// Throws std::invalid_argument if all coefficients are zero or out of range.
    LinearForm(gf::Field f, std::vector<gf::Elem> coeffs);

    const gf::Field& field() const noexcept { return f_; }
    const std::vector<gf::Elem>& coeffs() const noexcept { return c_; }
    std::size_t nvars() const noexcept { return c_.size(); }

    gf::Elem evaluate(std::span<const gf::Elem> point) const;
    Poly to_poly() const;

    friend bool operator==(const LinearForm& a, const LinearForm& b) { return a.f_ == b.f_ && a.c_ == b.c_; }

   private:
    gf::Field f_;
    std::vector<gf::Elem> c_;
};

/// Quotient g with f = L * g when it exists. f must be homogeneous. Works by
/// the linear change of coordinates sending L to a coordinate variable.
std::optional<Poly> divide_by_linear(const LinearForm& L, const Poly& f);
inline bool divides_linear(const LinearForm& L, const Poly& f) { return divide_by_linear(L, f).has_value(); }

/// L = a_i X_j - a_j X_i for the first pair i < j with a_i b_j - a_j b_i != 0,
/// so that L(A) = 0 and L(B) != 0. Throws std::domain_error if A and B are
/// the same projective point (or either is the zero vector).
LinearForm separating_form(const gf::Field& f, std::span<const gf::Elem> A, std::span<const gf::Elem> B);

/// Text format: "2*X0*X1^2 + X2^3". Coefficients are canonical integers; a
/// unit coefficient and zero exponents are omitted; the zero polynomial is "0".
std::string to_string(const Poly& f);
std::string to_string(const Monomial& m);

class ParseError : public std::runtime_error {
   public:
    ParseError(const std::string& what, std::size_t line, std::size_t column);
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

   private:
    std::size_t line_, column_;
};

/// Parses the text format (also accepts '-' between terms). Throws ParseError
/// with a 1-based line and column.
Poly parse(std::string_view text, const gf::Field& f, std::size_t nvars);

}  // namespace prm::poly

#endif  // PRM_POLY_HPP
