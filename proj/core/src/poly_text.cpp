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
#include <cctype>
#include <charconv>

#include "prm/poly.hpp"

namespace prm::poly {

std::string to_string(const Monomial& m) {
    std::string s;
    for (std::size_t i = 0; i < m.exps.size(); ++i) {
        if (m.exps[i] == 0) continue;
        if (!s.empty()) s += '*';
        s += 'X' + std::to_string(i);
        if (m.exps[i] > 1) s += '^' + std::to_string(m.exps[i]);
    }
    return s.empty() ? "1" : s;
}

std::string to_string(const Poly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    // Highest degree first; within a degree, graded-lex order (X0-heavy first).
    std::vector<const Poly::Terms::value_type*> order;
    for (const auto& t : f.terms()) order.push_back(&t);
    std::stable_sort(order.begin(), order.end(),
                     [](auto* a, auto* b) { return a->first.degree() > b->first.degree(); });
    for (const auto* t : order) {
        const auto& [m, c] = *t;
        if (!out.empty()) out += " + ";
        const bool constant = m.degree() == 0;
        if (constant) {
            out += std::to_string(c);
        } else {
            if (c != 1) out += std::to_string(c) + '*';
            out += to_string(m);
        }
    }
    return out;
}

ParseError::ParseError(const std::string& what, std::size_t line, std::size_t column)
    : std::runtime_error("parse error at line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                         what),
      line_(line),
      column_(column) {}

namespace {

class Parser {
   public:
    Parser(std::string_view text, const gf::Field& f, std::size_t nvars) : s_(text), f_(f), n_(nvars) {}

    Poly run() {
        Poly result(f_, n_);
        skip_ws();
        if (done()) fail("empty polynomial");
        bool negate = false;
        if (peek() == '-') {
            negate = true;
            advance();
        }
        while (true) {
            Poly t = term();
            result = negate ? result - t : result + t;
            skip_ws();
            if (done()) break;
            if (peek() == '+')
                negate = false;
            else if (peek() == '-')
                negate = true;
            else
                fail(std::string("expected '+' or '-', found '") + peek() + "'");
            advance();
        }
        return result;
    }

   private:
    Poly term() {
        gf::Elem coeff = 1;
        Monomial mono = Monomial::one(n_);
        while (true) {
            skip_ws();
            if (done()) fail("expected a coefficient or a variable");
            const char c = peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                const std::size_t line = line_, col = col_;
                const unsigned long v = number();
                if (v >= f_.q())
                    throw ParseError("coefficient " + std::to_string(v) + " is not a canonical element of " +
                                         f_.name(),
                                     line, col);
                coeff = f_.mul(coeff, static_cast<gf::Elem>(v));
            } else if (c == 'X' || c == 'x') {
                const std::size_t line = line_, col = col_;
                advance();
                if (done() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a variable index");
                const unsigned long idx = number();
                if (idx >= n_)
                    throw ParseError("variable X" + std::to_string(idx) + " outside X0..X" + std::to_string(n_ - 1),
                                     line, col);
                unsigned long e = 1;
                skip_ws();
                if (!done() && peek() == '^') {
                    advance();
                    skip_ws();
                    if (done() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an exponent");
                    e = number();
                }
                mono.exps[idx] += static_cast<unsigned>(e);
            } else {
                fail(std::string("unexpected character '") + c + "'");
            }
            skip_ws();
            if (done() || peek() != '*') break;
            advance();
        }
        return Poly::monomial(f_, mono, coeff);
    }

    unsigned long number() {
        const std::size_t start = pos_;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) advance();
        unsigned long v = 0;
        auto [ptr, ec] = std::from_chars(s_.data() + start, s_.data() + pos_, v);
        if (ec != std::errc()) fail("number out of range");
        (void)ptr;
        return v;
    }

    void skip_ws() {
        while (!done() && std::isspace(static_cast<unsigned char>(peek()))) advance();
    }
    bool done() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }
    void advance() {
        if (s_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_, col_); }

    std::string_view s_;
    const gf::Field& f_;
    std::size_t n_;
    std::size_t pos_ = 0, line_ = 1, col_ = 1;
};

}  // namespace

Poly parse(std::string_view text, const gf::Field& f, std::size_t nvars) {
    return Parser(text, f, nvars).run();
}

}  // namespace prm::poly
