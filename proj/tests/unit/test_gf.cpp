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

#include <gtest/gtest.h>

#include <stdexcept>

#include "naive.hpp"
#include "prm/gf.hpp"

using prm::gf::Elem;
using prm::gf::Field;
using prm::gf::FieldElement;

namespace {

const unsigned kOrders[] = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32, 49, 64, 81, 125, 128, 243, 256};

// First monic irreducible of degree e when (c_0, ..., c_{e-1}) is read as a
// tuple compared from c_0.
std::vector<unsigned> least_irreducible(unsigned p, unsigned e) {
    std::size_t count = 1;
    for (unsigned i = 0; i < e; ++i) count *= p;
    for (std::size_t code = 0; code < count; ++code) {
        std::vector<unsigned> c(e + 1);
        std::size_t x = code;
        for (unsigned i = e; i-- > 0; x /= p) c[i] = static_cast<unsigned>(x % p);
        c[e] = 1;
        if (naive::irreducible(p, c)) return c;
    }
    return {};
}

}  // namespace

TEST(FieldMake, PrimeFieldHasTrivialModulus) {
    const auto f = Field::make(2, 1);
    EXPECT_EQ(f.q(), 2u);
    EXPECT_EQ(f.name(), "GF(2)");
}

TEST(FieldMake, GF4UsesXSquaredPlusXPlusOne) {
    const auto f = Field::make(2, 2);
    EXPECT_EQ(f.modulus(), (std::vector<unsigned>{1, 1, 1}));
}

TEST(FieldMake, RejectsNonPrimeBase) {
    EXPECT_THROW(Field::make(4, 1), std::invalid_argument);
    EXPECT_THROW(Field::make(2, 0), std::invalid_argument);
    EXPECT_THROW(Field::make(2, 17), std::invalid_argument);
    EXPECT_THROW(Field::of_order(6), std::invalid_argument);
    EXPECT_THROW(Field::of_order(1), std::invalid_argument);
}

TEST(FieldMake, OfOrderFactorsPrimePowers) {
    for (unsigned q : kOrders) EXPECT_EQ(Field::of_order(q).q(), q);
    EXPECT_EQ(Field::of_order(8).p(), 2u);
    EXPECT_EQ(Field::of_order(8).e(), 3u);
    EXPECT_EQ(Field::of_order(65536).q(), 65536u);
}

TEST(FieldMake, ModulusIsLeastIrreducible) {
    for (unsigned q : kOrders) {
        const auto f = Field::of_order(q);
        if (f.e() == 1) continue;
        EXPECT_EQ(f.modulus(), least_irreducible(f.p(), f.e())) << f.name();
    }
}

TEST(FieldArith, SmallExamples) {
    const auto f3 = Field::of_order(3);
    EXPECT_EQ(f3.add(2, 2), 1u);
    const auto f4 = Field::of_order(4);
    EXPECT_EQ(f4.mul(2, 2), 3u);
}

TEST(FieldArith, MatchesSchoolbookArithmetic) {
    for (unsigned q : kOrders) {
        const auto f = Field::of_order(q);
        if (q > 128) continue;
        const naive::PolyField ref{f.p(), f.e(), f.modulus()};
        for (Elem a = 0; a < q; ++a)
            for (Elem b = 0; b < q; ++b) {
                ASSERT_EQ(f.add(a, b), ref.add(a, b)) << f.name() << " " << a << "+" << b;
                ASSERT_EQ(f.mul(a, b), ref.mul(a, b)) << f.name() << " " << a << "*" << b;
            }
    }
}

TEST(FieldArith, AxiomsExhaustiveSmallFields) {
    for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
        const auto f = Field::of_order(q);
        for (Elem a = 0; a < q; ++a) {
            EXPECT_EQ(f.add(a, f.neg(a)), 0u);
            if (a != 0) EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
            for (Elem b = 0; b < q; ++b) {
                EXPECT_EQ(f.add(a, b), f.add(b, a));
                EXPECT_EQ(f.mul(a, b), f.mul(b, a));
                for (Elem c = 0; c < q; ++c) {
                    EXPECT_EQ(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                    EXPECT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                    EXPECT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }
}

TEST(FieldArith, FrobeniusAndFermat) {
    for (unsigned q : kOrders) {
        if (q > 16) continue;
        const auto f = Field::of_order(q);
        for (Elem a = 0; a < q; ++a) {
            EXPECT_EQ(f.pow(a, q), a);
            if (a != 0) EXPECT_EQ(f.pow(a, q - 1), 1u);
        }
    }
}

TEST(FieldArith, PowHandlesNegativeAndZeroExponents) {
    const auto f = Field::of_order(7);
    EXPECT_EQ(f.pow(0, 0), 1u);
    EXPECT_EQ(f.pow(3, -1), f.inv(3));
    EXPECT_EQ(f.pow(3, -2), f.mul(f.inv(3), f.inv(3)));
    EXPECT_THROW(f.pow(0, -1), std::domain_error);
    EXPECT_THROW(f.inv(0), std::domain_error);
    EXPECT_THROW(f.div(1, 0), std::domain_error);
}

TEST(FieldArith, LargeFieldSpotChecks) {
    const auto f = Field::of_order(65536);
    for (Elem a : {1u, 2u, 3u, 12345u, 65535u}) {
        EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
        EXPECT_EQ(f.add(a, a), 0u);
    }
    const auto g = Field::of_order(625);
    for (Elem a = 1; a < 625; a += 37) EXPECT_EQ(g.mul(a, g.inv(a)), 1u);
}

TEST(FieldEncoding, DigitsRoundTrip) {
    for (unsigned q : kOrders) {
        const auto f = Field::of_order(q);
        for (Elem a = 0; a < q; ++a) {
            const auto d = f.digits(a);
            ASSERT_EQ(d.size(), f.e());
            EXPECT_EQ(f.from_digits(d), a);
        }
    }
}

TEST(FieldElements, CanonicalOrder) {
    for (unsigned q : {2u, 3u, 4u}) {
        const auto els = prm::gf::elements(Field::of_order(q));
        ASSERT_EQ(els.size(), q);
        for (Elem i = 0; i < q; ++i) EXPECT_EQ(els[i].value(), i);
    }
}

TEST(FieldElementType, CheckedArithmetic) {
    const auto f4 = Field::of_order(4);
    const FieldElement x(f4, 2);
    EXPECT_EQ((x * x).value(), 3u);
    EXPECT_EQ((x + x).value(), 0u);
    EXPECT_EQ((x / x).value(), 1u);
    EXPECT_EQ(x.pow(3).value(), 1u);
    const FieldElement y(Field::of_order(5), 2);
    EXPECT_THROW(x + y, std::domain_error);
    EXPECT_THROW(x * y, std::domain_error);
    EXPECT_THROW(FieldElement(f4, 4), std::invalid_argument);
    EXPECT_THROW(FieldElement(f4, 0).inverse(), std::domain_error);
}

TEST(FieldEquality, ComparesParameters) {
    EXPECT_TRUE(Field::of_order(9) == Field::make(3, 2));
    EXPECT_FALSE(Field::of_order(9) == Field::of_order(3));
}
