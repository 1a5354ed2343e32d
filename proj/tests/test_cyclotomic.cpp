#include "support.hpp"

#include <gtest/gtest.h>

using namespace hecke;
using hecke::testing::evaluate;
using hecke::testing::random_cyclo;

namespace {

RationalPoly ints(std::initializer_list<long> xs) {
    RationalPoly p;
    for (long x : xs) p.emplace_back(x);
    return p;
}

}  // namespace

TEST(CyclotomicPolynomial, SmallOrders) {
    EXPECT_EQ(cyclotomic_polynomial(1), ints({-1, 1}));
    EXPECT_EQ(cyclotomic_polynomial(2), ints({1, 1}));
    EXPECT_EQ(cyclotomic_polynomial(3), ints({1, 1, 1}));
    EXPECT_EQ(cyclotomic_polynomial(4), ints({1, 0, 1}));
    EXPECT_EQ(cyclotomic_polynomial(6), ints({1, -1, 1}));
    EXPECT_EQ(cyclotomic_polynomial(8), ints({1, 0, 0, 0, 1}));
}

TEST(CyclotomicPolynomial, DegreeIsTotient) {
    const int phi[] = {0, 1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4};
    for (int p = 1; p <= 12; ++p) EXPECT_EQ(poly::degree(cyclotomic_polynomial(p)), phi[p]) << "p=" << p;
}

TEST(CycloRational, EpsilonHasOrderP) {
    for (int p = 1; p <= 8; ++p) {
        const auto& f = CycloField::get(p);
        const CycloRational e = CycloRational::eps_power(f, 1);
        EXPECT_TRUE(e.pow(p).is_one()) << "p=" << p;
        for (int k = 1; k < p; ++k) EXPECT_FALSE(e.pow(k).is_one()) << "p=" << p << " k=" << k;
        EXPECT_EQ(CycloRational::eps_power(f, -1), e.pow(p - 1));
    }
}

TEST(CycloRational, SumOfRootsVanishes) {
    for (int p = 2; p <= 8; ++p) {
        const auto& f = CycloField::get(p);
        CycloRational s = 0;
        for (int k = 0; k < p; ++k) s += CycloRational::eps_power(f, k);
        EXPECT_TRUE(s.is_zero()) << "p=" << p;
    }
}

TEST(CycloRational, ArithmeticMatchesComplexEvaluation) {
    std::mt19937 rng(7);
    for (int p : {1, 2, 3, 4, 5, 6}) {
        const auto& f = CycloField::get(p);
        for (int trial = 0; trial < 40; ++trial) {
            const CycloRational a = random_cyclo(f, rng), b = random_cyclo(f, rng);
            const auto ea = evaluate(a), eb = evaluate(b);
            EXPECT_NEAR(std::abs(evaluate(a + b) - (ea + eb)), 0.0, 1e-9);
            EXPECT_NEAR(std::abs(evaluate(a - b) - (ea - eb)), 0.0, 1e-9);
            EXPECT_NEAR(std::abs(evaluate(a * b) - ea * eb), 0.0, 1e-8);
            if (!b.is_zero()) { EXPECT_NEAR(std::abs(evaluate(a / b) - ea / eb), 0.0, 1e-6 * (1 + std::abs(ea / eb))); }
        }
    }
}

TEST(CycloRational, FieldAxioms) {
    std::mt19937 rng(11);
    for (int p : {2, 3, 4, 5}) {
        const auto& f = CycloField::get(p);
        for (int trial = 0; trial < 30; ++trial) {
            const CycloRational a = random_cyclo(f, rng), b = random_cyclo(f, rng), c = random_cyclo(f, rng);
            EXPECT_EQ(a * (b + c), a * b + a * c);
            EXPECT_EQ((a * b) * c, a * (b * c));
            EXPECT_EQ(a * b, b * a);
            if (!a.is_zero()) { EXPECT_TRUE((a * a.inverse()).is_one()); }
        }
    }
}

TEST(CycloRational, InverseOfZeroThrows) {
    EXPECT_THROW(CycloRational(0).inverse(), DivisionByZero);
    EXPECT_THROW(CycloRational(CycloField::get(3), mpq_class(0)).inverse(), DivisionByZero);
}

TEST(CycloRational, RationalsMixWithAnyField) {
    const auto& f = CycloField::get(4);
    const CycloRational i = CycloRational::eps_power(f, 1);
    EXPECT_EQ(i * i, CycloRational(-1));
    EXPECT_EQ(CycloRational(-1), i * i);
    EXPECT_EQ(i + CycloRational(mpq_class(1, 2)) - i, CycloRational(mpq_class(1, 2)));
}

TEST(CycloRational, FieldMismatchThrows) {
    const CycloRational a = CycloRational::eps_power(CycloField::get(3), 1);
    const CycloRational b = CycloRational::eps_power(CycloField::get(4), 1);
    EXPECT_THROW(a + b, std::invalid_argument);
}

TEST(CycloRational, StringRoundTrip) {
    std::mt19937 rng(3);
    for (int p : {1, 3, 4}) {
        const auto& f = CycloField::get(p);
        for (int trial = 0; trial < 20; ++trial) {
            const CycloRational a = random_cyclo(f, rng);
            EXPECT_EQ(parse_cyclo(f, a.to_strings()), a);
        }
    }
    EXPECT_EQ(CycloRational(mpq_class(6, 4)).to_strings(), std::vector<std::string>{"3/2"});
}

TEST(ParseRational, AcceptsAndRejects) {
    EXPECT_EQ(parse_rational("3/4"), mpq_class(3, 4));
    EXPECT_EQ(parse_rational("-6/8"), mpq_class(-3, 4));
    EXPECT_EQ(parse_rational("5"), mpq_class(5));
    EXPECT_THROW(parse_rational(""), std::invalid_argument);
    EXPECT_THROW(parse_rational("1.5"), std::invalid_argument);
    EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
    EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
}
