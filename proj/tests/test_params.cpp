#include "support.hpp"

#include <gtest/gtest.h>

using namespace hecke;

namespace {

HeckeParams point(int r, int p, int n, mpq_class q, std::vector<mpq_class> Q) {
    HeckeParams P;
    P.r = r;
    P.p = p;
    P.n = n;
    P.q = q;
    P.Q = std::move(Q);
    return P;
}

/// Independent oracle: the full semisimplicity product evaluated numerically at eps = exp(2 pi i/p).
bool product_nonzero(const HeckeParams& P) {
    using C = std::complex<double>;
    const double q = P.q.get_d();
    const double pi = 3.14159265358979323846;
    auto eps = [&](int t) { return std::polar(1.0, 2 * pi * t / P.p); };
    bool ok = q != 1.0;
    auto factor = [&](C f) { ok = ok && std::abs(f) > 1e-9; };
    for (int i = 1; i <= P.n; ++i) {
        double s = 0;
        for (int e = 0; e < i; ++e) s += std::pow(q, e);
        factor(s);
    }
    for (int k = 1 - P.n; k < P.n; ++k) {
        for (std::size_t i = 0; i < P.Q.size(); ++i)
            for (std::size_t j = i + 1; j < P.Q.size(); ++j)
                for (int t = 0; t < P.p; ++t) factor(P.Q[i].get_d() - eps(t) * std::pow(q, k) * P.Q[j].get_d());
        for (std::size_t i = 0; i < P.Q.size(); ++i)
            for (int t = 1; t < P.p; ++t) factor(P.Q[i].get_d() * (1.0 - eps(t) * std::pow(q, k)));
    }
    return ok;
}

}  // namespace

TEST(Semisimplicity, DefaultPointOfTypeB) {
    EXPECT_TRUE(check_semisimple(point(2, 2, 2, 2, {3})).semisimple);
}

TEST(Semisimplicity, QEqualOneRejected) {
    const auto res = check_semisimple(point(2, 2, 2, 1, {3}));
    ASSERT_FALSE(res.semisimple);
    EXPECT_EQ(res.witness->kind, "q-integer");
}

TEST(Semisimplicity, CrossParameterWitness) {
    const auto res = check_semisimple(point(2, 1, 2, 2, {3, 6}));
    ASSERT_FALSE(res.semisimple);
    EXPECT_EQ(res.witness->kind, "cross-parameter");
    EXPECT_EQ(res.witness->i, 1);
    EXPECT_EQ(res.witness->j, 2);
    EXPECT_EQ(res.witness->k, -1);
    EXPECT_EQ(res.witness->t, 0);
}

TEST(Semisimplicity, QuantumIntegerVanishes) {
    const auto res = check_semisimple(point(1, 1, 2, -1, {3}));
    ASSERT_FALSE(res.semisimple);
    EXPECT_EQ(res.witness->kind, "q-integer");
}

TEST(Semisimplicity, TwistedCrossParameterWitness) {
    // Q_1 = eps q^1 Q_2 with eps = -1.
    const auto res = check_semisimple(point(4, 2, 2, 2, {3, mpq_class(-3, 2)}));
    ASSERT_FALSE(res.semisimple);
    EXPECT_EQ(res.witness->kind, "cross-parameter");
    EXPECT_EQ(res.witness->t, 1);
    EXPECT_EQ(res.witness->k, 1);
    EXPECT_TRUE(check_semisimple(point(4, 4, 2, 2, {3})).semisimple);
}

TEST(Semisimplicity, DegenerateParameters) {
    EXPECT_EQ(check_semisimple(point(2, 2, 2, 0, {3})).witness->kind, "degenerate");
    EXPECT_EQ(check_semisimple(point(2, 2, 2, 2, {0})).witness->kind, "degenerate");
}

TEST(Semisimplicity, AgreesWithNumericalProduct) {
    const std::vector<mpq_class> qs = {2, 3, mpq_class(1, 2), -2, 1, -1};
    const std::vector<std::vector<mpq_class>> Qs2 = {{3, 5}, {3, 6}, {3, 12}, {3, mpq_class(3, 4)}, {2, -2}, {1, 1}};
    for (const auto& q : qs)
        for (const auto& Q : Qs2) {
            const HeckeParams P = point(2, 1, 3, q, Q);
            EXPECT_EQ(check_semisimple(P).semisimple, product_nonzero(P)) << "q=" << q << " Q=" << Q[0] << "," << Q[1];
        }
    for (const auto& q : qs)
        for (int p : {2, 3, 4}) {
            const HeckeParams P = point(p, p, 2, q, {3});
            EXPECT_EQ(check_semisimple(P).semisimple, product_nonzero(P)) << "q=" << q << " p=" << p;
        }
}

TEST(Semisimplicity, ShapeValidation) {
    EXPECT_THROW(check_semisimple(point(3, 2, 2, 2, {3})), ParameterError);
    EXPECT_THROW(check_semisimple(point(2, 1, 2, 2, {3})), ParameterError);
    EXPECT_THROW(require_semisimple(point(2, 2, 2, 1, {3})), ParameterError);
}

TEST(DefaultParams, DocumentedPoints) {
    const auto a = default_params(2, 2, 2);
    EXPECT_EQ(a.q, 2);
    EXPECT_EQ(a.Q, std::vector<mpq_class>{3});
    const auto b = default_params(4, 2, 2);
    EXPECT_EQ(b.Q, (std::vector<mpq_class>{3, 5}));
    const auto c = default_params(3, 3, 2);
    EXPECT_EQ(c.Q, std::vector<mpq_class>{3});
}

TEST(DefaultParams, SemisimpleAcrossGrid) {
    for (const auto& g : hecke::testing::grid()) EXPECT_TRUE(check_semisimple(default_params(g[0], g[1], g[2])).semisimple);
    for (int n = 1; n <= 5; ++n) EXPECT_TRUE(check_semisimple(default_params(4, 1, n)).semisimple);
}

TEST(Params, ComponentParameters) {
    const HeckeParams P = default_params(4, 2, 2);  // d = 2, Q = (3, 5)
    EXPECT_EQ(P.component_parameter(1), CycloRational(-3));
    EXPECT_EQ(P.component_parameter(2), CycloRational(-5));
    EXPECT_EQ(P.component_parameter(3), CycloRational(3));
    EXPECT_EQ(P.component_parameter(4), CycloRational(5));
    EXPECT_EQ(P.eps_power(2), CycloRational(1));
}
