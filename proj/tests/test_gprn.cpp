#include "support.hpp"

#include <gtest/gtest.h>

using namespace hecke;

namespace {

SeminormalModel model(int r, int p, int n) { return SeminormalModel(default_params(r, p, n)); }

long group_order(int r, int p, int n) {
    long v = 1;
    for (int k = 1; k <= n; ++k) v *= static_cast<long>(r) * k;
    return v / p;
}

std::size_t span_rank(const std::vector<BlockMatrix>& xs) {
    if (xs.empty()) return 0;
    const auto first = xs.front().flatten();
    Matrix m(xs.size(), first.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const auto v = xs[i].flatten();
        for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = v[j];
    }
    return rank(m);
}

}  // namespace

TEST(Basis, CardinalityMatchesGroupOrder) {
    EXPECT_EQ(GrpnLayer(model(2, 2, 2)).basis().size(), 4u);
    EXPECT_EQ(GrpnLayer(model(3, 3, 2)).basis().size(), 6u);
    EXPECT_EQ(GrpnLayer(model(2, 2, 3)).basis().size(), 24u);
    for (const auto& g : hecke::testing::grid()) {
        const auto M = model(g[0], g[1], g[2]);
        EXPECT_EQ(static_cast<long>(GrpnLayer(M).basis_labels().size()), group_order(g[0], g[1], g[2]));
    }
}

TEST(Basis, SigmaFixedAndLinearlyIndependent) {
    for (const auto& g : {std::array<int, 3>{2, 2, 2}, std::array<int, 3>{3, 3, 2}, std::array<int, 3>{4, 2, 2}}) {
        const auto M = model(g[0], g[1], g[2]);
        const GrpnLayer G(M);
        const WordBasis W(M);
        std::vector<BlockMatrix> mats;
        for (const auto& e : G.basis()) {
            const BlockMatrix x = M.to_block(e.value);
            EXPECT_EQ(W.sigma(x), x);
            mats.push_back(x);
        }
        EXPECT_EQ(span_rank(mats), mats.size());
        // The fixed subalgebra has the same dimension as its generated span.
        EXPECT_EQ(static_cast<long>(mats.size()), group_order(g[0], g[1], g[2]));
    }
}

TEST(Idempotents, CentralCompleteOrthogonal) {
    for (const auto& g : {std::array<int, 3>{2, 2, 2}, std::array<int, 3>{4, 2, 2}, std::array<int, 3>{4, 4, 2}}) {
        const auto M = model(g[0], g[1], g[2]);
        const GrpnLayer G(M);
        const auto ids = G.central_idempotents();
        std::vector<BlockMatrix> es;
        BlockMatrix sum = M.zero();
        for (const auto& e : ids) es.push_back(M.to_block(e.value)), sum += es.back();
        EXPECT_EQ(sum, M.identity());
        for (std::size_t i = 0; i < es.size(); ++i) {
            EXPECT_FALSE(es[i].is_zero());
            for (std::size_t j = 0; j < es.size(); ++j) EXPECT_EQ(es[i] * es[j], i == j ? es[i] : M.zero());
            for (const auto& gen : M.fixed_subalgebra_generators()) EXPECT_EQ(es[i] * gen, gen * es[i]);
        }
    }
    EXPECT_EQ(GrpnLayer(model(2, 2, 2)).central_idempotents().size(), 4u);
}

TEST(TwistedCenter, CountsMatchNullspace) {
    const auto M = model(2, 2, 2);
    const GrpnLayer G(M);
    EXPECT_EQ(G.twisted_center_basis(0).size(), 5u);
    EXPECT_EQ(G.twisted_center_basis(1).size(), 1u);
    EXPECT_EQ(GrpnLayer(model(3, 3, 2)).twisted_center_basis(0).size(), 9u);
    for (const auto& g : {std::array<int, 3>{2, 2, 2}, std::array<int, 3>{3, 3, 2}, std::array<int, 3>{4, 2, 2}}) {
        const auto Mg = model(g[0], g[1], g[2]);
        const GrpnLayer Gg(Mg);
        for (int k = 0; k < Mg.p(); ++k) {
            const auto zs = Gg.twisted_center_basis(k);
            EXPECT_EQ(zs.size(), twisted_center_nullspace(Mg, k).size());
            std::vector<BlockMatrix> mats;
            const CycloRational c = Mg.params().eps_power(k);
            for (const auto& z : zs) {
                const BlockMatrix x = Mg.to_block(z.value);
                EXPECT_EQ(x * Mg.T(0), Mg.T(0) * x * c);
                for (int i = 1; i < Mg.n(); ++i) EXPECT_EQ(x * Mg.T(i), Mg.T(i) * x);
                mats.push_back(x);
            }
            EXPECT_EQ(span_rank(mats), mats.size());
        }
    }
}

TEST(Ratios, InitialTableauHasUnitRatio) {
    for (const auto& g : {std::array<int, 3>{2, 2, 2}, std::array<int, 3>{4, 4, 2}, std::array<int, 3>{3, 3, 2}}) {
        const auto M = model(g[0], g[1], g[2]);
        const GrpnLayer G(M);
        for (int b = 0; b < M.num_shapes(); ++b)
            for (int k = 0; k <= M.p(); ++k) EXPECT_EQ(G.r({b, 0}, k), CycloRational(1));
    }
}

TEST(HLambda, SquaresToGammaRatio) {
    for (const auto& g : {std::array<int, 3>{2, 2, 2}, std::array<int, 3>{4, 2, 2}, std::array<int, 3>{4, 4, 2}}) {
        const auto M = model(g[0], g[1], g[2]);
        const GrpnLayer G(M);
        for (int b = 0; b < M.num_shapes(); ++b) {
            const TabId init{b, 0};
            const CycloRational h = G.h_lambda(b);
            EXPECT_EQ(h * h, M.gamma(M.shift(init, G.o(b))) / M.gamma(init));
        }
    }
}

TEST(DimAudit, DocumentedPoints) {
    const auto a = dim_audit(model(2, 2, 2));
    EXPECT_EQ(a.dim_hrn, 8);
    EXPECT_EQ(a.dim_hrpn, 4);
    EXPECT_TRUE(a.ok());
    EXPECT_EQ(dim_audit(model(1, 1, 3)).dim_hrn, 6);
    const auto c = dim_audit(model(3, 3, 2));
    EXPECT_EQ(c.dim_hrn, 18);
    EXPECT_EQ(c.dim_hrpn, 6);
    EXPECT_EQ(c.twisted_center_counts, (std::vector<long>{9, 0, 0}));
    for (const auto& g : hecke::testing::grid()) EXPECT_TRUE(dim_audit(model(g[0], g[1], g[2])).ok());
}

TEST(DimAudit, BruteForceCenterDimensions) {
    const auto dims = brute_force_center_dims(model(2, 2, 2));
    EXPECT_EQ(dims.at(0), 5u);
    EXPECT_EQ(dims.at(1), 1u);
}
