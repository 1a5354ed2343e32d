#include "support.hpp"

#include <gtest/gtest.h>

using namespace hecke;

namespace {

SeminormalModel model(int r, int p, int n) { return SeminormalModel(default_params(r, p, n)); }

TabId find(const SeminormalModel& M, const Tableau& t) { return M.id_of(t); }

}  // namespace

TEST(Residues, TypeBTwoBoxes) {
    const auto M = model(2, 2, 2);
    const int b = M.shape_index({{1}, {1}});
    const TabId init = find(M, initial_tableau(M.shape(b)));
    EXPECT_EQ(M.residue(init, 1), CycloRational(-3));
    EXPECT_EQ(M.residue(init, 2), CycloRational(3));
    EXPECT_EQ(M.A(init, 1), CycloRational(mpq_class(1, 2)));
    const TabId fin = *M.swap(init, 1);
    EXPECT_EQ(M.gamma(fin) / M.gamma(init), CycloRational(mpq_class(9, 4)));
}

TEST(Residues, RowAndColumnOfSymmetricGroupType) {
    const auto M = model(1, 1, 2);
    const TabId row = find(M, initial_tableau({{2}}));
    const TabId col = find(M, initial_tableau({{1, 1}}));
    EXPECT_EQ(M.residue(row, 2), CycloRational(6));
    EXPECT_EQ(M.residue(col, 2), CycloRational(mpq_class(3, 2)));
    EXPECT_EQ(M.T(1).block(static_cast<std::size_t>(col.shape))(0, 0), CycloRational(-1));
    EXPECT_EQ(M.T(1).block(static_cast<std::size_t>(row.shape))(0, 0), CycloRational(2));
}

TEST(Residues, QFactorial) {
    EXPECT_EQ(model(2, 2, 2).q_factorial(3), CycloRational(21));
    EXPECT_EQ(model(2, 2, 2).q_factorial(0), CycloRational(1));
}

TEST(Generators, T0OnTwoBoxBlock) {
    const auto M = model(2, 2, 2);
    const auto& m = M.T(0).block(static_cast<std::size_t>(M.shape_index({{1}, {1}})));
    EXPECT_TRUE(m.is_diagonal());
    EXPECT_EQ(m(0, 0), CycloRational(-3));
    EXPECT_EQ(m(1, 1), CycloRational(3));
}

// Relations checked here directly on the generator matrices, separately from check_relations().
TEST(Generators, DefiningRelationsOnGrid) {
    for (const auto& g : hecke::testing::grid()) {
        const auto M = model(g[0], g[1], g[2]);
        const auto& P = M.params();
        const BlockMatrix id = M.identity();
        const CycloRational q(P.q);
        BlockMatrix cyc = id;
        for (int c = 1; c <= P.r; ++c) cyc = cyc * (M.T(0) - id * P.component_parameter(c));
        EXPECT_TRUE(cyc.is_zero());
        for (int i = 1; i < P.n; ++i) EXPECT_TRUE(((M.T(i) - id * q) * (M.T(i) + id)).is_zero());
        if (P.n >= 2) { EXPECT_EQ(M.T(0) * M.T(1) * M.T(0) * M.T(1), M.T(1) * M.T(0) * M.T(1) * M.T(0)); }
        for (int i = 1; i + 1 < P.n; ++i) EXPECT_EQ(M.T(i) * M.T(i + 1) * M.T(i), M.T(i + 1) * M.T(i) * M.T(i + 1));
        for (int i = 0; i < P.n; ++i)
            for (int j = i + 2; j < P.n; ++j) EXPECT_EQ(M.T(i) * M.T(j), M.T(j) * M.T(i));
        EXPECT_EQ(M.T0_inverse() * M.T(0), id);
    }
}

TEST(Generators, JucysMurphyDiagonalWithResidues) {
    for (const auto& g : hecke::testing::grid()) {
        const auto M = model(g[0], g[1], g[2]);
        const CycloRational qinv = CycloRational(M.params().q).inverse();
        BlockMatrix L = M.T(0);
        for (int k = 1; k <= M.n(); ++k) {
            EXPECT_EQ(M.L(k), L);
            for (TabId t : M.all_tableaux()) {
                const auto& blk = L.block(static_cast<std::size_t>(t.shape));
                EXPECT_TRUE(blk.is_diagonal());
                EXPECT_EQ(blk(static_cast<std::size_t>(t.idx), static_cast<std::size_t>(t.idx)), M.residue(t, k));
            }
            if (k < M.n()) L = M.T(k) * L * M.T(k) * qinv;
        }
        EXPECT_TRUE(M.check_relations().size() > 0);
        for (const auto& rel : M.check_relations()) EXPECT_TRUE(rel.ok) << rel.name << " " << rel.detail;
    }
}

TEST(Coefficients, ASumsToQMinusOne) {
    for (const auto& g : hecke::testing::grid()) {
        const auto M = model(g[0], g[1], g[2]);
        const CycloRational qm1(M.params().q - 1);
        for (TabId s : M.all_tableaux())
            for (int i = 1; i < M.n(); ++i) {
                auto t = M.swap(s, i);
                if (!t) continue;
                EXPECT_EQ(M.A(s, i) + M.A(*t, i), qm1);
                // B(s)B(t) is the symmetric product (q r_s - r_t)(r_s - q r_t)/(r_s - r_t)^2.
                const CycloRational rs = M.residue(s, i), rt = M.residue(*t, i), q(M.params().q);
                const CycloRational d = rs - rt;
                EXPECT_EQ(M.B(s, i) * M.B(*t, i), (q * rs - rt) * (rs - q * rt) / (d * d));
            }
    }
}

TEST(Gamma, IndependentOfReducedWord) {
    for (const auto& g : hecke::testing::grid()) {
        const auto M = model(g[0], g[1], g[2]);
        for (TabId t : M.all_tableaux()) {
            EXPECT_EQ(M.gamma_via_word(t, tableau_word(M.tableau(t), false).word), M.gamma(t));
            EXPECT_FALSE(M.gamma(t).is_zero());
        }
    }
}

TEST(Idempotents, CompleteOrthogonalAndMatchMatrixUnits) {
    for (const auto& g : {std::array<int, 3>{2, 2, 2}, std::array<int, 3>{2, 1, 3}, std::array<int, 3>{3, 3, 2}}) {
        const auto M = model(g[0], g[1], g[2]);
        BlockMatrix sum = M.zero();
        for (TabId t : M.all_tableaux()) {
            const BlockMatrix F = M.F_jm(t);
            EXPECT_EQ(F * F, F);
            EXPECT_EQ(F, M.f_element(t, t) * M.gamma(t).inverse());
            sum += F;
        }
        EXPECT_EQ(sum, M.identity());
    }
}

TEST(Idempotents, FViaIntertwinersMatchesMatrixUnits) {
    for (const auto& g : {std::array<int, 3>{2, 2, 2}, std::array<int, 3>{1, 1, 3}, std::array<int, 3>{4, 2, 2}}) {
        const auto M = model(g[0], g[1], g[2]);
        for (int b = 0; b < M.num_shapes(); ++b)
            for (int i = 0; i < M.dim(b); ++i)
                for (int j = 0; j < M.dim(b); ++j) EXPECT_EQ(M.f_via_phi({b, i}, {b, j}), M.f_element({b, i}, {b, j}));
    }
}

TEST(Multiplication, SymbolicMatchesMatrices) {
    const auto M = model(2, 2, 3);
    std::mt19937 rng(7);
    const auto tabs = M.all_tableaux();
    std::uniform_int_distribution<std::size_t> pick(0, tabs.size() - 1);
    for (int trial = 0; trial < 40; ++trial) {
        FElement x, y;
        for (int k = 0; k < 3; ++k) {
            const TabId a = tabs[pick(rng)], b = tabs[pick(rng)], c = tabs[pick(rng)], d = tabs[pick(rng)];
            if (a.shape == b.shape) x.add(a, b, CycloRational(k + 1));
            if (c.shape == d.shape) y.add(c, d, CycloRational(2 - k));
        }
        EXPECT_EQ(M.to_block(M.multiply(x, y)), M.to_block(x) * M.to_block(y));
        EXPECT_EQ(M.to_block(SeminormalModel::star(x)), M.star(M.to_block(x)));
    }
}

TEST(Shift, ResiduesTwistByEps) {
    for (const auto& g : {std::array<int, 3>{2, 2, 2}, std::array<int, 3>{4, 2, 2}, std::array<int, 3>{3, 3, 2}}) {
        const auto M = model(g[0], g[1], g[2]);
        for (TabId t : M.all_tableaux())
            for (int k = 1; k <= M.n(); ++k)
                EXPECT_EQ(M.residue(M.shift(t, 1), k), M.params().eps_power(-1) * M.residue(t, k));
    }
}

TEST(WordBasis, ExpandsGeneratorsToUnitVectors) {
    const auto M = model(2, 2, 2);
    const WordBasis W(M);
    EXPECT_EQ(W.dimension(), 8u);
    const auto e = W.expand(M.identity());
    EXPECT_EQ(e[0], CycloRational(1));
    for (std::size_t j = 1; j < e.size(); ++j) EXPECT_TRUE(e[j].is_zero());
    const auto l1 = W.expand(M.L(1));
    for (std::size_t j = 0; j < l1.size(); ++j) {
        const auto& lab = W.label(j);
        const bool is_l1 = lab.a == std::vector<int>{1, 0} && lab.w == Permutation::identity(2);
        EXPECT_EQ(l1[j], CycloRational(is_l1 ? 1 : 0));
    }
    EXPECT_EQ(W.reconstruct(W.expand(M.T(1))), M.T(1));
    EXPECT_EQ(W.sigma(M.T(0)), M.T(0) * CycloRational(-1));
    EXPECT_EQ(W.sigma(M.T(1)), M.T(1));
}

TEST(WordBasis, RejectsOversizedPoints) {
    const auto M = model(2, 2, 3);
    try {
        WordBasis W(M, 10);
        FAIL() << "expected DimensionBoundExceeded";
    } catch (const DimensionBoundExceeded& e) {
        EXPECT_EQ(e.dim, 48u);
        EXPECT_EQ(e.bound, 10u);
    }
}
