#pragma once

#include "seminormal.hpp"

#include <cstdlib>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace hecke {

inline constexpr std::size_t default_max_dim = 1000;
inline constexpr const char* max_dim_env = "HECKE_MAX_DIM";

class DimensionBoundExceeded : public std::runtime_error {
public:
    DimensionBoundExceeded(std::size_t dim, std::size_t bound)
        : std::runtime_error("word basis dimension " + std::to_string(dim) + " exceeds bound " + std::to_string(bound)),
          dim(dim),
          bound(bound) {}
    std::size_t dim, bound;
};

/// Bound from HECKE_MAX_DIM when set to a positive integer, otherwise the fallback.
inline std::size_t max_dim_from_env(std::size_t fallback = default_max_dim) {
    if (const char* v = std::getenv(max_dim_env)) {
        try {
            long x = std::stol(v);
            if (x > 0) return static_cast<std::size_t>(x);
        } catch (const std::exception&) {
        }
    }
    return fallback;
}

/// Independent coordinates on H: the basis L_1^{a_1}...L_n^{a_n} T_w, 0 <= a_i < r, w in S_n.
/// sigma and * are defined on these coordinates, never through the seminormal formulas.
class WordBasis {
public:
    struct Label {
        std::vector<int> a;
        Permutation w;
    };

    WordBasis(const SeminormalModel& M, std::size_t max_dim = default_max_dim) : M_(M) {
        std::size_t N = 1;
        for (int k = 0; k < M.n(); ++k) N *= static_cast<std::size_t>(M.params().r) * static_cast<std::size_t>(k + 1);
        if (N > max_dim) throw DimensionBoundExceeded(N, max_dim);
        const int n = M.n(), r = M.params().r;
        const auto perms = enumerate_permutations(n);
        for (const auto& w : perms) tw_.push_back(word_matrix(reduced_word(w)));
        std::vector<int> a(static_cast<std::size_t>(n), 0);
        while (true) {
            for (std::size_t wi = 0; wi < perms.size(); ++wi) labels_.push_back({a, perms[wi]}), widx_.push_back(wi);
            int k = n - 1;
            while (k >= 0 && a[static_cast<std::size_t>(k)] == r - 1) a[static_cast<std::size_t>(k--)] = 0;
            if (k < 0) break;
            ++a[static_cast<std::size_t>(k)];
        }
        Matrix W(N, N);
        cols_.reserve(N);
        for (std::size_t j = 0; j < N; ++j) {
            cols_.push_back(element(j).flatten());
            for (std::size_t i = 0; i < N; ++i) W(i, j) = cols_.back()[i];
        }
        lu_ = std::make_unique<LUDecomposition>(std::move(W));
    }

    std::size_t dimension() const { return labels_.size(); }
    const Label& label(std::size_t j) const { return labels_[j]; }

    /// rho(L^a T_w).
    BlockMatrix element(std::size_t j) const { return L_power(labels_[j].a) * tw_[widx_[j]]; }

    std::vector<CycloRational> expand(const BlockMatrix& x) const { return lu_->solve(x.flatten()); }

    BlockMatrix reconstruct(const std::vector<CycloRational>& c) const { return combine(cols_, c); }

    /// sigma: the coefficient of L^a T_w is scaled by eps^{|a|}.
    BlockMatrix sigma(const BlockMatrix& x, int power = 1) const {
        auto c = expand(x);
        for (std::size_t j = 0; j < c.size(); ++j) {
            if (c[j].is_zero()) continue;
            long deg = 0;
            for (int e : labels_[j].a) deg += e;
            c[j] = c[j] * M_.params().eps_power(deg * power);
        }
        return reconstruct(c);
    }

    /// *: L^a T_w -> T_{w^{-1}} L^a.
    BlockMatrix star(const BlockMatrix& x) const {
        std::call_once(star_once_, [this] {
            for (const auto& lab : labels_) {
                auto word = reduced_word(lab.w);
                std::vector<int> rev(word.rbegin(), word.rend());
                star_cols_.push_back((word_matrix(rev) * L_power(lab.a)).flatten());
            }
        });
        return combine(star_cols_, expand(x));
    }

private:
    BlockMatrix combine(const std::vector<std::vector<CycloRational>>& cols, const std::vector<CycloRational>& c) const {
        std::vector<CycloRational> v(labels_.size());
        for (std::size_t j = 0; j < c.size(); ++j) {
            if (c[j].is_zero()) continue;
            const auto& col = cols[j];
            for (std::size_t i = 0; i < v.size(); ++i)
                if (!col[i].is_zero()) v[i] += col[i] * c[j];
        }
        return BlockMatrix::unflatten(M_.dims(), v);
    }

    BlockMatrix word_matrix(const std::vector<int>& word) const {
        BlockMatrix m = M_.identity();
        for (int i : word) m = m * M_.T(i);
        return m;
    }
    BlockMatrix L_power(const std::vector<int>& a) const {
        BlockMatrix m = M_.identity();
        for (std::size_t k = 0; k < a.size(); ++k)
            for (int e = 0; e < a[k]; ++e) m = m * M_.L(static_cast<int>(k) + 1);
        return m;
    }

    const SeminormalModel& M_;
    std::vector<BlockMatrix> tw_;
    std::vector<Label> labels_;
    std::vector<std::size_t> widx_;
    std::vector<std::vector<CycloRational>> cols_;
    mutable std::once_flag star_once_;
    mutable std::vector<std::vector<CycloRational>> star_cols_;
    std::unique_ptr<LUDecomposition> lu_;
};

}  // namespace hecke
