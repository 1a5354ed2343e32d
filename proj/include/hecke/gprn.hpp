#pragma once

#include "seminormal.hpp"

#include <stdexcept>
#include <vector>

namespace hecke {

/// Label of a basis element f_{st}^{[k]} of the sigma-fixed subalgebra.
struct GrpnLabel {
    TabId s, t;
    int k = 0;
};

struct GrpnBasisElement {
    GrpnLabel label;
    FElement value;
};

struct CentralIdempotent {
    int shape = 0;  // class representative
    int k = 0;
    FElement value;
};

struct TwistedCenterElement {
    int shape = 0;
    int k = 0;
    FElement value;
};

/// r/R coefficients, the h square-root family, A_{i,j}^{st} and the f^{[k]} basis.
class GrpnLayer {
public:
    explicit GrpnLayer(const SeminormalModel& M) : M_(M) {}

    const SeminormalModel& model() const { return M_; }

    int o(int b) const { return M_.orbit(b).o; }
    int p_lambda(int b) const { return M_.orbit(b).p_lambda; }

    /// r_{t,k} = gamma_t / gamma_{m_k(t)}.
    CycloRational r(TabId t, int k) const { return M_.gamma(t) / M_.gamma(M_.mk(t, k)); }

    /// gamma_{t^lam} / gamma_{t^lam<k>}.
    CycloRational initial_ratio(int b, int k) const {
        const TabId init{b, 0};
        return M_.gamma(init) / M_.gamma(M_.shift(init, k));
    }

    /// R_{st,k} = (gamma_{t^lam}/gamma_{t^lam<k>}) r_{s,k} r_{t,k}.
    CycloRational R(TabId s, TabId t, int k) const {
        if (s.shape != t.shape) throw std::invalid_argument("R: s and t must share a shape");
        return initial_ratio(s.shape, k) * r(s, k) * r(t, k);
    }

    /// h_lam from the residues of t^lam (odd and even p_lam branches).
    CycloRational h_lambda(int b) const {
        const int pl = p_lambda(b);
        if (pl == 1) return CycloRational(1);
        const int ob = o(b);
        const int a = block_prefix_size(M_.shape(b), ob, M_.p());
        const TabId init{b, 0};
        const CycloRational q(M_.params().q);
        bool even = pl % 2 == 0;
        if (M_.mutation() == Mutation::h_parity) even = !even;
        const int kmax = even ? pl / 2 - 1 : (pl - 1) / 2;
        CycloRational h = 1;
        for (int k = 1; k <= kmax; ++k) {
            const CycloRational e = M_.params().eps_power(static_cast<long>(k) * ob);
            for (int i = 1; i <= a; ++i)
                for (int j = 1; j <= a; ++j) {
                    const CycloRational& ri = M_.residue(init, i);
                    const CycloRational& rj = M_.residue(init, j);
                    const CycloRational den = rj - e * ri;
                    h *= (q * rj - e * ri) * (rj - q * e * ri) / (den * den);
                }
        }
        if (even) {
            for (int i = 0; i < a; ++i) h *= (q + CycloRational(1)) / CycloRational(2);
            for (int i = 1; i <= a; ++i)
                for (int j = 1; j < i; ++j) {
                    const CycloRational& ri = M_.residue(init, i);
                    const CycloRational& rj = M_.residue(init, j);
                    const CycloRational den = rj + ri;
                    h *= (q * rj + ri) * (rj + q * ri) / (den * den);
                }
        }
        return h;
    }

    /// h_{lam,l1,l2} in closed form; l1, l2 >= 0 need not be reduced.
    CycloRational h_lambda_l1_l2(int b, int l1, int l2) const {
        const int ob = o(b);
        const TabId init{b, 0};
        CycloRational h = h_lambda(b).pow(l2);
        for (int k = 0; k < l2; ++k) {
            const TabId u = M_.shift(init, (l1 + k) * ob);
            h *= M_.gamma(M_.mk(u, ob)) / M_.gamma(u);
        }
        return h;
    }

    /// h_{lam,l1,l2} by the defining recursion in l2.
    CycloRational h_lambda_l1_l2_recursive(int b, int l1, int l2) const {
        const int ob = o(b);
        const TabId init{b, 0};
        CycloRational h = 1;
        for (int m = 1; m <= l2; ++m) {
            const TabId u = M_.shift(init, (l1 + m - 1) * ob);
            h = h * h_lambda(b) * M_.gamma(M_.mk(u, ob)) / M_.gamma(u);
        }
        return h;
    }

    bool entry_one_condition(TabId t) const { return M_.block_of_one(t) < o(t.shape); }

    /// h_t^{<l>} = h_{lam,0,l} gamma_{m_{lo}(t)} / gamma_t; entry 1 of t must lie in blocks 1..o.
    CycloRational h_t(TabId t, int l) const {
        if (!entry_one_condition(t)) throw std::invalid_argument("h_t: entry 1 must lie in the first o_lambda blocks");
        const int ob = o(t.shape);
        return h_lambda_l1_l2(t.shape, 0, l) * M_.gamma(M_.mk(t, l * ob)) / M_.gamma(t);
    }

    /// h_{t,x}^{<l>} = h_t^{<l>} gamma_t gamma_{m_x(t<lo>)} / (gamma_{m_x(t)} gamma_{t<lo>}).
    CycloRational h_tx(TabId t, int x, int l) const {
        const int ob = o(t.shape);
        const TabId tl = M_.shift(t, l * ob);
        return h_t(t, l) * M_.gamma(t) * M_.gamma(M_.mk(tl, x)) / (M_.gamma(M_.mk(t, x)) * M_.gamma(tl));
    }

    /// Writes s = t0<l1 o> with t0 satisfying the entry-1 condition; returns (t0, l1).
    std::pair<TabId, int> entry_one_normal_form(TabId s) const {
        const int ob = o(s.shape), pl = p_lambda(s.shape);
        const int c = M_.block_of_one(s) / ob;
        const int l1 = (pl - c) % pl;
        return {M_.shift(s, -l1 * ob), l1};
    }

    /// h_s^{<i>} for arbitrary s: h_{t0, l1 o}^{<i>} where s = t0<l1 o>.
    CycloRational h_general(TabId s, int i) const {
        auto [t0, l1] = entry_one_normal_form(s);
        return h_tx(t0, l1 * o(s.shape), i);
    }

    /// A_{i,j}^{st} from its defining product.
    CycloRational A(TabId s, TabId t, int i, int j) const {
        if (s.shape != t.shape) throw std::invalid_argument("A: s and t must share a shape");
        const int b = s.shape;
        const TabId si = M_.shift(s, i * o(b));
        CycloRational v = h_general(s, i).inverse() * initial_ratio(b, j) * M_.gamma(si) / M_.gamma(M_.mk(si, j));
        if (M_.mutation() != Mutation::drop_a_factor) v *= M_.gamma(t) / M_.gamma(M_.mk(t, j));
        return v;
    }

    /// f_{st}^{[k]} = sum_{i,j} (eps^{o})^{ki} A_{i,j}^{st} f_{s<io+j> t<j>}.
    FElement f_k(TabId s, TabId t, int k) const {
        const int b = s.shape, ob = o(b), pl = p_lambda(b);
        FElement out;
        for (int i = 0; i < pl; ++i) {
            const long phase = M_.mutation() == Mutation::eps_power ? static_cast<long>(k) * i : static_cast<long>(ob) * k * i;
            const CycloRational e = M_.params().eps_power(phase);
            for (int j = 0; j < M_.p(); ++j) out.add(M_.shift(s, i * ob + j), M_.shift(t, j), e * A(s, t, i, j));
        }
        return out;
    }

    std::vector<int> class_representatives() const {
        std::vector<int> out;
        for (const auto& lam : sigma_class_representatives(M_.params().r, M_.p(), M_.n())) out.push_back(M_.shape_index(lam));
        return out;
    }

    std::vector<TabId> entry_one_tableaux(int b) const {
        std::vector<TabId> out;
        for (int i = 0; i < M_.dim(b); ++i)
            if (entry_one_condition({b, i})) out.push_back({b, i});
        return out;
    }

    std::vector<GrpnLabel> basis_labels() const {
        std::vector<GrpnLabel> out;
        for (int b : class_representatives()) {
            const auto ts = entry_one_tableaux(b);
            for (int k = 0; k < p_lambda(b); ++k)
                for (TabId s : ts)
                    for (TabId t : ts) out.push_back({s, t, k});
        }
        return out;
    }

    std::vector<GrpnBasisElement> basis() const {
        std::vector<GrpnBasisElement> out;
        for (const auto& lab : basis_labels()) out.push_back({lab, f_k(lab.s, lab.t, lab.k)});
        return out;
    }

    /// F_lam^{[k]} = sum over entry-1 tableaux t of f_{tt}^{[k]} / (p_lam gamma_t).
    std::vector<CentralIdempotent> central_idempotents() const {
        std::vector<CentralIdempotent> out;
        for (int b : class_representatives())
            for (int k = 0; k < p_lambda(b); ++k) {
                CentralIdempotent ci{b, k, {}};
                for (TabId t : entry_one_tableaux(b))
                    ci.value += f_k(t, t, k).scaled((CycloRational(p_lambda(b)) * M_.gamma(t)).inverse());
                out.push_back(std::move(ci));
            }
        return out;
    }

    /// F_{lam,k} = sum_{t in Std(lam)} gamma_{m_k(t)}^{-1} f_{t<k> t} for every lam with lam<k> = lam.
    std::vector<TwistedCenterElement> twisted_center_basis(int k) const {
        std::vector<TwistedCenterElement> out;
        for (int b = 0; b < M_.num_shapes(); ++b) {
            if (M_.shift_shape(b, k) != b) continue;
            TwistedCenterElement z{b, k, {}};
            for (int i = 0; i < M_.dim(b); ++i) {
                const TabId t{b, i};
                z.value.add(M_.shift(t, k), t, M_.gamma(M_.mk(t, k)).inverse());
            }
            out.push_back(std::move(z));
        }
        return out;
    }

private:
    const SeminormalModel& M_;
};

}  // namespace hecke
