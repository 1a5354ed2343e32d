#pragma once

#include "matrix.hpp"
#include "mutation.hpp"
#include "params.hpp"
#include "tableaux.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

namespace hecke {

/// Tableau handle: shape index in enumeration order, position in Std(shape).
struct TabId {
    int shape = 0;
    int idx = 0;
    friend bool operator==(const TabId&, const TabId&) = default;
    friend auto operator<=>(const TabId&, const TabId&) = default;
};

/// Finite linear combination of seminormal basis elements f_{st} (s, t of a common shape).
struct FElement {
    std::map<std::tuple<int, int, int>, CycloRational> terms;  // (shape, s, t) -> coefficient

    void add(TabId s, TabId t, const CycloRational& c) {
        if (s.shape != t.shape) throw std::invalid_argument("FElement: f_{st} needs s, t of one shape");
        if (c.is_zero()) return;
        auto key = std::make_tuple(s.shape, s.idx, t.idx);
        auto it = terms.find(key);
        if (it == terms.end()) {
            terms.emplace(key, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }
    FElement& operator+=(const FElement& o) {
        for (const auto& [k, c] : o.terms) add({std::get<0>(k), std::get<1>(k)}, {std::get<0>(k), std::get<2>(k)}, c);
        return *this;
    }
    FElement scaled(const CycloRational& s) const {
        FElement r;
        if (s.is_zero()) return r;
        for (const auto& [k, c] : terms) r.terms.emplace(k, c * s);
        return r;
    }
    CycloRational coeff(TabId s, TabId t) const {
        auto it = terms.find(std::make_tuple(s.shape, s.idx, t.idx));
        return it == terms.end() ? CycloRational(0) : it->second;
    }
    bool is_zero() const { return terms.empty(); }
    friend bool operator==(const FElement& a, const FElement& b) {
        if (a.terms.size() != b.terms.size()) return false;
        for (const auto& [k, c] : a.terms) {
            auto it = b.terms.find(k);
            if (it == b.terms.end() || it->second != c) return false;
        }
        return true;
    }
};

struct RelationResult {
    std::string name;
    bool ok = true;
    std::string detail;
};

/// Tableau combinatorics, residues, gamma coefficients and the Specht matrices of every irreducible module.
class SeminormalModel {
public:
    explicit SeminormalModel(HeckeParams P, Mutation mut = Mutation::none) : P_(std::move(P)), mut_(mut) {
        require_semisimple(P_);
        shapes_ = enumerate_multipartitions(P_.r, P_.n);
        for (std::size_t b = 0; b < shapes_.size(); ++b) {
            shape_index_.emplace(shapes_[b], static_cast<int>(b));
            tabs_.push_back(enumerate_standard_tableaux(shapes_[b]));
            for (std::size_t i = 0; i < tabs_.back().size(); ++i)
                tab_index_.emplace(tabs_.back()[i], TabId{static_cast<int>(b), static_cast<int>(i)});
        }
        build_residues();
        build_tables();
        build_gamma();
        build_generators();
        for (const auto& rr : check_relations())
            if (!rr.ok) throw std::logic_error("Specht model violates relation " + rr.name + ": " + rr.detail);
    }

    const HeckeParams& params() const { return P_; }
    const CycloField& field() const { return P_.field(); }
    Mutation mutation() const { return mut_; }
    int n() const { return P_.n; }
    int p() const { return P_.p; }

    int num_shapes() const { return static_cast<int>(shapes_.size()); }
    const Multipartition& shape(int b) const { return shapes_[static_cast<std::size_t>(b)]; }
    int shape_index(const Multipartition& m) const { return shape_index_.at(m); }
    const std::vector<Tableau>& tableaux(int b) const { return tabs_[static_cast<std::size_t>(b)]; }
    const Tableau& tableau(TabId t) const { return tabs_[static_cast<std::size_t>(t.shape)][static_cast<std::size_t>(t.idx)]; }
    TabId id_of(const Tableau& t) const { return tab_index_.at(t); }
    int dim(int b) const { return static_cast<int>(tabs_[static_cast<std::size_t>(b)].size()); }
    std::vector<std::size_t> dims() const {
        std::vector<std::size_t> d;
        for (const auto& ts : tabs_) d.push_back(ts.size());
        return d;
    }
    std::vector<TabId> all_tableaux() const {
        std::vector<TabId> out;
        for (int b = 0; b < num_shapes(); ++b)
            for (int i = 0; i < dim(b); ++i) out.push_back({b, i});
        return out;
    }
    OrbitInvariants orbit(int b) const { return orbit_invariants(shape(b), P_.p); }

    const CycloRational& residue(TabId t, int k) const {
        return res_[static_cast<std::size_t>(t.shape)][static_cast<std::size_t>(t.idx)][static_cast<std::size_t>(k - 1)];
    }
    /// Residues of k over all tableaux of all shapes.
    const std::vector<CycloRational>& residue_set(int k) const { return res_set_[static_cast<std::size_t>(k - 1)]; }

    /// s(i,i+1) when standard.
    std::optional<TabId> swap(TabId s, int i) const {
        int v = swap_[static_cast<std::size_t>(s.shape)][static_cast<std::size_t>(s.idx)][static_cast<std::size_t>(i - 1)];
        if (v < 0) return std::nullopt;
        return TabId{s.shape, v};
    }
    /// s strictly dominates s(i,i+1): i lies in an earlier component or a higher row than i+1.
    bool dominates_swap(TabId s, int i) const {
        const Cell& a = tableau(s).cell(i);
        const Cell& b = tableau(s).cell(i + 1);
        return a.comp < b.comp || (a.comp == b.comp && a.row < b.row);
    }

    CycloRational A(TabId s, int i) const {
        const CycloRational& r1 = residue(s, i + 1);
        return CycloRational(P_.q - 1) * r1 / (r1 - residue(s, i));
    }
    /// Off-diagonal coefficient of f_s T_i along f_{s(i,i+1)}; requires s(i,i+1) standard.
    CycloRational B(TabId s, int i) const {
        auto t = swap(s, i);
        if (!t) throw std::invalid_argument("B: s(i,i+1) is not standard");
        if (dominates_swap(s, i)) return CycloRational(1);
        const CycloRational& rs = residue(s, i);
        const CycloRational& rt = residue(*t, i);
        const CycloRational q(P_.q);
        const CycloRational diff = rt - rs;
        return (q * rs - rt) * (rs - q * rt) / (diff * diff);
    }

    /// [m]_q!.
    CycloRational q_factorial(int m) const {
        mpq_class f = 1;
        for (int k = 1; k <= m; ++k) {
            mpq_class s = 0, qp = 1;
            for (int e = 0; e < k; ++e) {
                s += qp;
                qp *= P_.q;
            }
            f *= s;
        }
        return CycloRational(f);
    }

    /// gamma of t^lam: [lam]_q! times (q^{b-a} eps^s Q_i - eps^t Q_j) over nodes (a,b) of component (i,s)
    /// and pairs (i,s) < (j,t) ordered by i first, then s.
    CycloRational gamma_anchor(int b) const {
        const Multipartition& lam = shape(b);
        CycloRational g = 1;
        for (const auto& part : lam)
            for (int len : part) g *= q_factorial(len);
        const int d = P_.d();
        auto comp = [&](int i, int s) { return (i - 1) + (s - 1) * d; };
        for (int i = 1; i <= d; ++i)
            for (int s = 1; s <= P_.p; ++s) {
                const Partition& part = lam[static_cast<std::size_t>(comp(i, s))];
                for (int j = i; j <= d; ++j)
                    for (int t = (j == i ? s + 1 : 1); t <= P_.p; ++t) {
                        const CycloRational other = P_.component_parameter(comp(j, t) + 1);
                        const CycloRational mine = P_.component_parameter(comp(i, s) + 1);
                        for (std::size_t a = 0; a < part.size(); ++a)
                            for (int col = 0; col < part[a]; ++col)
                                g *= qpow(col - static_cast<int>(a)) * mine - other;
                    }
            }
        return g;
    }

    /// gamma_t obtained by walking a reduced word of d(t) down from t^lam.
    CycloRational gamma_via_word(TabId t, const std::vector<int>& word) const {
        TabId cur{t.shape, 0};
        CycloRational g = gamma_anchor(t.shape);
        for (int i : word) {
            auto next = swap(cur, i);
            if (!next) throw std::logic_error("gamma_via_word: word leaves Std(lam)");
            g *= B(*next, i);
            cur = *next;
        }
        if (cur != t) throw std::logic_error("gamma_via_word: word does not reach t");
        return g;
    }

    const CycloRational& gamma(TabId t) const {
        return gamma_[static_cast<std::size_t>(t.shape)][static_cast<std::size_t>(t.idx)];
    }

    /// t<z>.
    TabId shift(TabId t, int z) const {
        const int zz = ((z % P_.p) + P_.p) % P_.p;
        return shift_[static_cast<std::size_t>(t.shape)][static_cast<std::size_t>(t.idx)][static_cast<std::size_t>(zz)];
    }
    int shift_shape(int b, int z) const { return shift(TabId{b, 0}, z).shape; }

    /// m_k(t), k taken mod p.
    TabId mk(TabId t, int k) const {
        const int kk = ((k % P_.p) + P_.p) % P_.p;
        return mk_[static_cast<std::size_t>(t.shape)][static_cast<std::size_t>(t.idx)][static_cast<std::size_t>(kk)];
    }

    /// 0-based block holding entry 1.
    int block_of_one(TabId t) const { return block_of_entry(tableau(t), 1, P_.p); }

    const BlockMatrix& T(int i) const { return T_[static_cast<std::size_t>(i)]; }
    /// L_k built by L_1 = T_0, L_{k+1} = q^{-1} T_k L_k T_k.
    const BlockMatrix& L(int k) const { return L_[static_cast<std::size_t>(k - 1)]; }
    BlockMatrix identity() const { return BlockMatrix::identity(dims()); }
    BlockMatrix zero() const { return BlockMatrix(dims()); }
    BlockMatrix T0_inverse() const {
        BlockMatrix m = zero();
        for (int b = 0; b < num_shapes(); ++b)
            for (int i = 0; i < dim(b); ++i)
                m.block(static_cast<std::size_t>(b))(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) =
                    T_[0].block(static_cast<std::size_t>(b))(static_cast<std::size_t>(i), static_cast<std::size_t>(i)).inverse();
        return m;
    }
    /// Generators of the sigma-fixed subalgebra: T_0^p, T_0^{-1} T_1 T_0, T_1, ..., T_{n-1}.
    std::vector<BlockMatrix> fixed_subalgebra_generators() const {
        std::vector<BlockMatrix> g;
        BlockMatrix t0p = identity();
        for (int e = 0; e < P_.p; ++e) t0p = t0p * T_[0];
        g.push_back(t0p);
        if (P_.n >= 2) g.push_back(T0_inverse() * T_[1] * T_[0]);
        for (int i = 1; i < P_.n; ++i) g.push_back(T_[static_cast<std::size_t>(i)]);
        return g;
    }

    /// f_{st} = gamma_s E_{st} in the block of shape(s).
    BlockMatrix f_element(TabId s, TabId t) const {
        if (s.shape != t.shape) throw std::invalid_argument("f_element: shapes differ");
        BlockMatrix m = zero();
        m.block(static_cast<std::size_t>(s.shape))(static_cast<std::size_t>(s.idx), static_cast<std::size_t>(t.idx)) = gamma(s);
        return m;
    }

    BlockMatrix to_block(const FElement& x) const {
        BlockMatrix m = zero();
        for (const auto& [k, c] : x.terms) {
            auto [b, s, t] = k;
            m.block(static_cast<std::size_t>(b))(static_cast<std::size_t>(s), static_cast<std::size_t>(t)) +=
                c * gamma(TabId{b, s});
        }
        return m;
    }

    /// f_{uv} f_{st} = delta_{vs} gamma_s f_{ut}.
    FElement multiply(const FElement& x, const FElement& y) const {
        FElement out;
        for (const auto& [kx, cx] : x.terms)
            for (const auto& [ky, cy] : y.terms) {
                if (std::get<0>(kx) != std::get<0>(ky) || std::get<2>(kx) != std::get<1>(ky)) continue;
                const int b = std::get<0>(kx);
                out.add({b, std::get<1>(kx)}, {b, std::get<2>(ky)}, cx * cy * gamma({b, std::get<1>(ky)}));
            }
        return out;
    }

    /// (f_{st})^* = f_{ts}.
    static FElement star(const FElement& x) {
        FElement out;
        for (const auto& [k, c] : x.terms) out.add({std::get<0>(k), std::get<2>(k)}, {std::get<0>(k), std::get<1>(k)}, c);
        return out;
    }

    /// Anti-involution on matrices: X -> G X^T G^{-1} blockwise, G = diag(gamma).
    BlockMatrix star(const BlockMatrix& x) const {
        BlockMatrix out = zero();
        for (int b = 0; b < num_shapes(); ++b) {
            const Matrix& m = x.block(static_cast<std::size_t>(b));
            Matrix& o = out.block(static_cast<std::size_t>(b));
            for (int i = 0; i < dim(b); ++i)
                for (int j = 0; j < dim(b); ++j) {
                    const CycloRational& v = m(static_cast<std::size_t>(j), static_cast<std::size_t>(i));
                    if (!v.is_zero()) o(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = gamma({b, i}) * v / gamma({b, j});
                }
        }
        return out;
    }

    /// F_t as a product of JM factors (L_k - c)/(res_t(k) - c), c over the other residues of k.
    BlockMatrix F_jm(TabId t) const {
        BlockMatrix acc = identity();
        const BlockMatrix id = identity();
        for (int k = 1; k <= P_.n; ++k) {
            const CycloRational& rt = residue(t, k);
            for (const auto& c : residue_set(k)) {
                if (c == rt) continue;
                acc = acc * ((L(k) - id * c) * (rt - c).inverse());
            }
        }
        return acc;
    }

    /// Phi_t as the product of (T_i - A_i) along the canonical reduced word of d(t).
    BlockMatrix phi(TabId t) const { return phi_impl(t, false); }
    /// Phi_t^*: the same factors in reverse order.
    BlockMatrix phi_star(TabId t) const { return phi_impl(t, true); }

    /// Phi_s^* f_{t^lam t^lam} Phi_t with f_{t^lam t^lam} = gamma_{t^lam} F_{t^lam}.
    BlockMatrix f_via_phi(TabId s, TabId t) const {
        if (s.shape != t.shape) throw std::invalid_argument("f_via_phi: shapes differ");
        const TabId init{s.shape, 0};
        return phi_star(s) * (F_jm(init) * gamma(init)) * phi(t);
    }

    std::vector<RelationResult> check_relations() const {
        std::vector<RelationResult> out;
        const BlockMatrix id = identity();
        const CycloRational q(P_.q);
        auto record = [&](const std::string& name, bool ok, const std::string& detail) {
            out.push_back({name, ok, ok ? std::string() : detail});
        };
        {
            BlockMatrix t0p = identity();
            for (int e = 0; e < P_.p; ++e) t0p = t0p * T_[0];
            BlockMatrix prod = identity();
            for (int c = 0; c < P_.d(); ++c) {
                mpq_class qc = 1;
                for (int e = 0; e < P_.p; ++e) qc *= P_.Q[static_cast<std::size_t>(c)];
                prod = prod * (t0p - id * CycloRational(qc));
            }
            record("cyclotomic", prod.is_zero(), "prod_c (T_0^p - Q_c^p) != 0");
        }
        if (P_.n >= 2) {
            const auto& t0 = T_[0];
            const auto& t1 = T_[1];
            record("t0t1-braid", t0 * t1 * t0 * t1 == t1 * t0 * t1 * t0, "T_0 T_1 T_0 T_1 != T_1 T_0 T_1 T_0");
        }
        bool quad = true, far = true, braid = true, t0comm = true;
        std::string qd, fd, bd, cd;
        for (int i = 1; i < P_.n; ++i) {
            const auto& ti = T_[static_cast<std::size_t>(i)];
            if (!((ti - id * q) * (ti + id)).is_zero()) {
                quad = false;
                qd = "i=" + std::to_string(i);
            }
            if (i >= 2 && commutator(T_[0], ti) != zero()) {
                t0comm = false;
                cd = "i=" + std::to_string(i);
            }
            for (int j = i + 2; j < P_.n; ++j)
                if (commutator(ti, T_[static_cast<std::size_t>(j)]) != zero()) {
                    far = false;
                    fd = "i=" + std::to_string(i) + " j=" + std::to_string(j);
                }
            if (i + 1 < P_.n) {
                const auto& tj = T_[static_cast<std::size_t>(i + 1)];
                if (ti * tj * ti != tj * ti * tj) {
                    braid = false;
                    bd = "i=" + std::to_string(i);
                }
            }
        }
        record("quadratic", quad, "(T_i - q)(T_i + 1) != 0 at " + qd);
        record("far-commutation", far, "T_i T_j != T_j T_i at " + fd);
        record("braid", braid, "T_i T_{i+1} T_i != T_{i+1} T_i T_{i+1} at " + bd);
        record("t0-commutation", t0comm, "T_0 T_i != T_i T_0 at " + cd);
        bool jm = true;
        std::string jd;
        for (int k = 1; k <= P_.n && jm; ++k)
            for (int b = 0; b < num_shapes() && jm; ++b) {
                const Matrix& m = L_[static_cast<std::size_t>(k - 1)].block(static_cast<std::size_t>(b));
                if (!m.is_diagonal()) {
                    jm = false;
                    jd = "L_" + std::to_string(k) + " not diagonal in shape " + std::to_string(b);
                }
                for (int i = 0; i < dim(b) && jm; ++i)
                    if (m(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) != residue({b, i}, k)) {
                        jm = false;
                        jd = "L_" + std::to_string(k) + " eigenvalue differs from residue at shape " + std::to_string(b) +
                             " tableau " + std::to_string(i);
                    }
            }
        record("jucys-murphy", jm, jd);
        return out;
    }

    CycloRational qpow(int k) const {
        mpq_class v = 1;
        for (int e = 0; e < (k < 0 ? -k : k); ++e) v *= P_.q;
        return CycloRational(k < 0 ? mpq_class(1 / v) : v);
    }

private:
    void build_residues() {
        res_.resize(shapes_.size());
        res_set_.assign(static_cast<std::size_t>(P_.n), {});
        for (std::size_t b = 0; b < shapes_.size(); ++b)
            for (const auto& t : tabs_[b]) {
                std::vector<CycloRational> rs;
                for (int k = 1; k <= P_.n; ++k) {
                    const Cell& c = t.cell(k);
                    CycloRational v = P_.component_parameter(c.comp + 1) * qpow(c.col - c.row);
                    auto& set = res_set_[static_cast<std::size_t>(k - 1)];
                    bool seen = false;
                    for (const auto& x : set)
                        if (x == v) seen = true;
                    if (!seen) set.push_back(v);
                    rs.push_back(std::move(v));
                }
                res_[b].push_back(std::move(rs));
            }
    }

    void build_tables() {
        const int p = P_.p;
        swap_.resize(shapes_.size());
        shift_.resize(shapes_.size());
        mk_.resize(shapes_.size());
        for (std::size_t b = 0; b < shapes_.size(); ++b)
            for (const auto& t : tabs_[b]) {
                std::vector<int> sw;
                for (int i = 1; i < P_.n; ++i) {
                    Tableau s = swap_entries(t, i);
                    sw.push_back(is_standard(s) ? tab_index_.at(s).idx : -1);
                }
                swap_[b].push_back(std::move(sw));
                std::vector<TabId> sh, mk;
                for (int z = 0; z < p; ++z) sh.push_back(tab_index_.at(hecke::shift(t, z, p)));
                for (int k = 0; k < p; ++k) {
                    const int kk = mut_ == Mutation::wrong_mk ? k + 1 : k;
                    mk.push_back(tab_index_.at(m_k(t, kk, p)));
                }
                shift_[b].push_back(std::move(sh));
                mk_[b].push_back(std::move(mk));
            }
    }

    void build_gamma() {
        gamma_.resize(shapes_.size());
        bool scaled = false;
        for (std::size_t b = 0; b < shapes_.size(); ++b)
            for (std::size_t i = 0; i < tabs_[b].size(); ++i) {
                const TabId t{static_cast<int>(b), static_cast<int>(i)};
                gamma_[b].push_back(gamma_via_word(t, tableau_word(tabs_[b][i]).word));
            }
        if (mut_ == Mutation::gamma_scale)
            for (std::size_t b = 0; b < shapes_.size() && !scaled; ++b)
                if (tabs_[b].size() >= 2) {
                    gamma_[b].back() *= CycloRational(2);
                    scaled = true;
                }
    }

    void build_generators() {
        const auto ds = dims();
        BlockMatrix t0(ds);
        for (int b = 0; b < num_shapes(); ++b)
            for (int i = 0; i < dim(b); ++i)
                t0.block(static_cast<std::size_t>(b))(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) = residue({b, i}, 1);
        T_.push_back(std::move(t0));
        for (int i = 1; i < P_.n; ++i) {
            BlockMatrix ti(ds);
            for (int b = 0; b < num_shapes(); ++b) {
                Matrix& m = ti.block(static_cast<std::size_t>(b));
                for (int s = 0; s < dim(b); ++s) {
                    const TabId sid{b, s};
                    auto t = swap(sid, i);
                    if (t) {
                        m(static_cast<std::size_t>(s), static_cast<std::size_t>(s)) = A(sid, i);
                        m(static_cast<std::size_t>(s), static_cast<std::size_t>(t->idx)) = B(sid, i);
                    } else {
                        const Cell& a = tableau(sid).cell(i);
                        const Cell& c = tableau(sid).cell(i + 1);
                        m(static_cast<std::size_t>(s), static_cast<std::size_t>(s)) =
                            a.row == c.row ? CycloRational(P_.q) : CycloRational(-1);
                    }
                }
            }
            T_.push_back(std::move(ti));
        }
        if (P_.n >= 1) L_.push_back(T_[0]);
        const CycloRational qinv(1 / P_.q);
        for (int k = 1; k < P_.n; ++k) L_.push_back(T_[static_cast<std::size_t>(k)] * L_.back() * T_[static_cast<std::size_t>(k)] * qinv);
    }

    BlockMatrix phi_impl(TabId t, bool reversed) const {
        const auto w = tableau_word(tableau(t)).word;
        std::vector<BlockMatrix> factors;
        TabId cur{t.shape, 0};
        const BlockMatrix id = identity();
        for (int i : w) {
            factors.push_back(T_[static_cast<std::size_t>(i)] - id * A(cur, i));
            cur = *swap(cur, i);
        }
        BlockMatrix acc = identity();
        if (reversed) {
            for (auto it = factors.rbegin(); it != factors.rend(); ++it) acc = acc * *it;
        } else {
            for (const auto& f : factors) acc = acc * f;
        }
        return acc;
    }

    HeckeParams P_;
    Mutation mut_;
    std::vector<Multipartition> shapes_;
    std::map<Multipartition, int> shape_index_;
    std::vector<std::vector<Tableau>> tabs_;
    std::map<Tableau, TabId> tab_index_;
    std::vector<std::vector<std::vector<CycloRational>>> res_;
    std::vector<std::vector<CycloRational>> res_set_;
    std::vector<std::vector<std::vector<int>>> swap_;
    std::vector<std::vector<std::vector<TabId>>> shift_, mk_;
    std::vector<std::vector<CycloRational>> gamma_;
    std::vector<BlockMatrix> T_, L_;
};

}  // namespace hecke
