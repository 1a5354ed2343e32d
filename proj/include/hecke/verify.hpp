#pragma once

#include "gprn.hpp"
#include "serialize.hpp"
#include "word_basis.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace hecke {

// ---------------------------------------------------------------------------
// Brute-force oracles and audits

/// Basis of {z in End(S(mu)) for all mu : z T_0 = eps^k T_0 z, z T_i = T_i z}, solved block by block.
inline std::vector<BlockMatrix> twisted_center_nullspace(const SeminormalModel& M, int k) {
    const CycloRational e = M.params().eps_power(k);
    std::vector<BlockMatrix> out;
    for (int b = 0; b < M.num_shapes(); ++b) {
        const std::size_t d = static_cast<std::size_t>(M.dim(b));
        const std::size_t unknowns = d * d;
        Matrix sys(static_cast<std::size_t>(M.n()) * unknowns, unknowns);
        // z(i,j) is unknown i*d+j; row (g, i, j) encodes (z X - c X z)(i,j) for generator X.
        for (int g = 0; g < M.n(); ++g) {
            const Matrix& X = M.T(g).block(static_cast<std::size_t>(b));
            const CycloRational c = g == 0 ? e : CycloRational(1);
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j) {
                    const std::size_t row = static_cast<std::size_t>(g) * unknowns + i * d + j;
                    for (std::size_t m = 0; m < d; ++m) {
                        if (!X(m, j).is_zero()) sys(row, i * d + m) += X(m, j);
                        if (!X(i, m).is_zero()) sys(row, m * d + j) -= c * X(i, m);
                    }
                }
        }
        for (const auto& v : nullspace(std::move(sys))) {
            BlockMatrix z = M.zero();
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j) z.block(static_cast<std::size_t>(b))(i, j) = v[i * d + j];
            out.push_back(std::move(z));
        }
    }
    return out;
}

/// k -> dim Z(H)^{(k)} for k = 0..p-1.
inline std::map<int, std::size_t> brute_force_center_dims(const SeminormalModel& M) {
    std::map<int, std::size_t> out;
    for (int k = 0; k < M.p(); ++k) out[k] = twisted_center_nullspace(M, k).size();
    return out;
}

inline long factorial(int n) {
    long f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

inline long ipow(long b, int e) {
    long v = 1;
    for (int i = 0; i < e; ++i) v *= b;
    return v;
}

struct DimAudit {
    long dim_hrn = 0;             // r^n n!
    long sum_std_squares = 0;     // sum over shapes of #Std^2
    long dim_hrpn = 0;            // r^n n! / p
    long sum_constituents = 0;    // sum over classes of p_lam (#Std/p_lam)^2
    long basis_size = 0;          // number of f^{[k]} labels
    long num_shapes = 0;
    long num_classes = 0;
    long num_central_idempotents = 0;  // sum over classes of p_lam
    std::vector<long> twisted_center_counts;  // #{lam : lam<k> = lam}, k = 0..p-1
    bool divisibility = true;     // p_lam | #Std(lam) and #entry-1 tableaux = #Std/p_lam
    bool ok() const {
        return dim_hrn == sum_std_squares && dim_hrpn == sum_constituents && basis_size == dim_hrpn && divisibility;
    }
};

inline DimAudit dim_audit(const SeminormalModel& M) {
    const GrpnLayer G(M);
    DimAudit a;
    a.dim_hrn = ipow(M.params().r, M.n()) * factorial(M.n());
    a.dim_hrpn = a.dim_hrn / M.p();
    a.num_shapes = M.num_shapes();
    for (int b = 0; b < M.num_shapes(); ++b) a.sum_std_squares += static_cast<long>(M.dim(b)) * M.dim(b);
    for (int b : G.class_representatives()) {
        const long pl = G.p_lambda(b), d = M.dim(b);
        if (d % pl != 0 || static_cast<long>(G.entry_one_tableaux(b).size()) * pl != d) a.divisibility = false;
        a.sum_constituents += pl * (d / pl) * (d / pl);
        a.num_central_idempotents += pl;
        ++a.num_classes;
    }
    a.basis_size = static_cast<long>(G.basis_labels().size());
    for (int k = 0; k < M.p(); ++k) a.twisted_center_counts.push_back(static_cast<long>(G.twisted_center_basis(k).size()));
    return a;
}

inline Json to_json(const DimAudit& a) {
    return Json{{"dim_H_rn", a.dim_hrn},
                {"sum_std_squares", a.sum_std_squares},
                {"dim_H_rpn", a.dim_hrpn},
                {"sum_constituent_squares", a.sum_constituents},
                {"grpn_basis_size", a.basis_size},
                {"num_shapes", a.num_shapes},
                {"num_sigma_classes", a.num_classes},
                {"num_central_idempotents", a.num_central_idempotents},
                {"twisted_center_counts", a.twisted_center_counts},
                {"consistent", a.ok()}};
}

// ---------------------------------------------------------------------------
// Check plumbing

enum class CheckStatus { pass, fail, skipped };

inline std::string_view to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::skipped: return "skipped";
    }
    return "unknown";
}

struct CheckResult {
    std::string name;
    std::string statement;
    CheckStatus status = CheckStatus::pass;
    bool sampled = false;
    std::size_t instances = 0;
    Json counterexample;  // null unless status == fail
    std::string note;
    double seconds = 0;
};

/// Counts quantified tuples, stops at the first failure or at the sampling limit.
class Recorder {
public:
    explicit Recorder(std::size_t limit) : limit_(limit) {}

    /// Opens the next tuple; false once the check should stop enumerating.
    bool next() {
        if (failed_) return false;
        if (count_ >= limit_) {
            sampled_ = true;
            return false;
        }
        ++count_;
        return true;
    }

    template <class F>
    bool expect(bool ok, F&& cex) {
        if (!ok && !failed_) {
            failed_ = true;
            cex_ = cex();
        }
        return ok;
    }

    void fail_with(Json cex) {
        if (!failed_) {
            failed_ = true;
            cex_ = std::move(cex);
        }
    }

    bool failed() const { return failed_; }
    bool sampled() const { return sampled_; }
    std::size_t count() const { return count_; }
    const Json& counterexample() const { return cex_; }

private:
    std::size_t limit_;
    std::size_t count_ = 0;
    bool failed_ = false, sampled_ = false;
    Json cex_;
};

inline Json value_json(const CycloRational& x) { return to_json(x); }
inline Json value_json(long x) { return Json(x); }
inline Json value_json(std::size_t x) { return Json(x); }
inline Json value_json(const BlockMatrix& x) {
    Json j = Json::array();
    for (std::size_t b = 0; b < x.num_blocks(); ++b) j.push_back(to_json(x.block(b)));
    return j;
}
inline Json value_json(const FElement& x) {
    Json j = Json::array();
    for (const auto& [k, c] : x.terms)
        j.push_back(Json{{"shape", std::get<0>(k)}, {"s", std::get<1>(k)}, {"t", std::get<2>(k)}, {"coefficient", to_json(c)}});
    return j;
}

template <class V, class F>
bool expect_eq(Recorder& R, const V& lhs, const V& rhs, F&& context) {
    return R.expect(lhs == rhs, [&] {
        Json j = context();
        j["lhs"] = value_json(lhs);
        j["rhs"] = value_json(rhs);
        return j;
    });
}

/// Shared read-only state of one suite run; memo tables are mutex-guarded.
class SuiteContext {
public:
    SuiteContext(const SeminormalModel& M, const WordBasis* W, std::size_t limit)
        : M(M), G(M), W(W), limit(limit), tabs(M.all_tableaux()) {}

    const SeminormalModel& M;
    const GrpnLayer G;
    const WordBasis* W;
    const std::size_t limit;
    const std::vector<TabId> tabs;

    Json tab(TabId t) const { return to_json(M.tableau(t)); }

    /// F_t by the JM product.
    const BlockMatrix& F(TabId t) const {
        return memo(F_, t, [&] { return M.F_jm(t); });
    }
    const BlockMatrix& phi(TabId t) const {
        return memo(phi_, t, [&] { return M.phi(t); });
    }
    const BlockMatrix& phi_star(TabId t) const {
        return memo(phi_star_, t, [&] { return M.phi_star(t); });
    }
    /// f_{st} = Phi_s^* gamma_{t^lam} F_{t^lam} Phi_t, independent of the gamma table except at t^lam.
    const BlockMatrix& f_phi(TabId s, TabId t) const {
        return memo(fphi_, std::make_pair(s, t), [&] {
            const TabId init{s.shape, 0};
            return phi_star(s) * (F(init) * M.gamma(init)) * phi(t);
        });
    }

private:
    template <class K, class Fn>
    const BlockMatrix& memo(std::map<K, std::unique_ptr<BlockMatrix>>& table, const K& key, Fn&& make) const {
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = table.find(key);
            if (it != table.end()) return *it->second;
        }
        auto value = std::make_unique<BlockMatrix>(make());
        std::lock_guard<std::mutex> lock(mu_);
        auto [it, inserted] = table.emplace(key, std::move(value));
        return *it->second;
    }

    mutable std::mutex mu_;
    mutable std::map<TabId, std::unique_ptr<BlockMatrix>> F_, phi_, phi_star_;
    mutable std::map<std::pair<TabId, TabId>, std::unique_ptr<BlockMatrix>> fphi_;
};

using CheckFn = std::function<void(const SuiteContext&, Recorder&)>;

struct CheckSpec {
    std::string name;
    std::string statement;
    bool oracle = false;  // needs the word-basis oracle
    CheckFn run;
};

namespace checks {

inline int mod(int a, int m) { return ((a % m) + m) % m; }

// --- seminormal structure ---------------------------------------------------

inline void relations(const SuiteContext& C, Recorder& R) {
    for (const auto& rr : C.M.check_relations()) {
        if (!R.next()) return;
        R.expect(rr.ok, [&] { return Json{{"relation", rr.name}, {"detail", rr.detail}}; });
    }
}

inline void tiact(const SuiteContext& C, Recorder& R) {
    const auto& M = C.M;
    const CycloRational q(M.params().q);
    for (TabId u : C.tabs)
        for (int si = 0; si < M.dim(u.shape); ++si) {
            const TabId s{u.shape, si};
            const BlockMatrix& fus = C.f_phi(u, s);
            if (!R.next()) return;
            if (!expect_eq(R, fus * M.T(0), fus * M.residue(s, 1),
                           [&] { return Json{{"u", C.tab(u)}, {"s", C.tab(s)}, {"i", 0}}; }))
                return;
            for (int i = 1; i < M.n(); ++i) {
                if (!R.next()) return;
                BlockMatrix rhs = fus * M.A(s, i);
                if (auto t = M.swap(s, i)) {
                    rhs = rhs + C.f_phi(u, *t) * M.B(s, i);
                } else {
                    const Cell& a = M.tableau(s).cell(i);
                    const Cell& b = M.tableau(s).cell(i + 1);
                    rhs = fus * (a.row == b.row && a.comp == b.comp ? q : CycloRational(-1));
                }
                if (!expect_eq(R, fus * M.T(i), rhs, [&] { return Json{{"u", C.tab(u)}, {"s", C.tab(s)}, {"i", i}}; }))
                    return;
            }
        }
}

inline void gamma_coeffi(const SuiteContext& C, Recorder& R) {
    const auto& M = C.M;
    for (int b = 0; b < M.num_shapes(); ++b) {
        const int d = M.dim(b);
        for (int u = 0; u < d; ++u)
            for (int v = 0; v < d; ++v)
                for (int s = 0; s < d; ++s)
                    for (int t = 0; t < d; ++t) {
                        if (!R.next()) return;
                        const TabId U{b, u}, V{b, v}, S{b, s}, T{b, t};
                        const BlockMatrix lhs = C.f_phi(U, V) * C.f_phi(S, T);
                        const BlockMatrix rhs = v == s ? C.f_phi(U, T) * M.gamma(S) : M.zero();
                        if (!expect_eq(R, lhs, rhs, [&] {
                                return Json{{"u", C.tab(U)}, {"v", C.tab(V)}, {"s", C.tab(S)}, {"t", C.tab(T)}};
                            }))
                            return;
                    }
    }
}

inline void gammacoeff(const SuiteContext& C, Recorder& R) {
    const auto& M = C.M;
    for (TabId t : C.tabs) {
        if (!R.next()) return;
        const auto word = reduced_word(tableau_word(M.tableau(t)).d, false);
        if (!expect_eq(R, M.gamma_via_word(t, word), M.gamma(t),
                       [&] { return Json{{"identity", "gamma along largest-first reduced word"}, {"t", C.tab(t)}}; }))
            return;
        for (int i = 1; i < M.n(); ++i) {
            auto s = M.swap(t, i);
            if (!s || !M.dominates_swap(t, i)) continue;
            if (!R.next()) return;
            if (!expect_eq(R, M.gamma(*s), M.gamma(t) * M.B(*s, i), [&] {
                    return Json{{"identity", "gamma_s = B_i(s) gamma_t, s = t(i,i+1) below t"}, {"t", C.tab(t)}, {"i", i}};
                }))
                return;
            if (!expect_eq(R, M.B(t, i), CycloRational(1),
                           [&] { return Json{{"identity", "B_i(t) = 1 when t dominates t(i,i+1)"}, {"t", C.tab(t)}, {"i", i}}; }))
                return;
        }
    }
    for (TabId s : C.tabs)
        for (int ti = 0; ti < M.dim(s.shape); ++ti) {
            if (!R.next()) return;
            const TabId t{s.shape, ti};
            if (!expect_eq(R, C.W->star(C.f_phi(s, t)), C.f_phi(t, s),
                           [&] { return Json{{"identity", "(f_st)^* = f_ts"}, {"s", C.tab(s)}, {"t", C.tab(t)}}; }))
                return;
        }
}

inline void dist(const SuiteContext& C, Recorder& R) {
    const auto& M = C.M;
    for (std::size_t a = 0; a < C.tabs.size(); ++a)
        for (std::size_t b = a + 1; b < C.tabs.size(); ++b) {
            if (!R.next()) return;
            bool differ = false;
            for (int k = 1; k <= M.n() && !differ; ++k) differ = M.residue(C.tabs[a], k) != M.residue(C.tabs[b], k);
            if (!R.expect(differ, [&] { return Json{{"s", C.tab(C.tabs[a])}, {"t", C.tab(C.tabs[b])}}; })) return;
        }
}

inline void Ft(const SuiteContext& C, Recorder& R) {
    const auto& M = C.M;
    BlockMatrix sum = M.zero();
    bool complete = true;
    for (TabId t : C.tabs) {
        if (!R.next()) {
            complete = false;
            break;
        }
        const BlockMatrix& F = C.F(t);
        if (!expect_eq(R, F, C.f_phi(t, t) * M.gamma(t).inverse(),
                       [&] { return Json{{"identity", "F_t = f_tt / gamma_t"}, {"t", C.tab(t)}}; }))
            return;
        if (!expect_eq(R, F * F, F, [&] { return Json{{"identity", "F_t^2 = F_t"}, {"t", C.tab(t)}}; })) return;
        sum = sum + F;
    }
    if (R.failed()) return;
    for (std::size_t a = 0; a < C.tabs.size() && complete; ++a)
        for (std::size_t b = 0; b < C.tabs.size(); ++b) {
            if (a == b) continue;
            if (!R.next()) return;
            if (!expect_eq(R, C.F(C.tabs[a]) * C.F(C.tabs[b]), M.zero(), [&] {
                    return Json{{"identity", "F_s F_t = 0"}, {"s", C.tab(C.tabs[a])}, {"t", C.tab(C.tabs[b])}};
                }))
                return;
        }
    if (complete && R.next()) expect_eq(R, sum, M.identity(), [] { return Json{{"identity", "sum_t F_t = 1"}}; });
}

inline void sigmaFt(const SuiteContext& C, Recorder& R) {
    for (TabId t : C.tabs) {
        if (!R.next()) return;
        const TabId t1 = C.M.shift(t, 1);
        if (!expect_eq(R, C.W->sigma(C.F(t)), C.F(t1), [&] { return Json{{"t", C.tab(t)}, {"t<1>", C.tab(t1)}}; })) return;
    }
}

inline void recursiveA(const SuiteContext& C, Recorder& R) {
    const auto& M = C.M;
    for (TabId t : C.tabs) {
        const BlockMatrix& F0 = C.F({t.shape, 0});
        for (int i = 1; i < M.n(); ++i) {
            auto s = M.swap(t, i);
            if (!s || !M.dominates_swap(t, i)) continue;
            if (!R.next()) return;
            const BlockMatrix step = M.T(i) - M.identity() * M.A(t, i);
            if (!expect_eq(R, F0 * C.phi(*s), F0 * C.phi(t) * step, [&] {
                    return Json{{"identity", "F_{t^lam} Phi_s = F_{t^lam} Phi_t (T_i - A_i(t))"}, {"t", C.tab(t)}, {"i", i}};
                }))
                return;
        }
    }
    for (TabId s : C.tabs)
        for (int ti = 0; ti < M.dim(s.shape); ++ti) {
            if (!R.next()) return;
            const TabId t{s.shape, ti};
            if (!expect_eq(R, C.f_phi(s, t), M.f_element(s, t), [&] {
                    return Json{{"identity", "Phi_s^* f_{t^lam t^lam} Phi_t = gamma_s E_st"}, {"s", C.tab(s)}, {"t", C.tab(t)}};
                }))
                return;
        }
}

// --- coefficient families ----------------------------------------------------

inline void gtsft(const SuiteContext& C, Recorder& R) {
    const auto& M = C.M;
    auto g = [&](TabId t) -> const CycloRational& { return M.gamma(t); };
    for (TabId t : C.tabs)
        for (int k = 0; k < M.p(); ++k) {
            if (!R.next()) return;
            const TabId m = M.mk(t, k), tk = M.shift(t, k), init{t.shape, 0}, initk = M.shift(init, k), mkk = M.shift(m, k);
            auto ctx = [&](const char* id) { return [&, id] { return Json{{"identity", id}, {"t", C.tab(t)}, {"k", k}}; }; };
            if (!R.expect(tableau_dominance_leq(M.tableau(t), M.tableau(m)), [&] {
                    return Json{{"identity", "m_k(t) dominates t"}, {"t", C.tab(t)}, {"k", k}, {"m_k(t)", C.tab(m)}};
                }))
                return;
            const CycloRational lhs = g(t) / g(tk);
            const CycloRational r1 = g(t) / g(m);
            if (!expect_eq(R, lhs, g(init) / g(initk) * r1 * r1, ctx("gamma_t/gamma_t<k> first form"))) return;
            const CycloRational r2 = g(m) / g(tk);
            if (!expect_eq(R, lhs, g(initk) / g(init) * r2 * r2, ctx("gamma_t/gamma_t<k> second form"))) return;
            if (!expect_eq(R, g(m) / g(init), g(mkk) / g(initk), ctx("gamma_{m_k(t)}/gamma_{t^lam} shift invariance"))) return;
            if (!expect_eq(R, g(t) * g(tk), g(m) * g(mkk), ctx("gamma_t gamma_t<k> = gamma_m gamma_m<k>"))) return;
        }
}

inline void snphit(const SuiteContext& C, Recorder& R) {
    const auto& M = C.M;
    const auto& G = C.G;
    auto g = [&](TabId t) -> const CycloRational& { return M.gamma(t); };
    for (TabId t : C.tabs)
        for (int k = 0; k < M.p(); ++k) {
            if (!R.next()) return;
            const TabId init{t.shape, 0}, initk = M.shift(init, k), tk = M.shift(t, k), m = M.mk(t, k);
            auto ctx = [&](const char* id) { return [&, id] { return Json{{"identity", id}, {"t", C.tab(t)}, {"k", k}}; }; };
            const CycloRational r = G.r(t, k);
            if (!expect_eq(R, r, g(M.shift(m, k)) / g(tk), ctx("r_{t,k} = gamma_{m_k(t)<k>}/gamma_{t<k>}"))) return;
            if (!expect_eq(R, r, g(initk) / g(init) * g(m) / g(tk), ctx("r_{t,k} mixed form"))) return;
            const BlockMatrix fkk = M.f_element(initk, initk);
            if (!expect_eq(R, fkk * C.phi(t), M.f_element(initk, tk) * r, ctx("f_{t^lam<k> t^lam<k>} Phi_t = r f_{t^lam<k> t<k>}")))
                return;
            if (!expect_eq(R, C.phi_star(t) * fkk, M.f_element(tk, initk) * r,
                           ctx("Phi_t^* f_{t^lam<k> t^lam<k>} = r f_{t<k> t^lam<k>}")))
                return;
            for (int si = 0; si < M.dim(t.shape); ++si) {
                if (!R.next()) return;
                const TabId s{t.shape, si}, sk = M.shift(s, k), ms = M.mk(s, k);
                const CycloRational Rst = G.R(s, t, k);
                auto c2 = [&](const char* id) {
                    return [&, id] { return Json{{"identity", id}, {"s", C.tab(s)}, {"t", C.tab(t)}, {"k", k}}; };
                };
                if (!expect_eq(R, Rst, g(initk) / g(init) * g(ms) * g(m) / (g(sk) * g(tk)), c2("R_{st,k} first form"))) return;
                if (!expect_eq(R, Rst, g(ms) * g(t) / (g(sk) * g(m)), c2("R_{st,k} second form"))) return;
                if (!expect_eq(R, Rst, g(s) * g(m) / (g(ms) * g(tk)), c2("R_{st,k} third form"))) return;
            }
        }
}

inline void sigmafst(const SuiteContext& C, Recorder& R) {
    const auto& M = C.M;
    for (TabId s : C.tabs)
        for (int ti = 0; ti < M.dim(s.shape); ++ti) {
            const TabId t{s.shape, ti};
            const BlockMatrix fst = M.f_element(s, t);
            BlockMatrix cur = fst;
            for (int k = 1; k <= M.p(); ++k) {
                if (!R.next()) return;
                cur = C.W->sigma(cur);
                const BlockMatrix rhs = M.f_element(M.shift(s, k), M.shift(t, k)) * C.G.R(s, t, k);
                if (!expect_eq(R, cur, rhs, [&] { return Json{{"s", C.tab(s)}, {"t", C.tab(t)}, {"k", k}}; })) return;
            }
        }
}

/// All compositions of k.
inline std::vector<std::vector<int>> compositions(int k) {
    std::vector<std::vector<int>> out;
    if (k == 0) return {{}};
    for (int first = 1; first <= k; ++first)
        for (auto rest : compositions(k - first)) {
            rest.insert(rest.begin(), first);
            out.push_back(std::move(rest));
        }
    return out;
}

inline void propRstk(const SuiteContext& C, Recorder& R) {
    const auto& M = C.M;
    const auto& G = C.G;
    const int p = M.p();
    std::vector<std::vector<std::vector<int>>> comps;
    for (int k = 0; k <= p; ++k) comps.push_back(compositions(k));
    for (TabId s : C.tabs)
        for (int ti = 0; ti < M.dim(s.shape); ++ti) {
            const TabId t{s.shape, ti};
            for (int k = 1; k <= p; ++k) {
                if (!R.next()) return;
                auto ctx = [&](const char* id) {
                    return [&, id] { return Json{{"identity", id}, {"s", C.tab(s)}, {"t", C.tab(t)}, {"k", k}}; };
                };
                const CycloRational Rk = G.R(s, t, k);
                if (!expect_eq(R, Rk * Rk, M.gamma(s) * M.gamma(t) / (M.gamma(M.shift(s, k)) * M.gamma(M.shift(t, k))),
                               ctx("R_{st,k}^2 = gamma_s gamma_t / (gamma_s<k> gamma_t<k>)")))
                    return;
                for (const auto& mu : comps[static_cast<std::size_t>(k)]) {
                    CycloRational prod = 1;
                    int a = 0;
                    for (int part : mu) {
                        prod *= G.R(M.shift(s, a), M.shift(t, a), part);
                        a += part;
                    }
                    if (!expect_eq(R, prod, Rk, [&] {
                            return Json{{"identity", "composition law"}, {"s", C.tab(s)}, {"t", C.tab(t)}, {"k", k}, {"mu", mu}};
                        }))
                        return;
                }
                if (k < p) {
                    const int c = std::lcm(k, p) / k;
                    CycloRational prod = 1;
                    for (int l = 0; l < c; ++l) prod *= G.R(M.shift(s, l * k), M.shift(t, l * k), k);
                    if (!expect_eq(R, prod, CycloRational(1), ctx("prod_{l<lcm(k,p)/k} R_{s<lk> t<lk>,k} = 1"))) return;
                }
            }
        }
}

inline void mainthm1(const SuiteContext& C, Recorder& R) {
    const auto& M = C.M;
    const auto& G = C.G;
    for (TabId t : C.tabs) {
        const int o = G.o(t.shape), pl = G.p_lambda(t.shape);
        for (int k = 0; k <= pl; ++k)
            for (int l = 0; l <= pl; ++l) {
                if (!R.next()) return;
                const CycloRational lhs = G.r(t, l * o) * G.r(M.shift(t, l * o), k * o);
                const CycloRational rhs = G.r(t, k * o) * G.r(M.shift(t, k * o), l * o);
                if (!expect_eq(R, lhs, rhs, [&] { return Json{{"t", C.tab(t)}, {"k", k}, {"l", l}}; })) return;
            }
    }
}

inline void claim1(const SuiteContext& C, Recorder& R) {
    const auto& M = C.M;
    const auto& G = C.G;
    for (int b = 0; b < M.num_shapes(); ++b) {
        const int o = G.o(b), pl = G.p_lambda(b);
        const TabId init{b, 0};
        for (int k = 0; k <= pl; ++k)
            for (int l = 0; l <= pl; ++l) {
                if (!R.next()) return;
                const TabId il = M.shift(init, l * o), ik = M.shift(init, k * o);
                const CycloRational lhs = M.gamma(M.mk(il, k * o)) / M.gamma(il);
                const CycloRational rhs = M.gamma(M.mk(ik, l * o)) / M.gamma(ik);
                if (!expect_eq(R, lhs, rhs, [&] { return Json{{"shape", to_json(M.shape(b))}, {"k", k}, {"l", l}}; })) return;
            }
    }
}

// --- square roots ------------------------------------------------------------

inline Json shape_ctx(const SuiteContext& C, int b) { return Json{{"shape", to_json(C.M.shape(b))}}; }

inline void squareProp(const SuiteContext& C, Recorder& R) {
    const auto& M = C.M;
    const auto& G = C.G;
    for (int b = 0; b < M.num_shapes(); ++b) {
        if (!R.next()) return;
        const TabId init{b, 0};
        const CycloRational h = G.h_lambda(b);
        if (!expect_eq(R, h * h, M.gamma(M.shift(init, G.o(b))) / M.gamma(init), [&] {
                Json j = shape_ctx(C, b);
                j["p_lambda"] = G.p_lambda(b);
                return j;
            }))
            return;
    }
}

inline void prophlam(const SuiteContext& C, Recorder& R) {
    const auto& M = C.M;
    const auto& G = C.G;
    for (int b = 0; b < M.num_shapes(); ++b) {
        const int o = G.o(b), pl = G.p_lambda(b);
        const TabId init{b, 0};
        for (int l1 = 0; l1 <= 2 * pl; ++l1)
            for (int l2 = 0; l2 <= 2 * pl; ++l2) {
                if (!R.next()) return;
                auto ctx = [&](const char* id) {
                    return [&, id] {
                        Json j = shape_ctx(C, b);
                        j["identity"] = id;
                        j["l1"] = l1;
                        j["l2"] = l2;
                        return j;
                    };
                };
                const CycloRational h = G.h_lambda_l1_l2(b, l1, l2);
                if (!expect_eq(R, h, G.h_lambda_l1_l2_recursive(b, l1, l2), ctx("closed form = recursion"))) return;
                if (!expect_eq(R, h * h, M.gamma(M.shift(init, (l1 + l2) * o)) / M.gamma(M.shift(init, l1 * o)),
                               ctx("h_{lam,l1,l2}^2 = gamma_{t^lam<(l1+l2)o>}/gamma_{t^lam<l1 o>}")))
                    return;
                if (l2 == 0 && !expect_eq(R, h, CycloRational(1), ctx("h_{lam,l,0} = 1"))) return;
            }
    }
}

inline void sqhlam(const SuiteContext& C, Recorder& R) {
    for (int b = 0; b < C.M.num_shapes(); ++b) {
        if (!R.next()) return;
        if (!expect_eq(R, C.G.h_lambda_l1_l2(b, 0, C.G.p_lambda(b)), CycloRational(1), [&] { return shape_ctx(C, b); })) return;
    }
}

inline void congruence(const SuiteContext& C, Recorder& R) {
    const auto& G = C.G;
    for (int b = 0; b < C.M.num_shapes(); ++b) {
        const int pl = G.p_lambda(b);
        for (int l1 = 0; l1 < pl; ++l1)
            for (int l2 = 0; l2 < pl; ++l2) {
                if (!R.next()) return;
                const CycloRational h = G.h_lambda_l1_l2(b, l1, l2);
                auto ctx = [&](const char* id) {
                    return [&, id] {
                        Json j = shape_ctx(C, b);
                        j["identity"] = id;
                        j["l1"] = l1;
                        j["l2"] = l2;
                        return j;
                    };
                };
                if (!expect_eq(R, G.h_lambda_l1_l2(b, l1 + pl, l2), h, ctx("l1 periodic mod p_lam"))) return;
                if (!expect_eq(R, G.h_lambda_l1_l2(b, l1, l2 + pl), h, ctx("l2 periodic mod p_lam"))) return;
            }
    }
}

inline void hlaml1l2(const SuiteContext& C, Recorder& R) {
    const auto& G = C.G;
    for (int b = 0; b < C.M.num_shapes(); ++b) {
        const int pl = G.p_lambda(b);
        for (int l1 = 0; l1 < pl; ++l1)
            for (int l2 = 0; l2 < pl; ++l2) {
                if (!R.next()) return;
                const CycloRational rhs = G.h_lambda_l1_l2(b, 0, l1) * G.h_lambda_l1_l2(b, l1, l2);
                auto ctx = [&] {
                    Json j = shape_ctx(C, b);
                    j["l1"] = l1;
                    j["l2"] = l2;
                    return j;
                };
                if (!expect_eq(R, G.h_lambda_l1_l2(b, 0, l1 + l2), rhs, ctx)) return;
                if (!expect_eq(R, G.h_lambda_l1_l2(b, 0, (l1 + l2) % pl), rhs, ctx)) return;
            }
    }
}

inline void hlamQuo(const SuiteContext& C, Recorder& R) {
    const auto& M = C.M;
    const auto& G = C.G;
    for (int b = 0; b < M.num_shapes(); ++b) {
        const int o = G.o(b), pl = G.p_lambda(b);
        const TabId init{b, 0};
        for (int l1 = 0; l1 < pl; ++l1)
            for (int l2 = 0; l2 < pl; ++l2) {
                if (!R.next()) return;
                const TabId u = M.shift(init, l1 * o);
                if (!expect_eq(R, G.h_lambda_l1_l2(b, l1, l2) / G.h_lambda_l1_l2(b, 0, l2), M.gamma(M.mk(u, l2 * o)) / M.gamma(u), [&] {
                        Json j = shape_ctx(C, b);
                        j["l1"] = l1;
                        j["l2"] = l2;
                        return j;
                    }))
                    return;
            }
    }
}

/// Runs body(t, o, p_lam) over every tableau with entry 1 in the first o_lam blocks.
template <class Body>
void for_entry_one(const SuiteContext& C, Body&& body) {
    for (int b = 0; b < C.M.num_shapes(); ++b)
        for (TabId t : C.G.entry_one_tableaux(b))
            if (!body(t, C.G.o(b), C.G.p_lambda(b))) return;
}

inline void plamht(const SuiteContext& C, Recorder& R) {
    for_entry_one(C, [&](TabId t, int o, int pl) {
        for (int l = 0; l < pl; ++l) {
            if (!R.next()) return false;
            if (!expect_eq(R, C.G.h_tx(t, l * o, pl), CycloRational(1), [&] { return Json{{"t", C.tab(t)}, {"l", l}}; })) return false;
        }
        return true;
    });
}

inline void squareht(const SuiteContext& C, Recorder& R) {
    const auto& M = C.M;
    for_entry_one(C, [&](TabId t, int o, int pl) {
        for (int l1 = 0; l1 < pl; ++l1)
            for (int l2 = 0; l2 <= pl; ++l2) {
                if (!R.next()) return false;
                const CycloRational h = C.G.h_tx(t, l1 * o, l2);
                if (!expect_eq(R, h * h, M.gamma(M.shift(t, (l1 + l2) * o)) / M.gamma(M.shift(t, l1 * o)),
                               [&] { return Json{{"t", C.tab(t)}, {"l1", l1}, {"l2", l2}}; }))
                    return false;
                if (l1 == 0 && !expect_eq(R, C.G.h_t(t, l2), h, [&] {
                        return Json{{"identity", "h_{t,0} = h_t"}, {"t", C.tab(t)}, {"l", l2}};
                    }))
                    return false;
            }
        return true;
    });
}

inline void htkl(const SuiteContext& C, Recorder& R) {
    for_entry_one(C, [&](TabId t, int o, int pl) {
        for (int l1 = 0; l1 < pl; ++l1)
            for (int l2 = 0; l2 < pl; ++l2) {
                if (!R.next()) return false;
                const CycloRational rhs = C.G.h_t(t, l1) * C.G.h_tx(t, l1 * o, l2);
                if (!expect_eq(R, C.G.h_t(t, l1 + l2), rhs, [&] { return Json{{"t", C.tab(t)}, {"l1", l1}, {"l2", l2}}; }))
                    return false;
            }
        return true;
    });
}

inline void compatible_ensure(const SuiteContext& C, Recorder& R) {
    const auto& M = C.M;
    auto g = [&](TabId t) -> const CycloRational& { return M.gamma(t); };
    for_entry_one(C, [&](TabId t, int o, int pl) {
        for (int l = 0; l < pl; ++l)
            for (int a = 0; a < pl; ++a)
                for (int x = 0; x < M.p(); ++x) {
                    if (!R.next()) return false;
                    const TabId tl = M.shift(t, l * o), ta = M.shift(t, a * o), tal = M.shift(t, (a + l) * o);
                    const CycloRational lhs = C.G.h_t(t, l) * g(t) * g(M.mk(tl, a * o + x)) / (g(M.mk(t, a * o + x)) * g(tl));
                    const CycloRational rhs = C.G.h_tx(t, a * o, l) * g(ta) * g(M.mk(tal, x)) / (g(M.mk(ta, x)) * g(tal));
                    if (!expect_eq(R, lhs, rhs, [&] { return Json{{"t", C.tab(t)}, {"l", l}, {"a", a}, {"x", x}}; })) return false;
                }
        return true;
    });
}

inline void square_roots2(const SuiteContext& C, Recorder& R) {
    const auto& M = C.M;
    for_entry_one(C, [&](TabId t, int o, int pl) {
        for (int x = 0; x < M.p(); ++x)
            for (int l = 0; l <= pl; ++l) {
                if (!R.next()) return false;
                const CycloRational h = C.G.h_tx(t, x, l);
                if (!expect_eq(R, h * h, M.gamma(M.shift(t, x + l * o)) / M.gamma(M.shift(t, x)),
                               [&] { return Json{{"t", C.tab(t)}, {"x", x}, {"l", l}}; }))
                    return false;
            }
        return true;
    });
}

inline void htklx(const SuiteContext& C, Recorder& R) {
    const auto& M = C.M;
    for_entry_one(C, [&](TabId t, int o, int pl) {
        for (int x = 0; x < M.p(); ++x)
            for (int l1 = 0; l1 < pl; ++l1)
                for (int l2 = 0; l2 < pl; ++l2) {
                    if (!R.next()) return false;
                    const CycloRational rhs = C.G.h_tx(t, x, l1) * C.G.h_tx(t, x + l1 * o, l2);
                    if (!expect_eq(R, C.G.h_tx(t, x, l1 + l2), rhs,
                                   [&] { return Json{{"t", C.tab(t)}, {"x", x}, {"l1", l1}, {"l2", l2}}; }))
                        return false;
                }
        return true;
    });
}

// --- G(r,p,n) basis and centers ------------------------------------------------

inline void Astij(const SuiteContext& C, Recorder& R) {
    const auto& M = C.M;
    const auto& G = C.G;
    auto g = [&](TabId t) -> const CycloRational& { return M.gamma(t); };
    for (int b : G.class_representatives()) {
        const int o = G.o(b), pl = G.p_lambda(b);
        const TabId init{b, 0};
        for (int si = 0; si < M.dim(b); ++si)
            for (int ti = 0; ti < M.dim(b); ++ti) {
                const TabId s{b, si}, t{b, ti};
                const bool e1 = G.entry_one_condition(s);
                for (int i = 0; i < pl; ++i)
                    for (int j = 0; j < M.p(); ++j) {
                        if (!R.next()) return;
                        auto ctx = [&](const char* id) {
                            return [&, id] { return Json{{"identity", id}, {"s", C.tab(s)}, {"t", C.tab(t)}, {"i", i}, {"j", j}}; };
                        };
                        const TabId si_ = M.shift(s, i * o), initj = M.shift(init, j);
                        const CycloRational A = G.A(s, t, i, j);
                        const CycloRational hinv = G.h_general(s, i).inverse();
                        const CycloRational form1 = hinv * g(init) / g(initj) * g(si_) * g(t) / (g(M.mk(si_, j)) * g(M.mk(t, j)));
                        const CycloRational form2 =
                            hinv * g(initj) / g(init) * g(M.mk(si_, j)) * g(M.mk(t, j)) / (g(M.shift(s, i * o + j)) * g(M.shift(t, j)));
                        if (!expect_eq(R, A, form1, ctx("definition"))) return;
                        if (!expect_eq(R, A, form2, ctx("shifted gamma form"))) return;
                        if (!expect_eq(R, A, hinv * G.R(si_, t, j), ctx("R form"))) return;
                        if (!expect_eq(R, A * A, g(s) * g(t) / (g(M.shift(s, i * o + j)) * g(M.shift(t, j))), ctx("square")))
                            return;
                        if (e1) {
                            const CycloRational hsj = G.h_tx(s, j, i).inverse();
                            if (!expect_eq(R, A, hsj * g(init) / g(initj) * g(s) * g(t) / (g(M.mk(s, j)) * g(M.mk(t, j))),
                                           ctx("entry-one definition form")))
                                return;
                            if (!expect_eq(R, A, hsj * g(initj) / g(init) * g(M.mk(s, j)) * g(M.mk(t, j)) / (g(M.shift(s, j)) * g(M.shift(t, j))),
                                           ctx("entry-one shifted form")))
                                return;
                            if (!expect_eq(R, A, hsj * G.R(s, t, j), ctx("entry-one R form"))) return;
                        }
                        if (i == 0 && j == 0 && !expect_eq(R, A, CycloRational(1), ctx("A_{0,0} = 1"))) return;
                        if (!expect_eq(R, G.A(s, t, i, mod(j + 1, M.p())), A * G.R(M.shift(s, i * o + j), M.shift(t, j), 1),
                                       ctx("A_{i,j+1} = A_{i,j} R_{s<io+j> t<j>,1}")))
                            return;
                    }
            }
    }
}

inline void orth(const SuiteContext& C, Recorder& R) {
    const auto& M = C.M;
    const auto& G = C.G;
    const auto basis = G.basis();
    std::vector<BlockMatrix> blocks;
    for (const auto& e : basis) blocks.push_back(M.to_block(e.value));
    for (std::size_t a = 0; a < basis.size(); ++a)
        for (std::size_t c = 0; c < basis.size(); ++c) {
            if (!R.next()) return;
            const auto& x = basis[a].label;
            const auto& y = basis[c].label;
            const FElement prod = M.multiply(basis[a].value, basis[c].value);
            FElement expected;
            if (x.s.shape == y.s.shape && x.t == y.s && x.k == y.k)
                expected = G.f_k(x.s, y.t, x.k).scaled(CycloRational(G.p_lambda(x.s.shape)) * M.gamma(x.t));
            auto ctx = [&] {
                return Json{{"left", {{"s", C.tab(x.s)}, {"t", C.tab(x.t)}, {"k", x.k}}},
                            {"right", {{"s", C.tab(y.s)}, {"t", C.tab(y.t)}, {"k", y.k}}}};
            };
            if (!expect_eq(R, prod, expected, ctx)) return;
            if (!expect_eq(R, blocks[a] * blocks[c], M.to_block(prod), ctx)) return;
        }
}

inline void mainthm3(const SuiteContext& C, Recorder& R) {
    const auto& M = C.M;
    const auto basis = C.G.basis();
    std::vector<std::vector<CycloRational>> cols;
    bool complete = true;
    for (const auto& e : basis) {
        if (!R.next()) {
            complete = false;
            break;
        }
        const BlockMatrix x = M.to_block(e.value);
        if (!expect_eq(R, C.W->sigma(x), x, [&] {
                return Json{{"identity", "sigma-fixed"}, {"s", C.tab(e.label.s)}, {"t", C.tab(e.label.t)}, {"k", e.label.k}};
            }))
            return;
        cols.push_back(x.flatten());
    }
    if (!complete || !R.next()) return;
    const DimAudit audit = dim_audit(M);
    if (!expect_eq(R, static_cast<long>(basis.size()), audit.dim_hrpn, [] { return Json{{"identity", "|basis| = r^n n!/p"}}; }))
        return;
    Matrix m(cols.empty() ? 0 : cols[0].size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < cols[j].size(); ++i) m(i, j) = cols[j][i];
    expect_eq(R, rank(std::move(m)), basis.size(), [] { return Json{{"identity", "basis elements linearly independent"}}; });
}

inline void mainthm4(const SuiteContext& C, Recorder& R) {
    const auto& M = C.M;
    const auto& G = C.G;
    const auto ids = G.central_idempotents();
    const auto gens = M.fixed_subalgebra_generators();
    const auto basis = G.basis();
    std::vector<BlockMatrix> blocks;
    BlockMatrix sum = M.zero();
    for (const auto& e : ids) {
        blocks.push_back(M.to_block(e.value));
        sum = sum + blocks.back();
    }
    auto id_ctx = [&](std::size_t a) { return Json{{"shape", to_json(M.shape(ids[a].shape))}, {"k", ids[a].k}}; };
    if (!R.next()) return;
    if (!expect_eq(R, sum, M.identity(), [] { return Json{{"identity", "sum of central idempotents = 1"}}; })) return;
    if (!R.next()) return;
    if (!expect_eq(R, static_cast<long>(ids.size()), dim_audit(M).num_central_idempotents,
                   [] { return Json{{"identity", "count = sum over classes of p_lam"}}; }))
        return;
    for (std::size_t a = 0; a < ids.size(); ++a) {
        if (!R.next()) return;
        auto ctx = [&](const char* id) {
            return [&, id] {
                Json j = id_ctx(a);
                j["identity"] = id;
                return j;
            };
        };
        if (!expect_eq(R, M.multiply(ids[a].value, ids[a].value), ids[a].value, ctx("idempotent"))) return;
        if (!expect_eq(R, blocks[a] * blocks[a], blocks[a], ctx("idempotent (matrices)"))) return;
        if (!expect_eq(R, C.W->sigma(blocks[a]), blocks[a], ctx("sigma-fixed"))) return;
        for (std::size_t gi = 0; gi < gens.size(); ++gi)
            if (!expect_eq(R, commutator(blocks[a], gens[gi]), M.zero(), [&] {
                    Json j = id_ctx(a);
                    j["identity"] = "commutes with generator";
                    j["generator"] = gi;
                    return j;
                }))
                return;
        for (std::size_t c = 0; c < ids.size(); ++c) {
            if (c == a) continue;
            if (!R.next()) return;
            if (!expect_eq(R, blocks[a] * blocks[c], M.zero(), [&] {
                    Json j = id_ctx(a);
                    j["identity"] = "orthogonal";
                    j["other"] = id_ctx(c);
                    return j;
                }))
                return;
        }
        for (const auto& e : basis) {
            if (!R.next()) return;
            const bool inside = e.label.s.shape == ids[a].shape && e.label.k == ids[a].k;
            if (!expect_eq(R, M.multiply(ids[a].value, e.value), inside ? e.value : FElement{}, [&] {
                    Json j = id_ctx(a);
                    j["identity"] = "acts as identity on its matrix block, zero elsewhere";
                    j["basis"] = {{"s", C.tab(e.label.s)}, {"t", C.tab(e.label.t)}, {"k", e.label.k}};
                    return j;
                }))
                return;
        }
    }
}

inline bool satisfies_twisted(const SeminormalModel& M, const BlockMatrix& z, int k) {
    if (z * M.T(0) != M.T(0) * z * M.params().eps_power(k)) return false;
    for (int i = 1; i < M.n(); ++i)
        if (z * M.T(i) != M.T(i) * z) return false;
    return true;
}

inline void mainthm5(const SuiteContext& C, Recorder& R) {
    const auto& M = C.M;
    for (int k = 0; k < M.p(); ++k) {
        const auto basis = C.G.twisted_center_basis(k);
        long expected = 0;
        for (int b = 0; b < M.num_shapes(); ++b)
            if (k % C.G.o(b) == 0) ++expected;
        if (!R.next()) return;
        if (!expect_eq(R, static_cast<long>(basis.size()), expected, [&] {
                return Json{{"identity", "count = #{lam : o_lam | k}"}, {"k", k}};
            }))
            return;
        for (const auto& z : basis) {
            if (!R.next()) return;
            const BlockMatrix m = M.to_block(z.value);
            auto ctx = [&](const char* id) {
                return [&, id] { return Json{{"identity", id}, {"shape", to_json(M.shape(z.shape))}, {"k", k}}; };
            };
            if (!R.expect(!m.is_zero(), ctx("nonzero"))) return;
            if (!R.expect(satisfies_twisted(M, m, k), ctx("z T_0 = eps^k T_0 z and z T_i = T_i z"))) return;
            if (k == 0) {
                BlockMatrix unit = M.zero();
                unit.block(static_cast<std::size_t>(z.shape)) = Matrix::identity(static_cast<std::size_t>(M.dim(z.shape)));
                if (!expect_eq(R, m, unit, ctx("F_{lam,0} is the block identity"))) return;
            }
        }
    }
}

inline void centerdim(const SuiteContext& C, Recorder& R) {
    const auto& M = C.M;
    const auto brute = brute_force_center_dims(M);
    for (int k = 0; k < M.p(); ++k) {
        if (!R.next()) return;
        long expected = 0;
        for (int b = 0; b < M.num_shapes(); ++b)
            if (k % C.G.o(b) == 0) ++expected;
        if (!expect_eq(R, static_cast<long>(brute.at(k)), expected, [&] {
                return Json{{"identity", "nullspace dimension = #{lam : o_lam | k}"}, {"k", k}};
            }))
            return;
        if (!expect_eq(R, static_cast<long>(C.G.twisted_center_basis(k).size()), expected, [&] {
                return Json{{"identity", "constructed basis size = #{lam : o_lam | k}"}, {"k", k}};
            }))
            return;
    }
}

/// Coordinates of y in the span of cols, if it lies there.
inline std::optional<std::vector<CycloRational>> span_coordinates(const std::vector<std::vector<CycloRational>>& cols,
                                                                  const std::vector<CycloRational>& y) {
    const std::size_t rows = y.size(), n = cols.size();
    Matrix aug(rows, n + 1);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < rows; ++i) aug(i, j) = cols[j][i];
    for (std::size_t i = 0; i < rows; ++i) aug(i, n) = y[i];
    const auto piv = rref(aug);
    std::vector<CycloRational> x(n);
    for (std::size_t r = 0; r < piv.size(); ++r) {
        if (piv[r] == n) return std::nullopt;
        x[piv[r]] = aug(r, n);
    }
    return x;
}

inline void weightdecomp(const SuiteContext& C, Recorder& R) {
    const auto& M = C.M;
    const int p = M.p();
    std::vector<std::vector<CycloRational>> grpn_cols;
    for (const auto& e : C.G.basis()) grpn_cols.push_back(M.to_block(e.value).flatten());
    const BlockMatrix t0inv = M.T0_inverse();
    for (int k = 0; k < p; ++k) {
        const auto Z = twisted_center_nullspace(M, k);
        const std::size_t D = Z.size();
        std::vector<std::vector<CycloRational>> zcols;
        for (const auto& z : Z) zcols.push_back(z.flatten());
        Matrix S(D, D);
        for (std::size_t j = 0; j < D; ++j) {
            if (!R.next()) return;
            auto coords = span_coordinates(zcols, C.W->sigma(Z[j]).flatten());
            if (!R.expect(coords.has_value(), [&] {
                    return Json{{"identity", "sigma preserves the twisted center"}, {"k", k}, {"element", value_json(Z[j])}};
                }))
                return;
            for (std::size_t i = 0; i < D; ++i) S(i, j) = (*coords)[i];
        }
        std::size_t total = 0;
        for (int l = 0; l < p; ++l) {
            Matrix shifted = S - Matrix::identity(D) * M.params().eps_power(l);
            const auto eig = nullspace(std::move(shifted));
            total += eig.size();
            BlockMatrix t0l_inv = M.identity();
            for (int e = 0; e < l; ++e) t0l_inv = t0l_inv * t0inv;
            for (const auto& v : eig) {
                if (!R.next()) return;
                BlockMatrix z = M.zero();
                for (std::size_t j = 0; j < D; ++j)
                    if (!v[j].is_zero()) z = z + Z[j] * v[j];
                const BlockMatrix u = z * t0l_inv;
                auto ctx = [&](const char* id) { return [&, id] { return Json{{"identity", id}, {"k", k}, {"l", l}, {"u", value_json(u)}}; }; };
                if (!expect_eq(R, C.W->sigma(u), u, ctx("slice element is sigma-fixed"))) return;
                if (!R.expect(span_coordinates(grpn_cols, u.flatten()).has_value(), ctx("slice element lies in the f^{[k]} span")))
                    return;
                if (!R.expect(satisfies_twisted(M, z, k), ctx("u T_0^l in the twisted center"))) return;
            }
        }
        if (!R.next()) return;
        if (!expect_eq(R, total, D, [&] { return Json{{"identity", "slice dimensions sum to dim Z^{(k)}"}, {"k", k}}; })) return;
    }
}

// --- oracle and audit ----------------------------------------------------------

inline constexpr unsigned oracle_seed = 20240611u;
inline constexpr int oracle_samples = 50;

/// Block matrix with small random entries in every coordinate of Q(eps).
inline BlockMatrix random_element(const SeminormalModel& M, std::mt19937& rng) {
    std::uniform_int_distribution<int> coin(0, 2), coef(-4, 4), den(1, 3);
    BlockMatrix x = M.zero();
    const std::size_t deg = M.field().degree();
    for (std::size_t b = 0; b < x.num_blocks(); ++b) {
        Matrix& m = x.block(b);
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) {
                if (coin(rng) == 0) continue;
                std::vector<mpq_class> cs(deg);
                for (auto& c : cs) {
                    c = mpq_class(coef(rng), den(rng));
                    c.canonicalize();
                }
                m(i, j) = CycloRational(M.field(), cs);
            }
    }
    return x;
}

inline void wordbasis(const SuiteContext& C, Recorder& R) {
    const auto& M = C.M;
    const auto& W = *C.W;
    std::mt19937 rng(oracle_seed);
    std::vector<BlockMatrix> xs;
    for (int s = 0; s < oracle_samples; ++s) xs.push_back(random_element(M, rng));
    for (int s = 0; s < oracle_samples; ++s) {
        if (!R.next()) return;
        const BlockMatrix& x = xs[static_cast<std::size_t>(s)];
        auto ctx = [&](const char* id) { return [&, id] { return Json{{"identity", id}, {"sample", s}, {"x", value_json(x)}}; }; };
        if (!expect_eq(R, W.reconstruct(W.expand(x)), x, ctx("expand then reassemble"))) return;
        BlockMatrix y = x;
        for (int k = 0; k < M.p(); ++k) y = W.sigma(y);
        if (!expect_eq(R, y, x, ctx("sigma^p = id"))) return;
        if (!expect_eq(R, W.star(W.star(x)), x, ctx("** = id"))) return;
        const BlockMatrix& x2 = xs[static_cast<std::size_t>((s + 1) % oracle_samples)];
        if (s < 5) {
            if (!expect_eq(R, W.sigma(x * x2), W.sigma(x) * W.sigma(x2), ctx("sigma multiplicative"))) return;
            if (!expect_eq(R, W.star(x * x2), W.star(x2) * W.star(x), ctx("* anti-multiplicative"))) return;
        }
    }
    if (!R.next()) return;
    if (!expect_eq(R, W.sigma(M.T(0)), M.T(0) * M.params().eps_power(1), [] { return Json{{"identity", "sigma(T_0) = eps T_0"}}; }))
        return;
    for (int i = 1; i < M.n(); ++i) {
        if (!R.next()) return;
        if (!expect_eq(R, W.sigma(M.T(i)), M.T(i), [&] { return Json{{"identity", "sigma(T_i) = T_i"}, {"i", i}}; })) return;
        if (!expect_eq(R, W.star(M.T(i)), M.T(i), [&] { return Json{{"identity", "T_i^* = T_i"}, {"i", i}}; })) return;
    }
    if (!R.next()) return;
    for (const auto& g : M.fixed_subalgebra_generators())
        if (!expect_eq(R, W.sigma(g), g, [] { return Json{{"identity", "generators of the fixed subalgebra are sigma-fixed"}}; }))
            return;
}

inline void dims(const SuiteContext& C, Recorder& R) {
    if (!R.next()) return;
    const DimAudit a = dim_audit(C.M);
    R.expect(a.ok(), [&] { return to_json(a); });
}

}  // namespace checks

/// Every check in report order.
inline const std::vector<CheckSpec>& check_registry() {
    static const std::vector<CheckSpec> reg = {
        {"relations", "generator matrices satisfy the cyclotomic, quadratic, braid and commutation relations; L_k acts diagonally by residues", false, checks::relations},
        {"tiact", "f_us T_0 = res_s(1) f_us; f_us T_i = A_i(s) f_us + B_i(s) f_{u s(i,i+1)}, or q f_us / -f_us when s(i,i+1) is not standard", false, checks::tiact},
        {"GammaCoeffi", "f_uv f_st = delta_vs gamma_s f_ut for the Phi-constructed f_st", false, checks::gamma_coeffi},
        {"gammacoeff", "gamma_t is path independent, gamma_{t(i,i+1)} = B_i gamma_t below t, and (f_st)^* = f_ts under the word-basis anti-involution", true, checks::gammacoeff},
        {"dist", "distinct standard tableaux have distinct residue sequences", false, checks::dist},
        {"Ft", "F_t = f_tt / gamma_t, F_s F_t = delta_st F_t and sum_t F_t = 1", false, checks::Ft},
        {"sigmaFt", "sigma(F_t) = F_{t<1>}", true, checks::sigmaFt},
        {"recursiveA", "F_{t^lam} Phi_s = F_{t^lam} Phi_t (T_i - A_i(t)) for s = t(i,i+1) below t; Phi_s^* f_{t^lam t^lam} Phi_t = gamma_s E_st", false, checks::recursiveA},
        {"gtsft", "m_k(t) dominates t and gamma_t/gamma_{t<k>} equals both gamma-square expressions through m_k(t)", false, checks::gtsft},
        {"snphit", "r_{t,k} and R_{st,k} alternative gamma expressions; f_{t^lam<k> t^lam<k>} Phi_t = r_{t,k} f_{t^lam<k> t<k>}", false, checks::snphit},
        {"sigmafst", "sigma^k(f_st) = R_{st,k} f_{s<k> t<k>} for 1 <= k <= p", true, checks::sigmafst},
        {"propRstk", "R_{st,k}^2 gamma law, composition law over compositions of k, and the lcm(k,p)/k cyclic product equals 1", false, checks::propRstk},
        {"mainthm1", "r_{t,lo} r_{t<lo>,ko} = r_{t,ko} r_{t<ko>,lo}", false, checks::mainthm1},
        {"claim1", "gamma_{m_{ko}(t^lam<lo>)}/gamma_{t^lam<lo>} = gamma_{m_{lo}(t^lam<ko>)}/gamma_{t^lam<ko>}", false, checks::claim1},
        {"squareProp", "h_lam^2 = gamma_{t^lam<o>}/gamma_{t^lam}", false, checks::squareProp},
        {"prophlam", "closed form of h_{lam,l1,l2} matches its recursion and squares to gamma_{t^lam<(l1+l2)o>}/gamma_{t^lam<l1 o>}", false, checks::prophlam},
        {"sqhlam", "h_{lam,0,p_lam} = 1", false, checks::sqhlam},
        {"congruence", "h_{lam,l1,l2} depends on l1, l2 only mod p_lam", false, checks::congruence},
        {"hlaml1l2", "h_{lam,0,l1+l2} = h_{lam,0,l1} h_{lam,l1,l2}", false, checks::hlaml1l2},
        {"hlamQuo", "h_{lam,l1,l2}/h_{lam,0,l2} = gamma_{m_{l2 o}(t^lam<l1 o>)}/gamma_{t^lam<l1 o>}", false, checks::hlamQuo},
        {"plamht", "h_{t<lo>}^{<p_lam>} = 1", false, checks::plamht},
        {"squareht", "(h_{t<l1 o>}^{<l2>})^2 = gamma_{t<(l1+l2)o>}/gamma_{t<l1 o>}", false, checks::squareht},
        {"htkl", "h_t^{<l1+l2>} = h_t^{<l1>} h_{t<l1 o>}^{<l2>}", false, checks::htkl},
        {"CompatibleEnsure", "h_{t,x}^{<l>} is well defined under x -> x + ao", false, checks::compatible_ensure},
        {"SquareRoots2", "(h_{t,x}^{<l>})^2 = gamma_{t<x+lo>}/gamma_{t<x>}", false, checks::square_roots2},
        {"htklx", "h_{t,x}^{<l1+l2>} = h_{t,x}^{<l1>} h_{t,x+l1 o}^{<l2>}", false, checks::htklx},
        {"Astij", "the equivalent expressions of A_{i,j}^{st} agree, its square is a gamma quotient, A_{0,0} = 1 and A_{i,j+1} = A_{i,j} R_{s<io+j> t<j>,1}", false, checks::Astij},
        {"orth", "f_st^{[k]} f_uv^{[l]} = delta_tu delta_kl p_lam gamma_t f_sv^{[k]}", false, checks::orth},
        {"mainthm3", "every f_st^{[k]} is sigma-fixed; there are r^n n!/p of them and they are linearly independent", true, checks::mainthm3},
        {"mainthm4", "F_lam^{[k]} are idempotent, orthogonal, sum to 1, sigma-fixed, central in the fixed subalgebra and primitive", true, checks::mainthm4},
        {"mainthm5", "F_{lam,k} satisfy z T_0 = eps^k T_0 z, z T_i = T_i z; F_{lam,0} is the block identity; count #{lam : o_lam | k}", false, checks::mainthm5},
        {"centerdim", "nullspace dimension of the twisted-centralizer system equals #{lam : o_lam | k}", false, checks::centerdim},
        {"weightdecomp", "Z^{(k)} splits into sigma-eigenspaces u T_0^l with u sigma-fixed and in the f^{[k]} span", true, checks::weightdecomp},
        {"wordbasis", "word-basis expand/reassemble is the identity; sigma^p = id; sigma and * respect products", true, checks::wordbasis},
        {"dims", "sum #Std(lam)^2 = r^n n!; sum over classes of #Std^2/p_lam = r^n n!/p = number of f^{[k]} labels", false, checks::dims},
    };
    return reg;
}

/// Canonical check name for a scope entry; aliases map to their check.
inline std::string canonical_check_name(const std::string& name) {
    if (name == "maincor") return "mainthm4";
    return name;
}

class UnknownCheck : public std::invalid_argument {
public:
    explicit UnknownCheck(const std::string& name) : std::invalid_argument("unknown check: " + name) {}
};

inline std::vector<const CheckSpec*> select_checks(const std::vector<std::string>& scope) {
    const auto& reg = check_registry();
    if (scope.empty()) {
        std::vector<const CheckSpec*> out;
        for (const auto& c : reg) out.push_back(&c);
        return out;
    }
    std::set<std::string> wanted;
    for (const auto& s : scope) {
        const std::string c = canonical_check_name(s);
        if (std::none_of(reg.begin(), reg.end(), [&](const CheckSpec& x) { return x.name == c; })) throw UnknownCheck(s);
        wanted.insert(c);
    }
    std::vector<const CheckSpec*> out;
    for (const auto& c : reg)
        if (wanted.count(c.name)) out.push_back(&c);
    return out;
}

struct SuiteOptions {
    std::vector<std::string> scope;  // empty: every check
    Mutation mutation = Mutation::none;
    std::size_t max_dim = default_max_dim;
    unsigned jobs = 0;  // 0: hardware concurrency
    std::size_t sample_limit = 200;  // tuples per check once n >= 4
    bool timing = false;
};

struct Report {
    HeckeParams params;
    Mutation mutation = Mutation::none;
    std::vector<CheckResult> checks;

    bool all_passed() const {
        return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == CheckStatus::fail; });
    }
    const CheckResult* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }

    Json to_json(bool timing = false) const {
        Json cs = Json::array();
        for (const auto& c : checks) {
            Json j{{"name", c.name},
                   {"statement", c.statement},
                   {"status", std::string(to_string(c.status))},
                   {"coverage", c.sampled ? "sampled" : "exhaustive"},
                   {"instances", c.instances},
                   {"counterexample", c.counterexample}};
            if (!c.note.empty()) j["note"] = c.note;
            if (timing) j["seconds"] = c.seconds;
            cs.push_back(std::move(j));
        }
        return Json{{"schema_version", schema_version},
                    {"grid", {{"r", params.r}, {"p", params.p}, {"n", params.n}}},
                    {"params", params_json(params)},
                    {"mutation", std::string(to_string(mutation))},
                    {"checks", cs},
                    {"all_passed", all_passed()}};
    }

    std::string to_csv(bool timing = false) const {
        std::ostringstream os;
        os << "name,status,coverage,instances" << (timing ? ",seconds" : "") << "\n";
        for (const auto& c : checks) {
            os << c.name << ',' << to_string(c.status) << ',' << (c.sampled ? "sampled" : "exhaustive") << ',' << c.instances;
            if (timing) os << ',' << c.seconds;
            os << "\n";
        }
        return os.str();
    }
};

/// Runs the selected checks on a work queue; results keep registry order.
inline Report run_suite(const HeckeParams& params, const SuiteOptions& opt = {}) {
    const auto selected = select_checks(opt.scope);
    const SeminormalModel M(params, opt.mutation);
    std::unique_ptr<WordBasis> W;
    if (std::any_of(selected.begin(), selected.end(), [](const CheckSpec* c) { return c->oracle; }))
        W = std::make_unique<WordBasis>(M, opt.max_dim);
    const std::size_t limit = params.n >= 4 ? opt.sample_limit : std::numeric_limits<std::size_t>::max();
    const SuiteContext ctx(M, W.get(), limit);

    Report rep{params, opt.mutation, std::vector<CheckResult>(selected.size())};
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < selected.size(); i = next++) {
            const CheckSpec& spec = *selected[i];
            CheckResult res;
            res.name = spec.name;
            res.statement = spec.statement;
            Recorder rec(limit);
            const auto start = std::chrono::steady_clock::now();
            try {
                spec.run(ctx, rec);
            } catch (const std::exception& e) {
                rec.fail_with(Json{{"exception", e.what()}});
            }
            res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            res.instances = rec.count();
            res.sampled = rec.sampled();
            if (rec.failed()) {
                res.status = CheckStatus::fail;
                res.counterexample = rec.counterexample();
            } else if (rec.count() == 0) {
                res.status = CheckStatus::skipped;
                res.note = "no admissible instances at this grid point";
            }
            rep.checks[i] = std::move(res);
        }
    };
    unsigned jobs = opt.jobs ? opt.jobs : std::max(1u, std::thread::hardware_concurrency());
    jobs = std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(1, selected.size())));
    std::vector<std::thread> pool;
    for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return rep;
}

/// Outcome of running the suite under one seeded corruption.
struct MutationOutcome {
    Mutation mutation;
    bool detected = false;
    std::vector<std::string> failing_checks;
    std::string construction_error;  // non-empty when the corrupted model is rejected outright
};

/// Runs the suite at each point under the mutation until some check fails.
inline MutationOutcome detect_mutation(Mutation m, const std::vector<HeckeParams>& points, const SuiteOptions& base = {}) {
    MutationOutcome out;
    out.mutation = m;
    for (const auto& P : points) {
        SuiteOptions opt = base;
        opt.mutation = m;
        try {
            const Report rep = run_suite(P, opt);
            for (const auto& c : rep.checks)
                if (c.status == CheckStatus::fail)
                    out.failing_checks.push_back("(" + std::to_string(P.r) + "," + std::to_string(P.p) + "," + std::to_string(P.n) + ") " + c.name);
        } catch (const std::logic_error& e) {
            out.construction_error = e.what();
            out.detected = true;
        }
        if (!out.failing_checks.empty()) out.detected = true;
        if (out.detected) break;
    }
    return out;
}

}  // namespace hecke
