#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace hecke {

/// Weakly decreasing positive parts.
using Partition = std::vector<int>;
/// r components; component c (0-based) lies in block c / d.
using Multipartition = std::vector<Partition>;

inline int partition_size(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

inline int multipartition_size(const Multipartition& m) {
    int s = 0;
    for (const auto& p : m) s += partition_size(p);
    return s;
}

inline Partition conjugate(const Partition& p) {
    Partition c;
    if (p.empty()) return c;
    for (int j = 0; j < p.front(); ++j) {
        int len = 0;
        for (int part : p)
            if (part > j) ++len;
        c.push_back(len);
    }
    return c;
}

/// Partitions of m in decreasing lexicographic order: (m), (m-1,1), ..., (1^m).
inline std::vector<Partition> enumerate_partitions(int m) {
    std::vector<Partition> out;
    Partition cur;
    std::function<void(int, int)> rec = [&](int rest, int cap) {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int part = std::min(rest, cap); part >= 1; --part) {
            cur.push_back(part);
            rec(rest - part, part);
            cur.pop_back();
        }
    };
    rec(m, m);
    return out;
}

/// Enumeration order on multipartitions: decreasing lexicographic on the component sequence.
inline bool enum_before(const Multipartition& a, const Multipartition& b) { return a > b; }

/// All r-multipartitions of n in enumeration order; n = 0 yields the single empty multipartition.
inline std::vector<Multipartition> enumerate_multipartitions(int r, int n) {
    if (r < 1 || n < 0) throw std::invalid_argument("enumerate_multipartitions: need r >= 1, n >= 0");
    std::vector<Multipartition> out;
    Multipartition cur(static_cast<std::size_t>(r));
    std::function<void(int, int)> rec = [&](int c, int rest) {
        if (c == r - 1) {
            for (const auto& p : enumerate_partitions(rest)) {
                cur[static_cast<std::size_t>(c)] = p;
                out.push_back(cur);
            }
            return;
        }
        for (int m = rest; m >= 0; --m)
            for (const auto& p : enumerate_partitions(m)) {
                cur[static_cast<std::size_t>(c)] = p;
                rec(c + 1, rest - m);
            }
    };
    rec(0, n);
    std::sort(out.begin(), out.end(), enum_before);
    return out;
}

/// lambda <= mu in dominance (both of the same size and number of components).
inline bool dominance_leq(const Multipartition& lam, const Multipartition& mu) {
    if (lam.size() != mu.size()) throw std::invalid_argument("dominance_leq: component count mismatch");
    long before_l = 0, before_m = 0;
    for (std::size_t s = 0; s < lam.size(); ++s) {
        const std::size_t rows = std::max(lam[s].size(), mu[s].size());
        long acc_l = before_l, acc_m = before_m;
        for (std::size_t i = 0; i < std::max<std::size_t>(rows, 1); ++i) {
            if (i < lam[s].size()) acc_l += lam[s][i];
            if (i < mu[s].size()) acc_m += mu[s][i];
            if (acc_l > acc_m) return false;
        }
        before_l += partition_size(lam[s]);
        before_m += partition_size(mu[s]);
    }
    return true;
}

/// Block t (0-based, width d) of lam.
inline Multipartition block_of(const Multipartition& lam, int t, int d) {
    return Multipartition(lam.begin() + t * d, lam.begin() + (t + 1) * d);
}

/// lam<z>: block j of the result is block j + z of lam (indices mod p).
inline Multipartition shift(const Multipartition& lam, int z, int p) {
    const int r = static_cast<int>(lam.size());
    const int d = r / p;
    Multipartition out(lam.size());
    for (int j = 0; j < p; ++j) {
        const int src = (((j + z) % p) + p) % p;
        for (int i = 0; i < d; ++i) out[static_cast<std::size_t>(j * d + i)] = lam[static_cast<std::size_t>(src * d + i)];
    }
    return out;
}

/// o_lam: least k >= 1 with lam<k> = lam.
inline int orbit_length(const Multipartition& lam, int p) {
    for (int k = 1; k <= p; ++k)
        if (shift(lam, k, p) == lam) return k;
    return p;
}

struct OrbitInvariants {
    int o = 1;         // o_lam
    int p_lambda = 1;  // p / o_lam
};

inline OrbitInvariants orbit_invariants(const Multipartition& lam, int p) {
    OrbitInvariants inv;
    inv.o = orbit_length(lam, p);
    inv.p_lambda = p / inv.o;
    return inv;
}

inline Multipartition sigma_class_representative(const Multipartition& lam, int p) {
    Multipartition best = lam;
    for (int z = 1; z < p; ++z) {
        auto s = shift(lam, z, p);
        if (enum_before(s, best)) best = s;
    }
    return best;
}

/// One representative per sigma-orbit (the earliest member in enumeration order), in enumeration order.
inline std::vector<Multipartition> sigma_class_representatives(int r, int p, int n) {
    std::vector<Multipartition> out;
    for (const auto& lam : enumerate_multipartitions(r, n))
        if (sigma_class_representative(lam, p) == lam) out.push_back(lam);
    return out;
}

/// Permutation of {1..n} acting on the right: img[j-1] = (j)w.
struct Permutation {
    std::vector<int> img;

    static Permutation identity(int n) {
        Permutation w;
        w.img.resize(static_cast<std::size_t>(n));
        std::iota(w.img.begin(), w.img.end(), 1);
        return w;
    }
    static Permutation simple(int n, int i) {
        Permutation w = identity(n);
        std::swap(w.img[static_cast<std::size_t>(i - 1)], w.img[static_cast<std::size_t>(i)]);
        return w;
    }

    int size() const { return static_cast<int>(img.size()); }
    int operator()(int j) const { return img[static_cast<std::size_t>(j - 1)]; }

    /// (j)(u*v) = ((j)u)v.
    friend Permutation operator*(const Permutation& u, const Permutation& v) {
        Permutation w;
        w.img.resize(u.img.size());
        for (std::size_t j = 0; j < u.img.size(); ++j) w.img[j] = v.img[static_cast<std::size_t>(u.img[j] - 1)];
        return w;
    }

    Permutation inverse() const {
        Permutation w;
        w.img.resize(img.size());
        for (std::size_t j = 0; j < img.size(); ++j) w.img[static_cast<std::size_t>(img[j] - 1)] = static_cast<int>(j) + 1;
        return w;
    }

    int length() const {
        int inv = 0;
        for (std::size_t a = 0; a < img.size(); ++a)
            for (std::size_t b = a + 1; b < img.size(); ++b)
                if (img[a] > img[b]) ++inv;
        return inv;
    }

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;
};

/// Product s_{w[0]} s_{w[1]} ... in S_n.
inline Permutation word_to_permutation(int n, const std::vector<int>& word) {
    Permutation w = Permutation::identity(n);
    for (int i : word) w = w * Permutation::simple(n, i);
    return w;
}

/// Reduced word i_1..i_k with w = s_{i_1}...s_{i_k}, peeling the smallest (or largest) descent off the right.
inline std::vector<int> reduced_word(const Permutation& w, bool smallest_first = true) {
    Permutation cur = w;
    const int n = cur.size();
    std::vector<int> rev;
    std::vector<int> pos(static_cast<std::size_t>(n) + 1);
    while (true) {
        for (int j = 0; j < n; ++j) pos[static_cast<std::size_t>(cur.img[static_cast<std::size_t>(j)])] = j;
        int found = 0;
        if (smallest_first) {
            for (int i = 1; i < n && !found; ++i)
                if (pos[static_cast<std::size_t>(i + 1)] < pos[static_cast<std::size_t>(i)]) found = i;
        } else {
            for (int i = n - 1; i >= 1 && !found; --i)
                if (pos[static_cast<std::size_t>(i + 1)] < pos[static_cast<std::size_t>(i)]) found = i;
        }
        if (!found) break;
        std::swap(cur.img[static_cast<std::size_t>(pos[static_cast<std::size_t>(found)])],
                  cur.img[static_cast<std::size_t>(pos[static_cast<std::size_t>(found + 1)])]);
        rev.push_back(found);
    }
    return {rev.rbegin(), rev.rend()};
}

/// All permutations of {1..n} in lexicographic order of images.
inline std::vector<Permutation> enumerate_permutations(int n) {
    std::vector<Permutation> out;
    Permutation w = Permutation::identity(n);
    do out.push_back(w);
    while (std::next_permutation(w.img.begin(), w.img.end()));
    return out;
}

/// w_{a,b}^{<k>}: k+i -> k+b+i (1 <= i <= a), k+a+i -> k+i (1 <= i <= b); identity elsewhere.
inline Permutation block_shift_perm(int n, int a, int b, int k) {
    if (a < 0 || b < 0 || k < 0 || k + a + b > n) throw std::invalid_argument("block_shift_perm: out of range");
    Permutation w = Permutation::identity(n);
    for (int i = 1; i <= a; ++i) w.img[static_cast<std::size_t>(k + i - 1)] = k + b + i;
    for (int i = 1; i <= b; ++i) w.img[static_cast<std::size_t>(k + a + i - 1)] = k + i;
    return w;
}

/// Reduced word (s_{k+a}...s_{k+1})(s_{k+a+1}...s_{k+2})...(s_{k+a+b-1}...s_{k+b}).
inline std::vector<int> block_shift_word(int a, int b, int k) {
    std::vector<int> word;
    for (int g = 0; g < b; ++g)
        for (int i = k + a + g; i >= k + 1 + g; --i) word.push_back(i);
    return word;
}

/// 0-based position of a node: component, row, column.
struct Cell {
    int comp = 0, row = 0, col = 0;
    friend bool operator==(const Cell&, const Cell&) = default;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Standard tableau; pos[k-1] is the node holding k.
struct Tableau {
    Multipartition shape;
    std::vector<Cell> pos;

    int size() const { return static_cast<int>(pos.size()); }
    const Cell& cell(int k) const { return pos[static_cast<std::size_t>(k - 1)]; }

    /// entries[c][row][col].
    std::vector<std::vector<std::vector<int>>> entries() const {
        std::vector<std::vector<std::vector<int>>> e(shape.size());
        for (std::size_t c = 0; c < shape.size(); ++c)
            for (int len : shape[c]) e[c].emplace_back(static_cast<std::size_t>(len), 0);
        for (std::size_t k = 0; k < pos.size(); ++k)
            e[static_cast<std::size_t>(pos[k].comp)][static_cast<std::size_t>(pos[k].row)][static_cast<std::size_t>(pos[k].col)] =
                static_cast<int>(k) + 1;
        return e;
    }

    friend bool operator==(const Tableau&, const Tableau&) = default;
    friend auto operator<=>(const Tableau&, const Tableau&) = default;
};

inline Tableau tableau_from_entries(const Multipartition& shape, const std::vector<std::vector<std::vector<int>>>& e) {
    Tableau t;
    t.shape = shape;
    const int n = multipartition_size(shape);
    t.pos.assign(static_cast<std::size_t>(n), Cell{-1, -1, -1});
    for (std::size_t c = 0; c < e.size(); ++c)
        for (std::size_t r = 0; r < e[c].size(); ++r)
            for (std::size_t b = 0; b < e[c][r].size(); ++b) {
                const int k = e[c][r][b];
                if (k < 1 || k > n) throw std::invalid_argument("tableau entry out of range");
                t.pos[static_cast<std::size_t>(k - 1)] = Cell{static_cast<int>(c), static_cast<int>(r), static_cast<int>(b)};
            }
    return t;
}

inline bool is_standard(const Tableau& t) {
    auto e = t.entries();
    for (const auto& comp : e)
        for (std::size_t r = 0; r < comp.size(); ++r)
            for (std::size_t b = 0; b < comp[r].size(); ++b) {
                if (b + 1 < comp[r].size() && comp[r][b] >= comp[r][b + 1]) return false;
                if (r + 1 < comp.size() && b < comp[r + 1].size() && comp[r][b] >= comp[r + 1][b]) return false;
            }
    return true;
}

/// Shape of the subtableau holding 1..k.
inline Multipartition restricted_shape(const Tableau& t, int k) {
    Multipartition m(t.shape.size());
    for (int j = 1; j <= k; ++j) {
        const Cell& c = t.cell(j);
        auto& part = m[static_cast<std::size_t>(c.comp)];
        if (static_cast<int>(part.size()) <= c.row) part.resize(static_cast<std::size_t>(c.row) + 1, 0);
        ++part[static_cast<std::size_t>(c.row)];
    }
    return m;
}

/// s <= t in the dominance order on tableaux.
inline bool tableau_dominance_leq(const Tableau& s, const Tableau& t) {
    for (int k = 1; k <= s.size(); ++k)
        if (!dominance_leq(restricted_shape(s, k), restricted_shape(t, k))) return false;
    return true;
}

/// t^lam: rows of component 1 first, then component 2, ...
inline Tableau initial_tableau(const Multipartition& lam) {
    Tableau t;
    t.shape = lam;
    for (std::size_t c = 0; c < lam.size(); ++c)
        for (std::size_t r = 0; r < lam[c].size(); ++r)
            for (int b = 0; b < lam[c][r]; ++b) t.pos.push_back(Cell{static_cast<int>(c), static_cast<int>(r), b});
    return t;
}

/// lam' = (lam^{(r)'}, ..., lam^{(1)'}).
inline Multipartition conjugate(const Multipartition& lam) {
    Multipartition out;
    for (auto it = lam.rbegin(); it != lam.rend(); ++it) out.push_back(conjugate(*it));
    return out;
}

inline Tableau conjugate(const Tableau& t) {
    Tableau c;
    c.shape = conjugate(t.shape);
    const int r = static_cast<int>(t.shape.size());
    for (const Cell& x : t.pos) c.pos.push_back(Cell{r - 1 - x.comp, x.col, x.row});
    return c;
}

/// t_lam = (t^{lam'})'.
inline Tableau final_tableau(const Multipartition& lam) { return conjugate(initial_tableau(conjugate(lam))); }

/// Std(lam), t^lam first; entries are placed in order into addable nodes sorted by (component, row).
inline std::vector<Tableau> enumerate_standard_tableaux(const Multipartition& lam) {
    const int n = multipartition_size(lam);
    std::vector<Tableau> out;
    Tableau cur;
    cur.shape = lam;
    std::vector<std::vector<int>> filled(lam.size());
    for (std::size_t c = 0; c < lam.size(); ++c) filled[c].assign(lam[c].size(), 0);
    std::function<void(int)> rec = [&](int k) {
        if (k > n) {
            out.push_back(cur);
            return;
        }
        for (std::size_t c = 0; c < lam.size(); ++c)
            for (std::size_t r = 0; r < lam[c].size(); ++r) {
                const int col = filled[c][r];
                if (col >= lam[c][r]) continue;
                if (r > 0 && filled[c][r - 1] <= col) continue;
                ++filled[c][r];
                cur.pos.push_back(Cell{static_cast<int>(c), static_cast<int>(r), col});
                rec(k + 1);
                cur.pos.pop_back();
                --filled[c][r];
            }
    };
    rec(1);
    return out;
}

/// t<z>: block j of the result carries block j + z of t.
inline Tableau shift(const Tableau& t, int z, int p) {
    const int r = static_cast<int>(t.shape.size());
    const int d = r / p;
    Tableau s;
    s.shape = shift(t.shape, z, p);
    s.pos = t.pos;
    for (Cell& c : s.pos) {
        const int blk = c.comp / d, within = c.comp % d;
        const int nb = (((blk - z) % p) + p) % p;
        c.comp = nb * d + within;
    }
    return s;
}

/// 0-based block containing entry k.
inline int block_of_entry(const Tableau& t, int k, int p) {
    const int d = static_cast<int>(t.shape.size()) / p;
    return t.cell(k).comp / d;
}

/// t * w: entry j is replaced by (j)w.
inline Tableau act(const Tableau& t, const Permutation& w) {
    Tableau s;
    s.shape = t.shape;
    s.pos.resize(t.pos.size());
    for (int j = 1; j <= t.size(); ++j) s.pos[static_cast<std::size_t>(w(j) - 1)] = t.cell(j);
    return s;
}

inline Tableau swap_entries(const Tableau& t, int i) {
    Tableau s = t;
    std::swap(s.pos[static_cast<std::size_t>(i - 1)], s.pos[static_cast<std::size_t>(i)]);
    return s;
}

/// d(t) with t^lam d(t) = t.
inline Permutation tableau_permutation(const Tableau& t) {
    const Tableau init = initial_tableau(t.shape);
    Permutation w = Permutation::identity(t.size());
    for (int k = 1; k <= t.size(); ++k) {
        const Cell& c = t.cell(k);
        for (int j = 1; j <= init.size(); ++j)
            if (init.cell(j) == c) {
                w.img[static_cast<std::size_t>(j - 1)] = k;
                break;
            }
    }
    return w;
}

struct TableauWord {
    Permutation d;
    std::vector<int> word;  // t = t^lam s_{word[0]} s_{word[1]} ...
};

inline TableauWord tableau_word(const Tableau& t, bool smallest_first = true) {
    TableauWord tw;
    tw.d = tableau_permutation(t);
    tw.word = reduced_word(tw.d, smallest_first);
    return tw;
}

/// a_k = |lam^{[1]}| + ... + |lam^{[k]}|.
inline int block_prefix_size(const Multipartition& lam, int k, int p) {
    const int d = static_cast<int>(lam.size()) / p;
    int a = 0;
    for (int c = 0; c < k * d; ++c) a += partition_size(lam[static_cast<std::size_t>(c)]);
    return a;
}

struct CosetFactor {
    Permutation x;  // in the Young subgroup S_{(a, n-a)}
    Permutation d;  // minimal length coset representative
    int a = 0;
};

/// d(t) = x_k d_k with x_k in S_{(a_k, n-a_k)} and d_k distinguished; k is taken mod p.
inline CosetFactor coset_factor(const Tableau& t, int k, int p) {
    const int n = t.size();
    const int kk = ((k % p) + p) % p;
    CosetFactor f;
    f.a = kk == 0 ? n : block_prefix_size(t.shape, kk, p);
    const Permutation w = tableau_permutation(t);
    std::vector<int> lo(w.img.begin(), w.img.begin() + f.a), hi(w.img.begin() + f.a, w.img.end());
    std::sort(lo.begin(), lo.end());
    std::sort(hi.begin(), hi.end());
    f.d.img = lo;
    f.d.img.insert(f.d.img.end(), hi.begin(), hi.end());
    f.x = w * f.d.inverse();
    return f;
}

/// m_k(t) = t^lam x_k.
inline Tableau m_k(const Tableau& t, int k, int p) { return act(initial_tableau(t.shape), coset_factor(t, k, p).x); }

}  // namespace hecke
