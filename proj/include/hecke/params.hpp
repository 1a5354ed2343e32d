#pragma once

#include "cyclotomic.hpp"

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hecke {

/// Vanishing factor of the semisimplicity product.
struct SemisimplicityWitness {
    std::string kind;        // "q-integer", "cross-parameter", "twisted-parameter", "degenerate"
    std::string expression;  // human-readable factor
    int i = 0, j = 0, t = 0, k = 0;
};

struct SemisimplicityResult {
    bool semisimple = true;
    std::optional<SemisimplicityWitness> witness;
};

class ParameterError : public std::invalid_argument {
public:
    ParameterError(const std::string& what, std::optional<SemisimplicityWitness> w = std::nullopt)
        : std::invalid_argument(what), witness(std::move(w)) {}
    std::optional<SemisimplicityWitness> witness;
};

/// Grid point (r, p, n) with d = r/p together with q and Q_1..Q_d.
struct HeckeParams {
    int r = 1, p = 1, n = 1;
    mpq_class q = 2;
    std::vector<mpq_class> Q;

    int d() const { return r / p; }
    const CycloField& field() const { return CycloField::get(p); }

    /// eps^t with t taken mod p.
    CycloRational eps_power(long t) const { return CycloRational::eps_power(field(), t); }

    /// Parameter attached to component c (1-based): eps^s Q_i where c = i + (s-1)d.
    CycloRational component_parameter(int c) const {
        const int i = (c - 1) % d() + 1;
        const int s = (c - 1) / d() + 1;
        return eps_power(s) * CycloRational(Q[static_cast<std::size_t>(i - 1)]);
    }

    void validate_shape() const {
        if (r < 1 || p < 1 || n < 0) throw ParameterError("r, p must be positive and n non-negative");
        if (r % p != 0) throw ParameterError("p must divide r");
        if (static_cast<int>(Q.size()) != d()) throw ParameterError("expected d = r/p values of Q");
    }
};

inline std::string rational_str(const mpq_class& x) { return x.get_str(); }

/// Evaluates every factor of the semisimplicity product and reports the first one that vanishes.
inline SemisimplicityResult check_semisimple(const HeckeParams& P) {
    P.validate_shape();
    SemisimplicityResult res;
    auto fail = [&](SemisimplicityWitness w) {
        res.semisimple = false;
        res.witness = std::move(w);
        return res;
    };
    if (P.q == 0) return fail({"degenerate", "q = 0", 0, 0, 0, 0});
    for (int c = 0; c < P.d(); ++c)
        if (P.Q[static_cast<std::size_t>(c)] == 0)
            return fail({"degenerate", "Q_" + std::to_string(c + 1) + " = 0", c + 1, 0, 0, 0});
    if (P.q == 1) return fail({"q-integer", "q - 1 (q-integers collapse to integers; residues do not separate)", 0, 0, 0, 0});

    for (int i = 1; i <= P.n; ++i) {
        mpq_class s = 0, qp = 1;
        for (int e = 0; e < i; ++e) {
            s += qp;
            qp *= P.q;
        }
        if (s == 0) return fail({"q-integer", "1 + q + ... + q^" + std::to_string(i - 1), i, 0, 0, 0});
    }
    const CycloField& F = P.field();
    auto qpow = [&](int k) {
        mpq_class v = 1;
        for (int e = 0; e < (k < 0 ? -k : k); ++e) v *= P.q;
        return k < 0 ? mpq_class(1 / v) : v;
    };
    for (int k = -P.n + 1; k < P.n; ++k) {
        for (int i = 1; i <= P.d(); ++i)
            for (int j = i + 1; j <= P.d(); ++j)
                for (int t = 0; t < P.p; ++t) {
                    CycloRational f = CycloRational(F, P.Q[static_cast<std::size_t>(i - 1)]) -
                                      P.eps_power(t) * CycloRational(qpow(k) * P.Q[static_cast<std::size_t>(j - 1)]);
                    if (f.is_zero())
                        return fail({"cross-parameter",
                                     "Q_" + std::to_string(i) + " - eps^" + std::to_string(t) + " q^" + std::to_string(k) +
                                         " Q_" + std::to_string(j),
                                     i, j, t, k});
                }
    }
    for (int k = -P.n + 1; k < P.n; ++k)
        for (int i = 1; i <= P.d(); ++i)
            for (int t = 1; t < P.p; ++t) {
                CycloRational f = CycloRational(P.Q[static_cast<std::size_t>(i - 1)]) *
                                  (CycloRational(F, 1) - P.eps_power(t) * CycloRational(qpow(k)));
                if (f.is_zero())
                    return fail({"twisted-parameter",
                                 "Q_" + std::to_string(i) + " (1 - eps^" + std::to_string(t) + " q^" + std::to_string(k) + ")",
                                 i, 0, t, k});
            }
    return res;
}

/// Throws ParameterError carrying the witness when the point is not semisimple.
inline void require_semisimple(const HeckeParams& P) {
    auto res = check_semisimple(P);
    if (!res.semisimple)
        throw ParameterError("parameters are not semisimple: factor " + res.witness->expression + " vanishes", res.witness);
}

namespace detail {
inline bool is_prime(long v) {
    if (v < 2) return false;
    for (long f = 2; f * f <= v; ++f)
        if (v % f == 0) return false;
    return true;
}
inline long next_prime(long v) {
    do ++v;
    while (!is_prime(v));
    return v;
}
}  // namespace detail

/// q = 2 and Q_c = c-th odd prime; on failure the offending Q_c advances along the primes.
inline HeckeParams default_params(int r, int p, int n) {
    HeckeParams P;
    P.r = r;
    P.p = p;
    P.n = n;
    P.q = 2;
    if (r < 1 || p < 1 || r % p != 0) throw ParameterError("p must divide r");
    long prime = 2;
    for (int c = 0; c < P.d(); ++c) {
        prime = detail::next_prime(prime);
        P.Q.emplace_back(prime);
    }
    for (int attempt = 0; attempt < 64; ++attempt) {
        auto res = check_semisimple(P);
        if (res.semisimple) return P;
        const auto& w = *res.witness;
        const int victim = w.j > 0 ? w.j : (w.i > 0 ? w.i : 1);
        long v = P.Q[static_cast<std::size_t>(victim - 1)].get_num().get_si();
        P.Q[static_cast<std::size_t>(victim - 1)] = detail::next_prime(v);
    }
    throw ParameterError("default_params: no semisimple choice found within retry bound");
}

}  // namespace hecke
