#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hecke {

/// Dense polynomial over Q, coefficient of x^i at index i. Trimmed form has no trailing zeros.
using RationalPoly = std::vector<mpq_class>;

namespace poly {

inline void trim(RationalPoly& a) {
    while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
}

inline int degree(const RationalPoly& a) {
    for (std::size_t i = a.size(); i > 0; --i)
        if (sgn(a[i - 1]) != 0) return static_cast<int>(i) - 1;
    return -1;
}

inline RationalPoly add(const RationalPoly& a, const RationalPoly& b) {
    RationalPoly c(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) c[i] += b[i];
    trim(c);
    return c;
}

inline RationalPoly sub(const RationalPoly& a, const RationalPoly& b) {
    RationalPoly c(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
    trim(c);
    return c;
}

inline RationalPoly mul(const RationalPoly& a, const RationalPoly& b) {
    if (a.empty() || b.empty()) return {};
    RationalPoly c(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    }
    trim(c);
    return c;
}

/// Euclidean division a = q*b + r with deg r < deg b.
inline std::pair<RationalPoly, RationalPoly> divmod(RationalPoly a, RationalPoly b) {
    trim(a);
    trim(b);
    if (b.empty()) throw std::domain_error("polynomial division by zero");
    const int db = degree(b);
    RationalPoly q;
    if (degree(a) >= db) q.assign(static_cast<std::size_t>(degree(a) - db + 1), mpq_class(0));
    while (degree(a) >= db) {
        const int shift = degree(a) - db;
        mpq_class c = a.back() / b.back();
        q[static_cast<std::size_t>(shift)] = c;
        for (int i = 0; i <= db; ++i) a[static_cast<std::size_t>(i + shift)] -= c * b[static_cast<std::size_t>(i)];
        trim(a);
    }
    trim(q);
    return {std::move(q), std::move(a)};
}

}  // namespace poly

/// Phi_p(x), obtained from x^p - 1 by dividing out Phi_m for every proper divisor m of p.
inline RationalPoly cyclotomic_polynomial(int p) {
    if (p < 1) throw std::invalid_argument("cyclotomic_polynomial: p must be positive");
    RationalPoly num(static_cast<std::size_t>(p) + 1, mpq_class(0));
    num[0] = -1;
    num[static_cast<std::size_t>(p)] = 1;
    for (int m = 1; m < p; ++m) {
        if (p % m != 0) continue;
        auto [q, r] = poly::divmod(num, cyclotomic_polynomial(m));
        if (!r.empty()) throw std::logic_error("cyclotomic_polynomial: inexact division");
        num = std::move(q);
    }
    return num;
}

}  // namespace hecke
