#pragma once

#include "hecke/hecke.hpp"

#include <array>
#include <complex>
#include <random>
#include <vector>

namespace hecke::testing {

using Complex = std::complex<double>;

/// Numerical image of x under x -> exp(2 pi i / p).
inline Complex evaluate(const CycloRational& x) {
    const int p = x.field().order();
    const double angle = 2.0 * 3.14159265358979323846 / p;
    Complex z(1.0, 0.0), acc(0.0, 0.0);
    const Complex step(std::cos(angle), std::sin(angle));
    for (const auto& c : x.coeffs()) {
        acc += c.get_d() * z;
        z *= step;
    }
    return acc;
}

inline CycloRational random_cyclo(const CycloField& f, std::mt19937& rng, int bound = 5) {
    std::uniform_int_distribution<int> num(-bound, bound), den(1, bound);
    std::vector<mpq_class> cs(f.degree());
    for (auto& c : cs) {
        c = mpq_class(num(rng), den(rng));
        c.canonicalize();
    }
    return CycloRational(f, cs);
}

/// The acceptance grid.
inline const std::vector<std::array<int, 3>>& grid() {
    static const std::vector<std::array<int, 3>> g = {{1, 1, 3}, {2, 2, 2}, {2, 2, 3}, {2, 1, 3}, {3, 3, 2}, {4, 2, 2}, {4, 4, 2}};
    return g;
}

}  // namespace hecke::testing
