#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hecke {

/// Deliberate corruptions used to confirm that the check suite is sensitive.
enum class Mutation {
    none,
    gamma_scale,     // one gamma coefficient multiplied by 2
    eps_power,       // phase eps^{k i} instead of eps^{o k i} in f^{[k]}
    wrong_mk,        // m_k cut after k+1 blocks instead of k
    drop_a_factor,   // A_{i,j} loses its gamma_t / gamma_{m_j(t)} factor
    h_parity,        // h_lambda uses the formula of the other parity
};

inline constexpr std::array<Mutation, 5> all_mutations = {Mutation::gamma_scale, Mutation::eps_power, Mutation::wrong_mk,
                                                          Mutation::drop_a_factor, Mutation::h_parity};

inline std::string_view to_string(Mutation m) {
    switch (m) {
        case Mutation::none: return "none";
        case Mutation::gamma_scale: return "gamma_scale";
        case Mutation::eps_power: return "eps_power";
        case Mutation::wrong_mk: return "wrong_mk";
        case Mutation::drop_a_factor: return "drop_a_factor";
        case Mutation::h_parity: return "h_parity";
    }
    return "unknown";
}

inline Mutation mutation_from_string(std::string_view s) {
    for (Mutation m : {Mutation::none, Mutation::gamma_scale, Mutation::eps_power, Mutation::wrong_mk, Mutation::drop_a_factor,
                       Mutation::h_parity})
        if (to_string(m) == s) return m;
    throw std::invalid_argument("unknown mutation: " + std::string(s));
}

}  // namespace hecke
