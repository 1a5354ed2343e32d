#pragma once

#include "gprn.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace hecke {

using Json = nlohmann::ordered_json;

inline constexpr int schema_version = 1;

inline Json to_json(const CycloRational& x) { return Json(x.to_strings()); }

inline Json to_json(const Multipartition& m) {
    Json j = Json::array();
    for (const auto& part : m) j.push_back(Json(part));
    return j;
}

inline Json to_json(const Tableau& t) {
    Json j = Json::array();
    for (const auto& comp : t.entries()) {
        Json c = Json::array();
        for (const auto& row : comp) c.push_back(Json(row));
        j.push_back(c);
    }
    return j;
}

inline Json to_json(const Matrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

inline Json tableau_json(const SeminormalModel& M, TabId t) { return to_json(M.tableau(t)); }

/// Nonzero blocks keyed by shape.
inline Json to_json(const SeminormalModel& M, const BlockMatrix& x) {
    Json out = Json::array();
    for (int b = 0; b < M.num_shapes(); ++b) {
        const Matrix& m = x.block(static_cast<std::size_t>(b));
        if (m.is_zero()) continue;
        out.push_back(Json{{"shape", to_json(M.shape(b))}, {"matrix", to_json(m)}});
    }
    return out;
}

/// (s, t, coefficient) triples.
inline Json to_json(const SeminormalModel& M, const FElement& x) {
    Json out = Json::array();
    for (const auto& [key, c] : x.terms) {
        auto [b, s, t] = key;
        out.push_back(Json{{"s", tableau_json(M, {b, s})}, {"t", tableau_json(M, {b, t})}, {"coefficient", to_json(c)}});
    }
    return out;
}

inline Json params_json(const HeckeParams& P) {
    Json Q = Json::array();
    for (const auto& x : P.Q) Q.push_back(x.get_num().get_str() + "/" + x.get_den().get_str());
    return Json{{"r", P.r},
                {"p", P.p},
                {"n", P.n},
                {"q", P.q.get_num().get_str() + "/" + P.q.get_den().get_str()},
                {"Q", Q}};
}

inline Json witness_json(const SemisimplicityWitness& w) {
    return Json{{"kind", w.kind}, {"factor", w.expression}, {"i", w.i}, {"j", w.j}, {"t", w.t}, {"k", w.k}};
}

}  // namespace hecke
