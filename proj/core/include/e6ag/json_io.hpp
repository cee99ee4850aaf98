// JSON forms for all exchange formats. Scalars use the canonical text
// encodings ("p/q", "p/q+r/s*i", decimal residue); element and operator
// layouts follow the canonical W basis order. ordered_json keeps emission
// byte-deterministic.
#pragma once

#include <json.hpp>

#include "products.hpp"

namespace e6ag {

using Json = nlohmann::ordered_json;

template <ExactField F>
Json scalar_to_json(const F& x) {
    return Json(x.str());
}

template <ExactField F>
F scalar_from_json(const Json& j) {
    if (!j.is_string()) throw std::invalid_argument("scalar: expected string");
    auto v = F::parse(j.get<std::string>());
    if (!v) throw std::invalid_argument("scalar: cannot parse '" + j.get<std::string>() + "'");
    return *v;
}

template <ExactField F>
Json octonion_to_json(const Octonion<F>& o) {
    Json arr = Json::array();
    for (const auto& c : o.c) arr.push_back(c.str());
    return arr;
}

template <ExactField F>
Octonion<F> octonion_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 8) throw std::invalid_argument("octonion: expected 8 scalars");
    Octonion<F> o;
    for (int i = 0; i < 8; ++i) o.c[i] = scalar_from_json<F>(j[i]);
    return o;
}

template <ExactField F>
Json albert_to_json(const AlbertElement<F>& x) {
    Json j;
    Json diag = Json::array();
    for (int i = 0; i < 3; ++i) diag.push_back(x.c[i].str());
    j["diag"] = diag;
    for (int s = 1; s <= 3; ++s) {
        Json o = Json::array();
        for (int k = 0; k < 8; ++k) o.push_back(x.c[3 + 8 * (s - 1) + k].str());
        j["o" + std::to_string(s)] = o;
    }
    return j;
}

template <ExactField F>
AlbertElement<F> albert_from_json(const Json& j) {
    AlbertElement<F> x;
    const auto& diag = j.at("diag");
    if (!diag.is_array() || diag.size() != 3) throw std::invalid_argument("albert: bad diag");
    for (int i = 0; i < 3; ++i) x.c[i] = scalar_from_json<F>(diag[i]);
    for (int s = 1; s <= 3; ++s) {
        const auto& o = j.at("o" + std::to_string(s));
        if (!o.is_array() || o.size() != 8) throw std::invalid_argument("albert: bad slot");
        for (int k = 0; k < 8; ++k) x.c[3 + 8 * (s - 1) + k] = scalar_from_json<F>(o[k]);
    }
    return x;
}

template <ExactField F>
Json operator_to_json(const EndW<F>& m) {
    Json rows = Json::array();
    for (int i = 0; i < kDimW; ++i) {
        Json row = Json::array();
        for (int j = 0; j < kDimW; ++j) row.push_back(m.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

template <ExactField F>
EndW<F> operator_from_json(const Json& j) {
    if (!j.is_array() || j.size() != kDimW) throw std::invalid_argument("operator: expected 27 rows");
    EndW<F> m;
    for (int i = 0; i < kDimW; ++i) {
        if (!j[i].is_array() || j[i].size() != kDimW)
            throw std::invalid_argument("operator: expected 27 columns");
        for (int k = 0; k < kDimW; ++k) m.at(i, k) = scalar_from_json<F>(j[i][k]);
    }
    return m;
}

template <ExactField F>
Json triple_sum_to_json(const TripleSum<F>& s) {
    Json arr = Json::array();
    for (const auto& term : s.terms) {
        Json t;
        t["coeff"] = term.coeff.str();
        Json triple = Json::array();
        for (int k = 0; k < 3; ++k) triple.push_back(albert_to_json(term.t[k]));
        t["triple"] = std::move(triple);
        arr.push_back(std::move(t));
    }
    return arr;
}

template <ExactField F>
TripleSum<F> triple_sum_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("triple sum: expected array");
    TripleSum<F> s;
    for (const auto& t : j) {
        typename TripleSum<F>::Term term;
        term.coeff = scalar_from_json<F>(t.at("coeff"));
        const auto& triple = t.at("triple");
        if (!triple.is_array() || triple.size() != 3)
            throw std::invalid_argument("triple sum: expected 3 elements");
        for (int k = 0; k < 3; ++k) term.t[k] = albert_from_json<F>(triple[k]);
        s.terms.push_back(std::move(term));
    }
    s.canonicalize();
    return s;
}

template <ExactField F>
Json pair_sum_to_json(const LieModel<F>& lie, const PairSum<F>& p) {
    Json arr = Json::array();
    for (const auto& term : p.terms) {
        Json t;
        t["coeff"] = term.coeff.str();
        Json pair = Json::array();
        pair.push_back(operator_to_json(lie.matrix_of(term.x)));
        pair.push_back(operator_to_json(lie.matrix_of(term.y)));
        t["pair"] = std::move(pair);
        arr.push_back(std::move(t));
    }
    return arr;
}

}  // namespace e6ag
