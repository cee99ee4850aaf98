// Deterministic JSON exports: the identity decomposition, the 651-element
// operator basis (unit line + traceless basis), and the star structure
// constants over that basis.
#pragma once

#include "dims.hpp"

namespace e6ag {

template <ExactField F>
Json export_identity_decomposition() {
    Json j;
    j["field"] = field_name<F>();
    j["what"] = "identity-decomposition";
    j["terms"] = triple_sum_to_json(identity_triple_decomposition<F>());
    return j;
}

template <ExactField F>
Json export_basis(SuiteContext<F>& ctx) {
    Json j;
    j["field"] = field_name<F>();
    j["what"] = "basis";
    j["basis_size"] = kDimAG;
    Json arr = Json::array();
    arr.push_back(triple_sum_to_json(identity_triple_decomposition<F>()));
    for (const auto& s : ctx.v_basis()) arr.push_back(triple_sum_to_json(s));
    j["elements"] = std::move(arr);
    return j;
}

// Structure constants of star over the basis (index 0: unit line, 1..650:
// traceless basis), entries deduplicated with i <= j, zero entries dropped.
// limit restricts to the leading limit x limit block (full table otherwise).
template <ExactField F>
Json export_structure_constants(SuiteContext<F>& ctx, int limit = kDimAG) {
    std::vector<const TripleSum<F>*> basis;
    basis.push_back(&identity_triple_decomposition<F>());
    for (const auto& s : ctx.v_basis()) basis.push_back(&s);
    const int n = std::min<int>(limit, static_cast<int>(basis.size()));

    Json entries = Json::array();
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            const auto prod = star_pi(*basis[static_cast<std::size_t>(i)],
                                      *basis[static_cast<std::size_t>(j)]);
            const auto coeffs = ctx.pi_solver().solve(flatten(prod));
            if (!coeffs)
                throw std::logic_error("structure constants: product escaped the basis span");
            for (std::size_t k = 0; k < coeffs->size(); ++k) {
                if ((*coeffs)[k].is_zero()) continue;
                entries.push_back(Json::array({i, j, static_cast<int>(k), (*coeffs)[k].str()}));
            }
        }
    Json j;
    j["field"] = field_name<F>();
    j["what"] = "structure-constants";
    j["basis_size"] = kDimAG;
    j["limit"] = n;
    j["entries"] = std::move(entries);
    return j;
}

}  // namespace e6ag
