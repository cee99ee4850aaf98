// The symmetric-cube model: formal TripleSums, the projection pi onto
// operators, the bilinear form f', trace/traceless splitting, the canonical
// 650-element traceless basis, and the ambient Sym^3 W expansion.
//
// A TripleSum is a formal scalar combination of unordered triples {x,y,z} of
// Albert elements. Triples are NOT expanded multilinearly; equality of what
// they represent is decided either through pi (quotient semantics) or through
// the canonical basis expansion (ambient Sym^3 W semantics).
#pragma once

#include <algorithm>
#include <vector>

#include "endops.hpp"

namespace e6ag {

inline constexpr int kDimSym3 = 3654;     // C(29,3)
inline constexpr int kDimAG = 651;        // unit line + V(omega1+omega6)
inline constexpr int kDimV = 650;
inline constexpr int kDimKernel = 3003;   // dim V(3*omega1)

template <ExactField F>
struct TripleSum {
    struct Term {
        F coeff;
        std::array<AlbertElement<F>, 3> t;
    };
    std::vector<Term> terms;

    static TripleSum single(const AlbertElement<F>& x, const AlbertElement<F>& y,
                            const AlbertElement<F>& z, F coeff = F::one()) {
        TripleSum s;
        s.terms.push_back(Term{coeff, {x, y, z}});
        s.canonicalize();
        return s;
    }

    bool empty() const { return terms.empty(); }
    std::size_t size() const { return terms.size(); }

    TripleSum& operator+=(const TripleSum& o) {
        terms.insert(terms.end(), o.terms.begin(), o.terms.end());
        canonicalize();
        return *this;
    }
    TripleSum operator+(const TripleSum& o) const {
        TripleSum r = *this;
        r += o;
        return r;
    }
    TripleSum scaled(const F& s) const {
        TripleSum r;
        if (s.is_zero()) return r;
        r.terms = terms;
        for (auto& term : r.terms) term.coeff = s * term.coeff;
        return r;
    }

    // Sorted triples, sorted terms, like terms merged, zero terms dropped.
    void canonicalize() {
        for (auto& term : terms) {
            std::sort(term.t.begin(), term.t.end(),
                      [](const auto& a, const auto& b) { return a < b; });
        }
        std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
            for (int k = 0; k < 3; ++k) {
                if (a.t[k] < b.t[k]) return true;
                if (b.t[k] < a.t[k]) return false;
            }
            return false;
        });
        std::vector<Term> merged;
        for (auto& term : terms) {
            if (!merged.empty() && merged.back().t == term.t)
                merged.back().coeff += term.coeff;
            else
                merged.push_back(std::move(term));
        }
        terms.clear();
        for (auto& term : merged)
            if (!term.coeff.is_zero()) terms.push_back(std::move(term));
    }
};

// pi : Sq^3 W -> End(W), a1a2a3 |-> the triple operator a1a2a3.
template <ExactField F>
EndW<F> pi(const TripleSum<F>& s) {
    EndW<F> r;
    for (const auto& term : s.terms)
        acc_triple(r, term.coeff, term.t[0], term.t[1], term.t[2]);
    return r;
}

// The identity decomposition: id_W as a 9-term TripleSum (coefficients
// 6 and 3), every triple satisfying x_i # x_j = 1/2 x_k pairwise.
template <ExactField F>
const TripleSum<F>& identity_triple_decomposition() {
    static const TripleSum<F> dec = [] {
        using W = AlbertElement<F>;
        TripleSum<F> s;
        s.terms.push_back({F::of(6), {W::diag_unit(1), W::diag_unit(2), W::diag_unit(3)}});
        constexpr int pat[8][3] = {{0, 0, 0}, {1, 3, 2}, {2, 6, 4}, {3, 5, 6},
                                   {4, 1, 5}, {5, 2, 7}, {6, 7, 1}, {7, 4, 3}};
        for (const auto& p : pat)
            s.terms.push_back({F::of(3),
                               {W::from_slot(Octonion<F>::basis(p[0]), 1),
                                W::from_slot(Octonion<F>::basis(p[1]), 2),
                                W::from_slot(Octonion<F>::basis(p[2]), 3)}});
        s.canonicalize();
        return s;
    }();
    return dec;
}

// sum of coeff * <a1,a2,a3> over terms; equals 9 * unit_component.
template <ExactField F>
F trilinear_total(const TripleSum<F>& s) {
    F acc = F::zero();
    for (const auto& term : s.terms)
        acc += term.coeff * trilinear(term.t[0], term.t[1], term.t[2]);
    return acc;
}

// Tr(pi(s))/27; pi(s) = unit_component(s) id + pi(traceless part).
template <ExactField F>
F unit_component(const TripleSum<F>& s) {
    return F::ratio(1, 9) * trilinear_total(s);
}

template <ExactField F>
TripleSum<F> project_traceless(const TripleSum<F>& s) {
    return s + identity_triple_decomposition<F>().scaled(-unit_component(s));
}

// f' : the 36-term double permutation sum
//   sum_{ta,tb} <a_ta(1), b_tb(2), b_tb(3)> <b_tb(1), a_ta(2), a_ta(3)>.
// Both trilinears are symmetric in their last two slots, which collapses the
// sum to 4 * sum_{i,j} over the singled-out indices.
template <ExactField F>
F f_prime(const TripleSum<F>& s, const TripleSum<F>& t) {
    const F third = F::ratio(1, 3);
    F acc = F::zero();
    for (const auto& ta : s.terms) {
        std::array<AlbertElement<F>, 3> ca;  // cross of the pair omitting i
        for (int i = 0; i < 3; ++i) ca[i] = cross(ta.t[(i + 1) % 3], ta.t[(i + 2) % 3]);
        for (const auto& tb : t.terms) {
            std::array<AlbertElement<F>, 3> cb;
            for (int j = 0; j < 3; ++j) cb[j] = cross(tb.t[(j + 1) % 3], tb.t[(j + 2) % 3]);
            F sum = F::zero();
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j)
                    sum += (third * trace_form(cb[j], ta.t[i])) *
                           (third * trace_form(ca[i], tb.t[j]));
            acc += F::of(4) * ta.coeff * tb.coeff * sum;
        }
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Ambient Sym^3 W expansion: dimension C(29,3) = 3654, monomial basis indexed
// by multisets i <= j <= k of canonical W basis indices. The coefficient of a
// monomial is the symmetrized product sum over ordered assignments.
// ---------------------------------------------------------------------------
namespace detail {
inline const int* sym3_index_table() {
    static const std::vector<int> table = [] {
        std::vector<int> t(27 * 27 * 27, -1);
        int n = 0;
        for (int i = 0; i < 27; ++i)
            for (int j = i; j < 27; ++j)
                for (int k = j; k < 27; ++k) t[(i * 27 + j) * 27 + k] = n++;
        return t;
    }();
    return table.data();
}
}  // namespace detail

inline int sym3_index(int i, int j, int k) {
    if (i > j) std::swap(i, j);
    if (j > k) std::swap(j, k);
    if (i > j) std::swap(i, j);
    return detail::sym3_index_table()[(i * 27 + j) * 27 + k];
}

template <ExactField F>
std::vector<F> canonical_expansion(const TripleSum<F>& s) {
    std::vector<F> out(kDimSym3, F::zero());
    for (const auto& term : s.terms) {
        const auto& x = term.t[0];
        const auto& y = term.t[1];
        const auto& z = term.t[2];
        for (int a = 0; a < kDimW; ++a) {
            if (x.c[a].is_zero()) continue;
            const F xa = term.coeff * x.c[a];
            for (int b = 0; b < kDimW; ++b) {
                if (y.c[b].is_zero()) continue;
                const F xy = xa * y.c[b];
                for (int c = 0; c < kDimW; ++c) {
                    if (z.c[c].is_zero()) continue;
                    out[static_cast<std::size_t>(sym3_index(a, b, c))] += xy * z.c[c];
                }
            }
        }
    }
    return out;
}

// All 3654 canonical basis triples {w_i, w_j, w_k}, i <= j <= k, in order.
template <ExactField F>
std::vector<std::array<int, 3>> basis_triple_indices() {
    std::vector<std::array<int, 3>> out;
    out.reserve(kDimSym3);
    for (int i = 0; i < 27; ++i)
        for (int j = i; j < 27; ++j)
            for (int k = j; k < 27; ++k) out.push_back({i, j, k});
    return out;
}

// ---------------------------------------------------------------------------
// Incremental span of flattened operators; used for greedy basis selection.
// ---------------------------------------------------------------------------
template <ExactField F>
class IncrementalSpan {
public:
    explicit IncrementalSpan(std::size_t dim) : dim_(dim) {}

    std::size_t rank() const { return rows_.size(); }

    // Adds v to the span; returns true when v was independent.
    bool add(std::vector<F> v) {
        reduce(v);
        std::size_t lead = dim_;
        for (std::size_t j = 0; j < dim_; ++j)
            if (!v[j].is_zero()) { lead = j; break; }
        if (lead == dim_) return false;
        const F inv = v[lead].inv();
        for (auto& x : v) x *= inv;
        rows_.push_back(std::move(v));
        leads_.push_back(lead);
        order_ = sorted_order();
        return true;
    }

    bool contains(std::vector<F> v) const {
        reduce(v);
        for (const auto& x : v)
            if (!x.is_zero()) return false;
        return true;
    }

private:
    std::vector<std::size_t> sorted_order() const {
        std::vector<std::size_t> o(rows_.size());
        for (std::size_t i = 0; i < o.size(); ++i) o[i] = i;
        std::sort(o.begin(), o.end(),
                  [&](std::size_t a, std::size_t b) { return leads_[a] < leads_[b]; });
        return o;
    }
    void reduce(std::vector<F>& v) const {
        for (std::size_t idx : order_) {
            const F& f = v[leads_[idx]];
            if (f.is_zero()) continue;
            const F s = f;
            const auto& row = rows_[idx];
            for (std::size_t j = leads_[idx]; j < dim_; ++j) v[j] -= s * row[j];
        }
    }

    std::size_t dim_;
    std::vector<std::vector<F>> rows_;
    std::vector<std::size_t> leads_;
    std::vector<std::size_t> order_;
};

template <ExactField F>
std::vector<F> flatten(const EndW<F>& m) {
    return std::vector<F>(m.m.begin(), m.m.end());
}

// 650 traceless TripleSums with independent pi-images: canonical basis
// triples, traceless-projected, greedily selected in canonical order.
template <ExactField F>
std::vector<TripleSum<F>> sigma_V_basis() {
    std::vector<TripleSum<F>> out;
    out.reserve(kDimV);
    IncrementalSpan<F> span(kDimW * kDimW);
    for (const auto& ijk : basis_triple_indices<F>()) {
        auto s = project_traceless(TripleSum<F>::single(AlbertElement<F>::basis(ijk[0]),
                                                        AlbertElement<F>::basis(ijk[1]),
                                                        AlbertElement<F>::basis(ijk[2])));
        if (span.add(flatten(pi(s)))) {
            out.push_back(std::move(s));
            if (out.size() == kDimV) break;
        }
    }
    return out;
}

}  // namespace e6ag
