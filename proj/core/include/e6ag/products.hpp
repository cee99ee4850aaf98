// The equivariant products on the symmetric-cube model: odot1, boxdot, psi,
// P, phi, odot2, the transported algebra product star, and the two twisted
// (noncommutative) variants.
//
// Permutation sums are collapsed over the symmetric factors: every S3 sum in
// these formulas singles out one index while the other two enter through a
// cross product, which is symmetric, so each S3 collapses to 3 terms with
// multiplicity 2. The collapse is pure reindexing; the literal 36-term double
// sums are what the tests pin down through the worked examples.
//
// Every product has two forms: one materializing the output TripleSum (for
// composition and export) and one accumulating the pi-image only (the hot
// path for verification at scale). The id-correction terms are materialized
// through the identity decomposition so outputs stay inside TripleSums.
#pragma once

#include "sym3.hpp"

namespace e6ag {

template <ExactField F>
struct TensorTripleSum {
    struct Term {
        F coeff;
        std::array<AlbertElement<F>, 3> t;  // ordered
    };
    std::vector<Term> terms;
};

namespace detail {

// Crosses of the complement pairs within a triple: out[i] = t[i+1] # t[i+2].
template <ExactField F>
std::array<AlbertElement<F>, 3> complement_crosses(const std::array<AlbertElement<F>, 3>& t) {
    return {cross(t[1], t[2]), cross(t[2], t[0]), cross(t[0], t[1])};
}

// Cached data of the identity decomposition used by psi against id_W.
template <ExactField F>
struct IdDecompCache {
    struct Entry {
        F coeff;
        std::array<AlbertElement<F>, 3> t;
        std::array<AlbertElement<F>, 3> cc;  // complement crosses
    };
    std::vector<Entry> entries;
    static const IdDecompCache& get() {
        static const IdDecompCache cache = [] {
            IdDecompCache c;
            for (const auto& term : identity_triple_decomposition<F>().terms)
                c.entries.push_back({term.coeff, term.t, complement_crosses<F>(term.t)});
            return c;
        }();
        return cache;
    }
};

}  // namespace detail

// ---------------------------------------------------------------------------
// odot1
// ---------------------------------------------------------------------------
template <ExactField F>
void odot1_raw_terms(const TripleSum<F>& s, const TripleSum<F>& t, auto&& emit) {
    const F four = F::of(4);
    for (const auto& ta : s.terms) {
        const auto ca = detail::complement_crosses<F>(ta.t);
        for (const auto& tb : t.terms) {
            const auto cb = detail::complement_crosses<F>(tb.t);
            const F c = four * ta.coeff * tb.coeff;
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j)
                    emit(c, cross(ca[i], cb[j]), ta.t[i], tb.t[j]);
        }
    }
}

template <ExactField F>
EndW<F> odot1_pi(const TripleSum<F>& s, const TripleSum<F>& t) {
    EndW<F> r;
    odot1_raw_terms(s, t,
                    [&](const F& c, const AlbertElement<F>& x, const AlbertElement<F>& y,
                        const AlbertElement<F>& z) { acc_triple(r, c, x, y, z); });
    const F corr = F::ratio(-1, 12) * f_prime(s, t);
    if (!corr.is_zero()) r += corr * pi(identity_triple_decomposition<F>());
    return r;
}

template <ExactField F>
TripleSum<F> odot1(const TripleSum<F>& s, const TripleSum<F>& t) {
    TripleSum<F> out;
    odot1_raw_terms(s, t,
                    [&](const F& c, const AlbertElement<F>& x, const AlbertElement<F>& y,
                        const AlbertElement<F>& z) {
                        out.terms.push_back({c, {x, y, z}});
                    });
    out += identity_triple_decomposition<F>().scaled(F::ratio(-1, 12) * f_prime(s, t));
    out.canonicalize();
    return out;
}

// ---------------------------------------------------------------------------
// boxdot : ordered tensor output
// ---------------------------------------------------------------------------
template <ExactField F>
TensorTripleSum<F> boxdot(const TripleSum<F>& s, const TripleSum<F>& t) {
    TensorTripleSum<F> out;
    const F four = F::of(4);
    for (const auto& ta : s.terms) {
        const auto ca = detail::complement_crosses<F>(ta.t);
        for (const auto& tb : t.terms) {
            const auto cb = detail::complement_crosses<F>(tb.t);
            const F c = four * ta.coeff * tb.coeff;
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j)
                    out.terms.push_back({c, {cross(ta.t[i], tb.t[j]), ca[i], cb[j]}});
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// psi : W^x3 (x) Sq^3 W -> Sq^3 W
// ---------------------------------------------------------------------------
template <ExactField F>
void psi_terms(const F& coeff, const std::array<AlbertElement<F>, 3>& u,
               const TripleSum<F>& s, auto&& emit) {
    const F two = F::of(2);
    const AlbertElement<F> mid = cross(u[1], u[2]);
    for (const auto& term : s.terms) {
        const auto ct = detail::complement_crosses<F>(term.t);
        const F c = two * coeff * term.coeff;
        for (int k = 0; k < 3; ++k) emit(c, cross(u[0], term.t[k]), mid, ct[k]);
    }
}

template <ExactField F>
TripleSum<F> psi(const TensorTripleSum<F>& u, const TripleSum<F>& s) {
    TripleSum<F> out;
    for (const auto& ut : u.terms)
        psi_terms(ut.coeff, ut.t, s,
                  [&](const F& c, const AlbertElement<F>& x, const AlbertElement<F>& y,
                      const AlbertElement<F>& z) { out.terms.push_back({c, {x, y, z}}); });
    out.canonicalize();
    return out;
}

template <ExactField F>
TripleSum<F> psi_id(const TensorTripleSum<F>& u) {
    return psi(u, identity_triple_decomposition<F>());
}

// pi-image of psi(u, id) without materializing terms.
template <ExactField F>
void acc_psi_id_pi(EndW<F>& r, const F& coeff, const std::array<AlbertElement<F>, 3>& u) {
    const auto& cache = detail::IdDecompCache<F>::get();
    const F two = F::of(2);
    const AlbertElement<F> mid = cross(u[1], u[2]);
    for (const auto& e : cache.entries) {
        const F c = two * coeff * e.coeff;
        for (int k = 0; k < 3; ++k) acc_triple(r, c, cross(u[0], e.t[k]), mid, e.cc[k]);
    }
}

// ---------------------------------------------------------------------------
// P and phi = psi_id . P
// ---------------------------------------------------------------------------
template <ExactField F>
TensorTripleSum<F> P_map(const TripleSum<F>& s) {
    static constexpr int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                        {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    TensorTripleSum<F> out;
    for (const auto& term : s.terms)
        for (const auto& p : perms)
            out.terms.push_back({term.coeff, {term.t[p[0]], term.t[p[1]], term.t[p[2]]}});
    return out;
}

template <ExactField F>
TripleSum<F> phi(const TripleSum<F>& s) {
    return psi_id(P_map(s));
}

template <ExactField F>
EndW<F> phi_pi(const TripleSum<F>& s) {
    EndW<F> r;
    const auto u = P_map(s);
    for (const auto& ut : u.terms) acc_psi_id_pi(r, ut.coeff, ut.t);
    return r;
}

// ---------------------------------------------------------------------------
// odot2 = psi_id . boxdot - 5/4 f' id
// ---------------------------------------------------------------------------
namespace detail {
// Enumerates the boxdot tensor terms of a term pair and feeds them to sink.
template <ExactField F>
void boxdot_tensor_terms(const typename TripleSum<F>::Term& ta,
                         const typename TripleSum<F>::Term& tb, auto&& sink) {
    const F four = F::of(4);
    const auto ca = complement_crosses<F>(ta.t);
    const auto cb = complement_crosses<F>(tb.t);
    const F c = four * ta.coeff * tb.coeff;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            sink(c, std::array<AlbertElement<F>, 3>{cross(ta.t[i], tb.t[j]), ca[i], cb[j]});
}
}  // namespace detail

template <ExactField F>
EndW<F> odot2_pi(const TripleSum<F>& s, const TripleSum<F>& t) {
    EndW<F> r;
    for (const auto& ta : s.terms)
        for (const auto& tb : t.terms)
            detail::boxdot_tensor_terms<F>(
                ta, tb, [&](const F& c, const std::array<AlbertElement<F>, 3>& u) {
                    acc_psi_id_pi(r, c, u);
                });
    const F corr = F::ratio(-5, 4) * f_prime(s, t);
    if (!corr.is_zero()) r += corr * pi(identity_triple_decomposition<F>());
    return r;
}

template <ExactField F>
TripleSum<F> odot2(const TripleSum<F>& s, const TripleSum<F>& t) {
    TripleSum<F> out = psi_id(boxdot(s, t));
    out += identity_triple_decomposition<F>().scaled(F::ratio(-5, 4) * f_prime(s, t));
    out.canonicalize();
    return out;
}

// ---------------------------------------------------------------------------
// The twisted products: psi_id . (1 2) . boxdot and psi_id . (1 3) . boxdot.
// ---------------------------------------------------------------------------
enum class SlotSwap { None, Swap12, Swap13 };

template <ExactField F>
std::array<AlbertElement<F>, 3> apply_swap(const std::array<AlbertElement<F>, 3>& u,
                                           SlotSwap sw) {
    switch (sw) {
        case SlotSwap::Swap12: return {u[1], u[0], u[2]};
        case SlotSwap::Swap13: return {u[2], u[1], u[0]};
        default: return u;
    }
}

template <ExactField F>
EndW<F> twisted_product_pi(const TripleSum<F>& s, const TripleSum<F>& t, SlotSwap sw) {
    EndW<F> r;
    for (const auto& ta : s.terms)
        for (const auto& tb : t.terms)
            detail::boxdot_tensor_terms<F>(
                ta, tb, [&](const F& c, const std::array<AlbertElement<F>, 3>& u) {
                    acc_psi_id_pi(r, c, apply_swap(u, sw));
                });
    return r;
}

template <ExactField F>
TripleSum<F> twisted_product(const TripleSum<F>& s, const TripleSum<F>& t, SlotSwap sw) {
    TripleSum<F> out;
    for (const auto& ta : s.terms)
        for (const auto& tb : t.terms)
            detail::boxdot_tensor_terms<F>(
                ta, tb, [&](const F& c, const std::array<AlbertElement<F>, 3>& u) {
                    psi_terms(c, apply_swap(u, sw), identity_triple_decomposition<F>(),
                              [&](const F& cc, const AlbertElement<F>& x,
                                  const AlbertElement<F>& y, const AlbertElement<F>& z) {
                                  out.terms.push_back({cc, {x, y, z}});
                              });
                });
    out.canonicalize();
    return out;
}

template <ExactField F>
std::pair<TripleSum<F>, TripleSum<F>> noncomm_products(const TripleSum<F>& s,
                                                       const TripleSum<F>& t) {
    return {twisted_product(s, t, SlotSwap::Swap12), twisted_product(s, t, SlotSwap::Swap13)};
}

// ---------------------------------------------------------------------------
// star : the transported algebra product.
//
//   a*b = (1/24 <a><b> + 1/432 f'(a,b)) id  - 1/12 <a> b - 1/12 <b> a
//         + 1/18 a odot1 b - 1/216 a odot2 b,
//
// with <s> the total trilinear coefficient. The +1/432 makes the identity
// decomposition a two-sided unit and matches the worked product values; the
// homomorphism suite certifies the whole coefficient set end to end.
// ---------------------------------------------------------------------------
template <ExactField F>
EndW<F> star_pi(const TripleSum<F>& s, const TripleSum<F>& t) {
    const F ts = trilinear_total(s), tt = trilinear_total(t);
    const F cid = F::ratio(1, 24) * ts * tt + F::ratio(1, 432) * f_prime(s, t);
    EndW<F> r = odot1_pi(s, t);
    r = F::ratio(1, 18) * r;
    r += F::ratio(-1, 216) * odot2_pi(s, t);
    r += F::ratio(-1, 12) * ts * pi(t);
    r += F::ratio(-1, 12) * tt * pi(s);
    for (int i = 0; i < kDimW; ++i) r.at(i, i) += cid;
    return r;
}

template <ExactField F>
TripleSum<F> star(const TripleSum<F>& s, const TripleSum<F>& t) {
    const F ts = trilinear_total(s), tt = trilinear_total(t);
    const F cid = F::ratio(1, 24) * ts * tt + F::ratio(1, 432) * f_prime(s, t);
    TripleSum<F> out = odot1(s, t).scaled(F::ratio(1, 18));
    out += odot2(s, t).scaled(F::ratio(-1, 216));
    out += t.scaled(F::ratio(-1, 12) * ts);
    out += s.scaled(F::ratio(-1, 12) * tt);
    out += identity_triple_decomposition<F>().scaled(cid);
    return out;
}

// ---------------------------------------------------------------------------
// Leibniz lift of a derivation D to TripleSums (slotwise action). On
// pi-images this matches M |-> DM - MD.
// ---------------------------------------------------------------------------
template <ExactField F>
TripleSum<F> act_derivation(const EndW<F>& d, const TripleSum<F>& s) {
    TripleSum<F> out;
    for (const auto& term : s.terms)
        for (int k = 0; k < 3; ++k) {
            auto t = term.t;
            t[k] = d.apply(t[k]);
            out.terms.push_back({term.coeff, t});
        }
    out.canonicalize();
    return out;
}

}  // namespace e6ag
