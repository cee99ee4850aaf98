// The 27-dimensional Albert algebra W = H3(O): Jordan product, trace form,
// determinant, symmetric trilinear form, cross product, rank-1 predicate.
//
// Canonical ordered basis of W (used by every matrix and JSON form):
//   (1_1, 1_2, 1_3, <e0>_1..<e7>_1, <e0>_2..<e7>_2, <e0>_3..<e7>_3).
// The trace form is diagonal in this basis: 1 on the 1_i, 2 on each <e_j>_i.
#pragma once

#include <array>

#include "octonion.hpp"

namespace e6ag {

inline constexpr int kDimW = 27;

template <ExactField F>
struct AlbertElement {
    std::array<F, kDimW> c{};

    static AlbertElement zero() { return AlbertElement{}; }
    static AlbertElement unit() {
        AlbertElement x;
        x.c[0] = x.c[1] = x.c[2] = F::one();
        return x;
    }
    // 1_i, i in {1,2,3}
    static AlbertElement diag_unit(int i) {
        AlbertElement x;
        x.c[static_cast<std::size_t>(i - 1)] = F::one();
        return x;
    }
    // <a>_i, i in {1,2,3}
    static AlbertElement from_slot(const Octonion<F>& a, int i) {
        AlbertElement x;
        for (int j = 0; j < 8; ++j) x.c[3 + 8 * (i - 1) + j] = a.c[j];
        return x;
    }
    static AlbertElement basis(int k) {
        AlbertElement x;
        x.c[static_cast<std::size_t>(k)] = F::one();
        return x;
    }

    const F& diag(int i) const { return c[static_cast<std::size_t>(i - 1)]; }
    Octonion<F> slot(int i) const {
        Octonion<F> o;
        for (int j = 0; j < 8; ++j) o.c[j] = c[3 + 8 * (i - 1) + j];
        return o;
    }

    bool is_zero() const {
        for (const auto& x : c)
            if (!x.is_zero()) return false;
        return true;
    }
    bool operator==(const AlbertElement& o) const { return c == o.c; }
    // Canonical ordering for sorting/merging of formal sums.
    bool operator<(const AlbertElement& o) const {
        for (int i = 0; i < kDimW; ++i) {
            if (c[i] == o.c[i]) continue;
            return c[i] < o.c[i];
        }
        return false;
    }
};

template <ExactField F>
AlbertElement<F> operator+(const AlbertElement<F>& x, const AlbertElement<F>& y) {
    AlbertElement<F> r;
    for (int i = 0; i < kDimW; ++i) r.c[i] = x.c[i] + y.c[i];
    return r;
}
template <ExactField F>
AlbertElement<F> operator-(const AlbertElement<F>& x, const AlbertElement<F>& y) {
    AlbertElement<F> r;
    for (int i = 0; i < kDimW; ++i) r.c[i] = x.c[i] - y.c[i];
    return r;
}
template <ExactField F>
AlbertElement<F> operator*(const F& s, const AlbertElement<F>& x) {
    AlbertElement<F> r;
    for (int i = 0; i < kDimW; ++i) r.c[i] = s * x.c[i];
    return r;
}
template <ExactField F>
AlbertElement<F> operator-(const AlbertElement<F>& x) {
    AlbertElement<F> r;
    for (int i = 0; i < kDimW; ++i) r.c[i] = -x.c[i];
    return r;
}

// Jordan product via the slotwise multiplication rules of H3(O).
template <ExactField F>
AlbertElement<F> jordan_mul(const AlbertElement<F>& x, const AlbertElement<F>& y) {
    const F half = F::ratio(1, 2);
    AlbertElement<F> r;
    // 1_i . 1_i = 1_i
    for (int i = 0; i < 3; ++i) r.c[i] = x.c[i] * y.c[i];
    // 1_i . <a>_j = 1/2 <a>_j for i != j, 0 for i == j
    for (int i = 0; i < 3; ++i) {
        if (x.c[i].is_zero() && y.c[i].is_zero()) continue;
        for (int j = 0; j < 3; ++j) {
            if (i == j) continue;
            for (int k = 0; k < 8; ++k) {
                const int idx = 3 + 8 * j + k;
                r.c[idx] += half * (x.c[i] * y.c[idx] + y.c[i] * x.c[idx]);
            }
        }
    }
    // <a>_i . <b>_i = 1/2 <a,b> (1_j + 1_k)
    for (int i = 0; i < 3; ++i) {
        const F s = half * oct_bilinear(x.slot(i + 1), y.slot(i + 1));
        if (s.is_zero()) continue;
        for (int j = 0; j < 3; ++j)
            if (j != i) r.c[j] += s;
    }
    // <a>_i . <b>_j = 1/2 <conj(ab)>_k for (i,j,k) cyclic
    constexpr int cyc[3][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
    for (const auto& ijk : cyc) {
        const int i = ijk[0], j = ijk[1], k = ijk[2];
        const Octonion<F> p =
            oct_conj(oct_mul(x.slot(i + 1), y.slot(j + 1)) + oct_mul(y.slot(i + 1), x.slot(j + 1)));
        for (int m = 0; m < 8; ++m) r.c[3 + 8 * k + m] += half * p.c[m];
    }
    return r;
}

// Gram weights of the trace form in the canonical basis.
inline constexpr int gram_weight(int i) { return i < 3 ? 1 : 2; }

// <x,y> = Tr(x.y)
template <ExactField F>
F trace_form(const AlbertElement<F>& x, const AlbertElement<F>& y) {
    F s = F::zero();
    for (int i = 0; i < 3; ++i) s += x.c[i] * y.c[i];
    F t = F::zero();
    for (int i = 3; i < kDimW; ++i) t += x.c[i] * y.c[i];
    return s + t + t;
}

// <x,e> = alpha1 + alpha2 + alpha3
template <ExactField F>
F albert_trace(const AlbertElement<F>& x) {
    return x.c[0] + x.c[1] + x.c[2];
}

// x # y = x.y - 1/2<x,e>y - 1/2<y,e>x - 1/2<x,y>e + 1/2<x,e><y,e>e
template <ExactField F>
AlbertElement<F> cross(const AlbertElement<F>& x, const AlbertElement<F>& y) {
    const F half = F::ratio(1, 2);
    const F tx = albert_trace(x), ty = albert_trace(y);
    AlbertElement<F> r = jordan_mul(x, y);
    const F a = half * tx, b = half * ty;
    const F e_coef = half * (tx * ty - trace_form(x, y));
    for (int i = 0; i < kDimW; ++i) r.c[i] -= a * y.c[i] + b * x.c[i];
    r.c[0] += e_coef;
    r.c[1] += e_coef;
    r.c[2] += e_coef;
    return r;
}

// det as the closed cubic polynomial; consistency with the cross/trilinear
// route is part of the test suite.
template <ExactField F>
F det(const AlbertElement<F>& x) {
    const Octonion<F> a = x.slot(1), b = x.slot(2), c3 = x.slot(3);
    const Octonion<F> abc = oct_mul(oct_mul(a, b), c3);
    return x.c[0] * x.c[1] * x.c[2] - x.c[0] * oct_norm(a) - x.c[1] * oct_norm(b) -
           x.c[2] * oct_norm(c3) + abc.c[0] + abc.c[0];
}

// <x,y,z> normalized so <x,x,x> = det x; equals 1/3 <x#y, z>.
template <ExactField F>
F trilinear(const AlbertElement<F>& x, const AlbertElement<F>& y, const AlbertElement<F>& z) {
    return F::ratio(1, 3) * trace_form(cross(x, y), z);
}

template <ExactField F>
bool is_rank1(const AlbertElement<F>& v) {
    return !v.is_zero() && cross(v, v).is_zero();
}

}  // namespace e6ag
