// Operator calculus on W: L_x, dyads xy, triple operators xyz, slot sums I_i,
// orth(x), and the transpose with respect to the trace form.
//
// EndW is a dense 27x27 matrix acting on column vectors in the canonical W
// basis. The canonical basis is orthogonal but not orthonormal (slot vectors
// have norm 2), so the trace-form transpose is G^-1 M^t G with
// G = diag(1,1,1, 2,...,2), not the entrywise transpose.
#pragma once

#include "albert.hpp"

namespace e6ag {

template <ExactField F>
struct EndW {
    // row-major; action is matrix * column vector
    std::array<F, kDimW * kDimW> m{};

    static EndW zero() { return EndW{}; }
    static EndW identity() {
        EndW r;
        for (int i = 0; i < kDimW; ++i) r.at(i, i) = F::one();
        return r;
    }

    F& at(int i, int j) { return m[static_cast<std::size_t>(i * kDimW + j)]; }
    const F& at(int i, int j) const { return m[static_cast<std::size_t>(i * kDimW + j)]; }

    bool operator==(const EndW& o) const { return m == o.m; }
    bool is_zero() const {
        for (const auto& x : m)
            if (!x.is_zero()) return false;
        return true;
    }

    AlbertElement<F> apply(const AlbertElement<F>& v) const {
        AlbertElement<F> r;
        for (int i = 0; i < kDimW; ++i) {
            F s = F::zero();
            const F* row = m.data() + i * kDimW;
            for (int j = 0; j < kDimW; ++j)
                if (!v.c[j].is_zero()) s += row[j] * v.c[j];
            r.c[i] = s;
        }
        return r;
    }

    F trace() const {
        F s = F::zero();
        for (int i = 0; i < kDimW; ++i) s += at(i, i);
        return s;
    }
};

template <ExactField F>
EndW<F> operator+(const EndW<F>& a, const EndW<F>& b) {
    EndW<F> r;
    for (std::size_t i = 0; i < r.m.size(); ++i) r.m[i] = a.m[i] + b.m[i];
    return r;
}
template <ExactField F>
EndW<F> operator-(const EndW<F>& a, const EndW<F>& b) {
    EndW<F> r;
    for (std::size_t i = 0; i < r.m.size(); ++i) r.m[i] = a.m[i] - b.m[i];
    return r;
}
template <ExactField F>
EndW<F> operator*(const F& s, const EndW<F>& a) {
    EndW<F> r;
    for (std::size_t i = 0; i < r.m.size(); ++i) r.m[i] = s * a.m[i];
    return r;
}
template <ExactField F>
EndW<F>& operator+=(EndW<F>& a, const EndW<F>& b) {
    for (std::size_t i = 0; i < a.m.size(); ++i) a.m[i] += b.m[i];
    return a;
}

template <ExactField F>
EndW<F> compose(const EndW<F>& a, const EndW<F>& b) {
    EndW<F> r;
    for (int i = 0; i < kDimW; ++i)
        for (int k = 0; k < kDimW; ++k) {
            const F& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < kDimW; ++j) r.at(i, j) += aik * b.at(k, j);
        }
    return r;
}

template <ExactField F>
EndW<F> commutator(const EndW<F>& a, const EndW<F>& b) {
    return compose(a, b) - compose(b, a);
}

// 1/2 (AB + BA)
template <ExactField F>
EndW<F> sym_compose(const EndW<F>& a, const EndW<F>& b) {
    return F::ratio(1, 2) * (compose(a, b) + compose(b, a));
}

// Transpose with respect to the trace form: (M^T)_ij = g_i^-1 M_ji g_j.
template <ExactField F>
EndW<F> op_transpose(const EndW<F>& a) {
    const F half = F::ratio(1, 2);
    EndW<F> r;
    for (int i = 0; i < kDimW; ++i)
        for (int j = 0; j < kDimW; ++j) {
            F v = a.at(j, i);
            if (gram_weight(j) == 2) v = v + v;
            if (gram_weight(i) == 2) v = half * v;
            r.at(i, j) = v;
        }
    return r;
}

// M += coef * |out><form| with the bra taken in the trace form.
template <ExactField F>
void acc_rank1(EndW<F>& m, const F& coef, const AlbertElement<F>& out,
               const AlbertElement<F>& form) {
    for (int j = 0; j < kDimW; ++j) {
        F fj = form.c[j];
        if (fj.is_zero()) continue;
        if (gram_weight(j) == 2) fj = fj + fj;
        fj = coef * fj;
        for (int i = 0; i < kDimW; ++i) {
            if (out.c[i].is_zero()) continue;
            m.at(i, j) += out.c[i] * fj;
        }
    }
}

// L_x : a -> x.a
template <ExactField F>
EndW<F> op_L(const AlbertElement<F>& x) {
    EndW<F> r;
    for (int j = 0; j < kDimW; ++j) {
        const AlbertElement<F> col = jordan_mul(x, AlbertElement<F>::basis(j));
        for (int i = 0; i < kDimW; ++i) r.at(i, j) = col.c[i];
    }
    return r;
}

// xy : a -> 1/2(<a,x>y + <a,y>x)
template <ExactField F>
EndW<F> op_dyad(const AlbertElement<F>& x, const AlbertElement<F>& y) {
    EndW<F> r;
    const F half = F::ratio(1, 2);
    acc_rank1(r, half, y, x);
    acc_rank1(r, half, x, y);
    return r;
}

// m += coef * xyz where xyz : a -> <a,x,y>z + <a,y,z>x + <a,z,x>y.
// Uses <a,x,y> = 1/3 <x#y, a>.
template <ExactField F>
void acc_triple(EndW<F>& m, const F& coef, const AlbertElement<F>& x,
                const AlbertElement<F>& y, const AlbertElement<F>& z) {
    const F t = F::ratio(1, 3) * coef;
    acc_rank1(m, t, z, cross(x, y));
    acc_rank1(m, t, x, cross(y, z));
    acc_rank1(m, t, y, cross(z, x));
}

template <ExactField F>
EndW<F> op_triple(const AlbertElement<F>& x, const AlbertElement<F>& y,
                  const AlbertElement<F>& z) {
    EndW<F> r;
    acc_triple(r, F::one(), x, y, z);
    return r;
}

// I_i = sum over the orthogonal slot basis with weight 1/<b,b> = 1/2.
template <ExactField F>
EndW<F> op_slot_sum(int i) {
    if (i < 1 || i > 3) throw std::invalid_argument("op_slot_sum: slot index in {1,2,3}");
    EndW<F> r;
    const F half = F::ratio(1, 2);
    for (int j = 0; j < 8; ++j) {
        const auto v = AlbertElement<F>::from_slot(Octonion<F>::basis(j), i);
        acc_rank1(r, half, v, v);
    }
    return r;
}

// orth(x) = sum_{b in B} (x#b) x b over the orthonormal basis B; implemented
// over the orthogonal basis with weights 1/<b,b>.
template <ExactField F>
EndW<F> orth(const AlbertElement<F>& x) {
    EndW<F> r;
    const F half = F::ratio(1, 2);
    for (int i = 1; i <= 3; ++i) {
        const auto d = AlbertElement<F>::diag_unit(i);
        acc_triple(r, F::one(), cross(x, d), x, d);
        for (int j = 0; j < 8; ++j) {
            const auto v = AlbertElement<F>::from_slot(Octonion<F>::basis(j), i);
            acc_triple(r, half, cross(x, v), x, v);
        }
    }
    return r;
}

}  // namespace e6ag
