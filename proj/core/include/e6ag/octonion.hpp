// Split-octonion arithmetic in the standard orthogonal basis
// e0=e, e1=a, e2=b, e3=ab, e4=c, e5=ac, e6=bc, e7=(ab)c, with N(e_i)=1.
//
// The multiplication table is fixed by the oriented Fano lines
//   (1,2,3) (1,4,5) (2,4,6) (3,4,7) (2,5,7) (6,5,3) (7,6,1)
// (e_i e_j = e_k cyclically along a line, anti-commuting otherwise,
// e_i^2 = -e for i >= 1). This is the Cayley-Dickson orientation; the
// composition law N(xy) = N(x)N(y) and all downstream identities are
// machine-checked against it by the test suite.
#pragma once

#include <array>
#include <cstdint>

#include "scalar.hpp"

namespace e6ag {

namespace detail {
struct OctTable {
    std::array<std::array<int8_t, 8>, 8> idx{};
    std::array<std::array<int8_t, 8>, 8> sgn{};
};
constexpr OctTable make_oct_table() {
    OctTable t;
    t.idx[0][0] = 0; t.sgn[0][0] = 1;
    for (int i = 1; i < 8; ++i) {
        t.idx[0][i] = static_cast<int8_t>(i); t.sgn[0][i] = 1;
        t.idx[i][0] = static_cast<int8_t>(i); t.sgn[i][0] = 1;
        t.idx[i][i] = 0; t.sgn[i][i] = -1;
    }
    constexpr int lines[7][3] = {{1, 2, 3}, {1, 4, 5}, {2, 4, 6}, {3, 4, 7},
                                 {2, 5, 7}, {6, 5, 3}, {7, 6, 1}};
    for (const auto& l : lines) {
        const int rot[3][3] = {{l[0], l[1], l[2]}, {l[1], l[2], l[0]}, {l[2], l[0], l[1]}};
        for (const auto& r : rot) {
            t.idx[r[0]][r[1]] = static_cast<int8_t>(r[2]); t.sgn[r[0]][r[1]] = 1;
            t.idx[r[1]][r[0]] = static_cast<int8_t>(r[2]); t.sgn[r[1]][r[0]] = -1;
        }
    }
    return t;
}
inline constexpr OctTable oct_table = make_oct_table();
}  // namespace detail

template <ExactField F>
struct Octonion {
    std::array<F, 8> c{};

    static Octonion zero() { return Octonion{}; }
    static Octonion unit() { return basis(0); }
    static Octonion basis(int i) {
        Octonion o;
        o.c[static_cast<std::size_t>(i)] = F::one();
        return o;
    }

    bool is_zero() const {
        for (const auto& x : c)
            if (!x.is_zero()) return false;
        return true;
    }
    bool operator==(const Octonion& o) const { return c == o.c; }
};

template <ExactField F>
Octonion<F> operator+(const Octonion<F>& x, const Octonion<F>& y) {
    Octonion<F> r;
    for (int i = 0; i < 8; ++i) r.c[i] = x.c[i] + y.c[i];
    return r;
}
template <ExactField F>
Octonion<F> operator-(const Octonion<F>& x, const Octonion<F>& y) {
    Octonion<F> r;
    for (int i = 0; i < 8; ++i) r.c[i] = x.c[i] - y.c[i];
    return r;
}
template <ExactField F>
Octonion<F> operator*(const F& s, const Octonion<F>& x) {
    Octonion<F> r;
    for (int i = 0; i < 8; ++i) r.c[i] = s * x.c[i];
    return r;
}

template <ExactField F>
Octonion<F> oct_mul(const Octonion<F>& x, const Octonion<F>& y) {
    Octonion<F> r;
    for (int i = 0; i < 8; ++i) {
        if (x.c[i].is_zero()) continue;
        for (int j = 0; j < 8; ++j) {
            if (y.c[j].is_zero()) continue;
            const F p = x.c[i] * y.c[j];
            const int k = detail::oct_table.idx[i][j];
            if (detail::oct_table.sgn[i][j] > 0)
                r.c[k] += p;
            else
                r.c[k] -= p;
        }
    }
    return r;
}

template <ExactField F>
Octonion<F> oct_conj(const Octonion<F>& x) {
    Octonion<F> r;
    r.c[0] = x.c[0];
    for (int i = 1; i < 8; ++i) r.c[i] = -x.c[i];
    return r;
}

template <ExactField F>
F oct_norm(const Octonion<F>& x) {
    F s = F::zero();
    for (const auto& v : x.c) s += v * v;
    return s;
}

// <x,y> = N(x+y) - N(x) - N(y) = 2 sum x_i y_i in this basis.
template <ExactField F>
F oct_bilinear(const Octonion<F>& x, const Octonion<F>& y) {
    F s = F::zero();
    for (int i = 0; i < 8; ++i) s += x.c[i] * y.c[i];
    return s + s;
}

// x with x*x = 0, equivalently N(x) = 0 and <x,e> = 0.
template <ExactField F>
bool is_isotropic(const Octonion<F>& x) {
    return oct_norm(x).is_zero() && x.c[0].is_zero();
}

}  // namespace e6ag
