// Deterministic seeded randomness for the property suites. mt19937_64 output
// is bit-exact across platforms; we avoid std distributions (which are not)
// and draw small integers directly. Random elements use coordinates in
// [-3, 3] to keep rational growth polynomial while staying generic.
#pragma once

#include <optional>
#include <random>

#include "albert.hpp"

namespace e6ag {

class SmallRng {
public:
    explicit SmallRng(uint64_t seed) : eng_(seed) {}

    uint64_t raw() { return eng_(); }
    // uniform-ish integer in [-3, 3]
    long small_int() { return static_cast<long>(eng_() % 7) - 3; }
    long nonneg(long bound) { return static_cast<long>(eng_() % static_cast<uint64_t>(bound)); }

    template <ExactField F>
    F scalar() {
        return F::of(small_int());
    }

    template <ExactField F>
    Octonion<F> octonion() {
        Octonion<F> o;
        for (int i = 0; i < 8; ++i) o.c[i] = F::of(small_int());
        return o;
    }

    template <ExactField F>
    AlbertElement<F> albert() {
        AlbertElement<F> x;
        for (int i = 0; i < kDimW; ++i) x.c[i] = F::of(small_int());
        return x;
    }

    template <ExactField F>
    AlbertElement<F> albert_nonzero() {
        for (;;) {
            auto x = albert<F>();
            if (!x.is_zero()) return x;
        }
    }

    template <ExactField F>
    AlbertElement<F> traceless_albert() {
        auto x = albert<F>();
        // kill the trace against 1_1 (keeps small coordinates)
        x.c[0] -= albert_trace(x);
        return x;
    }

    // Octonion with a*a = 0 (needs i in the field, or a finite field).
    template <ExactField F>
    std::optional<Octonion<F>> isotropic_octonion() {
        if constexpr (std::is_same_v<F, Fp>) {
            // c0 = 0, pick c1..c5, then solve c6^2 + c7^2 = -(sum of squares)
            for (int attempt = 0; attempt < 200; ++attempt) {
                Octonion<F> o;
                F s = F::zero();
                for (int i = 1; i <= 5; ++i) {
                    o.c[i] = F::of(small_int());
                    s += o.c[i] * o.c[i];
                }
                for (int inner = 0; inner < 64; ++inner) {
                    const F c6 = F::from_residue(eng_());
                    const F rem = -s - c6 * c6;
                    if (auto c7 = rem.sqrt()) {
                        o.c[6] = c6;
                        o.c[7] = *c7;
                        if (!o.is_zero()) return o;
                        break;
                    }
                }
            }
            return std::nullopt;
        } else if constexpr (field_traits<F>::has_i) {
            // lambda * ((1-t^2) e_p + 2t e_q + i(1+t^2) e_r)
            const F i = *field_traits<F>::sqrt_minus_one();
            for (int attempt = 0; attempt < 64; ++attempt) {
                const F t = F::of(small_int());
                long p = 1 + nonneg(7), q = 1 + nonneg(7), r = 1 + nonneg(7);
                if (p == q || q == r || p == r) continue;
                F lam = F::of(small_int());
                if (lam.is_zero()) lam = F::one();
                Octonion<F> o;
                o.c[static_cast<std::size_t>(p)] = lam * (F::one() - t * t);
                o.c[static_cast<std::size_t>(q)] = lam * (t + t);
                o.c[static_cast<std::size_t>(r)] = lam * i * (F::one() + t * t);
                if (!o.is_zero()) return o;
            }
            return std::nullopt;
        } else {
            return std::nullopt;  // positive-definite rational form has none
        }
    }

    // Rank-1 Albert element: alpha 1_j + beta 1_k + <a>_i with alpha beta = N(a).
    template <ExactField F>
    AlbertElement<F> rank1_element() {
        constexpr int jk[3][2] = {{2, 3}, {1, 3}, {1, 2}};
        for (;;) {
            const int i = 1 + static_cast<int>(nonneg(3));
            const auto a = octonion<F>();
            F alpha = F::of(small_int());
            if (alpha.is_zero()) alpha = F::one();
            const F beta = oct_norm(a) / alpha;
            auto v = AlbertElement<F>::from_slot(a, i);
            v.c[jk[i - 1][0] - 1] = alpha;
            v.c[jk[i - 1][1] - 1] = beta;
            if (!v.is_zero()) return v;
        }
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace e6ag
