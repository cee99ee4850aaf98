// Dense exact linear algebra: rank with pivot-row reporting, span solving,
// fraction-free (Bareiss) elimination over Z and Z[i] for the rational
// fields, plain elimination over prime fields.
//
// Sizes of interest here go up to ~3700 rows by ~6100 columns. Pivoting is
// deterministic: first nonzero in row-major order.
#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "scalar.hpp"

namespace e6ag {

template <ExactField F>
struct Matrix {
    std::size_t rows = 0, cols = 0;
    std::vector<F> a;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, F::zero()) {}

    F& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const F& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
    F* row(std::size_t i) { return a.data() + i * cols; }
    const F* row(std::size_t i) const { return a.data() + i * cols; }
};

struct RankResult {
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_rows;  // independent subset, input order
    std::vector<std::size_t> pivot_cols;
};

// ---------------------------------------------------------------------------
// Gaussian integers for fraction-free elimination over gaussian rationals.
// ---------------------------------------------------------------------------
struct Zi {
    mpz_class re, im;
    bool is_zero() const { return re == 0 && im == 0; }
};
inline Zi operator*(const Zi& a, const Zi& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline Zi operator-(const Zi& a, const Zi& b) { return {a.re - b.re, a.im - b.im}; }
// Exact division: caller guarantees divisibility (Bareiss invariant).
inline Zi divexact(const Zi& a, const Zi& b) {
    mpz_class n = b.re * b.re + b.im * b.im;
    mpz_class re = a.re * b.re + a.im * b.im;
    mpz_class im = a.im * b.re - a.re * b.im;
    Zi q;
    mpz_divexact(q.re.get_mpz_t(), re.get_mpz_t(), n.get_mpz_t());
    mpz_divexact(q.im.get_mpz_t(), im.get_mpz_t(), n.get_mpz_t());
    return q;
}

inline mpz_class divexact(const mpz_class& a, const mpz_class& b) {
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}
inline bool ring_is_zero(const mpz_class& x) { return x == 0; }
inline bool ring_is_zero(const Zi& x) { return x.is_zero(); }

// ---------------------------------------------------------------------------
// Fraction-free Bareiss elimination over an integral domain (mpz_class or
// Zi). Entries stay in the domain; intermediate values are minors of the
// input. Returns rank and deterministic pivot rows/cols.
// ---------------------------------------------------------------------------
template <class R>
RankResult bareiss_rank(std::vector<std::vector<R>>& m) {
    RankResult res;
    if (m.empty()) return res;
    const std::size_t nc = m[0].size();
    R prev_piv{1};
    std::vector<bool> used(m.size(), false);
    for (std::size_t c = 0; c < nc; ++c) {
        std::size_t pr = m.size();
        for (std::size_t r = 0; r < m.size(); ++r)
            if (!used[r] && !ring_is_zero(m[r][c])) { pr = r; break; }
        if (pr == m.size()) continue;
        used[pr] = true;
        res.pivot_rows.push_back(pr);
        res.pivot_cols.push_back(c);
        const R piv = m[pr][c];
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (used[r] || ring_is_zero(m[r][c])) continue;
            const R f = m[r][c];
            for (std::size_t j = c; j < nc; ++j)
                m[r][j] = divexact(m[r][j] * piv - f * m[pr][j], prev_piv);
        }
        prev_piv = piv;
        ++res.rank;
    }
    return res;
}

// Same pivot strategy, plain field arithmetic.
template <ExactField F>
RankResult plain_rank_inplace(std::vector<std::vector<F>>& m) {
    RankResult res;
    if (m.empty()) return res;
    const std::size_t nc = m[0].size();
    std::vector<bool> used(m.size(), false);
    for (std::size_t c = 0; c < nc; ++c) {
        std::size_t pr = m.size();
        for (std::size_t r = 0; r < m.size(); ++r)
            if (!used[r] && !m[r][c].is_zero()) { pr = r; break; }
        if (pr == m.size()) continue;
        used[pr] = true;
        res.pivot_rows.push_back(pr);
        res.pivot_cols.push_back(c);
        const F inv_piv = m[pr][c].inv();
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (used[r] || m[r][c].is_zero()) continue;
            const F f = m[r][c] * inv_piv;
            for (std::size_t j = c; j < nc; ++j)
                m[r][j] -= f * m[pr][j];
        }
        ++res.rank;
    }
    return res;
}

// ---------------------------------------------------------------------------
// Row scaling to integral entries. Pivot structure is invariant under
// nonzero row scaling, so ranks and pivot indices carry over.
// ---------------------------------------------------------------------------
inline std::vector<mpz_class> clear_denominators(const std::vector<Rat>& row) {
    mpz_class l = 1;
    for (const auto& x : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.den().get_mpz_t());
    std::vector<mpz_class> out;
    out.reserve(row.size());
    for (const auto& x : row) out.push_back(x.num() * divexact(l, x.den()));
    return out;
}
inline std::vector<Zi> clear_denominators(const std::vector<GaussRat>& row) {
    mpz_class l = 1;
    for (const auto& x : row) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.re().den().get_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.im().den().get_mpz_t());
    }
    std::vector<Zi> out;
    out.reserve(row.size());
    for (const auto& x : row)
        out.push_back(Zi{x.re().num() * divexact(l, x.re().den()),
                         x.im().num() * divexact(l, x.im().den())});
    return out;
}

// ---------------------------------------------------------------------------
// rank_and_basis: rank of the span plus a deterministic independent subset.
// Rational and gaussian-rational inputs go through fraction-free elimination
// on denominator-cleared rows; prime fields use plain elimination.
// ---------------------------------------------------------------------------
template <ExactField F>
RankResult rank_and_basis(const std::vector<std::vector<F>>& vectors) {
    for (const auto& v : vectors)
        if (v.size() != vectors.front().size())
            throw std::invalid_argument("rank_and_basis: ragged input");
    if constexpr (std::is_same_v<F, Rat>) {
        std::vector<std::vector<mpz_class>> m;
        m.reserve(vectors.size());
        for (const auto& v : vectors) m.push_back(clear_denominators(v));
        return bareiss_rank(m);
    } else if constexpr (std::is_same_v<F, GaussRat>) {
        std::vector<std::vector<Zi>> m;
        m.reserve(vectors.size());
        for (const auto& v : vectors) m.push_back(clear_denominators(v));
        return bareiss_rank(m);
    } else {
        auto m = vectors;
        return plain_rank_inplace(m);
    }
}

// ---------------------------------------------------------------------------
// SpanSolver: repeated exact solves against a fixed independent row set.
// Rows are brought to reduced echelon form once; each solve is a reduction
// pass. Coefficients refer to the original rows.
// ---------------------------------------------------------------------------
template <ExactField F>
class SpanSolver {
public:
    explicit SpanSolver(std::vector<std::vector<F>> rows) : rref_(std::move(rows)) {
        const std::size_t n = rref_.size();
        if (n == 0) return;
        const std::size_t nc = rref_[0].size();
        transform_.assign(n, std::vector<F>(n, F::zero()));
        for (std::size_t i = 0; i < n; ++i) transform_[i][i] = F::one();
        std::size_t r = 0;
        for (std::size_t c = 0; c < nc && r < n; ++c) {
            std::size_t pr = n;
            for (std::size_t i = r; i < n; ++i)
                if (!rref_[i][c].is_zero()) { pr = i; break; }
            if (pr == n) continue;
            std::swap(rref_[pr], rref_[r]);
            std::swap(transform_[pr], transform_[r]);
            const F inv_piv = rref_[r][c].inv();
            scale_row(rref_[r], transform_[r], inv_piv);
            for (std::size_t i = 0; i < n; ++i) {
                if (i == r || rref_[i][c].is_zero()) continue;
                const F f = rref_[i][c];
                axpy(rref_[i], transform_[i], -f, rref_[r], transform_[r]);
            }
            pivots_.push_back(c);
            ++r;
        }
        if (pivots_.size() != n)
            throw std::invalid_argument("SpanSolver: rows not independent");
    }

    std::size_t dim() const { return pivots_.size(); }

    // Coefficients c with sum_i c_i * row_i == v, or nullopt.
    std::optional<std::vector<F>> solve(const std::vector<F>& v) const {
        if (rref_.empty()) return std::nullopt;
        if (v.size() != rref_[0].size())
            throw std::invalid_argument("SpanSolver: dimension mismatch");
        std::vector<F> residue = v;
        std::vector<F> c(pivots_.size(), F::zero());
        for (std::size_t r = 0; r < pivots_.size(); ++r) {
            const F f = residue[pivots_[r]];
            if (f.is_zero()) continue;
            c[r] = f;
            for (std::size_t j = 0; j < residue.size(); ++j)
                residue[j] -= f * rref_[r][j];
        }
        for (const auto& x : residue)
            if (!x.is_zero()) return std::nullopt;
        std::vector<F> coeff(pivots_.size(), F::zero());
        for (std::size_t r = 0; r < pivots_.size(); ++r) {
            if (c[r].is_zero()) continue;
            for (std::size_t i = 0; i < coeff.size(); ++i)
                coeff[i] += c[r] * transform_[r][i];
        }
        return coeff;
    }

    bool contains(const std::vector<F>& v) const { return solve(v).has_value(); }

private:
    static void scale_row(std::vector<F>& a, std::vector<F>& t, const F& s) {
        for (auto& x : a) x *= s;
        for (auto& x : t) x *= s;
    }
    static void axpy(std::vector<F>& a, std::vector<F>& ta, const F& s,
                     const std::vector<F>& b, const std::vector<F>& tb) {
        for (std::size_t j = 0; j < a.size(); ++j) a[j] += s * b[j];
        for (std::size_t j = 0; j < ta.size(); ++j) ta[j] += s * tb[j];
    }

    std::vector<std::vector<F>> rref_;
    std::vector<std::vector<F>> transform_;  // rref = transform * original
    std::vector<std::size_t> pivots_;
};

// solve_in_span: one-shot convenience over SpanSolver.
template <ExactField F>
std::optional<std::vector<F>> solve_in_span(const std::vector<std::vector<F>>& basis,
                                            const std::vector<F>& target) {
    SpanSolver<F> s(basis);
    return s.solve(target);
}

}  // namespace e6ag
