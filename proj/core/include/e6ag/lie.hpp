// The Lie algebra side: g = Der(det) of dimension 78, built from operators
// L_a (a traceless) and their commutators; the Killing form K = 4 Tr_W(XY);
// S : Sq^2 g -> End(g); the product diamond on im(S); and the embedding
// sigma(S(XY)) = 72 X.Y - 2 Tr_W(XY) id_W.
//
// Lie elements are handled as coordinate vectors in the fixed 78-element
// basis; End(g) values are 78x78 matrices over the same basis.
#pragma once

#include <memory>

#include "linalg.hpp"
#include "sym3.hpp"

namespace e6ag {

inline constexpr int kDimG = 78;
inline constexpr int kDualCoxeter = 12;

template <ExactField F>
struct PairSum {
    struct Term {
        F coeff;
        std::vector<F> x, y;  // g-coordinates, unordered pair
    };
    std::vector<Term> terms;

    PairSum& add(F coeff, std::vector<F> x, std::vector<F> y) {
        terms.push_back({std::move(coeff), std::move(x), std::move(y)});
        return *this;
    }
    PairSum scaled(const F& s) const {
        PairSum r = *this;
        for (auto& t : r.terms) t.coeff = s * t.coeff;
        return r;
    }
    PairSum operator+(const PairSum& o) const {
        PairSum r = *this;
        r.terms.insert(r.terms.end(), o.terms.begin(), o.terms.end());
        return r;
    }
};

template <ExactField F>
class LieModel {
public:
    LieModel() { build(); }

    const std::vector<EndW<F>>& basis() const { return basis_; }

    // Coordinates of a 27x27 matrix in the derivation basis, if it lies in g.
    std::optional<std::vector<F>> coords(const EndW<F>& m) const {
        return solver_->solve(flatten(m));
    }

    EndW<F> matrix_of(const std::vector<F>& u) const {
        EndW<F> r;
        for (int i = 0; i < kDimG; ++i) {
            if (u[i].is_zero()) continue;
            r += u[i] * basis_[i];
        }
        return r;
    }

    // K(X,Y) = 4 Tr_W(XY) through the cached Gram matrix.
    F killing(const std::vector<F>& u, const std::vector<F>& v) const {
        F s = F::zero();
        for (int i = 0; i < kDimG; ++i) {
            if (u[i].is_zero()) continue;
            F row = F::zero();
            for (int j = 0; j < kDimG; ++j)
                if (!v[j].is_zero())
                    row += gram_.at(i, j) *
                           v[j];
            s += u[i] * row;
        }
        return s;
    }
    static F killing(const EndW<F>& x, const EndW<F>& y) {
        return F::of(4) * compose(x, y).trace();
    }

    // ad_u as a 78x78 matrix (columns: [u, basis_j] in coordinates).
    Matrix<F> ad(const std::vector<F>& u) const {
        Matrix<F> m(kDimG, kDimG);
        for (int i = 0; i < kDimG; ++i) {
            if (u[i].is_zero()) continue;
            const auto& adi = ad_[i];
            const F& c = u[i];
            for (std::size_t k = 0; k < m.a.size(); ++k) m.a[k] += c * adi.a[k];
        }
        return m;
    }
    const Matrix<F>& ad_basis(int i) const { return ad_[i]; }

    std::vector<F> bracket(const std::vector<F>& u, const std::vector<F>& v) const {
        const Matrix<F> adu = ad(u);
        std::vector<F> r(kDimG, F::zero());
        for (int i = 0; i < kDimG; ++i)
            for (int j = 0; j < kDimG; ++j)
                if (!v[j].is_zero())
                    r[i] +=
                        adu.at(i, j) *
                        v[j];
        return r;
    }

    // S(XY) = h_vee adX.adY + 1/2 (X K(Y,_) + Y K(X,_)) as a 78x78 matrix.
    Matrix<F> S_single(const std::vector<F>& x, const std::vector<F>& y) const {
        const Matrix<F> adx = ad(x), ady = ad(y);
        Matrix<F> m(kDimG, kDimG);
        const F half = F::ratio(1, 2);
        const F hv = F::of(kDualCoxeter);
        for (int i = 0; i < kDimG; ++i)
            for (int j = 0; j < kDimG; ++j) {
                F s = F::zero();
                for (int k = 0; k < kDimG; ++k)
                    s += adx.at(i, k) *
                             ady.at(k, j) +
                         ady.at(i, k) *
                             adx.at(k, j);
                m.at(i, j) = hv * half * s;
            }
        // rank-one tail: Z -> 1/2 (K(Y,Z) X + K(X,Z) Y)
        std::vector<F> kx(kDimG, F::zero()), ky(kDimG, F::zero());
        for (int j = 0; j < kDimG; ++j) {
            std::vector<F> ej(kDimG, F::zero());
            ej[j] = F::one();
            kx[j] = killing(x, ej);
            ky[j] = killing(y, ej);
        }
        for (int i = 0; i < kDimG; ++i)
            for (int j = 0; j < kDimG; ++j)
                m.at(i, j) +=
                    half * (x[i] * ky[j] +
                            y[i] * kx[j]);
        return m;
    }

    Matrix<F> S_map(const PairSum<F>& p) const {
        Matrix<F> m(kDimG, kDimG);
        for (const auto& t : p.terms) {
            const Matrix<F> s = S_single(t.x, t.y);
            for (std::size_t k = 0; k < m.a.size(); ++k) m.a[k] += t.coeff * s.a[k];
        }
        return m;
    }

    // sigma(S(XY)) = 72 X.Y - 2 Tr_W(XY) id_W, extended linearly.
    EndW<F> sigma_embed(const PairSum<F>& p) const {
        EndW<F> r;
        const F half = F::ratio(1, 2);
        for (const auto& t : p.terms) {
            const EndW<F> xm = matrix_of(t.x), ym = matrix_of(t.y);
            const EndW<F> prod = compose(xm, ym);
            const EndW<F> sym = half * (prod + compose(ym, xm));
            EndW<F> term = F::of(72) * sym;
            const F tr2 = F::of(2) * prod.trace();
            for (int i = 0; i < kDimW; ++i) term.at(i, i) -= tr2;
            r += t.coeff * term;
        }
        return r;
    }

    // diamond on im(S), expressed on preimage PairSums.
    PairSum<F> diamond(const PairSum<F>& p, const PairSum<F>& q) const {
        PairSum<F> out;
        const F h2 = F::ratio(kDualCoxeter, 2);
        const F quarter = F::ratio(1, 4);
        for (const auto& tp : p.terms)
            for (const auto& tq : q.terms) {
                const F c = tp.coeff * tq.coeff;
                const auto& A = tp.x;
                const auto& B = tp.y;
                const auto& C = tq.x;
                const auto& D = tq.y;
                const Matrix<F> bullAB = bullet(A, B), bullCD = bullet(C, D);
                out.add(c * h2, A, apply(bullCD, B));
                out.add(c * h2, apply(bullCD, A), B);
                out.add(c * h2, C, apply(bullAB, D));
                out.add(c * h2, apply(bullAB, C), D);
                out.add(c * h2, bracket(A, C), bracket(B, D));
                out.add(c * h2, bracket(A, D), bracket(B, C));
                out.add(c * quarter * killing(A, C), B, D);
                out.add(c * quarter * killing(A, D), B, C);
                out.add(c * quarter * killing(B, C), A, D);
                out.add(c * quarter * killing(B, D), A, C);
            }
        return out;
    }

    // Unit preimage: S(sum of K-dual pairs) = (h_vee + 1) id_g, so the
    // K-orthogonalized Casimir over (h_vee + 1) maps to id_g (and to id_W
    // under sigma). Both facts are asserted by the test suite.
    const PairSum<F>& unit_preimage() const { return unit_pre_; }

    // Measured proportionality Tr_adj(ad X ad Y) = c Tr_W(XY) on basis pairs
    // with nonzero right side; reported next to the K = 4 Tr_W convention.
    std::vector<F> adjoint_trace_ratios(int want = 8) const {
        std::vector<F> out;
        for (int i = 0; i < kDimG && static_cast<int>(out.size()) < want; ++i)
            for (int j = i; j < kDimG && static_cast<int>(out.size()) < want; ++j) {
                const F tw = compose(basis_[i],
                                     basis_[j])
                                 .trace();
                if (tw.is_zero()) continue;
                F ta = F::zero();
                const auto& adi = ad_[i];
                const auto& adj = ad_[j];
                for (int r = 0; r < kDimG; ++r)
                    for (int k = 0; k < kDimG; ++k)
                        ta += adi.at(r, k) *
                              adj.at(k, r);
                out.push_back(ta / tw);
            }
        return out;
    }

private:
    Matrix<F> bullet(const std::vector<F>& x, const std::vector<F>& y) const {
        const Matrix<F> adx = ad(x), ady = ad(y);
        Matrix<F> m(kDimG, kDimG);
        const F half = F::ratio(1, 2);
        for (int i = 0; i < kDimG; ++i)
            for (int k = 0; k < kDimG; ++k) {
                const F a = adx.at(i, k);
                const F b = ady.at(i, k);
                if (a.is_zero() && b.is_zero()) continue;
                for (int j = 0; j < kDimG; ++j)
                    m.at(i, j) +=
                        half * (a * ady.at(k, j) +
                                b * adx.at(k, j));
            }
        return m;
    }
    static std::vector<F> apply(const Matrix<F>& m, const std::vector<F>& v) {
        std::vector<F> r(m.rows, F::zero());
        for (std::size_t i = 0; i < m.rows; ++i)
            for (std::size_t j = 0; j < m.cols; ++j)
                if (!v[j].is_zero()) r[i] += m.at(i, j) * v[j];
        return r;
    }

    void build() {
        // Traceless W basis: 1_1 - 1_2, 1_2 - 1_3, and the 24 slot vectors.
        std::vector<AlbertElement<F>> traceless;
        traceless.push_back(AlbertElement<F>::diag_unit(1) - AlbertElement<F>::diag_unit(2));
        traceless.push_back(AlbertElement<F>::diag_unit(2) - AlbertElement<F>::diag_unit(3));
        for (int i = 1; i <= 3; ++i)
            for (int j = 0; j < 8; ++j)
                traceless.push_back(AlbertElement<F>::from_slot(Octonion<F>::basis(j), i));

        std::vector<EndW<F>> lops;
        for (const auto& a : traceless) lops.push_back(op_L(a));

        IncrementalSpan<F> span(kDimW * kDimW);
        auto consider = [&](const EndW<F>& m) {
            if (static_cast<int>(basis_.size()) == kDimG) return;
            if (span.add(flatten(m))) basis_.push_back(m);
        };
        for (const auto& l : lops) consider(l);
        for (std::size_t i = 0; i < lops.size() && static_cast<int>(basis_.size()) < kDimG; ++i)
            for (std::size_t j = i + 1; j < lops.size(); ++j) {
                consider(commutator(lops[i], lops[j]));
                if (static_cast<int>(basis_.size()) == kDimG) break;
            }
        if (static_cast<int>(basis_.size()) != kDimG)
            throw std::logic_error("LieModel: derivation basis has unexpected dimension");

        std::vector<std::vector<F>> rows;
        rows.reserve(kDimG);
        for (const auto& b : basis_) rows.push_back(flatten(b));
        solver_ = std::make_unique<SpanSolver<F>>(std::move(rows));

        // ad matrices and the Killing Gram matrix
        ad_.reserve(kDimG);
        for (int i = 0; i < kDimG; ++i) {
            Matrix<F> m(kDimG, kDimG);
            for (int j = 0; j < kDimG; ++j) {
                const auto col = coords(commutator(basis_[i],
                                                   basis_[j]));
                if (!col) throw std::logic_error("LieModel: bracket left the span");
                for (int k = 0; k < kDimG; ++k)
                    m.at(k, j) =
                        (*col)[k];
            }
            ad_.push_back(std::move(m));
        }
        gram_ = Matrix<F>(kDimG, kDimG);
        for (int i = 0; i < kDimG; ++i)
            for (int j = i; j < kDimG; ++j) {
                const F k = killing(basis_[i],
                                    basis_[j]);
                gram_.at(i, j) = k;
                gram_.at(j, i) = k;
            }
        build_unit_preimage();
    }

    // Congruence-diagonalize the Killing Gram matrix, then assemble the
    // Casimir as a 78-term PairSum of K-orthogonal vectors.
    void build_unit_preimage() {
        std::vector<std::vector<F>> vecs(kDimG, std::vector<F>(kDimG, F::zero()));
        for (int i = 0; i < kDimG; ++i) vecs[i][i] = F::one();
        auto form = [&](const std::vector<F>& u, const std::vector<F>& v) { return killing(u, v); };
        for (std::size_t k = 0; k < vecs.size(); ++k) {
            F d = form(vecs[k], vecs[k]);
            if (d.is_zero()) {
                // find a partner to repair the diagonal (char != 2)
                bool fixed = false;
                for (std::size_t j = k + 1; j < vecs.size() && !fixed; ++j) {
                    if (!form(vecs[k], vecs[j]).is_zero()) {
                        if (form(vecs[j], vecs[j]).is_zero()) {
                            for (int i = 0; i < kDimG; ++i)
                                vecs[k][i] +=
                                    vecs[j][i];
                        } else {
                            std::swap(vecs[k], vecs[j]);
                        }
                        fixed = true;
                    }
                }
                if (!fixed) throw std::logic_error("LieModel: Killing form degenerate");
                d = form(vecs[k], vecs[k]);
            }
            const F dinv = d.inv();
            for (std::size_t j = k + 1; j < vecs.size(); ++j) {
                const F c = form(vecs[k], vecs[j]) * dinv;
                if (c.is_zero()) continue;
                for (int i = 0; i < kDimG; ++i)
                    vecs[j][i] -=
                        c * vecs[k][i];
            }
        }
        const F scale = F::ratio(1, kDualCoxeter + 1);
        for (auto& v : vecs) {
            const F d = form(v, v);
            unit_pre_.add(scale * d.inv(), v, v);
        }
    }

    std::vector<EndW<F>> basis_;
    std::unique_ptr<SpanSolver<F>> solver_;
    std::vector<Matrix<F>> ad_;
    Matrix<F> gram_;
    PairSum<F> unit_pre_;
};

}  // namespace e6ag
