#pragma once

// Monic polynomials orthogonal for the non-Hermitian contour pairing, their
// norms kappa_n, three-term recurrence coefficients, and the Christoffel-
// Darboux kernel R_N. The Hankel systems are solved by fraction-free
// (Bareiss) elimination; the diagonal of the reduced matrix carries the
// leading minors det M_1, ..., det M_size.

#include <Eigen/Core>
#include <stdexcept>
#include <vector>

#include "hexatile/moments.hpp"
#include "hexatile/numeric.hpp"

namespace hexatile {

using RatPoly = std::vector<Rational>;  // ascending coefficients

inline Rational eval_poly(const RatPoly& p, const Rational& z) {
    Rational acc(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * z + *it;
    return acc;
}

class OrthoBasis {
  public:
    OrthoBasis() = default;

    // builds p_0..p_upto and kappa_0..kappa_upto; upto defaults to N and
    // may go up to 2N-1 (beyond that the moment matrix is singular)
    OrthoBasis(int N, Rational alpha, int upto = -1) : N_(N), alpha_(std::move(alpha)) {
        if (upto < 0) upto = N;
        if (upto > 2 * N) throw std::domain_error("OrthoBasis: degree beyond 2N");
        upto_ = upto;
        MomentTable mom(N_, alpha_);

        // integer-scaled Hankel matrix S = q^N * [m_{j+k}], augmented with
        // column `upto` serving as every right-hand side
        Int q = denominator(alpha_);
        Int scale = pow(q, unsigned(N_));
        int size = upto + 1;
        Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic> S(size, size);
        for (int j = 0; j < size; ++j)
            for (int k = 0; k < size; ++k) {
                Rational v = mom(j + k) * scale;
                if (denominator(v) != 1) throw std::logic_error("moment scaling failed");
                S(j, k) = numerator(v);
            }

        minors_.assign(std::size_t(size), Int(0));
        minors_[0] = S(0, 0);
        Int prev = 1;
        for (int k = 0; k + 1 < size; ++k) {
            const Int pivot = S(k, k);
            if (pivot == 0) throw std::runtime_error("OrthoBasis: singular moment matrix");
            for (int i = k + 1; i < size; ++i) {
                for (int j = k + 1; j < size; ++j) S(i, j) = (pivot * S(i, j) - S(i, k) * S(k, j)) / prev;
                S(i, k) = 0;
            }
            prev = pivot;
            minors_[std::size_t(k + 1)] = S(k + 1, k + 1);
        }
        det_scale_ = scale;

        // back-substitution: (c_0..c_{n-1},1) annihilates rows 0..n-1 of
        // columns 0..n of the reduced system
        p_.resize(std::size_t(upto) + 1);
        p_[0] = {Rational(1)};
        for (int n = 1; n <= upto; ++n) {
            RatPoly c(std::size_t(n) + 1);
            c[std::size_t(n)] = 1;
            for (int i = n - 1; i >= 0; --i) {
                Rational acc(0);
                for (int j = i + 1; j <= n; ++j) acc += Rational(S(i, j)) * c[std::size_t(j)];
                c[std::size_t(i)] = -acc / Rational(S(i, i));
            }
            p_[std::size_t(n)] = std::move(c);
        }

        kappa_.resize(std::size_t(upto) + 1);
        for (int n = 0; n <= upto; ++n) {
            Rational k(0);  // <p_n, z^n> by orthogonality
            for (int j = 0; j <= n; ++j) k += p_[std::size_t(n)][std::size_t(j)] * mom(n + j);
            kappa_[std::size_t(n)] = k;
            if (n <= 2 * N_ - 1 && k == 0) throw std::runtime_error("OrthoBasis: kappa_n vanished");
        }

        // recurrence p_{n+1} = (z - a_n) p_n - b_n p_{n-1}; a_n from the
        // z^n coefficients, b_n = kappa_n / kappa_{n-1}
        rec_a_.resize(std::size_t(upto));
        rec_b_.resize(std::size_t(upto));
        for (int n = 0; n + 1 <= upto; ++n) {
            Rational sub_n = n > 0 ? p_[std::size_t(n)][std::size_t(n) - 1] : Rational(0);
            rec_a_[std::size_t(n)] = sub_n - p_[std::size_t(n) + 1][std::size_t(n)];
            rec_b_[std::size_t(n)] = n > 0 ? kappa_[std::size_t(n)] / kappa_[std::size_t(n) - 1] : Rational(0);
        }
    }

    int N() const { return N_; }
    int max_degree() const { return upto_; }
    const Rational& alpha() const { return alpha_; }
    const RatPoly& poly(int n) const { return p_.at(std::size_t(n)); }
    const Rational& kappa(int n) const { return kappa_.at(std::size_t(n)); }
    const Rational& rec_a(int n) const { return rec_a_.at(std::size_t(n)); }
    const Rational& rec_b(int n) const { return rec_b_.at(std::size_t(n)); }

    // det M_n (the n x n leading moment minor), n = 1..upto+1
    Rational moment_det(int n) const {
        return Rational(minors_.at(std::size_t(n) - 1)) / Rational(pow(det_scale_, unsigned(n)));
    }

    // determinant of the LGV path matrix W_n; M_n is W_n with reversed
    // columns, so det W_n = (-1)^{n(n-1)/2} det M_n. Positive for n <= 2N.
    Rational lgv_det(int n) const {
        Rational d = moment_det(n);
        return (n / 2) % 2 ? Rational(-d) : d;
    }

  private:
    int N_ = 0;
    int upto_ = 0;
    Rational alpha_;
    std::vector<RatPoly> p_;
    std::vector<Rational> kappa_;
    std::vector<Rational> rec_a_, rec_b_;
    std::vector<Int> minors_;
    Int det_scale_ = 1;
};

// dense bivariate polynomial r(w,z) = sum r(j,k) w^j z^k
using BivariatePoly = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

// R_N(w,z) = sum_{n<N} p_n(w) p_n(z) / kappa_n
inline BivariatePoly cd_kernel_sum(const OrthoBasis& b) {
    int N = b.N();
    BivariatePoly r = BivariatePoly::Constant(N, N, Rational(0));
    for (int n = 0; n < N; ++n) {
        const auto& p = b.poly(n);
        for (int j = 0; j <= n; ++j)
            for (int k = 0; k <= n; ++k) r(j, k) += p[std::size_t(j)] * p[std::size_t(k)] / b.kappa(n);
    }
    return r;
}

// R_N(w,z) = (p_N(z) p_{N-1}(w) - p_N(w) p_{N-1}(z)) / (kappa_{N-1} (z - w))
inline BivariatePoly cd_kernel_divided_difference(const OrthoBasis& b) {
    int N = b.N();
    if (b.max_degree() < N) throw std::domain_error("cd_kernel_divided_difference: need p_N");
    BivariatePoly r = BivariatePoly::Constant(N, N, Rational(0));
    const auto& pN = b.poly(N);
    const auto& pM = b.poly(N - 1);
    // (z^a w^b - w^a z^b)/(z-w) = sum_{i=0}^{a-b-1} w^{b+i} z^{a-1-i}  for a > b
    for (int a = 0; a <= N; ++a)
        for (int bb = 0; bb <= N - 1; ++bb) {
            Rational coef = pN[std::size_t(a)] * pM[std::size_t(bb)] / b.kappa(N - 1);
            if (coef == 0 || a == bb) continue;
            if (a > bb)
                for (int i = 0; i < a - bb; ++i) r(bb + i, a - 1 - i) += coef;
            else
                for (int i = 0; i < bb - a; ++i) r(a + i, bb - 1 - i) -= coef;
        }
    return r;
}

inline Rational eval_bivariate(const BivariatePoly& r, const Rational& w, const Rational& z) {
    Rational acc(0);
    for (int j = int(r.rows()) - 1; j >= 0; --j) {
        Rational row(0);
        for (int k = int(r.cols()) - 1; k >= 0; --k) row = row * z + r(j, k);
        acc = acc * w + row;
    }
    return acc;
}

}  // namespace hexatile
