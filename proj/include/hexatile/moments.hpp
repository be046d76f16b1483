#pragma once

// Moments of the pairing <f,g> = (1/2pi i) oint f g (z+1)^N (z+alpha)^N / z^{2N} dz,
// realized as coefficients of the weight polynomial.

#include <vector>

#include "hexatile/laurent.hpp"
#include "hexatile/numeric.hpp"

namespace hexatile {

class MomentTable {
  public:
    MomentTable() = default;
    MomentTable(int N, Rational alpha) : N_(N), alpha_(std::move(alpha)) {
        auto w = RatLaurent::binom_pow(Rational(1), N_) * RatLaurent::binom_pow(alpha_, N_);
        m_.resize(std::size_t(2 * N_));
        for (int k = 0; k < 2 * N_; ++k) m_[std::size_t(k)] = w.coeff(2 * N_ - 1 - k);
    }

    int N() const { return N_; }
    const Rational& alpha() const { return alpha_; }

    // m_k = <z^j, z^l> for any j+l = k; zero outside the support 0..2N-1
    Rational operator()(long k) const {
        if (k < 0 || k >= 2 * N_) return Rational(0);
        return m_[std::size_t(k)];
    }

  private:
    int N_ = 0;
    Rational alpha_;
    std::vector<Rational> m_;
};

inline MomentTable moments(int N, const Rational& alpha) { return MomentTable(N, alpha); }

}  // namespace hexatile
