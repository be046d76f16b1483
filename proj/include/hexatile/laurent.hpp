#pragma once

// Finite Laurent polynomials over an exact scalar. Contour integrals
// (1/2pi i) oint f(z) dz are coefficient reads: coeff(-1).

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "hexatile/numeric.hpp"

namespace hexatile {

template <class Scalar>
class LaurentSeries {
  public:
    LaurentSeries() = default;
    LaurentSeries(long lo, std::vector<Scalar> coeffs) : lo_(lo), c_(std::move(coeffs)) { trim(); }

    static LaurentSeries zero() { return {}; }
    static LaurentSeries one() { return {0, {Scalar(1)}}; }
    static LaurentSeries monomial(long k, Scalar a = Scalar(1)) { return {k, {std::move(a)}}; }

    // (z + a)^n, n >= 0
    static LaurentSeries binom_pow(const Scalar& a, int n) {
        if (n < 0) throw std::domain_error("binom_pow: negative exponent");
        auto row = binomial_row(n);
        std::vector<Scalar> c(std::size_t(n) + 1);
        Scalar ap(1);  // a^(n-k)
        for (int k = n; k >= 0; --k) {
            c[std::size_t(k)] = Scalar(row[std::size_t(k)]) * ap;
            ap *= a;
        }
        return {0, std::move(c)};
    }

    bool is_zero() const { return c_.empty(); }
    long lo() const { return lo_; }
    long hi() const { return lo_ + long(c_.size()) - 1; }  // inclusive; lo()-1 when zero
    const std::vector<Scalar>& coeffs() const { return c_; }

    Scalar coeff(long k) const {
        if (k < lo_ || k > hi()) return Scalar(0);
        return c_[std::size_t(k - lo_)];
    }

    LaurentSeries& operator*=(const Scalar& s) {
        if (s == 0) { c_.clear(); lo_ = 0; return *this; }
        for (auto& x : c_) x *= s;
        return *this;
    }

    LaurentSeries shifted(long k) const {
        LaurentSeries r = *this;
        r.lo_ += k;
        return r;
    }

    friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        long lo = std::min(a.lo_, b.lo_), hi = std::max(a.hi(), b.hi());
        std::vector<Scalar> c(std::size_t(hi - lo + 1), Scalar(0));
        for (long k = a.lo_; k <= a.hi(); ++k) c[std::size_t(k - lo)] += a.coeff(k);
        for (long k = b.lo_; k <= b.hi(); ++k) c[std::size_t(k - lo)] += b.coeff(k);
        return {lo, std::move(c)};
    }

    friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) {
        LaurentSeries nb = b;
        for (auto& x : nb.c_) x = -x;
        return a + nb;
    }

    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
        if (a.is_zero() || b.is_zero()) return zero();
        std::vector<Scalar> c(a.c_.size() + b.c_.size() - 1, Scalar(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        }
        return {a.lo_ + b.lo_, std::move(c)};
    }

    LaurentSeries pow(int e) const {
        if (e < 0) throw std::domain_error("LaurentSeries::pow: negative exponent");
        LaurentSeries r = one(), base = *this;
        while (e) {
            if (e & 1) r = r * base;
            if (e >>= 1) base = base * base;
        }
        return r;
    }

    friend bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
        return a.lo_ == b.lo_ && a.c_ == b.c_;
    }

  private:
    void trim() {
        std::size_t head = 0;
        while (head < c_.size() && c_[head] == 0) ++head;
        std::size_t tail = c_.size();
        while (tail > head && c_[tail - 1] == 0) --tail;
        if (head > 0 || tail < c_.size()) {
            c_ = std::vector<Scalar>(c_.begin() + long(head), c_.begin() + long(tail));
            lo_ += long(head);
        }
        if (c_.empty()) lo_ = 0;
    }

    long lo_ = 0;
    std::vector<Scalar> c_;
};

using RatLaurent = LaurentSeries<Rational>;

// coefficient of z^rise in (z+1)^odd_cols (z+alpha)^even_cols: the weighted
// count of single up-right paths gaining `rise` over those columns
inline Rational lgv_weight(const Rational& alpha, int even_cols, int odd_cols, long rise) {
    if (even_cols < 0 || odd_cols < 0) throw std::domain_error("lgv_weight: negative column count");
    if (rise < 0 || rise > even_cols + odd_cols) return Rational(0);
    auto r1 = binomial_row(odd_cols);
    Rational acc(0);
    Rational apow(1);  // alpha^(even-k), built downward
    std::vector<Rational> ac(std::size_t(even_cols) + 1);
    auto r2 = binomial_row(even_cols);
    for (int k = even_cols; k >= 0; --k) {
        ac[std::size_t(k)] = Rational(r2[std::size_t(k)]) * apow;
        apow *= alpha;
    }
    for (long j = std::max<long>(0, rise - even_cols); j <= std::min<long>(odd_cols, rise); ++j)
        acc += Rational(r1[std::size_t(j)]) * ac[std::size_t(rise - j)];
    return acc;
}

}  // namespace hexatile
