#pragma once

// Exact finite-N kernel, lozenge probabilities and expected heights by
// Laurent coefficient extraction. Every contour integral here has a Laurent-
// polynomial integrand, so "integrate" means "read one coefficient".

#include <stdexcept>

#include "hexatile/lattice.hpp"
#include "hexatile/laurent.hpp"
#include "hexatile/ortho.hpp"

namespace hexatile {

struct KernelQuery {
    int x1, y1, x2, y2;
};

namespace detail {

// coefficient of w^target in p(w) * poly(w)
inline Rational paired_coeff(const RatPoly& p, const RatLaurent& poly, long target) {
    Rational acc(0);
    for (std::size_t j = 0; j < p.size(); ++j) {
        if (p[j] == 0) continue;
        acc += p[j] * poly.coeff(target - long(j));
    }
    return acc;
}

// sum over n < N of [w-extraction] x [z-extraction] / kappa_n
inline Rational double_contour_sum(const OrthoBasis& b, const RatLaurent& wpoly, long wtarget,
                                   const RatLaurent& zpoly, long ztarget) {
    Rational acc(0);
    for (int n = 0; n < b.N(); ++n) {
        Rational a = paired_coeff(b.poly(n), wpoly, wtarget);
        if (a == 0) continue;
        Rational c = paired_coeff(b.poly(n), zpoly, ztarget);
        if (c == 0) continue;
        acc += a * c / b.kappa(n);
    }
    return acc;
}

inline void check_column(const OrthoBasis& b, int x, const char* who) {
    if (x < 1 || x > 2 * b.N() - 1) throw std::out_of_range(std::string(who) + ": column out of range");
}

}  // namespace detail

// K_N(x1,y1,x2,y2); columns restricted to 1..2N-1
inline Rational kernel_K(const OrthoBasis& b, const KernelQuery& q) {
    detail::check_column(b, q.x1, "kernel_K");
    detail::check_column(b, q.x2, "kernel_K");
    const int N = b.N();
    const Rational& alpha = b.alpha();

    Rational single(0);
    if (q.x1 > q.x2) {
        auto t = RatLaurent::binom_pow(Rational(1), q.x1 / 2 - q.x2 / 2) *
                 RatLaurent::binom_pow(alpha, (q.x1 + 1) / 2 - (q.x2 + 1) / 2);
        single = t.coeff(q.y1 - q.y2);
    }

    auto wpoly = RatLaurent::binom_pow(Rational(1), N - q.x2 / 2) *
                 RatLaurent::binom_pow(alpha, N - (q.x2 + 1) / 2);
    auto zpoly = RatLaurent::binom_pow(Rational(1), q.x1 / 2) *
                 RatLaurent::binom_pow(alpha, (q.x1 + 1) / 2);
    Rational dbl = detail::double_contour_sum(b, wpoly, 2 * N - 1 - q.y2, zpoly, q.y1);
    return -single + dbl;
}

// P(lozenge of type t with dot (x,y)); exact, faces with x in 1..2N-1
inline Rational lozenge_probability(const OrthoBasis& b, int x, int y, LozengeType t) {
    detail::check_column(b, x, "lozenge_probability");
    const int N = b.N();
    const Rational& alpha = b.alpha();
    const bool even = x % 2 == 0;

    int e1 = N - x / 2;              // (w+1) exponent before H
    int ea = N - (x + 1) / 2;        // (w+alpha) exponent before H
    long wtarget = 2 * N - 1 - y;    // coefficient index for w^{y-2N} prefactor
    Rational mult(1);

    switch (t) {
        case LozengeType::TypeI:
            // H_1: w/(z (w+alpha)) for x even, w/(z (w+1)) for x odd
            if (even) --ea; else --e1;
            --wtarget;  // the extra w in the numerator
            break;
        case LozengeType::TypeII:
            // H_2: alpha/(z (w+alpha)) for x even, 1/(z (w+1)) for x odd
            if (even) { --ea; mult = alpha; } else --e1;
            break;
        case LozengeType::TypeIII:
            break;  // H_3 = 1/z, the bare path density
    }
    if (e1 < 0 || ea < 0) throw std::out_of_range("lozenge_probability: face not interior");

    auto wpoly = RatLaurent::binom_pow(Rational(1), e1) * RatLaurent::binom_pow(alpha, ea);
    auto zpoly = RatLaurent::binom_pow(Rational(1), x / 2) * RatLaurent::binom_pow(alpha, (x + 1) / 2);
    Rational val = mult * detail::double_contour_sum(b, wpoly, wtarget, zpoly, y);
    return t == LozengeType::TypeIII ? 1 - val : val;
}

// E[h(x,y)] = sum_{k<y} K_N(x,k,x,k)
inline Rational expected_height(const OrthoBasis& b, int x, int y) {
    detail::check_column(b, x, "expected_height");
    if (y < 0 || y > 2 * b.N()) throw std::out_of_range("expected_height: y out of range");
    Rational acc(0);
    for (int k = 0; k < y; ++k) acc += kernel_K(b, {x, k, x, k});
    return acc;
}

}  // namespace hexatile
