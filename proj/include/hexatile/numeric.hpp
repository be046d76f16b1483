#pragma once

// Scalar backends and small numeric utilities shared by the whole library.
//
// Exact arithmetic uses GMP rationals, the high-precision float path uses
// MPFR with 100 decimal digits. Everything else is double.

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <atomic>
#include <charconv>
#include <complex>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace hexatile {

using Int = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;
using BigFloat = boost::multiprecision::mpfr_float_100;

inline double to_double(const Rational& r) { return r.template convert_to<double>(); }
inline double to_double(const BigFloat& x) { return x.template convert_to<double>(); }
inline BigFloat to_bigfloat(const Rational& r) { return BigFloat(r); }

// Rationals serialize as "p/q" with an explicit denominator so the format
// survives any reader; parsing accepts plain integers and finite decimals too.
inline std::string rational_to_string(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

namespace detail {
// decimal integer parse; avoids GMP's leading-zero-means-octal convention
inline Int parse_int10(std::string t) {
    bool neg = false;
    std::size_t i = 0;
    if (i < t.size() && (t[i] == '+' || t[i] == '-')) neg = t[i++] == '-';
    while (i + 1 < t.size() && t[i] == '0') ++i;
    std::string digits = t.substr(i);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
        throw std::domain_error("bad integer: " + t);
    Int v(digits);
    return neg ? Int(-v) : v;
}
}  // namespace detail

inline Rational rational_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        Int p = detail::parse_int10(s.substr(0, slash));
        Int q = detail::parse_int10(s.substr(slash + 1));
        if (q == 0) throw std::domain_error("rational with zero denominator: " + s);
        return Rational(p, q);
    }
    auto dot = s.find('.');
    auto exp = s.find_first_of("eE");
    if (dot == std::string::npos && exp == std::string::npos) return Rational(detail::parse_int10(s));
    // finite decimal, optionally with exponent: parse exactly
    std::string mant = exp == std::string::npos ? s : s.substr(0, exp);
    long e10 = exp == std::string::npos ? 0 : std::stol(s.substr(exp + 1));
    dot = mant.find('.');
    std::string digits = mant;
    long frac = 0;
    if (dot != std::string::npos) {
        frac = long(mant.size() - dot - 1);
        digits = mant.substr(0, dot) + mant.substr(dot + 1);
    }
    if (digits.empty() || digits == "-" || digits == "+") throw std::domain_error("bad rational: " + s);
    Rational r{detail::parse_int10(digits)};
    long shift = e10 - frac;
    Int ten10 = pow(Int(10), unsigned(shift < 0 ? -shift : shift));
    if (shift >= 0) r *= ten10; else r /= ten10;
    return r;
}

// shortest round-trip decimal for doubles
inline std::string double_to_string(double x) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

inline std::vector<Int> binomial_row(int n) {
    std::vector<Int> c(std::size_t(n) + 1);
    c[0] = 1;
    for (int k = 1; k <= n; ++k) c[std::size_t(k)] = c[std::size_t(k) - 1] * (n - k + 1) / k;
    return c;
}

// complex value over an arbitrary real scalar; std::complex is only
// guaranteed for builtin floating point, so the MPFR path uses this.
template <class T>
struct Cx {
    T re{}, im{};
    Cx() = default;
    Cx(T r) : re(std::move(r)) {}
    Cx(T r, T i) : re(std::move(r)), im(std::move(i)) {}
    friend Cx operator+(const Cx& a, const Cx& b) { return {a.re + b.re, a.im + b.im}; }
    friend Cx operator-(const Cx& a, const Cx& b) { return {a.re - b.re, a.im - b.im}; }
    friend Cx operator*(const Cx& a, const Cx& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Cx operator*(const T& a, const Cx& b) { return {a * b.re, a * b.im}; }
    friend Cx operator/(const Cx& a, const T& d) { return {a.re / d, a.im / d}; }
    friend Cx operator/(const Cx& a, const Cx& b) {
        T d = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }
    Cx& operator+=(const Cx& o) { re += o.re; im += o.im; return *this; }
    Cx& operator-=(const Cx& o) { re -= o.re; im -= o.im; return *this; }
};

template <class T>
Cx<T> cx_ipow(Cx<T> base, long e) {
    if (e < 0) return Cx<T>(T(1)) / cx_ipow(base, -e);
    Cx<T> r(T(1));
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

using BComplex = Cx<BigFloat>;

inline std::complex<double> to_cdouble(const BComplex& z) { return {to_double(z.re), to_double(z.im)}; }

// SplitMix64: counter-based 64-bit generator; each call mixes the next
// counter value, so substreams are cheap and reproducible.
struct SplitMix64 {
    std::uint64_t state = 0;

    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    explicit SplitMix64(std::uint64_t seed = 0) : state(seed) {}

    // substream for sample `index` of a batch seeded with `seed`
    static SplitMix64 substream(std::uint64_t seed, std::uint64_t index) {
        return SplitMix64(mix(seed ^ (0x9e3779b97f4a7c15ULL * (index + 1))));
    }

    std::uint64_t next() { return mix(state++); }
    double uniform01() { return double(next() >> 11) * 0x1.0p-53; }
    // exact uniform on {0,1,...,2^64-1}/2^64 as a rational
    Rational uniform_rational() { return Rational(Int(next()), Int(1) << 64); }
    std::uint64_t below(std::uint64_t n) { return next() % n; }
};

// run f(i) for i in [0,n) on up to `threads` workers; results must be
// written to per-index slots by the caller to stay deterministic
inline void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& f) {
    if (threads <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) f(i);
        return;
    }
    std::atomic<std::size_t> cursor{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = cursor.fetch_add(1);
            if (i >= n) return;
            f(i);
        }
    };
    std::vector<std::thread> pool;
    int use = std::min<int>(threads, int(n));
    pool.reserve(std::size_t(use));
    for (int t = 0; t < use; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

inline int default_threads() {
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? int(hw) : 1;
}

// N_exact: largest hexagon size served by the exact engine by default
inline int exact_n_limit() {
    if (const char* env = std::getenv("HEXATILE_EXACT_N")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return 12;
}

}  // namespace hexatile
