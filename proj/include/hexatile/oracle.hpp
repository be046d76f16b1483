#pragma once

// Ground truth at tiny N: exhaustive enumeration of all path systems, and a
// direct Eynard-Mehta kernel built from transfer-matrix products and a Gram
// inverse. No orthogonal polynomials anywhere in this header.

#include <Eigen/Core>
#include <array>
#include <map>
#include <stdexcept>
#include <vector>

#include "hexatile/lattice.hpp"
#include "hexatile/laurent.hpp"
#include "hexatile/numeric.hpp"

namespace hexatile {

struct EnumerationResult {
    int n = 0;
    Rational alpha;
    std::vector<PathSystem> tilings;
    std::vector<long> energies;        // parallel to tilings
    std::vector<long> energy_histogram;  // Z(a) = sum_e hist[e] a^e
    Rational Z;

    Rational weight(std::size_t i) const {
        Rational w(1);
        for (long e = 0; e < energies[i]; ++e) w *= alpha;
        return w;
    }

    // P(type t at dot (x,y))
    Rational face_marginal(int x, int y, LozengeType t) const {
        Rational acc(0);
        for (std::size_t i = 0; i < tilings.size(); ++i)
            if (tiling_from_paths(tilings[i]).type(x, y) == t) acc += weight(i);
        return acc / Z;
    }

    // P(paths through all listed points (x, y+1/2))
    Rational path_marginal(const std::vector<std::pair<int, int>>& pts) const {
        Rational acc(0);
        for (std::size_t i = 0; i < tilings.size(); ++i) {
            bool all = true;
            for (auto [x, y] : pts) {
                bool hit = false;
                for (int j = 0; j < n && !hit; ++j) hit = tilings[i].position(j, x) == y;
                if (!hit) { all = false; break; }
            }
            if (all) acc += weight(i);
        }
        return acc / Z;
    }
};

inline EnumerationResult enumerate_tilings(int n, const Rational& alpha) {
    if (n > 4) throw std::domain_error("enumerate_tilings: n exceeds oracle bound (4)");
    EnumerationResult res;
    res.n = n;
    res.alpha = alpha;

    Eigen::MatrixXi h(n, 2 * n + 1);
    for (int j = 0; j < n; ++j) h(j, 0) = j;

    // admissible positions at column m: reachable from j and co-reachable to n+j
    auto lo_bound = [&](int j, int m) { return std::max(j, j + m - n); };
    auto hi_bound = [&](int j, int m) { return std::min(j + m, n + j); };

    std::vector<int> next_pos(std::size_t(n), 0);
    auto dfs = [&](auto&& self, int m, long energy) -> void {
        if (m == 2 * n) {
            res.tilings.emplace_back(n, h);
            res.energies.push_back(energy);
            return;
        }
        bool even = m % 2 == 0;
        auto particle = [&](auto&& pself, int j, long de) -> void {
            if (j == n) {
                for (int i = 0; i < n; ++i) h(i, m + 1) = next_pos[std::size_t(i)];
                self(self, m + 1, energy + de);
                return;
            }
            for (int step = 0; step <= 1; ++step) {
                int y = h(j, m) + step;
                if (j > 0 && y <= next_pos[std::size_t(j) - 1]) continue;
                if (y < lo_bound(j, m + 1) || y > hi_bound(j, m + 1)) continue;
                next_pos[std::size_t(j)] = y;
                pself(pself, j + 1, de + (even && step == 0 ? 1 : 0));
            }
        };
        particle(particle, 0, 0);
    };
    dfs(dfs, 0, 0);

    long emax = 0;
    for (long e : res.energies) emax = std::max(emax, e);
    res.energy_histogram.assign(std::size_t(emax) + 1, 0);
    res.Z = 0;
    for (std::size_t i = 0; i < res.tilings.size(); ++i) {
        ++res.energy_histogram[std::size_t(res.energies[i])];
        res.Z += res.weight(i);
    }
    return res;
}

// transfer weight over columns [m1, m2): single path from height u to v
inline Rational transfer_weight(const Rational& alpha, int m1, int m2, int u, int v) {
    int evens = (m2 + 1) / 2 - (m1 + 1) / 2;
    int odds = m2 / 2 - m1 / 2;
    return lgv_weight(alpha, evens, odds, v - u);
}

class EynardMehtaKernel {
  public:
    EynardMehtaKernel(int n, Rational alpha) : n_(n), alpha_(std::move(alpha)) {
        if (n_ > 4) throw std::domain_error("EynardMehtaKernel: n exceeds oracle bound (4)");
        // Gram matrix G_jk = weighted paths (0,j) -> (2n, n+k), inverted exactly
        using RatMat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
        RatMat G(n_, n_), inv = RatMat::Identity(n_, n_).eval();
        for (int j = 0; j < n_; ++j)
            for (int k = 0; k < n_; ++k) G(j, k) = transfer_weight(alpha_, 0, 2 * n_, j, n_ + k);
        for (int c = 0; c < n_; ++c) {  // Gauss-Jordan with partial pivot
            int piv = -1;
            for (int r = c; r < n_; ++r)
                if (G(r, c) != 0) { piv = r; break; }
            if (piv < 0) throw std::runtime_error("EynardMehtaKernel: singular Gram matrix");
            G.row(c).swap(G.row(piv));
            inv.row(c).swap(inv.row(piv));
            Rational d = G(c, c);
            for (int k = 0; k < n_; ++k) { G(c, k) /= d; inv(c, k) /= d; }
            for (int r = 0; r < n_; ++r) {
                if (r == c || G(r, c) == 0) continue;
                Rational f = G(r, c);
                for (int k = 0; k < n_; ++k) { G(r, k) -= f * G(c, k); inv(r, k) -= f * inv(c, k); }
            }
        }
        ginv_ = std::move(inv);
    }

    Rational operator()(int x1, int y1, int x2, int y2) const {
        Rational single(0);
        if (x1 > x2) single = transfer_weight(alpha_, x2, x1, y2, y1);
        Rational dbl(0);
        for (int k = 0; k < n_; ++k) {
            Rational back = transfer_weight(alpha_, x1, 2 * n_, y1, n_ + k);
            if (back == 0) continue;
            for (int j = 0; j < n_; ++j) {
                Rational fwd = transfer_weight(alpha_, 0, x2, j, y2);
                if (fwd == 0) continue;
                dbl += back * ginv_(k, j) * fwd;
            }
        }
        return -single + dbl;
    }

  private:
    int n_;
    Rational alpha_;
    Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic> ginv_;
};

}  // namespace hexatile
