#pragma once

// Combinatorial layer: the N x N x N hexagon in path coordinates, lozenge
// tilings, the path bijection, weights and height functions.
//
// Dot convention (the marked lattice point that indexes each face):
//
//        type I            type II            type III
//         _(x+1,y+2)        ____                ____(x+1,y+1)
//        /|               |    |               /   /
//       / |               |    |         (x-1,y)__/
//      *__/               *____|                *
//    (x,y)              (x,y)                 (x,y)
//
//   type I  = up-step of a path:   position y at column x, y+1 at x+1
//   type II = flat step:           position y at columns x and x+1
//   type III = no path crosses column x at height y
//
// Faces live on the dot window x in {0..2n-1}, y in {0..2n-1}; the 3n^2
// faces of the hexagon are the sub-range max(0,x-n) <= y < min(n+x,2n),
// everything else in the window is deterministically TypeIII.

#include <Eigen/Core>
#include <cmath>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "hexatile/numeric.hpp"

namespace hexatile {

enum class LozengeType : int { TypeI = 0, TypeII = 1, TypeIII = 2 };

inline const char* lozenge_name(LozengeType t) {
    switch (t) {
        case LozengeType::TypeI: return "I";
        case LozengeType::TypeII: return "II";
        default: return "III";
    }
}

struct HexagonSpec {
    int n = 1;
    Rational alpha = 1;

    HexagonSpec() = default;
    HexagonSpec(int n_, Rational alpha_) : n(n_), alpha(std::move(alpha_)) {
        if (n < 1) throw std::domain_error("HexagonSpec: n must be >= 1");
        if (alpha <= 0 || alpha > 1) throw std::domain_error("HexagonSpec: alpha must be in (0,1]");
    }
};

// N non-intersecting up-right paths; heights(j,m) = pi_j(m) - 1/2 kept integral
class PathSystem {
  public:
    PathSystem() = default;
    PathSystem(int n, Eigen::MatrixXi heights) : n_(n), h_(std::move(heights)) {
        if (!valid()) throw std::invalid_argument("PathSystem: invariants violated");
    }

    // the unique zero-energy tiling: up-steps at every even column
    static PathSystem frozen_staircase(int n) {
        Eigen::MatrixXi h(n, 2 * n + 1);
        for (int j = 0; j < n; ++j)
            for (int m = 0; m <= 2 * n; ++m) h(j, m) = j + (m + 1) / 2;
        return PathSystem(n, std::move(h));
    }

    int n() const { return n_; }
    int position(int j, int m) const { return h_(j, m); }
    const Eigen::MatrixXi& heights() const { return h_; }

    bool valid() const {
        if (n_ < 1 || h_.rows() != n_ || h_.cols() != 2 * n_ + 1) return false;
        for (int j = 0; j < n_; ++j) {
            if (h_(j, 0) != j || h_(j, 2 * n_) != n_ + j) return false;
            for (int m = 0; m < 2 * n_; ++m) {
                int d = h_(j, m + 1) - h_(j, m);
                if (d != 0 && d != 1) return false;
            }
        }
        for (int m = 0; m <= 2 * n_; ++m)
            for (int j = 0; j + 1 < n_; ++j)
                if (h_(j, m) >= h_(j + 1, m)) return false;
        return true;
    }

    friend bool operator==(const PathSystem& a, const PathSystem& b) {
        return a.n_ == b.n_ && a.h_ == b.h_;
    }

  private:
    int n_ = 0;
    Eigen::MatrixXi h_;
};

struct TilingStats {
    long energy = 0;        // flat steps at even columns
    double log_weight = 0;  // energy * log(alpha)
};

inline TilingStats stats(const PathSystem& p, const Rational& alpha) {
    TilingStats s;
    for (int m = 0; m < 2 * p.n(); m += 2)
        for (int j = 0; j < p.n(); ++j)
            if (p.position(j, m + 1) == p.position(j, m)) ++s.energy;
    s.log_weight = double(s.energy) * std::log(to_double(alpha));
    return s;
}

// face map over the dot window
class FaceMap {
  public:
    FaceMap() = default;
    explicit FaceMap(int n) : n_(n), t_(Eigen::MatrixXi::Constant(2 * n, 2 * n, int(LozengeType::TypeIII))) {}

    int n() const { return n_; }
    bool in_window(int x, int y) const { return x >= 0 && x < 2 * n_ && y >= 0 && y < 2 * n_; }
    LozengeType type(int x, int y) const {
        if (!in_window(x, y)) throw std::out_of_range("FaceMap: face outside window");
        return LozengeType(t_(x, y));
    }
    void set(int x, int y, LozengeType t) { t_(x, y) = int(t); }

    friend bool operator==(const FaceMap& a, const FaceMap& b) { return a.n_ == b.n_ && a.t_ == b.t_; }

  private:
    int n_ = 0;
    Eigen::MatrixXi t_;
};

// true hexagon faces within the window (the rest is TypeIII padding)
inline bool is_hexagon_face(int n, int x, int y) {
    return x >= 0 && x < 2 * n && y >= std::max(0, x - n) && y < std::min(n + x, 2 * n);
}

inline FaceMap tiling_from_paths(const PathSystem& p) {
    if (!p.valid()) throw std::invalid_argument("tiling_from_paths: invalid PathSystem");
    FaceMap f(p.n());
    for (int m = 0; m < 2 * p.n(); ++m)
        for (int j = 0; j < p.n(); ++j) {
            int y = p.position(j, m);
            bool up = p.position(j, m + 1) == y + 1;
            if (f.in_window(m, y)) f.set(m, y, up ? LozengeType::TypeI : LozengeType::TypeII);
        }
    return f;
}

// inverse of the face map: positions at column m are the I/II dots
inline PathSystem paths_from_faces(const FaceMap& f) {
    int n = f.n();
    Eigen::MatrixXi h(n, 2 * n + 1);
    for (int m = 0; m < 2 * n; ++m) {
        int j = 0;
        for (int y = 0; y < 2 * n; ++y)
            if (f.type(m, y) != LozengeType::TypeIII) {
                if (j >= n) throw std::invalid_argument("paths_from_faces: too many path dots in a column");
                h(j++, m) = y;
            }
        if (j != n) throw std::invalid_argument("paths_from_faces: wrong number of path dots in a column");
    }
    for (int j = 0; j < n; ++j) h(j, 2 * n) = n + j;
    return PathSystem(n, std::move(h));
}

// h(x,y) = number of paths strictly below height y at column x
struct HeightField {
    int n = 0;
    Eigen::MatrixXi h;  // (2n+1) x (2n+1), indexed (x,y)
};

inline HeightField height_field(const PathSystem& p) {
    int n = p.n();
    HeightField f{n, Eigen::MatrixXi::Zero(2 * n + 1, 2 * n + 1)};
    for (int x = 0; x <= 2 * n; ++x)
        for (int y = 0; y <= 2 * n; ++y) {
            int c = 0;
            for (int j = 0; j < n; ++j) c += p.position(j, x) < y;
            f.h(x, y) = c;
        }
    return f;
}

// classify the face at dot (x,y) from height differences
inline LozengeType lozenge_from_height(const HeightField& f, int x, int y) {
    int n = f.n;
    if (x < 0 || x >= 2 * n || y < 0 || y >= 2 * n)
        throw std::out_of_range("lozenge_from_height: face outside window");
    if (f.h(x, y + 1) - f.h(x + 1, y + 1) == 1) return LozengeType::TypeI;
    if (f.h(x + 1, y + 1) - f.h(x, y) == 1) return LozengeType::TypeII;
    return LozengeType::TypeIII;
}

// ---- tiling files -------------------------------------------------------

inline void write_tiling(std::ostream& os, const PathSystem& p, const Rational& alpha) {
    nlohmann::ordered_json j;
    j["n"] = p.n();
    j["alpha"] = rational_to_string(alpha);
    auto rows = nlohmann::json::array();
    for (int r = 0; r < p.n(); ++r) {
        auto row = nlohmann::json::array();
        for (int m = 0; m <= 2 * p.n(); ++m) row.push_back(p.position(r, m));
        rows.push_back(std::move(row));
    }
    j["heights"] = std::move(rows);
    os << j.dump(1) << "\n";
}

struct TilingFile {
    PathSystem paths;
    Rational alpha;
};

inline TilingFile read_tiling(std::istream& is) {
    nlohmann::json j = nlohmann::json::parse(is);
    int n = j.at("n").get<int>();
    Rational alpha = j.at("alpha").is_string() ? rational_from_string(j.at("alpha").get<std::string>())
                                               : rational_from_string(double_to_string(j.at("alpha").get<double>()));
    const auto& rows = j.at("heights");
    if (int(rows.size()) != n) throw std::invalid_argument("tiling file: wrong number of rows");
    Eigen::MatrixXi h(n, 2 * n + 1);
    for (int r = 0; r < n; ++r) {
        if (int(rows[std::size_t(r)].size()) != 2 * n + 1)
            throw std::invalid_argument("tiling file: wrong row length");
        for (int m = 0; m <= 2 * n; ++m) h(r, m) = rows[std::size_t(r)][std::size_t(m)].get<int>();
    }
    return {PathSystem(n, std::move(h)), alpha};
}

}  // namespace hexatile
