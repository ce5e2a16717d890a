#pragma once

// Independent reference implementations used only by the tests. None of them
// call into the library's moduli, atm, dynamics or hofstadter code; they work
// on plain Vec3Q/Mat3Q values and literal matrices.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "trimap/linalg.hpp"

namespace oracle {

using trimap::Mat3Q;
using trimap::Rational;
using trimap::Vec3Q;

inline bool in_D(const Vec3Q& v)
{
    return v.sum() == Rational(1) && v[0] >= v[1] && v[1] >= v[2] && v[2] >= Rational(0);
}

/// Moves of the re-expression relation written directly on coordinates:
/// the three transpositions, the orientation flip (-a, 1-b, 1-c) and unit
/// lattice shifts by +-(e1-e2), +-(e2-e3).
inline std::vector<Vec3Q> neighbours(const Vec3Q& v)
{
    const Rational one(1);
    const Rational& a = v[0];
    const Rational& b = v[1];
    const Rational& c = v[2];
    return {
        Vec3Q(b, a, c),
        Vec3Q(c, b, a),
        Vec3Q(a, c, b),
        Vec3Q(-a, one - b, one - c),
        Vec3Q(a + one, b - one, c),
        Vec3Q(a - one, b + one, c),
        Vec3Q(a, b + one, c - one),
        Vec3Q(a, b - one, c + one),
    };
}

/// Breadth-first search over words of at most max_len moves; returns the first
/// point of D met, if any.
inline std::optional<Vec3Q> bfs_canonical(const Vec3Q& start, int max_len)
{
    std::set<Vec3Q> seen{start};
    std::vector<Vec3Q> frontier{start};
    for (int depth = 0;; ++depth) {
        for (const auto& v : frontier)
            if (in_D(v))
                return v;
        if (depth == max_len)
            return std::nullopt;
        std::vector<Vec3Q> next;
        for (const auto& v : frontier)
            for (auto& w : neighbours(v))
                if (seen.insert(w).second)
                    next.push_back(std::move(w));
        frontier = std::move(next);
    }
}

/// Determinant by the Leibniz formula.
inline Rational det_leibniz(const Mat3Q& m)
{
    static constexpr int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
    Rational d;
    for (int p = 0; p < 6; ++p) {
        Rational term = m(0, perms[p][0]) * m(1, perms[p][1]) * m(2, perms[p][2]);
        d = p < 3 ? d + term : d - term;
    }
    return d;
}

inline Mat3Q circ(const Rational& diag, const Rational& off)
{
    return Mat3Q{diag, off, off, off, diag, off, off, off, diag};
}

/// All points of D whose coordinates have denominator dividing q.
inline std::vector<Vec3Q> grid_in_D(long q)
{
    std::vector<Vec3Q> out;
    for (long a = 0; a <= q; ++a)
        for (long b = 0; b <= a; ++b) {
            const long c = q - a - b;
            if (c >= 0 && c <= b)
                out.emplace_back(Rational(a, q), Rational(b, q), Rational(c, q));
        }
    return out;
}

/// Points of D with exact common denominator q (reduced shapes).
inline std::vector<Vec3Q> reduced_shapes(long q)
{
    std::vector<Vec3Q> out;
    for (long a = 0; a <= q; ++a)
        for (long b = 0; b <= a; ++b) {
            const long c = q - a - b;
            if (c >= 0 && c <= b && std::gcd(std::gcd(a, b), std::gcd(c, q)) == 1)
                out.emplace_back(Rational(a, q), Rational(b, q), Rational(c, q));
        }
    return out;
}

/// Canonical form by brute force over a fixed-depth search; used where the
/// search depth is known to suffice (points with small coordinates).
inline Vec3Q canonical_by_search(const Vec3Q& v)
{
    auto r = bfs_canonical(v, 12);
    if (!r)
        throw std::logic_error("search depth too small");
    return *r;
}

/// Preimages of p under v -> M v on D, found by scanning every point of D
/// with denominator dividing q.
inline std::set<Vec3Q> preimages_by_scan(const Mat3Q& m, const Vec3Q& p, long q)
{
    std::set<Vec3Q> out;
    for (const auto& x : grid_in_D(q))
        if (canonical_by_search(m * x) == p)
            out.insert(x);
    return out;
}

/// One step of Hobson's pedal recurrence on a sorted shape given by integer
/// numerators over a common denominator q (no rationals involved).
struct IntShape {
    long a, b, c, q;
    friend bool operator==(const IntShape&, const IntShape&) = default;
};

inline IntShape hobson_int(IntShape s)
{
    long x, y, z;
    if (2 * s.a < s.q) {
        x = s.q - 2 * s.a;
        y = s.q - 2 * s.b;
        z = s.q - 2 * s.c;
    } else {
        x = 2 * s.a - s.q;
        y = 2 * s.b;
        z = 2 * s.c;
    }
    long v[3] = {x, y, z};
    std::sort(v, v + 3, std::greater<>());
    return {v[0], v[1], v[2], s.q};
}

/// Random rational point of A with coordinates in [lo, hi] and denominators
/// up to max_den (the third coordinate may fall outside the box).
inline Vec3Q random_point(std::mt19937_64& rng, int max_den, int lo, int hi)
{
    std::uniform_int_distribution<int> den(1, max_den);
    const int q = den(rng);
    std::uniform_int_distribution<int> num(lo * q, hi * q);
    for (;;) {
        const Rational x(num(rng), q), y(num(rng), q);
        const Rational z = Rational(1) - x - y;
        if (z >= Rational(lo) && z <= Rational(hi))
            return Vec3Q(x, y, z);
    }
}

/// Random point of D with common denominator at most max_den.
inline Vec3Q random_point_in_D(std::mt19937_64& rng, int max_den)
{
    std::uniform_int_distribution<int> den(1, max_den);
    for (;;) {
        const long q = den(rng);
        std::uniform_int_distribution<long> num(0, q);
        long v[3] = {num(rng), num(rng), 0};
        v[2] = q - v[0] - v[1];
        if (v[2] < 0)
            continue;
        std::sort(v, v + 3, std::greater<>());
        return Vec3Q(Rational(v[0], q), Rational(v[1], q), Rational(v[2], q));
    }
}

}  // namespace oracle
