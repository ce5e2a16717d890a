#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "trimap/atm.hpp"
#include "trimap/moduli.hpp"

namespace trimap {

class MarkovPartition;

/// The linear triangle map of a: canonicalize(M p). Total on D, including
/// flat and right triangles.
CanonicalShape step(const Atm& a, const CanonicalShape& p);
CanonicalShape step(const Mat3Q& m, const CanonicalShape& p);

/// The geometric pedal construction is undefined for right triangles.
struct DegenerateRight {
    friend bool operator==(const DegenerateRight&, const DegenerateRight&) = default;
};

using HobsonStep = std::variant<CanonicalShape, DegenerateRight>;

/// Piecewise pedal map: (1-2a, 1-2b, 1-2c) for acute p and (2a-1, 2b, 2c)
/// when the largest angle a is obtuse, sorted.
HobsonStep hobson_pedal_step(const CanonicalShape& p);

/// circ(0; 1/2), the inverse of the pedal matrix.
const Mat3Q& antipedal_matrix();

/// Shape of the unique acute (or right) ancestor of p under the pedal map.
CanonicalShape antipedal_step(const CanonicalShape& p);

/// All q in D with step(a, q) == p, one per Markov cell, deduplicated and
/// sorted. Exactly |det M| values for p off the cell boundaries.
std::vector<CanonicalShape> preimages(const Atm& a, const CanonicalShape& p);
std::vector<CanonicalShape> preimages(const MarkovPartition& mp, const CanonicalShape& p);

/// Eventually periodic orbit of a rational shape.
struct OrbitRecord {
    CanonicalShape start;
    std::size_t preperiod = 0;
    std::size_t period = 0;
    std::vector<CanonicalShape> transient{};  ///< the first `preperiod` iterates
    std::vector<CanonicalShape> cycle{};
    bool hit_flat = false;   ///< some iterate has a zero angle
    bool hit_right = false;  ///< some iterate has an angle of exactly 1/2
};

/// Iterates step with exact cycle detection. Throws Error(NoCycleWithinBound)
/// if no iterate repeats within max_steps applications of the map.
OrbitRecord orbit(const Atm& a, const CanonicalShape& p, std::size_t max_steps);

}  // namespace trimap
