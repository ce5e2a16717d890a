#pragma once

#include <array>
#include <complex>
#include <cstdint>

#include "trimap/linalg.hpp"

namespace trimap {

/// Interior angles of a planar triangle, both as floats and snapped to
/// exact rationals.
struct VertexAngles {
    std::array<double, 3> angles{};  ///< normalized so that pi = 1
    Vec3Q snapped;                   ///< exact, sums to one
    bool flat = false;               ///< some angle within 1e-9 of zero
};

/// Best rational approximation of x with denominator at most max_den
/// (continued fractions with semiconvergents).
Rational best_rational(double x, std::int64_t max_den);

/// Angle at z_i between the edges towards z_{i+1} and z_{i+2}, for each i.
/// Throws Error(CoincidentVertices) if two of the points are equal.
VertexAngles shape_from_vertices(std::complex<double> z1, std::complex<double> z2,
                                 std::complex<double> z3, std::int64_t max_den = 1000);

}  // namespace trimap
