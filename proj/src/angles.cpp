#include "trimap/angles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "trimap/error.hpp"

namespace trimap {

namespace {

constexpr double kFlatTolerance = 1e-9;

double normalized_angle(std::complex<double> a, std::complex<double> b)
{
    const double c = (a * std::conj(b)).real() / (std::abs(a) * std::abs(b));
    return std::acos(std::clamp(c, -1.0, 1.0)) / std::numbers::pi;
}

}  // namespace

Rational best_rational(double x, std::int64_t max_den)
{
    if (max_den < 1)
        throw Error(ErrorCode::InvalidArgument, "denominator bound must be positive");
    if (!std::isfinite(x))
        throw Error(ErrorCode::InvalidArgument, "cannot snap a non-finite value");

    const double a0 = std::floor(x);
    std::int64_t p_prev = 1, q_prev = 0;
    std::int64_t p = static_cast<std::int64_t>(a0), q = 1;
    double rest = x - a0;

    while (rest > 1e-15) {
        const double inv = 1.0 / rest;
        const double a_d = std::floor(inv);
        if (a_d > 1e15)
            break;
        const auto a = static_cast<std::int64_t>(a_d);
        rest = inv - a_d;
        if (a > (max_den - q_prev) / q) {
            // Largest admissible semiconvergent; keep it only if it beats p/q.
            const std::int64_t k = (max_den - q_prev) / q;
            if (k > 0 && 2 * k >= a) {
                const std::int64_t ps = p_prev + k * p, qs = q_prev + k * q;
                const Rational semi(ps, qs), conv(p, q);
                const double ds = std::abs(x - semi.to_double());
                const double dc = std::abs(x - conv.to_double());
                if (ds < dc)
                    return semi;
            }
            break;
        }
        const std::int64_t pn = a * p + p_prev, qn = a * q + q_prev;
        p_prev = p;
        q_prev = q;
        p = pn;
        q = qn;
    }
    return Rational(p, q);
}

VertexAngles shape_from_vertices(std::complex<double> z1, std::complex<double> z2,
                                 std::complex<double> z3, std::int64_t max_den)
{
    if (z1 == z2 || z2 == z3 || z1 == z3)
        throw Error(ErrorCode::CoincidentVertices, "triangle vertices must be pairwise distinct");

    const std::array<std::complex<double>, 3> z{z1, z2, z3};
    VertexAngles out;
    for (std::size_t i = 0; i < 3; ++i)
        out.angles[i] = normalized_angle(z[(i + 2) % 3] - z[i], z[(i + 1) % 3] - z[i]);
    out.flat = std::any_of(out.angles.begin(), out.angles.end(),
                           [](double a) { return a < kFlatTolerance; });

    // Snap each angle; if the rounded triple misses the plane, let the largest
    // angle absorb the difference so the result stays exactly on A.
    for (std::size_t i = 0; i < 3; ++i)
        out.snapped[i] = best_rational(out.angles[i], max_den);
    if (!in_plane_A(out.snapped)) {
        const auto largest = static_cast<std::size_t>(
            std::max_element(out.angles.begin(), out.angles.end()) - out.angles.begin());
        Rational rest(1);
        for (std::size_t i = 0; i < 3; ++i)
            if (i != largest)
                rest -= out.snapped[i];
        out.snapped[largest] = rest;
    }
    return out;
}

}  // namespace trimap
