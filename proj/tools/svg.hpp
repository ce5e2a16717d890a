#pragma once

#include <string>
#include <vector>

#include "trimap/markov.hpp"

namespace trimap::svg {

struct Point {
    double x = 0;
    double y = 0;
};

/// Isometric coordinates of a point of A: origin at b, axes along
/// (e1 - e2)/sqrt(2) and (e1 + e2 - 2 e3)/sqrt(6).
Point project(const Vec3Q& p);

/// The cells of D, one <polygon id="cell-i"> each, filled by symbol and
/// labelled with their index.
std::string render_partition(const MarkovPartition& mp);

/// M A_p shaded over the chamber tiling, with A_p outlined.
std::string render_image(const Atm& a);

/// D with the partition (when one is given) and an orbit path on top.
std::string render_orbit(const MarkovPartition* mp, const std::vector<CanonicalShape>& path);

}  // namespace trimap::svg
