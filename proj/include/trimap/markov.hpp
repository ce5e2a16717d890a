#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "trimap/atm.hpp"
#include "trimap/moduli.hpp"

namespace trimap {

/// A G-copy g D of the fundamental domain. Vertices are listed as the images
/// of (b, v2, v3).
struct Chamber {
    GroupElement g;
    std::array<Vec3Q, 3> vertices;
};

/// Every chamber whose lattice vertex (x, y, 1-x-y) has x in [x_lo, x_hi] and
/// y in [y_lo, y_hi]: twelve per lattice point.
std::vector<Chamber> chambers_around_lattice(long x_lo, long x_hi, long y_lo, long y_hi);

/// One piece of the partition: the preimage under M of the chamber
/// unfold * D lying inside M D. On this cell the map is q -> unfold^{-1} M q.
struct Cell {
    std::size_t index = 0;
    GroupElement unfold;
    std::array<Vec3Q, 3> vertices;  ///< preimages of b, v2, v3
};

class MarkovPartition {
public:
    const Atm& atm() const { return atm_; }
    const std::vector<Cell>& cells() const { return cells_; }
    std::size_t size() const { return cells_.size(); }

private:
    MarkovPartition(Atm atm, std::vector<Cell> cells) : atm_(std::move(atm)), cells_(std::move(cells)) {}
    friend MarkovPartition build_partition(const Atm& a);

    Atm atm_;
    std::vector<Cell> cells_;
};

/// Tiles M D by the chambers it contains and pulls them back to D. Cells are
/// ordered by their sorted vertex lists. Throws Error(EdgeNotOnReflectionLine)
/// if an edge of M D is off the reflection lines, Error(PartitionCountMismatch)
/// if the number of chambers differs from |det M|.
MarkovPartition build_partition(const Atm& a);

struct Location {
    std::size_t index = 0;
    bool on_boundary = false;  ///< p also lies in the closure of another cell
};

/// Lowest-index cell whose closed triangle contains p.
Location locate(const MarkovPartition& mp, const CanonicalShape& p);

struct Itinerary {
    CanonicalShape start;
    std::vector<std::size_t> symbols{};
    std::vector<std::size_t> boundary_steps{};
};

/// Cell symbols of the first n iterates p, f(p), ..., f^{n-1}(p).
Itinerary itinerary(const MarkovPartition& mp, const CanonicalShape& p, std::size_t n);

struct MarkovReport {
    bool ok = true;
    std::vector<std::string> problems;
};

/// Per cell: the vertices map onto {b, v2, v3}, the area is area(D)/|det M|,
/// and random interior samples land in that cell only and are mapped by the
/// cell's affine branch.
MarkovReport verify_markov(const MarkovPartition& mp, int samples_per_cell, std::uint64_t seed);

struct SymbolStatistics {
    std::size_t symbols = 0;  ///< alphabet size |det M|
    std::size_t points = 0;
    std::size_t kept = 0;  ///< orbits without boundary hits
    std::size_t length = 0;
    std::vector<std::uint64_t> single_counts;
    std::vector<std::uint64_t> pair_counts;  ///< row-major symbols x symbols
    std::vector<double> single_freq;
    std::vector<double> pair_freq;
    double single_sigma = 0;  ///< binomial standard deviation around 1/N
    double pair_sigma = 0;    ///< around 1/N^2
    double max_single_deviation = 0;  ///< in units of single_sigma
    double max_pair_deviation = 0;    ///< in units of pair_sigma
};

/// Samples random starts in D with prime denominators in [10^4, 10^5], codes
/// length-n itineraries, drops orbits touching a cell boundary, and counts
/// symbols and adjacent pairs. Each start draws from its own seed derived from
/// (seed, index), so the result does not depend on the worker count.
SymbolStatistics symbol_statistics(const MarkovPartition& mp, std::size_t num_points, std::size_t n,
                                   std::uint64_t seed, unsigned workers = 0);

/// Twice the signed area of the triangle after projecting A onto the xy-plane.
Rational twice_signed_area_xy(const Vec3Q& a, const Vec3Q& b, const Vec3Q& c);

/// Closed-triangle membership by exact orientation tests.
bool triangle_contains(const std::array<Vec3Q, 3>& tri, const Vec3Q& p, bool* on_boundary = nullptr);

/// Whether the line through p and q is one of x, y, z, x-y, y-z, x-z in Z.
bool on_reflection_line(const Vec3Q& p, const Vec3Q& q);

/// Random rational point of D with the given denominator.
CanonicalShape random_shape_with_denominator(std::mt19937_64& rng, long q);

}  // namespace trimap
