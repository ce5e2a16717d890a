#include "trimap/markov.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "trimap/dynamics.hpp"
#include "trimap/error.hpp"

namespace trimap {

namespace {

const std::array<Vec3Q, 3>& domain_vertices()
{
    static const std::array<Vec3Q, 3> d{vertex_b(), vertex_v2(), vertex_v3()};
    return d;
}

const std::vector<GroupElement>& point_group_e1()
{
    static const std::vector<GroupElement> h = stabilizer(unit(0));
    return h;
}

std::array<Vec3Q, 3> sorted_vertices(const std::array<Vec3Q, 3>& v)
{
    auto s = v;
    std::sort(s.begin(), s.end());
    return s;
}

long floor_long(const Rational& r)
{
    return r.floor().numerator().get_si();
}

bool is_prime(long n)
{
    if (n < 2)
        return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

long random_prime(std::mt19937_64& rng, long lo, long hi)
{
    std::uniform_int_distribution<long> dist(lo, hi);
    for (;;) {
        long n = dist(rng);
        while (n <= hi && !is_prime(n))
            ++n;
        if (n <= hi)
            return n;
    }
}

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

Rational twice_signed_area_xy(const Vec3Q& a, const Vec3Q& b, const Vec3Q& c)
{
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
}

bool triangle_contains(const std::array<Vec3Q, 3>& tri, const Vec3Q& p, bool* on_boundary)
{
    const int orientation = twice_signed_area_xy(tri[0], tri[1], tri[2]).sign();
    bool boundary = false;
    for (std::size_t i = 0; i < 3; ++i) {
        const int s = twice_signed_area_xy(tri[i], tri[(i + 1) % 3], p).sign() * orientation;
        if (s < 0)
            return false;
        boundary = boundary || s == 0;
    }
    if (on_boundary)
        *on_boundary = boundary;
    return true;
}

bool on_reflection_line(const Vec3Q& p, const Vec3Q& q)
{
    static const std::array<Vec3Q, 6> normals{Vec3Q(1, 0, 0), Vec3Q(0, 1, 0),  Vec3Q(0, 0, 1),
                                              Vec3Q(1, -1, 0), Vec3Q(0, 1, -1), Vec3Q(1, 0, -1)};
    const Vec3Q d = q - p;
    return std::any_of(normals.begin(), normals.end(),
                       [&](const Vec3Q& n) { return dot(n, d).is_zero() && dot(n, p).is_integer(); });
}

std::vector<Chamber> chambers_around_lattice(long x_lo, long x_hi, long y_lo, long y_hi)
{
    const auto& star = point_group_e1();
    std::vector<std::array<Vec3Q, 3>> star_vertices;
    star_vertices.reserve(star.size());
    for (const auto& h : star) {
        const auto& d = domain_vertices();
        star_vertices.push_back({h.apply(d[0]), h.apply(d[1]), h.apply(d[2])});
    }

    std::vector<Chamber> out;
    for (long x = x_lo; x <= x_hi; ++x) {
        for (long y = y_lo; y <= y_hi; ++y) {
            const Vec3Q shift(Rational(x - 1), Rational(y), Rational(1 - x - y));
            for (std::size_t i = 0; i < star.size(); ++i) {
                const auto& sv = star_vertices[i];
                out.push_back(Chamber{GroupElement::translation(shift) * star[i],
                                      {sv[0] + shift, sv[1] + shift, sv[2] + shift}});
            }
        }
    }
    return out;
}

MarkovPartition build_partition(const Atm& a)
{
    const Mat3Q& m = a.matrix;
    const auto& d = domain_vertices();
    const std::array<Vec3Q, 3> image{m * d[0], m * d[1], m * d[2]};

    for (std::size_t i = 0; i < 3; ++i)
        if (!on_reflection_line(image[i], image[(i + 1) % 3]))
            throw Error(ErrorCode::EdgeNotOnReflectionLine,
                        "edge " + image[i].str() + " -- " + image[(i + 1) % 3].str() + " of M D");

    Rational x_min = image[0][0], x_max = x_min, y_min = image[0][1], y_max = y_min;
    for (const auto& v : image) {
        x_min = std::min(x_min, v[0]);
        x_max = std::max(x_max, v[0]);
        y_min = std::min(y_min, v[1]);
        y_max = std::max(y_max, v[1]);
    }

    // Every chamber has exactly one lattice vertex, so lattice points in the
    // bounding box (plus one step of slack) reach all chambers inside M D.
    const Mat3Q inv = m.inverse();
    std::vector<Cell> cells;
    for (auto& ch : chambers_around_lattice(floor_long(x_min) - 1, floor_long(x_max) + 1, floor_long(y_min) - 1,
                                            floor_long(y_max) + 1)) {
        if (!std::all_of(ch.vertices.begin(), ch.vertices.end(),
                         [&](const Vec3Q& v) { return triangle_contains(image, v); }))
            continue;
        cells.push_back(Cell{0, std::move(ch.g), {inv * ch.vertices[0], inv * ch.vertices[1], inv * ch.vertices[2]}});
    }

    if (Rational(static_cast<long>(cells.size())) != a.abs_det)
        throw Error(ErrorCode::PartitionCountMismatch, "found " + std::to_string(cells.size()) +
                                                           " chambers in M D, expected " + a.abs_det.str());

    std::sort(cells.begin(), cells.end(), [](const Cell& l, const Cell& r) {
        return sorted_vertices(l.vertices) < sorted_vertices(r.vertices);
    });
    for (std::size_t i = 0; i < cells.size(); ++i)
        cells[i].index = i;
    return MarkovPartition(a, std::move(cells));
}

Location locate(const MarkovPartition& mp, const CanonicalShape& p)
{
    const auto& cells = mp.cells();
    for (std::size_t i = 0; i < cells.size(); ++i) {
        bool edge = false;
        if (!triangle_contains(cells[i].vertices, p.v(), &edge))
            continue;
        // Only edges shared with another cell make the symbol ambiguous; the
        // outer edges of D do not.
        const bool shared = edge && std::any_of(cells.begin() + static_cast<std::ptrdiff_t>(i) + 1, cells.end(),
                                                [&](const Cell& c) { return triangle_contains(c.vertices, p.v()); });
        return Location{cells[i].index, shared};
    }
    throw std::logic_error("cells do not cover " + p.str());
}

Itinerary itinerary(const MarkovPartition& mp, const CanonicalShape& p, std::size_t n)
{
    if (n < 1)
        throw Error(ErrorCode::InvalidArgument, "itinerary length must be at least 1");
    Itinerary it{.start = p};
    it.symbols.reserve(n);
    CanonicalShape q = p;
    for (std::size_t i = 0; i < n; ++i) {
        const Location loc = locate(mp, q);
        it.symbols.push_back(loc.index);
        if (loc.on_boundary)
            it.boundary_steps.push_back(i);
        if (i + 1 < n)
            q = step(mp.atm(), q);
    }
    return it;
}

MarkovReport verify_markov(const MarkovPartition& mp, int samples_per_cell, std::uint64_t seed)
{
    if (samples_per_cell < 1)
        throw Error(ErrorCode::InvalidArgument, "samples_per_cell must be at least 1");

    MarkovReport report;
    auto problem = [&report](std::string msg) {
        report.ok = false;
        report.problems.push_back(std::move(msg));
    };

    const Mat3Q& m = mp.atm().matrix;
    const auto& d = domain_vertices();
    const Rational domain_area = twice_signed_area_xy(d[0], d[1], d[2]).abs();
    const auto target = sorted_vertices(d);

    if (Rational(static_cast<long>(mp.size())) != mp.atm().abs_det)
        problem("cell count " + std::to_string(mp.size()) + " differs from |det M|");

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> weight(1, 1000);
    for (const auto& cell : mp.cells()) {
        const std::string name = "cell " + std::to_string(cell.index);
        std::array<Vec3Q, 3> images;
        for (std::size_t i = 0; i < 3; ++i)
            images[i] = canonicalize(m * cell.vertices[i]).v();
        if (sorted_vertices(images) != target)
            problem(name + ": vertices do not map onto the corners of D");

        const Rational area = twice_signed_area_xy(cell.vertices[0], cell.vertices[1], cell.vertices[2]).abs();
        if (area * mp.atm().abs_det != domain_area)
            problem(name + ": area is not area(D)/|det M|");

        const GroupElement fold = cell.unfold.inverse();
        for (int s = 0; s < samples_per_cell; ++s) {
            const Rational w0(weight(rng)), w1(weight(rng)), w2(weight(rng));
            const Vec3Q q = (cell.vertices[0] * w0 + cell.vertices[1] * w1 + cell.vertices[2] * w2) *
                            (Rational(1) / (w0 + w1 + w2));
            const CanonicalShape shape(q);
            const Location loc = locate(mp, shape);
            if (loc.index != cell.index || loc.on_boundary) {
                problem(name + ": interior sample " + q.str() + " located in cell " + std::to_string(loc.index));
                break;
            }
            if (step(mp.atm(), shape).v() != fold.apply(m * q)) {
                problem(name + ": sample " + q.str() + " is not mapped by the cell's branch");
                break;
            }
        }
    }
    return report;
}

CanonicalShape random_shape_with_denominator(std::mt19937_64& rng, long q)
{
    std::uniform_int_distribution<long> dist(0, q);
    for (;;) {
        const long a = dist(rng), b = dist(rng), c = q - a - b;
        if (a >= b && b >= c && c >= 0)
            return CanonicalShape(Vec3Q(Rational(a, q), Rational(b, q), Rational(c, q)));
    }
}

SymbolStatistics symbol_statistics(const MarkovPartition& mp, std::size_t num_points, std::size_t n,
                                   std::uint64_t seed, unsigned workers)
{
    if (num_points < 1 || n < 1)
        throw Error(ErrorCode::InvalidArgument, "num_points and n must be at least 1");

    const std::size_t symbols = mp.size();
    struct Tally {
        std::size_t kept = 0;
        std::vector<std::uint64_t> single, pair;
    };
    auto run_range = [&](std::size_t begin, std::size_t end) {
        Tally t{0, std::vector<std::uint64_t>(symbols), std::vector<std::uint64_t>(symbols * symbols)};
        for (std::size_t i = begin; i < end; ++i) {
            std::mt19937_64 rng(splitmix64(seed ^ splitmix64(i)));
            const long q = random_prime(rng, 10000, 100000);
            const Itinerary it = itinerary(mp, random_shape_with_denominator(rng, q), n);
            if (!it.boundary_steps.empty())
                continue;
            ++t.kept;
            for (std::size_t k = 0; k < n; ++k) {
                ++t.single[it.symbols[k]];
                if (k + 1 < n)
                    ++t.pair[it.symbols[k] * symbols + it.symbols[k + 1]];
            }
        }
        return t;
    };

    if (workers == 0)
        workers = std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, num_points));
    std::vector<Tally> tallies(workers);
    {
        std::vector<std::jthread> pool;
        const std::size_t chunk = (num_points + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            const std::size_t begin = std::min(num_points, w * chunk);
            const std::size_t end = std::min(num_points, begin + chunk);
            pool.emplace_back([&, w, begin, end] { tallies[w] = run_range(begin, end); });
        }
    }

    SymbolStatistics s;
    s.symbols = symbols;
    s.points = num_points;
    s.length = n;
    s.single_counts.assign(symbols, 0);
    s.pair_counts.assign(symbols * symbols, 0);
    for (const auto& t : tallies) {
        s.kept += t.kept;
        for (std::size_t i = 0; i < symbols; ++i)
            s.single_counts[i] += t.single[i];
        for (std::size_t i = 0; i < symbols * symbols; ++i)
            s.pair_counts[i] += t.pair[i];
    }

    const double singles = static_cast<double>(s.kept * n);
    const double pairs = static_cast<double>(s.kept * (n - 1));
    const double p1 = 1.0 / static_cast<double>(symbols);
    const double p2 = p1 * p1;
    s.single_sigma = singles > 0 ? std::sqrt(p1 * (1 - p1) / singles) : 0;
    s.pair_sigma = pairs > 0 ? std::sqrt(p2 * (1 - p2) / pairs) : 0;
    for (auto c : s.single_counts) {
        const double f = singles > 0 ? static_cast<double>(c) / singles : 0;
        s.single_freq.push_back(f);
        if (s.single_sigma > 0)
            s.max_single_deviation = std::max(s.max_single_deviation, std::abs(f - p1) / s.single_sigma);
    }
    for (auto c : s.pair_counts) {
        const double f = pairs > 0 ? static_cast<double>(c) / pairs : 0;
        s.pair_freq.push_back(f);
        if (s.pair_sigma > 0)
            s.max_pair_deviation = std::max(s.max_pair_deviation, std::abs(f - p2) / s.pair_sigma);
    }
    return s;
}

}  // namespace trimap
