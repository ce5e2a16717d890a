#include "trimap/dynamics.hpp"

#include <algorithm>
#include <unordered_map>

#include "trimap/error.hpp"
#include "trimap/markov.hpp"

namespace trimap {

namespace {

CanonicalShape sorted_shape(Vec3Q v)
{
    std::sort(v.c.begin(), v.c.end(), std::greater<>());
    return CanonicalShape(std::move(v));
}

bool is_flat(const CanonicalShape& p)
{
    return p[2].is_zero();
}

bool is_right(const CanonicalShape& p)
{
    const Rational half(1, 2);
    return p[0] == half || p[1] == half || p[2] == half;
}

}  // namespace

CanonicalShape step(const Mat3Q& m, const CanonicalShape& p)
{
    return canonicalize(m * p.v());
}

CanonicalShape step(const Atm& a, const CanonicalShape& p)
{
    return step(a.matrix, p);
}

HobsonStep hobson_pedal_step(const CanonicalShape& p)
{
    const Rational half(1, 2), one(1), two(2);
    const Rational& largest = p[0];
    if (largest == half)
        return DegenerateRight{};
    if (largest < half)
        return sorted_shape(Vec3Q(one - two * p[0], one - two * p[1], one - two * p[2]));
    return sorted_shape(Vec3Q(two * p[0] - one, two * p[1], two * p[2]));
}

const Mat3Q& antipedal_matrix()
{
    static const Mat3Q m = Mat3Q::circulant_symmetric(0, Rational(1, 2));
    return m;
}

CanonicalShape antipedal_step(const CanonicalShape& p)
{
    return sorted_shape(antipedal_matrix() * p.v());
}

std::vector<CanonicalShape> preimages(const MarkovPartition& mp, const CanonicalShape& p)
{
    const Mat3Q inv = mp.atm().matrix.inverse();
    std::vector<CanonicalShape> out;
    out.reserve(mp.cells().size());
    for (const auto& cell : mp.cells())
        out.push_back(canonicalize(inv * cell.unfold.apply(p.v())));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<CanonicalShape> preimages(const Atm& a, const CanonicalShape& p)
{
    return preimages(build_partition(a), p);
}

OrbitRecord orbit(const Atm& a, const CanonicalShape& p, std::size_t max_steps)
{
    if (max_steps < 1)
        throw Error(ErrorCode::InvalidArgument, "max_steps must be at least 1");

    std::vector<CanonicalShape> path{p};
    std::unordered_map<Vec3Q, std::size_t> seen{{p.v(), 0}};
    for (std::size_t n = 1; n <= max_steps; ++n) {
        CanonicalShape next = step(a, path.back());
        if (const auto it = seen.find(next.v()); it != seen.end()) {
            OrbitRecord rec{.start = p};
            rec.preperiod = it->second;
            rec.period = path.size() - it->second;
            rec.transient.assign(path.begin(), path.begin() + static_cast<std::ptrdiff_t>(rec.preperiod));
            rec.cycle.assign(path.begin() + static_cast<std::ptrdiff_t>(rec.preperiod), path.end());
            rec.hit_flat = std::any_of(path.begin(), path.end(), is_flat);
            rec.hit_right = std::any_of(path.begin(), path.end(), is_right);
            return rec;
        }
        seen.emplace(next.v(), path.size());
        path.push_back(std::move(next));
    }
    throw Error(ErrorCode::NoCycleWithinBound,
                "no repeat within " + std::to_string(max_steps) + " steps from " + p.str());
}

}  // namespace trimap
