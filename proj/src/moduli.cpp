#include "trimap/moduli.hpp"

#include <utility>

#include "trimap/error.hpp"

namespace trimap {

namespace {

void require_on_A(const Vec3Q& v)
{
    if (!in_plane_A(v))
        throw Error(ErrorCode::NotOnPlaneA, v.str() + " is not on plane A (x+y+z != 1)");
}

bool sorted_descending_nonneg(const Vec3Q& v)
{
    return v[0] >= v[1] && v[1] >= v[2] && v[2].sign() >= 0;
}

enum class Branch { Lattice, Keep, Flip };

struct Folded {
    Vec3Q point;  // in A_p, before sorting
    Branch branch;
};

Folded fold_into_Ap(const Vec3Q& v)
{
    Vec3Q f(v[0].frac(), v[1].frac(), v[2].frac());
    const Rational s = f.sum();
    if (s.is_zero())
        return {vertex_v2(), Branch::Lattice};
    if (s == Rational(1))
        return {std::move(f), Branch::Keep};
    const Rational one(1);
    return {Vec3Q(one - f[0], one - f[1], one - f[2]), Branch::Flip};
}

// Bubble sort into descending order; swaps(0) is P12, swaps(1) is P23.
template <typename OnSwap>
void sort_descending(Vec3Q& v, OnSwap&& on_swap)
{
    for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t i = 0; i + 1 < 3 - static_cast<std::size_t>(pass); ++i) {
            if (v[i] < v[i + 1]) {
                std::swap(v[i], v[i + 1]);
                on_swap(i);
            }
        }
    }
}

}  // namespace

CanonicalShape::CanonicalShape(Vec3Q v) : v_(std::move(v))
{
    require_on_A(v_);
    if (!sorted_descending_nonneg(v_))
        throw Error(ErrorCode::NotInFundamentalDomain, v_.str() + " is not in the fundamental domain");
}

RationalShape::RationalShape(Vec3Q v) : v_(std::move(v)), canonical_(canonicalize(v_)) {}

const Vec3Q& vertex_b()
{
    static const Vec3Q b(Rational(1, 3), Rational(1, 3), Rational(1, 3));
    return b;
}

const Vec3Q& vertex_v2()
{
    static const Vec3Q v(1, 0, 0);
    return v;
}

const Vec3Q& vertex_v3()
{
    static const Vec3Q v(Rational(1, 2), Rational(1, 2), 0);
    return v;
}

bool in_D(const Vec3Q& v)
{
    require_on_A(v);
    return sorted_descending_nonneg(v);
}

CanonicalShape canonicalize(const Vec3Q& v)
{
    require_on_A(v);
    Folded folded = fold_into_Ap(v);
    sort_descending(folded.point, [](std::size_t) {});
    return CanonicalShape(std::move(folded.point), CanonicalShape::Trusted{});
}

Reduction reduce(const Vec3Q& v)
{
    require_on_A(v);
    Folded folded = fold_into_Ap(v);

    GroupElement g;
    switch (folded.branch) {
    case Branch::Lattice:
        g = GroupElement::translation(vertex_v2() - v);
        break;
    case Branch::Keep:
        g = GroupElement::translation(folded.point - v);
        break;
    case Branch::Flip: {
        // Ra v = (-v1, 1 - v2, 1 - v3), then shift by a lattice vector.
        const GroupElement ra = generator(Generator::Ra);
        g = GroupElement::translation(folded.point - ra.apply(v)) * ra;
        break;
    }
    }

    sort_descending(folded.point, [&g](std::size_t i) {
        g = generator(i == 0 ? Generator::P12 : Generator::P23) * g;
    });
    return Reduction{CanonicalShape(std::move(folded.point), CanonicalShape::Trusted{}), std::move(g)};
}

bool is_equivalent(const Vec3Q& v, const Vec3Q& w)
{
    return canonicalize(v) == canonicalize(w);
}

int point_group_order(const CanonicalShape& p)
{
    const Vec3Q& v = p.v();
    if (v == vertex_v2())
        return 12;
    if (v == vertex_b())
        return 6;
    if (v == vertex_v3())
        return 4;
    if (v[0] == v[1] || v[1] == v[2] || v[2].is_zero())
        return 2;
    return 1;
}

}  // namespace trimap
