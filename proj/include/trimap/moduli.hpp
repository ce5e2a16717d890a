#pragma once

#include <optional>

#include "trimap/group.hpp"
#include "trimap/linalg.hpp"

namespace trimap {

/// A point of the fundamental domain D = {a >= b >= c >= 0} on the plane A.
/// Every re-expression class of triangle shapes has exactly one such point.
class CanonicalShape {
public:
    /// Throws Error(NotOnPlaneA) or Error(NotInFundamentalDomain).
    explicit CanonicalShape(Vec3Q v);

    const Vec3Q& v() const { return v_; }
    const Rational& operator[](std::size_t i) const { return v_[i]; }

    friend bool operator==(const CanonicalShape&, const CanonicalShape&) = default;
    friend auto operator<=>(const CanonicalShape& a, const CanonicalShape& b) { return a.v_ <=> b.v_; }

    std::string str() const { return v_.str(); }

private:
    struct Trusted {};
    CanonicalShape(Vec3Q v, Trusted) : v_(std::move(v)) {}
    friend CanonicalShape canonicalize(const Vec3Q& v);
    friend struct Reduction reduce(const Vec3Q& v);

    Vec3Q v_;
};

/// A shape triple anywhere on A together with its canonical representative.
class RationalShape {
public:
    /// Throws Error(NotOnPlaneA).
    explicit RationalShape(Vec3Q v);

    const Vec3Q& v() const { return v_; }
    const CanonicalShape& canonical() const { return canonical_; }

private:
    Vec3Q v_;
    CanonicalShape canonical_;
};

/// Vertices of D: b = (1/3,1/3,1/3), v2 = e1 = (1,0,0), v3 = (1/2,1/2,0).
const Vec3Q& vertex_b();
const Vec3Q& vertex_v2();
const Vec3Q& vertex_v3();

/// Throws Error(NotOnPlaneA).
bool in_D(const Vec3Q& v);

/// The unique point of D in the G-orbit of v. Throws Error(NotOnPlaneA).
///
/// Fractional parts f_i = v_i mod 1 sum to S in {0, 1, 2}. S = 0 means v is a
/// lattice point and maps to e1; S = 1 keeps f; S = 2 takes 1 - f (the
/// orientation flip). The result is then sorted into descending order.
CanonicalShape canonicalize(const Vec3Q& v);

struct Reduction {
    CanonicalShape shape;
    GroupElement witness;  ///< witness.apply(v) == shape.v()
};

/// canonicalize() plus the group element that performs it.
Reduction reduce(const Vec3Q& v);

/// v ~ w: same re-expression class. Throws Error(NotOnPlaneA).
bool is_equivalent(const Vec3Q& v, const Vec3Q& w);

/// Order of the stabilizer of p: 1 interior, 2 on an edge, 4 at v3, 6 at b,
/// 12 at v2.
int point_group_order(const CanonicalShape& p);

}  // namespace trimap
