#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <string>

#include "trimap/rational.hpp"

namespace trimap {

/// A point or direction in 3-space with exact coordinates. Angle triples are
/// in normalized units (pi = 1).
struct Vec3Q {
    std::array<Rational, 3> c{};

    Vec3Q() = default;
    Vec3Q(Rational x, Rational y, Rational z) : c{std::move(x), std::move(y), std::move(z)} {}

    const Rational& operator[](std::size_t i) const { return c[i]; }
    Rational& operator[](std::size_t i) { return c[i]; }

    Rational sum() const { return c[0] + c[1] + c[2]; }
    bool is_integer() const { return c[0].is_integer() && c[1].is_integer() && c[2].is_integer(); }

    Vec3Q& operator+=(const Vec3Q& o);
    Vec3Q& operator-=(const Vec3Q& o);
    Vec3Q& operator*=(const Rational& s);

    friend Vec3Q operator+(Vec3Q a, const Vec3Q& b) { return a += b; }
    friend Vec3Q operator-(Vec3Q a, const Vec3Q& b) { return a -= b; }
    friend Vec3Q operator*(Vec3Q a, const Rational& s) { return a *= s; }
    friend Vec3Q operator*(const Rational& s, Vec3Q a) { return a *= s; }
    Vec3Q operator-() const { return Vec3Q(-c[0], -c[1], -c[2]); }

    friend bool operator==(const Vec3Q&, const Vec3Q&) = default;
    friend std::strong_ordering operator<=>(const Vec3Q& a, const Vec3Q& b)
    {
        for (std::size_t i = 0; i < 3; ++i)
            if (auto o = a.c[i] <=> b.c[i]; o != 0)
                return o;
        return std::strong_ordering::equal;
    }

    /// "a/b,c/d,e/f"
    std::string str() const;
};

Rational dot(const Vec3Q& a, const Vec3Q& b);

std::ostream& operator<<(std::ostream& os, const Vec3Q& v);
std::size_t hash_value(const Vec3Q& v) noexcept;

/// 3x3 rational matrix, row-major.
class Mat3Q {
public:
    Mat3Q() = default;
    /// Row-major list of nine entries.
    Mat3Q(std::initializer_list<Rational> entries);
    explicit Mat3Q(const std::array<Rational, 9>& entries) : e_(entries) {}

    static Mat3Q identity();
    static Mat3Q from_columns(const Vec3Q& c0, const Vec3Q& c1, const Vec3Q& c2);
    /// circ(d; o): diagonal d, every off-diagonal entry o.
    static Mat3Q circulant_symmetric(const Rational& diag, const Rational& off);
    /// u * (1,1,1): adds u scaled by the coordinate sum.
    static Mat3Q outer_with_ones(const Vec3Q& u);

    const Rational& operator()(std::size_t r, std::size_t c) const { return e_[3 * r + c]; }
    Rational& operator()(std::size_t r, std::size_t c) { return e_[3 * r + c]; }
    const std::array<Rational, 9>& entries() const { return e_; }

    Vec3Q column(std::size_t c) const { return Vec3Q(e_[c], e_[3 + c], e_[6 + c]); }
    Vec3Q row(std::size_t r) const { return Vec3Q(e_[3 * r], e_[3 * r + 1], e_[3 * r + 2]); }

    bool is_integer() const;
    /// True iff every column sums to one, i.e. the plane A is mapped into itself.
    bool preserves_plane_A() const;
    Rational det() const;
    /// Throws Error(SingularMatrix) when det() == 0.
    Mat3Q inverse() const;
    Mat3Q transpose() const;

    Mat3Q& operator+=(const Mat3Q& o);
    Mat3Q& operator-=(const Mat3Q& o);
    friend Mat3Q operator+(Mat3Q a, const Mat3Q& b) { return a += b; }
    friend Mat3Q operator-(Mat3Q a, const Mat3Q& b) { return a -= b; }
    friend Mat3Q operator*(const Mat3Q& a, const Mat3Q& b);
    friend Vec3Q operator*(const Mat3Q& a, const Vec3Q& v);
    friend Mat3Q operator*(const Rational& s, Mat3Q a);

    friend bool operator==(const Mat3Q&, const Mat3Q&) = default;

    /// Nine entries, row-major, separated by single spaces.
    std::string str() const;

private:
    std::array<Rational, 9> e_{};
};

inline Mat3Q mat_mul(const Mat3Q& a, const Mat3Q& b) { return a * b; }
inline Vec3Q mat_vec(const Mat3Q& a, const Vec3Q& v) { return a * v; }
inline Rational det(const Mat3Q& a) { return a.det(); }
inline Mat3Q inverse(const Mat3Q& a) { return a.inverse(); }

std::ostream& operator<<(std::ostream& os, const Mat3Q& m);
std::size_t hash_value(const Mat3Q& m) noexcept;

/// x + y + z == 1.
bool in_plane_A(const Vec3Q& v);
/// Integer entries summing to one: the orbit of e1 under the group.
bool in_lattice_Lambda(const Vec3Q& v);
/// (a/3, b/3, c/3) with a = b = c = 1 (mod 3) and a + b + c = 3.
bool in_thirds_lattice(const Vec3Q& v);

Vec3Q unit(std::size_t i);

}  // namespace trimap

template <>
struct std::hash<trimap::Vec3Q> {
    std::size_t operator()(const trimap::Vec3Q& v) const noexcept { return trimap::hash_value(v); }
};

template <>
struct std::hash<trimap::Mat3Q> {
    std::size_t operator()(const trimap::Mat3Q& m) const noexcept { return trimap::hash_value(m); }
};
