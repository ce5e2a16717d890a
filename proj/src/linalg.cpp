#include "trimap/linalg.hpp"

#include <ostream>

#include "trimap/error.hpp"

namespace trimap {

Vec3Q& Vec3Q::operator+=(const Vec3Q& o)
{
    for (std::size_t i = 0; i < 3; ++i)
        c[i] += o.c[i];
    return *this;
}

Vec3Q& Vec3Q::operator-=(const Vec3Q& o)
{
    for (std::size_t i = 0; i < 3; ++i)
        c[i] -= o.c[i];
    return *this;
}

Vec3Q& Vec3Q::operator*=(const Rational& s)
{
    for (auto& x : c)
        x *= s;
    return *this;
}

std::string Vec3Q::str() const
{
    return c[0].str() + "," + c[1].str() + "," + c[2].str();
}

Rational dot(const Vec3Q& a, const Vec3Q& b)
{
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

std::ostream& operator<<(std::ostream& os, const Vec3Q& v)
{
    return os << v.str();
}

std::size_t hash_value(const Vec3Q& v) noexcept
{
    std::size_t seed = 0;
    for (const auto& x : v.c)
        hash_combine(seed, hash_value(x));
    return seed;
}

Mat3Q::Mat3Q(std::initializer_list<Rational> entries)
{
    if (entries.size() != 9)
        throw Error(ErrorCode::InvalidArgument, "Mat3Q needs exactly nine entries");
    std::size_t i = 0;
    for (const auto& x : entries)
        e_[i++] = x;
}

Mat3Q Mat3Q::identity()
{
    return Mat3Q{1, 0, 0, 0, 1, 0, 0, 0, 1};
}

Mat3Q Mat3Q::from_columns(const Vec3Q& c0, const Vec3Q& c1, const Vec3Q& c2)
{
    Mat3Q m;
    for (std::size_t r = 0; r < 3; ++r) {
        m(r, 0) = c0[r];
        m(r, 1) = c1[r];
        m(r, 2) = c2[r];
    }
    return m;
}

Mat3Q Mat3Q::circulant_symmetric(const Rational& diag, const Rational& off)
{
    return Mat3Q{diag, off, off, off, diag, off, off, off, diag};
}

Mat3Q Mat3Q::outer_with_ones(const Vec3Q& u)
{
    Mat3Q m;
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c)
            m(r, c) = u[r];
    return m;
}

bool Mat3Q::is_integer() const
{
    for (const auto& x : e_)
        if (!x.is_integer())
            return false;
    return true;
}

bool Mat3Q::preserves_plane_A() const
{
    for (std::size_t c = 0; c < 3; ++c)
        if (column(c).sum() != Rational(1))
            return false;
    return true;
}

Rational Mat3Q::det() const
{
    const auto& m = *this;
    return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1))
         - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0))
         + m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

Mat3Q Mat3Q::inverse() const
{
    const Rational d = det();
    if (d.is_zero())
        throw Error(ErrorCode::SingularMatrix, "matrix " + str() + " is singular");
    const auto& m = *this;
    Mat3Q adj{
        m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1), m(0, 2) * m(2, 1) - m(0, 1) * m(2, 2), m(0, 1) * m(1, 2) - m(0, 2) * m(1, 1),
        m(1, 2) * m(2, 0) - m(1, 0) * m(2, 2), m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0), m(0, 2) * m(1, 0) - m(0, 0) * m(1, 2),
        m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0), m(0, 1) * m(2, 0) - m(0, 0) * m(2, 1), m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0),
    };
    const Rational inv_d = Rational(1) / d;
    for (auto& x : adj.e_)
        x *= inv_d;
    return adj;
}

Mat3Q Mat3Q::transpose() const
{
    Mat3Q t;
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

Mat3Q& Mat3Q::operator+=(const Mat3Q& o)
{
    for (std::size_t i = 0; i < 9; ++i)
        e_[i] += o.e_[i];
    return *this;
}

Mat3Q& Mat3Q::operator-=(const Mat3Q& o)
{
    for (std::size_t i = 0; i < 9; ++i)
        e_[i] -= o.e_[i];
    return *this;
}

Mat3Q operator*(const Mat3Q& a, const Mat3Q& b)
{
    Mat3Q p;
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c)
            p(r, c) = a(r, 0) * b(0, c) + a(r, 1) * b(1, c) + a(r, 2) * b(2, c);
    return p;
}

Vec3Q operator*(const Mat3Q& a, const Vec3Q& v)
{
    return Vec3Q(a(0, 0) * v[0] + a(0, 1) * v[1] + a(0, 2) * v[2],
                 a(1, 0) * v[0] + a(1, 1) * v[1] + a(1, 2) * v[2],
                 a(2, 0) * v[0] + a(2, 1) * v[1] + a(2, 2) * v[2]);
}

Mat3Q operator*(const Rational& s, Mat3Q a)
{
    for (auto& x : a.e_)
        x *= s;
    return a;
}

std::string Mat3Q::str() const
{
    std::string out;
    for (std::size_t i = 0; i < 9; ++i) {
        if (i)
            out += ' ';
        out += e_[i].str();
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Mat3Q& m)
{
    return os << m.str();
}

std::size_t hash_value(const Mat3Q& m) noexcept
{
    std::size_t seed = 0;
    for (const auto& x : m.entries())
        hash_combine(seed, hash_value(x));
    return seed;
}

bool in_plane_A(const Vec3Q& v)
{
    return v.sum() == Rational(1);
}

bool in_lattice_Lambda(const Vec3Q& v)
{
    return v.is_integer() && in_plane_A(v);
}

bool in_thirds_lattice(const Vec3Q& v)
{
    if (!in_plane_A(v))
        return false;
    for (const auto& x : v.c) {
        const Rational t = x * Rational(3);
        if (!t.is_integer())
            return false;
        mpz_class r;
        mpz_fdiv_r_ui(r.get_mpz_t(), t.value().get_num_mpz_t(), 3);
        if (r != 1)
            return false;
    }
    return true;
}

Vec3Q unit(std::size_t i)
{
    Vec3Q v(0, 0, 0);
    v[i] = 1;
    return v;
}

}  // namespace trimap
