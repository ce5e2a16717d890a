#pragma once

#include <compare>
#include <concepts>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace trimap {

/// Exact rational number of unbounded size. Always in lowest terms with a
/// positive denominator, so value equality is representation equality.
class Rational {
public:
    Rational() = default;

    template <std::signed_integral T>
    Rational(T n) : v_(static_cast<long>(n))
    {
    }

    template <std::signed_integral T>
    Rational(T num, T den)
    {
        set(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
    }

    Rational(const mpz_class& num, const mpz_class& den) { set(num, den); }

    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    /// Accepts "n", "-n", "n/d" with optional surrounding whitespace.
    static Rational parse(std::string_view text);

    const mpq_class& value() const noexcept { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const noexcept { return sgn(v_) == 0; }
    bool is_integer() const noexcept { return mpz_cmp_ui(v_.get_den_mpz_t(), 1) == 0; }
    int sign() const noexcept { return sgn(v_); }

    Rational floor() const;
    /// x - floor(x), always in [0, 1).
    Rational frac() const;
    Rational abs() const;
    double to_double() const { return v_.get_d(); }
    std::string str() const { return v_.get_str(); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o)
    {
        v_ += o.v_;
        return *this;
    }
    Rational& operator-=(const Rational& o)
    {
        v_ -= o.v_;
        return *this;
    }
    Rational& operator*=(const Rational& o)
    {
        v_ *= o.v_;
        return *this;
    }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        return cmp(a.v_, b.v_) <=> 0;
    }

private:
    void set(const mpz_class& num, const mpz_class& den);

    mpq_class v_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

std::size_t hash_value(const mpz_class& z) noexcept;
std::size_t hash_value(const Rational& r) noexcept;

inline void hash_combine(std::size_t& seed, std::size_t h) noexcept
{
    seed ^= h + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

}  // namespace trimap

template <>
struct std::hash<trimap::Rational> {
    std::size_t operator()(const trimap::Rational& r) const noexcept { return trimap::hash_value(r); }
};
