#include "trimap/rational.hpp"

#include <cctype>
#include <ostream>

#include "trimap/error.hpp"

namespace trimap {

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

bool is_integer_literal(std::string_view s)
{
    if (!s.empty() && (s.front() == '-' || s.front() == '+'))
        s.remove_prefix(1);
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

mpz_class parse_integer(std::string_view s)
{
    if (!s.empty() && s.front() == '+')
        s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
}

}  // namespace

Rational Rational::parse(std::string_view text)
{
    const auto s = trim(text);
    const auto slash = s.find('/');
    const auto num = trim(s.substr(0, slash));
    const auto den = slash == std::string_view::npos ? std::string_view("1") : trim(s.substr(slash + 1));
    if (!is_integer_literal(num) || !is_integer_literal(den))
        throw Error(ErrorCode::ParseError, "not a rational: '" + std::string(text) + "'");
    const mpz_class d = parse_integer(den);
    if (d == 0)
        throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
    return Rational(parse_integer(num), d);
}

void Rational::set(const mpz_class& num, const mpz_class& den)
{
    if (den == 0)
        throw Error(ErrorCode::DivisionByZero, "rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero())
        throw Error(ErrorCode::DivisionByZero, "division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::floor() const
{
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return Rational(mpq_class(q));
}

Rational Rational::frac() const
{
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return Rational(r, v_.get_den());
}

Rational Rational::abs() const
{
    return sign() < 0 ? -*this : *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r)
{
    return os << r.str();
}

namespace {

std::size_t hash_mpz(mpz_srcptr p) noexcept
{
    std::size_t seed = static_cast<std::size_t>(mpz_sgn(p) + 1);
    const std::size_t n = mpz_size(p);
    for (std::size_t i = 0; i < n; ++i)
        hash_combine(seed, static_cast<std::size_t>(mpz_getlimbn(p, static_cast<mp_size_t>(i))));
    return seed;
}

}  // namespace

std::size_t hash_value(const mpz_class& z) noexcept
{
    return hash_mpz(z.get_mpz_t());
}

std::size_t hash_value(const Rational& r) noexcept
{
    std::size_t seed = hash_mpz(r.value().get_num_mpz_t());
    hash_combine(seed, hash_mpz(r.value().get_den_mpz_t()));
    return seed;
}

}  // namespace trimap
