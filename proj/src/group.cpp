#include "trimap/group.hpp"

#include <array>
#include <mutex>
#include <unordered_set>

#include "trimap/error.hpp"

namespace trimap {

namespace {

Mat3Q int_matrix_power(const Mat3Q& m, std::int64_t n)
{
    Mat3Q base = n < 0 ? m.inverse() : m;
    std::uint64_t e = n < 0 ? static_cast<std::uint64_t>(-n) : static_cast<std::uint64_t>(n);
    Mat3Q acc = Mat3Q::identity();
    while (e) {
        if (e & 1)
            acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

const std::array<Mat3Q, 9>& generator_table()
{
    static const std::array<Mat3Q, 9> table = [] {
        const Mat3Q ra{-1, 0, 0, 1, 0, 1, 1, 1, 0};
        const Mat3Q rb{0, 1, 1, 0, -1, 0, 1, 1, 0};
        const Mat3Q rc{0, 1, 1, 1, 0, 1, 0, 0, -1};
        return std::array<Mat3Q, 9>{
            Mat3Q{0, 1, 0, 1, 0, 0, 0, 0, 1},  // P12
            Mat3Q{0, 0, 1, 0, 1, 0, 1, 0, 0},  // P13
            Mat3Q{1, 0, 0, 0, 0, 1, 0, 1, 0},  // P23
            Mat3Q{1, 0, 1, 0, 1, 1, 0, 0, -1},  // R
            ra,
            rb,
            rc,
            rb * ra,  // Tx
            rc * rb,  // Ty
        };
    }();
    return table;
}

}  // namespace

std::string_view label(Generator g)
{
    static constexpr std::array<std::string_view, 9> names{"P12", "P13", "P23", "R", "Ra", "Rb", "Rc", "Tx", "Ty"};
    return names[static_cast<std::size_t>(g)];
}

Generator parse_generator(std::string_view name)
{
    for (Generator g : kAllGenerators)
        if (label(g) == name)
            return g;
    throw Error(ErrorCode::UnknownGenerator, "unknown generator '" + std::string(name) + "'");
}

bool is_involution(Generator g)
{
    return g != Generator::Tx && g != Generator::Ty;
}

const Mat3Q& generator_matrix(Generator g)
{
    return generator_table()[static_cast<std::size_t>(g)];
}

GroupElement GroupElement::from_generator(Generator g, std::int64_t exponent)
{
    GroupElement out;
    out.push(Letter{g, exponent});
    return out;
}

GroupElement GroupElement::translation(const Vec3Q& d)
{
    if (!d.is_integer() || !d.sum().is_zero())
        throw Error(ErrorCode::InvalidArgument, "translation vector " + d.str() + " is not in the lattice directions");
    // a(e1 - e2) + b(e2 - e3) = (a, b - a, -b)
    const long a = d[0].numerator().get_si();
    const long b = -d[2].numerator().get_si();
    return from_generator(Generator::Tx, a) * from_generator(Generator::Ty, b);
}

void GroupElement::push(Letter l)
{
    if (is_involution(l.gen))
        l.exponent = ((l.exponent % 2) + 2) % 2;
    if (l.exponent == 0)
        return;
    matrix_ = matrix_ * int_matrix_power(generator_matrix(l.gen), l.exponent);
    if (!word_.empty() && word_.back().gen == l.gen) {
        Letter merged{l.gen, word_.back().exponent + l.exponent};
        word_.pop_back();
        if (is_involution(merged.gen))
            merged.exponent %= 2;
        if (merged.exponent != 0)
            word_.push_back(merged);
        return;
    }
    word_.push_back(l);
}

GroupElement GroupElement::inverse() const
{
    GroupElement out;
    for (auto it = word_.rbegin(); it != word_.rend(); ++it)
        out.push(Letter{it->gen, -it->exponent});
    return out;
}

GroupElement operator*(const GroupElement& a, const GroupElement& b)
{
    GroupElement out = a;
    // Re-pushing merges letters across the seam; the matrix is recomputed
    // from the product to avoid an extra power per letter.
    for (const auto& l : b.word_) {
        if (!out.word_.empty() && out.word_.back().gen == l.gen) {
            Letter merged{l.gen, out.word_.back().exponent + l.exponent};
            out.word_.pop_back();
            if (is_involution(merged.gen))
                merged.exponent %= 2;
            if (merged.exponent != 0)
                out.word_.push_back(merged);
        } else {
            out.word_.push_back(l);
        }
    }
    out.matrix_ = a.matrix_ * b.matrix_;
    return out;
}

Mat3Q GroupElement::evaluate_word() const
{
    Mat3Q acc = Mat3Q::identity();
    for (const auto& l : word_)
        acc = acc * int_matrix_power(generator_matrix(l.gen), l.exponent);
    return acc;
}

bool GroupElement::is_valid() const
{
    if (!matrix_.is_integer() || !matrix_.preserves_plane_A())
        return false;
    if (matrix_.det().abs() != Rational(1))
        return false;
    return evaluate_word() == matrix_;
}

std::string GroupElement::word_str() const
{
    if (word_.empty())
        return "id";
    std::string out;
    for (const auto& l : word_) {
        if (!out.empty())
            out += '*';
        out += label(l.gen);
        if (l.exponent != 1)
            out += "^" + std::to_string(l.exponent);
    }
    return out;
}

GroupElement generator(Generator g)
{
    return GroupElement::from_generator(g);
}

GroupElement generator(std::string_view name)
{
    return generator(parse_generator(name));
}

std::vector<GroupElement> enumerate_group_ball(int max_word_length)
{
    if (max_word_length < 0 || max_word_length > kMaxBallRadius)
        throw Error(ErrorCode::LimitExceeded,
                    "word length " + std::to_string(max_word_length) + " outside [0, " +
                        std::to_string(kMaxBallRadius) + "]");

    std::vector<GroupElement> ball{GroupElement::identity()};
    std::unordered_set<Mat3Q> seen{ball.front().matrix()};
    std::size_t frontier_begin = 0;
    for (int len = 1; len <= max_word_length; ++len) {
        const std::size_t frontier_end = ball.size();
        for (std::size_t i = frontier_begin; i < frontier_end; ++i) {
            for (Generator g : kAllGenerators) {
                GroupElement next = ball[i] * generator(g);
                if (seen.insert(next.matrix()).second)
                    ball.push_back(std::move(next));
            }
        }
        frontier_begin = frontier_end;
    }
    return ball;
}

std::span<const GroupElement> cached_group_ball(int radius)
{
    constexpr int kCached = 6;
    if (radius < 0 || radius > kCached)
        throw Error(ErrorCode::LimitExceeded, "cached ball radius must be in [0, 6]");
    static const std::array<std::vector<GroupElement>, kCached + 1> balls = [] {
        std::array<std::vector<GroupElement>, kCached + 1> out;
        for (int r = 0; r <= kCached; ++r)
            out[static_cast<std::size_t>(r)] = enumerate_group_ball(r);
        return out;
    }();
    return balls[static_cast<std::size_t>(radius)];
}

std::vector<GroupElement> stabilizer(const Vec3Q& v)
{
    // Any translate of the point groups at b, e1 or v3 by one lattice step is
    // reached well within radius 6.
    std::vector<GroupElement> out;
    for (const auto& g : cached_group_ball(6))
        if (g.apply(v) == v)
            out.push_back(g);
    return out;
}

}  // namespace trimap
