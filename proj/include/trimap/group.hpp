#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "trimap/linalg.hpp"

namespace trimap {

/// Generators of the wallpaper group G = p6m acting on the plane A.
///
/// P12, P13, P23 permute coordinates. R reflects A across the line z = 0.
/// Ra, Rb, Rc identify (a, b, c) with its orientation-reversed re-expressions,
/// e.g. Ra: (a, b, c) -> (-a, 1 - b, 1 - c). Tx = Rb*Ra and Ty = Rc*Rb are the
/// translations by e1 - e2 and e2 - e3.
enum class Generator : std::uint8_t { P12, P13, P23, R, Ra, Rb, Rc, Tx, Ty };

inline constexpr std::array<Generator, 9> kAllGenerators{
    Generator::P12, Generator::P13, Generator::P23, Generator::R, Generator::Ra,
    Generator::Rb, Generator::Rc, Generator::Tx, Generator::Ty};

std::string_view label(Generator g);
/// Throws Error(UnknownGenerator).
Generator parse_generator(std::string_view label);
bool is_involution(Generator g);

const Mat3Q& generator_matrix(Generator g);

struct Letter {
    Generator gen;
    std::int64_t exponent = 1;

    friend bool operator==(const Letter&, const Letter&) = default;
};

/// An element of G: an integer matrix with unit determinant and unit column
/// sums, together with a word in the generators whose product it is. Words
/// read left to right as matrix products, so the rightmost letter acts first.
class GroupElement {
public:
    GroupElement() : matrix_(Mat3Q::identity()) {}

    static GroupElement identity() { return {}; }
    static GroupElement from_generator(Generator g, std::int64_t exponent = 1);
    /// Translation of A by d, where d has integer entries summing to zero.
    static GroupElement translation(const Vec3Q& d);

    const Mat3Q& matrix() const { return matrix_; }
    const std::vector<Letter>& word() const { return word_; }

    GroupElement inverse() const;
    Vec3Q apply(const Vec3Q& v) const { return matrix_ * v; }

    friend GroupElement operator*(const GroupElement& a, const GroupElement& b);
    /// Equality of group elements is equality of matrices; words may differ.
    friend bool operator==(const GroupElement& a, const GroupElement& b) { return a.matrix_ == b.matrix_; }

    /// Product of the word's generator matrices, recomputed from scratch.
    Mat3Q evaluate_word() const;
    /// Integer entries, det = +-1, columns sum to one, word matches matrix.
    bool is_valid() const;

    /// "id" or e.g. "Ra*Tx^-2*P12".
    std::string word_str() const;

private:
    GroupElement(Mat3Q m, std::vector<Letter> w) : matrix_(std::move(m)), word_(std::move(w)) {}

    void push(Letter l);

    Mat3Q matrix_;
    std::vector<Letter> word_;
};

GroupElement generator(Generator g);
/// Looks the label up; throws Error(UnknownGenerator).
GroupElement generator(std::string_view label);

inline constexpr int kMaxBallRadius = 12;

/// Every distinct element expressible as a product of at most max_word_length
/// generators, in breadth-first order (identity first). Throws
/// Error(LimitExceeded) above kMaxBallRadius.
std::vector<GroupElement> enumerate_group_ball(int max_word_length);

/// Shared, lazily built copy of enumerate_group_ball(radius) for radius <= 6.
std::span<const GroupElement> cached_group_ball(int radius);

/// Point group of v, searched in the radius-6 ball. Complete for points of D
/// and their neighbours one lattice step away (e.g. e1, e3, b).
std::vector<GroupElement> stabilizer(const Vec3Q& v);

}  // namespace trimap
