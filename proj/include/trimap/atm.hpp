#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "trimap/group.hpp"
#include "trimap/linalg.hpp"

namespace trimap {

/// circ(c0; c1) with c0 + 2 c1 = 1.
struct TypeI {
    Rational c0, c1;
    friend bool operator==(const TypeI&, const TypeI&) = default;
};

/// T_w^{-1} circ(c0/3; c1/3) with c0 + 2 c1 = 3 and c0 = 1 (mod 3).
struct TypeII {
    Rational c0, c1;
    friend bool operator==(const TypeII&, const TypeII&) = default;
};

/// [[0, k, -k], [-k, 0, k], [k+1, 1-k, 1]].
struct TypeIII {
    Rational k;
    friend bool operator==(const TypeIII&, const TypeIII&) = default;
};

using AtmKind = std::variant<TypeI, TypeII, TypeIII>;

std::string kind_name(const AtmKind& kind);
/// e.g. "TypeI c0=-1 c1=1" or "TypeIII k=2".
std::string kind_str(const AtmKind& kind);

/// Exact matrix of a normal form. Throws Error(InvalidArgument) if the
/// parameters violate the constraints of their type.
Mat3Q normal_form(const AtmKind& kind);

/// Linear map of R^3 acting on A as translation by w = (1/3, 1/3, -2/3).
const Mat3Q& translation_w();
/// circ(-1; 1), the linear extension of the pedal map.
const Mat3Q& pedal_matrix();

/// A classified angle transition matrix.
///
/// Type II and Type III parameters are reported with a fixed sign
/// (c0 > c1, k > 0): the half-turn about e3 lies in G and carries the
/// normal form of k onto that of -k, so the two signs name one class.
struct Atm {
    Mat3Q matrix;
    AtmKind kind;
    GroupElement witness;  ///< witness * matrix == normal_form(kind)
    Rational abs_det;
    /// Homothety ratio of the normal form on A (c0 - c1 for Type I, (c0 - c1)/3
    /// for Type II). Type III acts on A as a rotation-dilation and has none.
    std::optional<Rational> expansion;
};

Mat3Q normal_form(const Atm& a);

enum class FailureReason {
    NotInteger,
    ColumnsNotSumOne,
    Singular,
    ColumnsNotInLattice,
    EdgesNotOnReflectionLines,
    NotEquilateral,
    RandomizedReexpressionFailure,
};

std::string_view to_string(FailureReason r);

struct ClassificationFailure {
    FailureReason reason;
    std::string detail;
};

struct ClassifyOptions {
    int trials = 256;
    std::uint64_t seed = 0;
};

using Classification = std::variant<Atm, ClassificationFailure>;

/// Checks the necessary conditions in a fixed order, reporting the first one
/// violated: integer entries, unit column sums, invertibility, lattice
/// columns, edges of M A_p on reflection lines, equilateral M A_p. Then finds
/// a witness g in G putting g M into normal form, and finally confirms that M
/// preserves re-expression on randomized samples.
Classification classify(const Mat3Q& m, const ClassifyOptions& options = {});

/// Draws `trials` pairs (v, g), v a random rational point of A with
/// denominator at most 100 and g from the radius-6 group ball, and checks
/// canonicalize(M g v) == canonicalize(M v). Deterministic in seed.
bool verify_reexpression_randomized(const Mat3Q& m, int trials, std::uint64_t seed);

/// Every normal form with |c1| <= max_param (Types I, II) or
/// 1 <= |k| <= max_param (Type III), classified. Each entry's matrix is the
/// normal form it was generated from.
std::vector<Atm> catalog(int max_param);

/// Uniform-ish rational point on A with denominator in [1, max_den] and
/// coordinates in [-1, 2].
Vec3Q random_point_on_A(std::mt19937_64& rng, int max_den);

}  // namespace trimap
