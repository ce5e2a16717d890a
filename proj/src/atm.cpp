#include "trimap/atm.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <sstream>

#include "trimap/error.hpp"
#include "trimap/moduli.hpp"

namespace trimap {

namespace {

struct EdgeDirection {
    bool long_family;
    Rational multiple;  // signed, relative to a primitive direction
};

// Edge directions of reflection lines through a lattice point: multiples of
// e_i - e_j (one zero coordinate) or of e_i + e_j - 2 e_k (two equal ones).
std::optional<EdgeDirection> edge_direction(const Vec3Q& d)
{
    if (d[2].is_zero())
        return EdgeDirection{false, d[0]};
    if (d[0].is_zero())
        return EdgeDirection{false, d[1]};
    if (d[1].is_zero())
        return EdgeDirection{false, d[2]};
    if (d[1] == d[2])
        return EdgeDirection{true, d[1]};
    if (d[0] == d[2])
        return EdgeDirection{true, d[0]};
    if (d[0] == d[1])
        return EdgeDirection{true, d[0]};
    return std::nullopt;
}

bool is_circulant_symmetric(const Mat3Q& m)
{
    return m(0, 0) == m(1, 1) && m(1, 1) == m(2, 2) && m(0, 1) == m(0, 2) && m(0, 1) == m(1, 0) &&
           m(0, 1) == m(1, 2) && m(0, 1) == m(2, 0) && m(0, 1) == m(2, 1);
}

const std::vector<GroupElement>& permutation_group()
{
    static const std::vector<GroupElement> perms = [] {
        const auto p12 = generator(Generator::P12);
        const auto p13 = generator(Generator::P13);
        return std::vector<GroupElement>{GroupElement::identity(), p12, p13, generator(Generator::P23),
                                         p12 * p13, p13 * p12};
    }();
    return perms;
}

const std::vector<GroupElement>& point_group_e3()
{
    static const std::vector<GroupElement> h = stabilizer(unit(2));
    return h;
}

bool mod3_is_one(const Rational& x)
{
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), x.value().get_num_mpz_t(), 3);
    return r == 1;
}

Atm make_atm(const Mat3Q& m, AtmKind kind, GroupElement witness)
{
    std::optional<Rational> expansion;
    if (const auto* t1 = std::get_if<TypeI>(&kind))
        expansion = t1->c0 - t1->c1;
    else if (const auto* t2 = std::get_if<TypeII>(&kind))
        expansion = (t2->c0 - t2->c1) / Rational(3);
    return Atm{m, std::move(kind), std::move(witness), m.det().abs(), std::move(expansion)};
}

std::optional<Atm> find_type_i(const Mat3Q& m, const Vec3Q& mb)
{
    const Reduction red = reduce(mb);
    if (red.shape.v() != vertex_b())
        return std::nullopt;
    const Mat3Q fixed_b = red.witness.matrix() * m;
    for (const auto& q : permutation_group()) {
        const Mat3Q y = q.matrix() * fixed_b;
        if (is_circulant_symmetric(y))
            return make_atm(m, TypeI{y(0, 0), y(0, 1)}, q * red.witness);
    }
    return std::nullopt;
}

std::optional<Atm> find_type_ii(const Mat3Q& m, const Vec3Q& mb)
{
    const GroupElement t = GroupElement::translation(unit(2) - mb);
    const Mat3Q at_e3 = t.matrix() * m;
    for (const auto& h : point_group_e3()) {
        const Mat3Q y = translation_w() * (h.matrix() * at_e3);
        if (!is_circulant_symmetric(y))
            continue;
        const Rational c0 = Rational(3) * y(0, 0), c1 = Rational(3) * y(0, 1);
        if (!c0.is_integer() || !c1.is_integer() || !mod3_is_one(c0) || c0 <= c1)
            continue;
        return make_atm(m, TypeII{c0, c1}, h * t);
    }
    return std::nullopt;
}

std::optional<Atm> find_type_iii(const Mat3Q& m, const Vec3Q& mb)
{
    const GroupElement t = GroupElement::translation(unit(2) - mb);
    const Mat3Q at_e3 = t.matrix() * m;
    for (const auto& h : point_group_e3()) {
        const Mat3Q y = h.matrix() * at_e3;
        const Rational k = y(0, 1);
        if (k.sign() > 0 && k.is_integer() && y == normal_form(TypeIII{k}))
            return make_atm(m, TypeIII{k}, h * t);
    }
    return std::nullopt;
}

ClassificationFailure fail(FailureReason r, std::string detail)
{
    return ClassificationFailure{r, std::move(detail)};
}

// Integer fast path for the randomized check: with integer M and g and a
// point n/q, both images share the denominator q, so their canonical forms
// can be compared as numerator triples. Entries and intermediate values stay
// below 2^30, so every product fits in 64 bits; larger inputs take the
// rational path.
using IntMat = std::array<std::int64_t, 9>;
using IntVec = std::array<std::int64_t, 3>;
constexpr std::int64_t kIntLimit = std::int64_t{1} << 30;

std::optional<IntMat> to_int(const Mat3Q& m)
{
    IntMat out{};
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c) {
            const Rational& x = m(r, c);
            if (!x.is_integer() || !x.numerator().fits_slong_p() || abs(x.numerator()) > kIntLimit)
                return std::nullopt;
            out[3 * r + c] = x.numerator().get_si();
        }
    return out;
}

std::optional<IntVec> mul_int(const IntMat& m, const IntVec& v)
{
    IntVec out{};
    for (std::size_t r = 0; r < 3; ++r) {
        const std::int64_t acc = m[3 * r] * v[0] + m[3 * r + 1] * v[1] + m[3 * r + 2] * v[2];
        if (acc > kIntLimit || acc < -kIntLimit)
            return std::nullopt;
        out[r] = acc;
    }
    return out;
}

// Numerators of canonicalize(n / q), mirroring the rational folding.
IntVec canonical_int(const IntVec& n, std::int64_t q)
{
    IntVec f{};
    for (std::size_t i = 0; i < 3; ++i)
        f[i] = ((n[i] % q) + q) % q;
    const std::int64_t s = f[0] + f[1] + f[2];
    if (s == 0)
        return {q, 0, 0};
    if (s == 2 * q)
        for (auto& x : f)
            x = q - x;
    std::sort(f.begin(), f.end(), std::greater<>());
    return f;
}

std::optional<bool> same_class_int(const IntMat& m, const IntMat& g, const IntVec& n, std::int64_t q)
{
    const auto gv = mul_int(g, n);
    if (!gv)
        return std::nullopt;
    const auto mgv = mul_int(m, *gv), mv = mul_int(m, n);
    if (!mgv || !mv)
        return std::nullopt;
    return canonical_int(*mgv, q) == canonical_int(*mv, q);
}

const std::vector<std::optional<IntMat>>& int_ball()
{
    static const std::vector<std::optional<IntMat>> out = [] {
        std::vector<std::optional<IntMat>> v;
        for (const GroupElement& g : cached_group_ball(6))
            v.push_back(to_int(g.matrix()));
        return v;
    }();
    return out;
}

}  // namespace

std::string kind_name(const AtmKind& kind)
{
    static constexpr std::array<const char*, 3> names{"TypeI", "TypeII", "TypeIII"};
    return names[kind.index()];
}

std::string kind_str(const AtmKind& kind)
{
    std::ostringstream os;
    os << kind_name(kind);
    if (const auto* t1 = std::get_if<TypeI>(&kind))
        os << " c0=" << t1->c0 << " c1=" << t1->c1;
    else if (const auto* t2 = std::get_if<TypeII>(&kind))
        os << " c0=" << t2->c0 << " c1=" << t2->c1;
    else
        os << " k=" << std::get<TypeIII>(kind).k;
    return os.str();
}

const Mat3Q& translation_w()
{
    static const Mat3Q tw =
        Mat3Q::identity() + Mat3Q::outer_with_ones(Vec3Q(Rational(1, 3), Rational(1, 3), Rational(-2, 3)));
    return tw;
}

const Mat3Q& pedal_matrix()
{
    static const Mat3Q m = Mat3Q::circulant_symmetric(-1, 1);
    return m;
}

Mat3Q normal_form(const AtmKind& kind)
{
    if (const auto* t1 = std::get_if<TypeI>(&kind)) {
        if (!t1->c0.is_integer() || !t1->c1.is_integer() || t1->c0 + Rational(2) * t1->c1 != Rational(1))
            throw Error(ErrorCode::InvalidArgument, "Type I needs integers with c0 + 2 c1 = 1");
        return Mat3Q::circulant_symmetric(t1->c0, t1->c1);
    }
    if (const auto* t2 = std::get_if<TypeII>(&kind)) {
        if (!t2->c0.is_integer() || !t2->c1.is_integer() || t2->c0 + Rational(2) * t2->c1 != Rational(3) ||
            !mod3_is_one(t2->c0) || t2->c0 == t2->c1)
            throw Error(ErrorCode::InvalidArgument,
                        "Type II needs integers with c0 + 2 c1 = 3, c0 = 1 mod 3, c0 != c1");
        const Rational third(1, 3);
        return translation_w().inverse() * Mat3Q::circulant_symmetric(t2->c0 * third, t2->c1 * third);
    }
    const Rational& k = std::get<TypeIII>(kind).k;
    if (!k.is_integer() || k.is_zero())
        throw Error(ErrorCode::InvalidArgument, "Type III needs a nonzero integer k");
    const Rational one(1);
    return Mat3Q{0, k, -k, -k, 0, k, k + one, one - k, one};
}

Mat3Q normal_form(const Atm& a)
{
    return normal_form(a.kind);
}

std::string_view to_string(FailureReason r)
{
    switch (r) {
    case FailureReason::NotInteger: return "NotInteger";
    case FailureReason::ColumnsNotSumOne: return "ColumnsNotSumOne";
    case FailureReason::Singular: return "Singular";
    case FailureReason::ColumnsNotInLattice: return "ColumnsNotInLattice";
    case FailureReason::EdgesNotOnReflectionLines: return "EdgesNotOnReflectionLines";
    case FailureReason::NotEquilateral: return "NotEquilateral";
    case FailureReason::RandomizedReexpressionFailure: return "RandomizedReexpressionFailure";
    }
    return "Unknown";
}

Classification classify(const Mat3Q& m, const ClassifyOptions& options)
{
    if (!m.is_integer())
        return fail(FailureReason::NotInteger, "entries must be integers");
    if (!m.preserves_plane_A())
        return fail(FailureReason::ColumnsNotSumOne, "every column must sum to 1");
    if (m.det().is_zero())
        return fail(FailureReason::Singular, "determinant is zero");
    for (std::size_t c = 0; c < 3; ++c)
        if (!in_lattice_Lambda(m.column(c)))
            return fail(FailureReason::ColumnsNotInLattice, "column " + std::to_string(c + 1));

    std::array<EdgeDirection, 3> edges{};
    for (std::size_t i = 0; i < 3; ++i) {
        const Vec3Q d = m.column(i) - m.column((i + 1) % 3);
        const auto dir = edge_direction(d);
        if (!dir)
            return fail(FailureReason::EdgesNotOnReflectionLines, "edge " + d.str() + " is not along a reflection line");
        edges[i] = *dir;
    }
    for (std::size_t i = 1; i < 3; ++i)
        if (edges[i].long_family != edges[0].long_family || edges[i].multiple.abs() != edges[0].multiple.abs())
            return fail(FailureReason::NotEquilateral, "edges of M A_p have different lengths");

    const Vec3Q mb = m * vertex_b();
    std::optional<Atm> atm;
    if (edges[0].long_family)
        atm = find_type_iii(m, mb);
    else if (in_lattice_Lambda(mb))
        atm = find_type_ii(m, mb);
    else
        atm = find_type_i(m, mb);
    if (!atm)
        return fail(FailureReason::EdgesNotOnReflectionLines, "medians of M A_p are not on reflection lines");

    if (!verify_reexpression_randomized(m, options.trials, options.seed))
        return fail(FailureReason::RandomizedReexpressionFailure, "found v, g with M g v not equivalent to M v");
    return *std::move(atm);
}

Vec3Q random_point_on_A(std::mt19937_64& rng, int max_den)
{
    std::uniform_int_distribution<int> den_dist(1, max_den);
    const int q = den_dist(rng);
    std::uniform_int_distribution<int> num_dist(-q, 2 * q);
    const Rational x(num_dist(rng), q), y(num_dist(rng), q);
    return Vec3Q(x, y, Rational(1) - x - y);
}

bool verify_reexpression_randomized(const Mat3Q& m, int trials, std::uint64_t seed)
{
    const auto ball = cached_group_ball(6);
    const auto& ball_int = int_ball();
    const std::optional<IntMat> mi = to_int(m);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, ball.size() - 1);
    for (int i = 0; i < trials; ++i) {
        // Same draws as random_point_on_A(rng, 100), kept as numerators over q.
        std::uniform_int_distribution<int> den_dist(1, 100);
        const int q = den_dist(rng);
        std::uniform_int_distribution<int> num_dist(-q, 2 * q);
        const int x = num_dist(rng), y = num_dist(rng);
        const std::size_t k = pick(rng);
        if (mi && ball_int[k]) {
            if (const auto same = same_class_int(*mi, *ball_int[k], IntVec{x, y, q - x - y}, q)) {
                if (!*same)
                    return false;
                continue;
            }
        }
        const Vec3Q v(Rational(x, q), Rational(y, q), Rational(q - x - y, q));
        if (canonicalize(m * ball[k].apply(v)) != canonicalize(m * v))
            return false;
    }
    return true;
}

std::vector<Atm> catalog(int max_param)
{
    if (max_param < 1)
        throw Error(ErrorCode::InvalidArgument, "catalog needs max_param >= 1");

    std::vector<AtmKind> kinds;
    for (int c1 = -max_param; c1 <= max_param; ++c1)
        kinds.emplace_back(TypeI{1 - 2 * c1, c1});
    for (int c1 = -max_param; c1 <= max_param; ++c1) {
        const int c0 = 3 - 2 * c1;
        if (((c0 % 3) + 3) % 3 == 1 && c0 != c1)
            kinds.emplace_back(TypeII{c0, c1});
    }
    for (int k = -max_param; k <= max_param; ++k)
        if (k != 0)
            kinds.emplace_back(TypeIII{k});

    std::vector<Atm> out;
    out.reserve(kinds.size());
    for (const auto& kind : kinds) {
        auto result = classify(normal_form(kind));
        if (auto* failure = std::get_if<ClassificationFailure>(&result))
            throw std::logic_error("normal form " + kind_str(kind) + " failed classification: " +
                                   std::string(to_string(failure->reason)));
        out.push_back(std::get<Atm>(std::move(result)));
    }
    return out;
}

}  // namespace trimap
