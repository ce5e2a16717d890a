#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "trimap/atm.hpp"
#include "trimap/error.hpp"
#include "trimap/moduli.hpp"

using namespace trimap;

namespace {

Vec3Q v3(Rational a, Rational b, Rational c)
{
    return Vec3Q(std::move(a), std::move(b), std::move(c));
}

Atm expect_atm(const Classification& c)
{
    if (const auto* f = std::get_if<ClassificationFailure>(&c))
        FAIL("classification failed: " << to_string(f->reason) << " " << f->detail);
    return std::get<Atm>(c);
}

FailureReason expect_failure(const Classification& c)
{
    REQUIRE(std::holds_alternative<ClassificationFailure>(c));
    return std::get<ClassificationFailure>(c).reason;
}

bool on_reflection_line(const Vec3Q& p)
{
    const Rational x = p[0], y = p[1], z = p[2];
    for (const Rational& t : {x, y, z, x - y, y - z, x - z})
        if (t.is_integer())
            return true;
    return false;
}

}  // namespace

TEST_CASE("classify the pedal matrix")
{
    const Atm a = expect_atm(classify(Mat3Q{-1, 1, 1, 1, -1, 1, 1, 1, -1}));
    CHECK(a.kind == AtmKind(TypeI{-1, 1}));
    CHECK(a.abs_det == Rational(4));
    REQUIRE(a.expansion);
    CHECK(*a.expansion == Rational(-2));
    CHECK(a.witness == GroupElement::identity());
    CHECK(kind_str(a.kind) == "TypeI c0=-1 c1=1");
    CHECK(kind_name(a.kind) == "TypeI");
}

TEST_CASE("classify the identity")
{
    const Atm a = expect_atm(classify(Mat3Q::identity()));
    CHECK(a.kind == AtmKind(TypeI{1, 0}));
    CHECK(a.abs_det == Rational(1));
    CHECK(*a.expansion == Rational(1));
}

TEST_CASE("classify a Type III matrix")
{
    const Atm a = expect_atm(classify(Mat3Q{0, 1, -1, -1, 0, 1, 2, 0, 1}));
    CHECK(a.kind == AtmKind(TypeIII{1}));
    CHECK(a.abs_det == Rational(3));
    CHECK_FALSE(a.expansion);
    CHECK(kind_str(a.kind) == "TypeIII k=1");
}

TEST_CASE("classify a Type II matrix")
{
    const Atm a = expect_atm(classify(Mat3Q{2, -1, -1, -1, 2, -1, 0, 0, 3}));
    CHECK(a.kind == AtmKind(TypeII{7, -2}));
    CHECK(a.abs_det == Rational(9));
    CHECK(*a.expansion == Rational(3));
}

TEST_CASE("classification failures, in order")
{
    CHECK(expect_failure(classify(Mat3Q{Rational(1, 2), 0, 0, Rational(1, 2), 1, 0, 0, 0, 1}))
          == FailureReason::NotInteger);
    CHECK(expect_failure(classify(Mat3Q{1, 0, 0, 0, 1, 0, 0, 0, 2})) == FailureReason::ColumnsNotSumOne);
    CHECK(expect_failure(classify(Mat3Q{1, 1, 1, 0, 0, 0, 0, 0, 0})) == FailureReason::Singular);
    CHECK(expect_failure(classify(Mat3Q{1, 0, 2, 0, 1, -2, 0, 0, 1})) == FailureReason::EdgesNotOnReflectionLines);
    CHECK(expect_failure(classify(Mat3Q{2, 0, 0, -1, 1, 0, 0, 0, 1})) == FailureReason::NotEquilateral);
    // Integer and non-unit column sums: the integer check comes first.
    CHECK(expect_failure(classify(Mat3Q{Rational(1, 2), 0, 0, 0, 1, 0, 0, 0, 2})) == FailureReason::NotInteger);
    CHECK(to_string(FailureReason::NotEquilateral) == "NotEquilateral");
}

TEST_CASE("normal forms")
{
    CHECK(normal_form(TypeI{-1, 1}) == Mat3Q{-1, 1, 1, 1, -1, 1, 1, 1, -1});
    CHECK(normal_form(TypeIII{1}) == Mat3Q{0, 1, -1, -1, 0, 1, 2, 0, 1});
    CHECK(normal_form(TypeII{7, -2}) == Mat3Q{2, -1, -1, -1, 2, -1, 0, 0, 3});
    CHECK(normal_form(TypeIII{-2}) == Mat3Q{0, -2, 2, 2, 0, -2, -1, 3, 1});
}

TEST_CASE("Type II normal form is T_w^-1 times a circulant in thirds")
{
    const Rational w[3] = {Rational(1, 3), Rational(1, 3), Rational(-2, 3)};
    Mat3Q tw_inv;
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c)
            tw_inv(r, c) = Rational(r == c ? 1 : 0) - w[r];
    CHECK(translation_w().inverse() == tw_inv);
    CHECK(normal_form(TypeII{7, -2}) == tw_inv * oracle::circ(Rational(7, 3), Rational(-2, 3)));
    CHECK(normal_form(TypeII{-5, 4}) == tw_inv * oracle::circ(Rational(-5, 3), Rational(4, 3)));
    // T_w moves b by w.
    CHECK(translation_w() * v3(Rational(1, 3), Rational(1, 3), Rational(1, 3))
          == v3(Rational(2, 3), Rational(2, 3), Rational(-1, 3)));
}

TEST_CASE("normal_form rejects parameters outside their type")
{
    const auto code = [](const AtmKind& k) {
        try {
            normal_form(k);
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::ParseError;
    };
    CHECK(code(TypeI{2, 1}) == ErrorCode::InvalidArgument);
    CHECK(code(TypeI{Rational(1, 2), Rational(1, 4)}) == ErrorCode::InvalidArgument);
    CHECK(code(TypeII{1, 1}) == ErrorCode::InvalidArgument);
    CHECK(code(TypeII{3, 0}) == ErrorCode::InvalidArgument);
    CHECK(code(TypeIII{0}) == ErrorCode::InvalidArgument);
}

TEST_CASE("randomized re-expression check")
{
    CHECK(verify_reexpression_randomized(pedal_matrix(), 1000, 1));
    CHECK(verify_reexpression_randomized(Mat3Q::identity(), 50, 2));
    CHECK_FALSE(verify_reexpression_randomized(Mat3Q{2, 0, 0, -1, 1, 0, 0, 0, 1}, 1000, 3));
    const Mat3Q bad{2, 0, 0, -1, 1, 0, 0, 0, 1};
    for (std::uint64_t seed = 0; seed < 5; ++seed)
        CHECK(verify_reexpression_randomized(bad, 40, seed) == verify_reexpression_randomized(bad, 40, seed));
}

TEST_CASE("catalog contents")
{
    const auto cat = catalog(1);
    const auto has = [&](const Mat3Q& m) {
        return std::any_of(cat.begin(), cat.end(), [&](const Atm& a) { return a.matrix == m; });
    };
    CHECK(has(pedal_matrix()));
    CHECK(has(normal_form(TypeIII{1})));
    CHECK(has(normal_form(TypeIII{-1})));
    CHECK(has(Mat3Q::identity()));
    CHECK_THROWS(catalog(0));
}

TEST_CASE("catalog entries round-trip through classify")
{
    for (const Atm& a : catalog(4)) {
        CAPTURE(a.matrix.str());
        const Atm b = expect_atm(classify(normal_form(a.kind)));
        CHECK(b.kind == a.kind);
        const Atm c = expect_atm(classify(a.matrix));
        CHECK(c.kind == a.kind);
    }
}

TEST_CASE("witness soundness and determinant laws")
{
    for (const Atm& a : catalog(4)) {
        CAPTURE(a.matrix.str());
        CHECK(a.witness.is_valid());
        CHECK(a.witness.matrix() * a.matrix == normal_form(a));
        CHECK(a.abs_det == oracle::det_leibniz(a.matrix).abs());
        if (const auto* t = std::get_if<TypeI>(&a.kind)) {
            CHECK(a.abs_det == (t->c0 - t->c1) * (t->c0 - t->c1));
            CHECK(*a.expansion == Rational(1) - Rational(3) * t->c1);
        } else if (const auto* t3 = std::get_if<TypeIII>(&a.kind)) {
            CHECK(a.abs_det == Rational(3) * t3->k * t3->k);
            CHECK(t3->k > Rational(0));
        } else {
            const auto& t2 = std::get<TypeII>(a.kind);
            CHECK(t2.c0 > t2.c1);
            CHECK(t2.c0 + Rational(2) * t2.c1 == Rational(3));
        }
    }
}

TEST_CASE("equivalent matrices classify alike")
{
    const auto ball = enumerate_group_ball(2);
    for (const Atm& a : catalog(2))
        for (const auto& g : ball) {
            CAPTURE(a.matrix.str());
            CAPTURE(g.word_str());
            const Atm b = expect_atm(classify(g.matrix() * a.matrix, ClassifyOptions{.trials = 32}));
            CHECK(b.kind == a.kind);
            CHECK(b.witness.matrix() * b.matrix == normal_form(b));
        }
}

TEST_CASE("ATMs map the lattice into itself")
{
    for (const Atm& a : catalog(3))
        for (const Vec3Q& l : {v3(1, 0, 0), v3(0, 1, 0), v3(0, 0, 1), v3(2, -1, 0)})
            CHECK(in_lattice_Lambda(a.matrix * l));
}

TEST_CASE("ATMs map reflection lines into reflection lines")
{
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> num(-60, 60), den(1, 30);
    for (const Atm& a : catalog(3)) {
        for (int i = 0; i < 50; ++i) {
            const Rational t(num(rng), den(rng));
            // Points on x = y, y = z and z = 0 inside A.
            const Vec3Q on_xy = v3(t, t, Rational(1) - t - t);
            const Vec3Q on_yz = v3(Rational(1) - t - t, t, t);
            const Vec3Q on_z = v3(t, Rational(1) - t, 0);
            CHECK(on_reflection_line(a.matrix * on_xy));
            CHECK(on_reflection_line(a.matrix * on_yz));
            CHECK(on_reflection_line(a.matrix * on_z));
        }
    }
}

TEST_CASE("classification is deterministic in the seed")
{
    const Mat3Q m = normal_form(TypeI{-3, 2});
    const Atm a = expect_atm(classify(m, ClassifyOptions{.trials = 64, .seed = 5}));
    const Atm b = expect_atm(classify(m, ClassifyOptions{.trials = 64, .seed = 5}));
    CHECK(a.kind == b.kind);
    CHECK(a.witness.word_str() == b.witness.word_str());
}

TEST_CASE("random points on A")
{
    std::mt19937_64 rng(32);
    for (int i = 0; i < 200; ++i) {
        const Vec3Q v = random_point_on_A(rng, 100);
        CHECK(in_plane_A(v));
        CHECK(v[0].denominator() <= 100);
    }
}

TEST_CASE("randomized check agrees with a plain rational evaluation")
{
    const auto ball = cached_group_ball(6);
    const auto rational_check = [&](const Mat3Q& m, int trials, std::uint64_t seed) {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<std::size_t> pick(0, ball.size() - 1);
        for (int i = 0; i < trials; ++i) {
            const Vec3Q v = random_point_on_A(rng, 100);
            const GroupElement& g = ball[pick(rng)];
            if (canonicalize(m * g.apply(v)) != canonicalize(m * v))
                return false;
        }
        return true;
    };
    std::vector<Mat3Q> mats;
    for (const Atm& a : catalog(2))
        mats.push_back(a.matrix);
    mats.push_back(Mat3Q{2, 0, 0, -1, 1, 0, 0, 0, 1});
    mats.push_back(Mat3Q{1, 0, 2, 0, 1, -2, 0, 0, 1});
    // Entries too large for the integer path.
    const Rational big(1L << 40);
    mats.push_back(Mat3Q{big + 1, big, big, -big, 1 - big, -big, 0, 0, 1});
    mats.push_back(pedal_matrix().inverse());
    for (const Mat3Q& m : mats)
        for (std::uint64_t seed : {1u, 2u, 3u}) {
            CAPTURE(m.str());
            CHECK(verify_reexpression_randomized(m, 300, seed) == rational_check(m, 300, seed));
        }
}
