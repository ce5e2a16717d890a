#include "trimap/hofstadter.hpp"

#include "trimap/dynamics.hpp"
#include "trimap/error.hpp"

namespace trimap {

Mat3Q h_matrix(HofstadterVertex vertex, const Rational& r)
{
    if (r.is_zero())
        throw Error(ErrorCode::DegenerateFactor, "Hofstadter ratio r must be nonzero");
    const Rational s = Rational(1) - r;
    switch (vertex) {
    case HofstadterVertex::A: return Mat3Q{1, s, s, 0, r, 0, 0, 0, r};
    case HofstadterVertex::B: return Mat3Q{r, 0, 0, s, 1, s, 0, 0, r};
    case HofstadterVertex::C: return Mat3Q{r, 0, 0, 0, r, 0, s, s, 1};
    }
    throw std::logic_error("bad Hofstadter vertex");
}

HofstadterDecomposition decompose(const Atm& a)
{
    const auto* type_i = std::get_if<TypeI>(&a.kind);
    if (!type_i)
        throw Error(ErrorCode::NotTypeI, kind_str(a.kind) + " has no Hofstadter decomposition");
    if (type_i->c1.is_zero())
        throw Error(ErrorCode::InvalidArgument, "the identity map has no Hofstadter decomposition");

    HofstadterDecomposition d;
    d.source = normal_form(a.kind);
    const Mat3Q inv = d.source.inverse();
    d.uses_antipedal = (type_i->c0 - type_i->c1).sign() < 0;
    const Mat3Q k = d.uses_antipedal ? inv * pedal_matrix() : inv;

    if (k == Mat3Q::identity()) {
        d.r1 = d.r2 = d.r3 = Rational(1);
        d.factors = {antipedal_matrix()};
        return d;
    }

    const Rational& k0 = k(0, 0);
    const Rational& k1 = k(0, 1);
    const Rational one(1);
    if (k0.is_zero() || k1 == one)
        throw Error(ErrorCode::ZeroDenominator, "k0 = " + k0.str() + ", k1 = " + k1.str());
    d.r1 = one - k1;
    d.r2 = (one - Rational(2) * k1) / (one - k1);
    d.r3 = (k0 - k1) / k0;
    for (const Rational* r : {&d.r1, &d.r2, &d.r3})
        if (r->sign() <= 0 || *r >= one)
            throw Error(ErrorCode::FactorOutOfRange,
                        "r = " + d.r1.str() + "," + d.r2.str() + "," + d.r3.str() + " not all in (0,1)");

    d.factors = {h_matrix(HofstadterVertex::A, d.r1), h_matrix(HofstadterVertex::B, d.r2),
                 h_matrix(HofstadterVertex::C, d.r3)};
    if (d.uses_antipedal)
        d.factors.push_back(antipedal_matrix());
    if (recompose(d) != inv)
        throw std::logic_error("Hofstadter factors do not multiply to M^{-1}");
    return d;
}

Mat3Q recompose(const HofstadterDecomposition& d)
{
    Mat3Q acc = Mat3Q::identity();
    for (const auto& f : d.factors)
        acc = acc * f;
    return acc;
}

}  // namespace trimap
