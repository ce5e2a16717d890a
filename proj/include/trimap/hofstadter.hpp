#pragma once

#include <vector>

#include "trimap/atm.hpp"

namespace trimap {

enum class HofstadterVertex { A, B, C };

/// H_{A,r} = [[1, 1-r, 1-r], [0, r, 0], [0, 0, r]] shrinks A_p towards e1 by
/// the ratio r; H_B and H_C are its conjugates fixing e2 and e3. Throws
/// Error(DegenerateFactor) for r = 0.
Mat3Q h_matrix(HofstadterVertex vertex, const Rational& r);

/// M^{-1} = H_{A,r1} H_{B,r2} H_{C,r3} (P^{-1} when uses_antipedal).
struct HofstadterDecomposition {
    Mat3Q source;  ///< the Type I matrix circ(c0; c1) being factored
    Rational r1, r2, r3;
    bool uses_antipedal = false;
    std::vector<Mat3Q> factors;
};

/// Factors the inverse of the Type I normal form of a.
///
/// With K = M^{-1} (if c0 - c1 > 0) or K = M^{-1} P (otherwise), K is
/// circ(k0; k1) and the factors are r1 = 1 - k1, r2 = (1 - 2 k1)/(1 - k1),
/// r3 = (k0 - k1)/k0. The pedal map itself gives K = I and is returned with
/// r1 = r2 = r3 = 1 and the single factor P^{-1}.
///
/// Throws Error(NotTypeI) for Type II/III, Error(InvalidArgument) for the
/// identity, Error(ZeroDenominator) when k0 = 0 or k1 = 1, and
/// Error(FactorOutOfRange) when some r_i is outside (0, 1).
HofstadterDecomposition decompose(const Atm& a);

/// Product of the factors, i.e. the inverse of the source matrix.
Mat3Q recompose(const HofstadterDecomposition& d);

}  // namespace trimap
