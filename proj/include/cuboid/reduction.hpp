#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "cuboid/polynomial.hpp"
#include "cuboid/report.hpp"

namespace cuboid {

/// Images eliminating E20, E02, E03, E30 as polynomials in the remaining
/// six variables E10, E01, E21, E11, E12, L. Variables that survive map to
/// themselves.
struct EliminationMap {
    std::map<std::string, Polynomial> images;

    static const EliminationMap& instance();
};

/// Substitutes the elimination map; the result contains none of
/// E20, E02, E03, E30.
Polynomial stage1_reduce(const Polynomial& p);

/// The four equations derived from the last four factor E-forms after
/// stage-1 elimination, with the scalar normalizations that put them in
/// their conventional shape:
///   linear_a    = (-3/2) * stage1(eform5)                 (linear in E21,E12)
///   linear_b    = (1/4) * (stage1(eform6) - stage1(eform7))
///   biquadratic = (-2)  * (stage1(eform6) + stage1(eform7))  (E10,E01,E11,L only)
///   sextic      = 4 * stage1(eform8)
struct DerivedEquations {
    Polynomial linear_a;
    Polynomial linear_b;
    Polynomial biquadratic;
    Polynomial sextic;

    static const DerivedEquations& instance();
};

/// A polynomial divided by a power of the localization denominator
/// E01^2 + E10^2, with a global rational factor kept separate so the
/// resolvent can be stored in its conventional 1/8-scaled integer shape.
/// Zero iff the numerator is zero.
struct LocalizedPolynomial {
    Polynomial numerator = Polynomial(el_ring());
    std::uint32_t denom_power = 0;
    Rational scalar = 1;

    bool is_zero() const { return numerator.is_zero() || scalar == 0; }
};

/// E01^2 + E10^2, the determinant of the E21/E12 linear solve.
const Polynomial& localization_denominator();

/// a == b iff a.scalar*a.num*den^b.k == b.scalar*b.num*den^a.k.
bool localized_equal(const LocalizedPolynomial& a, const LocalizedPolynomial& b);

LocalizedPolynomial localized_from(Polynomial p);
LocalizedPolynomial localized_add(const LocalizedPolynomial& a, const LocalizedPolynomial& b);
LocalizedPolynomial localized_mul(const LocalizedPolynomial& a, const Polynomial& p);

/// Exact value at a point with E01^2+E10^2 != 0.
Rational localized_evaluate(const LocalizedPolynomial& a,
                            const std::map<std::string, Rational>& point);

/// Resolvent of the 2x2 system (linear_a, linear_b) for E21 and E12 over
/// the polynomial ring, by Cramer's rule.
struct LinearSolveResult {
    LocalizedPolynomial e21;  // numerator integer-coefficient, scalar 1/8, denom_power 1
    LocalizedPolynomial e12;
    Polynomial determinant = Polynomial(el_ring());  // == E01^2 + E10^2

    static const LinearSolveResult& instance();
};

/// Which resolvent drives stage-2 elimination: the one derived here, or the
/// transcribed display form (whose second component differs by sign).
enum class Resolvent { derived, transcribed };

const LinearSolveResult& resolvent(Resolvent which);

/// The polynomial R in E10, E01, L with biquadratic == 4*(E11^2 - R);
/// stage-2 rewrites E11^k -> E11^(k-2) * R until the E11-degree is <= 1.
const Polynomial& e11_square_rhs();

/// Eliminates E21 and E12 by substituting the resolvent, clearing
/// denominators with exactly deg_{E21,E12}(p) powers of E01^2+E10^2.
/// Precondition: p contains none of E20,E02,E03,E30.
LocalizedPolynomial eliminate_e21_e12(const Polynomial& p, const LinearSolveResult& solve);

/// Rewrites E11^k -> E11^(k-2) * square_rhs until the E11-degree is <= 1.
/// Each rewrite strictly lowers the E11-degree by 2, so this terminates.
Polynomial reduce_e11_squares(const Polynomial& p, const Polynomial& square_rhs);

/// eliminate_e21_e12 followed by reduce_e11_squares on the numerator.
LocalizedPolynomial stage2_reduce(const Polynomial& p,
                                  Resolvent which = Resolvent::derived);

/// The fifteen annihilation checks: stage-2 applied to the sextic and to the
/// fourteen stage-1-reduced kernel polynomials, with intermediate term
/// counts recorded.
VerificationReport verify_annihilation(Resolvent which = Resolvent::derived);

/// Everything the reduction pipeline asserts: stage-1 annihilation of the
/// first four E-forms, derived-vs-display comparisons, the two-squares form
/// of the biquadratic, the linear solve and its back-substitution, the
/// square rewrite identity, and the fifteen annihilation checks.
VerificationReport reduce_report(Resolvent which = Resolvent::derived);

/// An exact solution of the full 22-equation system produced from a point
/// on the biquadratic, together with the weighted scaling that clears
/// denominators.
struct LiftResult {
    std::map<std::string, Rational> rational_point;  // all 10 EL variables
    Integer scale_alpha;                             // positive
    std::map<std::string, Integer> integer_point;    // all 10 EL variables
};

/// Lifts a rational solution of the biquadratic with e10^2+e01^2 != 0 to an
/// integer solution of all 22 equations. Throws std::domain_error when the
/// point is off the biquadratic or on the excluded locus e10 = e01 = 0.
LiftResult lift_solution(const Rational& e10, const Rational& e01, const Rational& e11,
                         const Rational& l);

}  // namespace cuboid
