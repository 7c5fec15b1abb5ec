#pragma once

#include <array>
#include <vector>

#include "cuboid/parse.hpp"
#include "cuboid/polynomial.hpp"
#include "cuboid/report.hpp"

namespace cuboid {

/// The four defining polynomials over MQL: the space-diagonal relation
/// x1^2+x2^2+x3^2-L^2 and the three face-diagonal relations.
struct CuboidGenerators {
    Polynomial space_diag;
    std::array<Polynomial, 3> face_diag;

    static const CuboidGenerators& instance();
};

/// The eight S3-invariant combinations sum(m_i * p_i) generating the
/// symmetric part of the cuboid ideal, built by polynomial arithmetic from
/// CuboidGenerators.
struct FactorGenerators {
    std::array<Polynomial, 8> gens;

    static const FactorGenerators& instance();
};

/// The nine elementary multisymmetric polynomials of bidegrees
/// (1,0),(2,0),(3,0),(0,1),(0,2),(0,3),(2,1),(1,1),(1,2) over MQL.
struct ElementaryBasis {
    Polynomial e10, e20, e30, e01, e02, e03, e21, e11, e12;

    static const ElementaryBasis& instance();
};

/// The full 22-equation system over EL: the eight E-forms of the factor
/// generators plus the fourteen kernel-basis polynomials ~q1..~q14.
struct EFormSystem {
    std::array<Polynomial, 8> factor_eforms;
    std::vector<Polynomial> kernel;        // 14 entries
    std::vector<std::string> kernel_names; // "~q1" .. "~q14"

    std::vector<const Polynomial*> all22() const;

    static const EFormSystem& instance();
};

/// Loads and parses the kernel corpus after validating its checksum.
/// Throws std::runtime_error on checksum mismatch.
DefinitionSet load_kernel_corpus();

/// Parses an externally supplied corpus (no checksum enforced).
DefinitionSet load_kernel_corpus_from(std::string_view text, std::string source_note);

/// The substitution homomorphism: each E-variable maps to its elementary
/// multisymmetric polynomial and L to L.
Polynomial phi(const Polynomial& q);

/// sigma(p0) = p0, sigma(p_i) = p_{sigma(i)} over all six permutations, and
/// invariance of the factor generators and the elementary basis.
VerificationReport verify_s3_invariance();

/// Each built factor generator equals the transcribed expanded display.
VerificationReport verify_factor_expansions();

/// phi(factor E-form k) == c_k * factor generator k with the scalar c_k
/// discovered by leading-coefficient matching (expected 1,1,1,1,1,3,3,3).
VerificationReport verify_eform();

/// phi(~qi) == 0 for every corpus entry.
VerificationReport verify_kernel_membership();

/// Same check against an arbitrary definition set (corpus overrides,
/// negative controls).
VerificationReport verify_kernel_membership_of(const DefinitionSet& defs);

/// All four suites in order.
VerificationReport verify_all();

}  // namespace cuboid
