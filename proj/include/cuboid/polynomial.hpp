#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "cuboid/rational.hpp"
#include "cuboid/ring.hpp"

namespace cuboid {

/// Sparse multivariate polynomial with exact rational coefficients over a
/// fixed ring signature. Values are immutable after construction (all
/// operations are pure and return new values), so they are safe to share
/// across threads.
///
/// Invariants: no stored coefficient is zero; the zero polynomial has an
/// empty term map; term iteration is descending graded-reverse-lexicographic
/// on the ring's variable order.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, GrevlexGreater>;

    /// The zero polynomial.
    explicit Polynomial(RingPtr ring);

    static Polynomial constant(RingPtr ring, Rational value);
    static Polynomial variable(RingPtr ring, std::string_view name, std::uint32_t exp = 1);

    const RingPtr& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    /// Total degree; -1 for the zero polynomial.
    std::int64_t total_degree() const;

    /// Largest exponent of the named variable across all terms (0 if absent).
    std::uint32_t degree_in(std::size_t var_index) const;

    /// True iff the named variable occurs in no term.
    bool free_of(std::string_view var) const;

    Rational coefficient(const Monomial& m) const;

    /// Leading (grevlex-first) term; precondition: nonzero.
    const std::pair<const Monomial, Rational>& leading_term() const;

    void add_term(const Monomial& m, const Rational& c);  // builder use only

    friend Polynomial operator-(const Polynomial& p);
    friend Polynomial operator+(const Polynomial& p, const Polynomial& q);
    friend Polynomial operator-(const Polynomial& p, const Polynomial& q);
    friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
    friend Polynomial operator*(const Polynomial& p, const Rational& c);
    friend Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

    friend bool operator==(const Polynomial& p, const Polynomial& q);

private:
    RingPtr ring_;
    TermMap terms_;
};

Polynomial pow(const Polynomial& p, std::uint32_t k);

/// Applies the ring homomorphism defined by `images` (one entry per variable
/// of p's ring; all image polynomials over one common target ring).
/// Throws std::invalid_argument when an image is missing or rings disagree.
Polynomial substitute(const Polynomial& p,
                      const std::map<std::string, Polynomial>& images);

/// Exact value of p at the given point; every ring variable must be assigned.
Rational evaluate(const Polynomial& p, const std::map<std::string, Rational>& point);

/// A bijection of {1,2,3}; acts on MQL by reindexing x_i and d_i together.
class Permutation {
public:
    Permutation() : img_{1, 2, 3} {}
    explicit Permutation(std::array<unsigned, 3> images);

    unsigned operator()(unsigned i) const { return img_[i - 1]; }
    const std::array<unsigned, 3>& images() const { return img_; }

    static Permutation identity() { return Permutation(); }
    static const std::array<Permutation, 6>& all();

    /// (a.compose(b))(i) == a(b(i))
    Permutation compose(const Permutation& other) const;
    Permutation inverse() const;

    std::string to_string() const;  // e.g. "231" for 1->2, 2->3, 3->1

    friend bool operator==(const Permutation& a, const Permutation& b) = default;

private:
    std::array<unsigned, 3> img_;
};

/// sigma(x_i) = x_{sigma(i)}, sigma(d_i) = d_{sigma(i)}, sigma(L) = L.
/// Precondition: p is over the MQL ring.
Polynomial apply_permutation(const Polynomial& p, const Permutation& sigma);

/// Positive integer weight per variable name.
class WeightSystem {
public:
    explicit WeightSystem(std::map<std::string, std::uint32_t> weights);

    std::uint32_t weight_of(const std::string& var) const;
    const std::map<std::string, std::uint32_t>& weights() const { return weights_; }

    /// E10,E01,L -> 1; E20,E02,E11 -> 2; E30,E03,E21,E12 -> 3.
    static const WeightSystem& el_weights();

private:
    std::map<std::string, std::uint32_t> weights_;
};

struct GradeResult {
    enum class Kind { zero, homogeneous, mixed };
    Kind kind = Kind::zero;
    std::int64_t degree = 0;  // meaningful only when homogeneous
};

/// Weighted degree of p: a single degree when all terms agree, a
/// distinguished "zero" outcome for the zero polynomial, "mixed" otherwise.
GradeResult weighted_degree(const Polynomial& p, const WeightSystem& w);

}  // namespace cuboid
