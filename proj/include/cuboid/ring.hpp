#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cuboid {

/// An ordered list of variable names fixing a polynomial ring over Q.
/// Signatures are immutable; polynomials hold shared pointers to them and
/// compare them by content, so distinct instances with equal contents are
/// interchangeable.
class RingSignature {
public:
    RingSignature(std::string name, std::vector<std::string> variables);

    const std::string& name() const { return name_; }
    const std::vector<std::string>& variables() const { return vars_; }
    std::size_t size() const { return vars_.size(); }

    std::optional<std::size_t> index_of(std::string_view var) const;
    const std::string& variable(std::size_t i) const { return vars_[i]; }

    friend bool operator==(const RingSignature& a, const RingSignature& b) {
        return a.name_ == b.name_ && a.vars_ == b.vars_;
    }

private:
    std::string name_;
    std::vector<std::string> vars_;
    std::map<std::string, std::size_t, std::less<>> index_;
};

using RingPtr = std::shared_ptr<const RingSignature>;

/// Q[x1,x2,x3,d1,d2,d3,L] in exactly this variable order.
const RingPtr& mql_ring();

/// Q[E10,E20,E30,E01,E02,E03,E21,E11,E12,L] in exactly this variable order.
const RingPtr& el_ring();

bool same_ring(const RingPtr& a, const RingPtr& b);

/// Exponent vector over a fixed ring; the i-th entry is the exponent of the
/// ring's i-th variable.
class Monomial {
public:
    explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
    explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}

    static Monomial variable(std::size_t nvars, std::size_t index, std::uint32_t exp = 1);

    std::size_t size() const { return exps_.size(); }
    std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
    std::uint32_t& operator[](std::size_t i) { return exps_[i]; }
    const std::vector<std::uint32_t>& exponents() const { return exps_; }

    std::uint64_t total_degree() const;
    bool is_constant() const;

    /// Exponentwise sum (monomial product).
    friend Monomial operator*(const Monomial& a, const Monomial& b);

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

private:
    std::vector<std::uint32_t> exps_;
};

/// Strict weak order placing the graded-reverse-lexicographically largest
/// monomial first, so map iteration yields the leading term before the rest.
struct GrevlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

}  // namespace cuboid
