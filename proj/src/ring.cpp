#include "cuboid/ring.hpp"

#include <numeric>
#include <stdexcept>

namespace cuboid {

RingSignature::RingSignature(std::string name, std::vector<std::string> variables)
    : name_(std::move(name)), vars_(std::move(variables)) {
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto [it, inserted] = index_.emplace(vars_[i], i);
        if (!inserted)
            throw std::invalid_argument("duplicate variable '" + vars_[i] + "' in ring " + name_);
    }
}

std::optional<std::size_t> RingSignature::index_of(std::string_view var) const {
    auto it = index_.find(var);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

const RingPtr& mql_ring() {
    static const RingPtr ring = std::make_shared<RingSignature>(
        "MQL", std::vector<std::string>{"x1", "x2", "x3", "d1", "d2", "d3", "L"});
    return ring;
}

const RingPtr& el_ring() {
    static const RingPtr ring = std::make_shared<RingSignature>(
        "EL", std::vector<std::string>{"E10", "E20", "E30", "E01", "E02", "E03", "E21", "E11",
                                       "E12", "L"});
    return ring;
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, std::uint32_t exp) {
    Monomial m(nvars);
    m.exps_.at(index) = exp;
    return m;
}

std::uint64_t Monomial::total_degree() const {
    return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

bool Monomial::is_constant() const {
    for (auto e : exps_)
        if (e) return false;
    return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    if (a.size() != b.size()) throw std::invalid_argument("monomial arity mismatch");
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r.exps_[i] = a.exps_[i] + b.exps_[i];
    return r;
}

bool GrevlexGreater::operator()(const Monomial& a, const Monomial& b) const {
    const auto da = a.total_degree(), db = b.total_degree();
    if (da != db) return da > db;
    // equal degree: a > b iff the last nonzero entry of a - b is negative
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

}  // namespace cuboid
