#include "cuboid/polynomial.hpp"

#include <stdexcept>

namespace cuboid {

namespace {

void require_same_ring(const Polynomial& p, const Polynomial& q, const char* op) {
    if (!same_ring(p.ring(), q.ring()))
        throw std::invalid_argument(std::string("ring mismatch in ") + op + ": " +
                                    p.ring()->name() + " vs " + q.ring()->name());
}

}  // namespace

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {
    if (!ring_) throw std::invalid_argument("null ring signature");
}

Polynomial Polynomial::constant(RingPtr ring, Rational value) {
    Polynomial p(std::move(ring));
    if (value != 0) p.terms_.emplace(Monomial(p.ring_->size()), std::move(value));
    return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::string_view name, std::uint32_t exp) {
    Polynomial p(std::move(ring));
    auto idx = p.ring_->index_of(name);
    if (!idx)
        throw std::invalid_argument("variable '" + std::string(name) + "' not in ring " +
                                    p.ring_->name());
    if (exp == 0) return constant(p.ring_, 1);
    p.terms_.emplace(Monomial::variable(p.ring_->size(), *idx, exp), Rational(1));
    return p;
}

std::int64_t Polynomial::total_degree() const {
    std::int64_t d = -1;
    for (const auto& [m, c] : terms_) d = std::max<std::int64_t>(d, (std::int64_t)m.total_degree());
    return d;
}

std::uint32_t Polynomial::degree_in(std::size_t var_index) const {
    std::uint32_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m[var_index]);
    return d;
}

bool Polynomial::free_of(std::string_view var) const {
    auto idx = ring_->index_of(var);
    if (!idx) return true;
    return degree_in(*idx) == 0;
}

Rational Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

const std::pair<const Monomial, Rational>& Polynomial::leading_term() const {
    if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
    return *terms_.begin();
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (m.size() != ring_->size()) throw std::invalid_argument("monomial arity mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial operator-(const Polynomial& p) {
    Polynomial r(p.ring_);
    for (const auto& [m, c] : p.terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial operator+(const Polynomial& p, const Polynomial& q) {
    require_same_ring(p, q, "add");
    Polynomial r = p;
    for (const auto& [m, c] : q.terms_) r.add_term(m, c);
    return r;
}

Polynomial operator-(const Polynomial& p, const Polynomial& q) {
    require_same_ring(p, q, "sub");
    Polynomial r = p;
    for (const auto& [m, c] : q.terms_) r.add_term(m, -c);
    return r;
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    require_same_ring(p, q, "mul");
    Polynomial r(p.ring_);
    for (const auto& [mp, cp] : p.terms_)
        for (const auto& [mq, cq] : q.terms_) r.add_term(mp * mq, cp * cq);
    return r;
}

Polynomial operator*(const Polynomial& p, const Rational& c) {
    Polynomial r(p.ring_);
    if (c == 0) return r;
    for (const auto& [m, pc] : p.terms_) r.terms_.emplace(m, pc * c);
    return r;
}

bool operator==(const Polynomial& p, const Polynomial& q) {
    return same_ring(p.ring(), q.ring()) && p.terms_ == q.terms_;
}

Polynomial pow(const Polynomial& p, std::uint32_t k) {
    Polynomial r = Polynomial::constant(p.ring(), 1);
    for (std::uint32_t i = 0; i < k; ++i) r = r * p;
    return r;
}

Polynomial substitute(const Polynomial& p, const std::map<std::string, Polynomial>& images) {
    if (images.empty()) throw std::invalid_argument("substitute: empty image map");
    const RingPtr& target = images.begin()->second.ring();
    std::vector<const Polynomial*> image_of(p.ring()->size(), nullptr);
    for (std::size_t i = 0; i < p.ring()->size(); ++i) {
        auto it = images.find(p.ring()->variable(i));
        if (it == images.end())
            throw std::invalid_argument("substitute: missing image for variable '" +
                                        p.ring()->variable(i) + "'");
        if (!same_ring(it->second.ring(), target))
            throw std::invalid_argument("substitute: images over different target rings");
        image_of[i] = &it->second;
    }

    // power cache per source variable
    std::vector<std::vector<Polynomial>> powers(p.ring()->size());
    auto power = [&](std::size_t i, std::uint32_t e) -> const Polynomial& {
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(Polynomial::constant(target, 1));
        while (cache.size() <= e) cache.push_back(cache.back() * (*image_of[i]));
        return cache[e];
    };

    Polynomial result(target);
    for (const auto& [m, c] : p.terms()) {
        Polynomial t = Polynomial::constant(target, c);
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i]) t = t * power(i, m[i]);
        result = result + t;
    }
    return result;
}

Rational evaluate(const Polynomial& p, const std::map<std::string, Rational>& point) {
    std::vector<const Rational*> value_of(p.ring()->size(), nullptr);
    for (std::size_t i = 0; i < p.ring()->size(); ++i) {
        auto it = point.find(p.ring()->variable(i));
        if (it == point.end())
            throw std::invalid_argument("evaluate: missing assignment for variable '" +
                                        p.ring()->variable(i) + "'");
        value_of[i] = &it->second;
    }
    Rational sum = 0;
    for (const auto& [m, c] : p.terms()) {
        Rational t = c;
        for (std::size_t i = 0; i < m.size(); ++i)
            for (std::uint32_t e = 0; e < m[i]; ++e) t *= *value_of[i];
        sum += t;
    }
    return sum;
}

Permutation::Permutation(std::array<unsigned, 3> images) : img_(images) {
    bool seen[4] = {false, false, false, false};
    for (unsigned v : img_) {
        if (v < 1 || v > 3 || seen[v]) throw std::invalid_argument("not a bijection of {1,2,3}");
        seen[v] = true;
    }
}

const std::array<Permutation, 6>& Permutation::all() {
    static const std::array<Permutation, 6> perms = {
        Permutation({1, 2, 3}), Permutation({1, 3, 2}), Permutation({2, 1, 3}),
        Permutation({2, 3, 1}), Permutation({3, 1, 2}), Permutation({3, 2, 1})};
    return perms;
}

Permutation Permutation::compose(const Permutation& other) const {
    return Permutation({img_[other.img_[0] - 1], img_[other.img_[1] - 1], img_[other.img_[2] - 1]});
}

Permutation Permutation::inverse() const {
    std::array<unsigned, 3> inv{};
    for (unsigned i = 0; i < 3; ++i) inv[img_[i] - 1] = i + 1;
    return Permutation(inv);
}

std::string Permutation::to_string() const {
    std::string s;
    for (unsigned v : img_) s += char('0' + v);
    return s;
}

Polynomial apply_permutation(const Polynomial& p, const Permutation& sigma) {
    if (!same_ring(p.ring(), mql_ring()))
        throw std::invalid_argument("apply_permutation requires the MQL ring");
    Polynomial r(p.ring());
    for (const auto& [m, c] : p.terms()) {
        Monomial mm(m.size());
        for (std::size_t i = 0; i < 3; ++i) {
            mm[sigma(unsigned(i) + 1) - 1] += m[i];          // x_i -> x_{sigma i}
            mm[3 + sigma(unsigned(i) + 1) - 1] += m[3 + i];  // d_i -> d_{sigma i}
        }
        mm[6] = m[6];  // L fixed
        r.add_term(mm, c);
    }
    return r;
}

WeightSystem::WeightSystem(std::map<std::string, std::uint32_t> weights)
    : weights_(std::move(weights)) {
    for (const auto& [v, w] : weights_)
        if (w == 0) throw std::invalid_argument("weight of '" + v + "' must be positive");
}

std::uint32_t WeightSystem::weight_of(const std::string& var) const {
    auto it = weights_.find(var);
    if (it == weights_.end())
        throw std::invalid_argument("no weight assigned to variable '" + var + "'");
    return it->second;
}

const WeightSystem& WeightSystem::el_weights() {
    static const WeightSystem w{{{"E10", 1}, {"E01", 1}, {"L", 1},
                                 {"E20", 2}, {"E02", 2}, {"E11", 2},
                                 {"E30", 3}, {"E03", 3}, {"E21", 3}, {"E12", 3}}};
    return w;
}

GradeResult weighted_degree(const Polynomial& p, const WeightSystem& w) {
    if (p.is_zero()) return {GradeResult::Kind::zero, 0};
    // weights are looked up only for variables that actually occur
    std::vector<std::int64_t> wv(p.ring()->size(), -1);
    bool first = true;
    std::int64_t degree = 0;
    for (const auto& [m, c] : p.terms()) {
        std::int64_t d = 0;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (!m[i]) continue;
            if (wv[i] < 0) wv[i] = w.weight_of(p.ring()->variable(i));
            d += std::int64_t(m[i]) * wv[i];
        }
        if (first) {
            degree = d;
            first = false;
        } else if (d != degree) {
            return {GradeResult::Kind::mixed, 0};
        }
    }
    return {GradeResult::Kind::homogeneous, degree};
}

}  // namespace cuboid
