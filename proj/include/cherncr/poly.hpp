#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cherncr/rational.hpp"

namespace cherncr {

// A named generator of a graded polynomial ring.
struct Variable {
    std::string name;
    int weight = 1;

    friend bool operator==(const Variable&, const Variable&) = default;
};

// Ordered list of variables; registration order fixes the monomial order.
class Ring {
  public:
    explicit Ring(std::vector<Variable> vars) : vars_(std::move(vars)) {
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (vars_[i].weight <= 0)
                throw std::invalid_argument("variable weight must be positive: " + vars_[i].name);
            for (std::size_t j = 0; j < i; ++j)
                if (vars_[j].name == vars_[i].name)
                    throw std::invalid_argument("duplicate variable name: " + vars_[i].name);
        }
    }

    std::size_t size() const { return vars_.size(); }
    const Variable& var(std::size_t i) const { return vars_.at(i); }

    // -1 when absent.
    int index_of(std::string_view name) const {
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i].name == name) return static_cast<int>(i);
        return -1;
    }

    friend bool operator==(const Ring&, const Ring&) = default;

  private:
    std::vector<Variable> vars_;
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(std::vector<Variable> vars) {
    return std::make_shared<const Ring>(std::move(vars));
}

// Exponent vector plus its cached weighted degree. Ordering is graded-lex:
// degree first, then exponents in variable registration order.
struct Monomial {
    int degree = 0;
    std::vector<int> exp;

    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

// Sparse multivariate polynomial with exact rational coefficients.
// Zero coefficients are never stored; the zero polynomial has no terms.
class Poly {
  public:
    explicit Poly(RingPtr ring) : ring_(std::move(ring)) {
        if (!ring_) throw std::invalid_argument("null ring");
    }

    static Poly constant(RingPtr ring, Rational value) {
        Poly p(std::move(ring));
        if (value != 0) p.terms_.emplace(Monomial{0, std::vector<int>(p.ring_->size(), 0)}, std::move(value));
        return p;
    }

    static Poly variable(RingPtr ring, std::size_t index) {
        Poly p(std::move(ring));
        if (index >= p.ring_->size()) throw std::out_of_range("variable index out of range");
        std::vector<int> e(p.ring_->size(), 0);
        e[index] = 1;
        p.terms_.emplace(Monomial{p.ring_->var(index).weight, std::move(e)}, Rational(1));
        return p;
    }

    static Poly variable(RingPtr ring, std::string_view name) {
        int i = ring->index_of(name);
        if (i < 0) throw std::out_of_range("unknown variable: " + std::string(name));
        return variable(std::move(ring), static_cast<std::size_t>(i));
    }

    const RingPtr& ring() const { return ring_; }
    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree == 0);
    }

    Rational constant_value() const {
        if (terms_.empty()) return 0;
        if (!is_constant()) throw std::domain_error("polynomial is not constant");
        return terms_.begin()->second;
    }

    // Maximum weighted degree over stored terms; -1 for the zero polynomial.
    int degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.degree; }

    Rational coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(std::vector<int> exp, Rational coef) {
        if (exp.size() != ring_->size()) throw std::invalid_argument("exponent vector size mismatch");
        if (coef == 0) return;
        int deg = 0;
        for (std::size_t i = 0; i < exp.size(); ++i) {
            if (exp[i] < 0) throw std::invalid_argument("negative exponent");
            deg += exp[i] * ring_->var(i).weight;
        }
        add_term(Monomial{deg, std::move(exp)}, std::move(coef));
    }

    Poly operator-() const {
        Poly r(ring_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    Poly& operator+=(const Poly& other) {
        check_compatible(other);
        for (const auto& [m, c] : other.terms_) add_term(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& other) {
        check_compatible(other);
        for (const auto& [m, c] : other.terms_) add_term(m, -c);
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        a.check_compatible(b);
        Poly r(a.ring_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                std::vector<int> e(ma.exp);
                for (std::size_t i = 0; i < e.size(); ++i) e[i] += mb.exp[i];
                r.add_term(Monomial{ma.degree + mb.degree, std::move(e)}, ca * cb);
            }
        return r;
    }

    friend Poly operator*(const Rational& c, const Poly& p) {
        Poly r(p.ring_);
        if (c == 0) return r;
        for (const auto& [m, pc] : p.terms_) r.terms_.emplace(m, c * pc);
        return r;
    }
    friend Poly operator*(const Poly& p, const Rational& c) { return c * p; }

    friend bool operator==(const Poly& a, const Poly& b) {
        return *a.ring_ == *b.ring_ && a.terms_ == b.terms_;
    }

    Poly pow(int e) const {
        if (e < 0) throw std::invalid_argument("negative exponent");
        Poly r = constant(ring_, 1);
        for (int i = 0; i < e; ++i) r = r * (*this);
        return r;
    }

    // Sum of terms of exactly the given weighted degree.
    Poly homogeneous_part(int deg) const {
        if (deg < 0) throw std::invalid_argument("negative degree");
        Poly r(ring_);
        for (const auto& [m, c] : terms_)
            if (m.degree == deg) r.terms_.emplace(m, c);
        return r;
    }

    Rational evaluate(std::span<const Rational> values) const {
        if (values.size() != ring_->size()) throw std::invalid_argument("value count mismatch");
        Rational r = 0;
        for (const auto& [m, c] : terms_) {
            Rational t = c;
            for (std::size_t i = 0; i < values.size(); ++i) t *= cherncr::pow(values[i], m.exp[i]);
            r += t;
        }
        return r;
    }

    // Replaces each variable by the corresponding polynomial; all images
    // must live in one common ring, which becomes the result's ring.
    Poly substitute(std::span<const Poly> images) const {
        if (images.size() != ring_->size()) throw std::invalid_argument("image count mismatch");
        RingPtr target = images.empty() ? ring_ : images[0].ring();
        Poly r(target);
        for (const auto& [m, c] : terms_) {
            Poly t = constant(target, c);
            for (std::size_t i = 0; i < images.size(); ++i)
                if (m.exp[i] > 0) t = t * images[i].pow(m.exp[i]);
            r += t;
        }
        return r;
    }

    // Canonical rendering: terms in descending graded-lex order,
    // e.g. "-1/6*s1^2 - s2".
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [m, c] = *it;
            Rational a = c;
            if (out.empty()) {
                if (a < 0) { out += "-"; a = -a; }
            } else {
                if (a < 0) { out += " - "; a = -a; }
                else out += " + ";
            }
            std::string mono = monomial_str(m);
            if (mono.empty()) {
                out += to_string(a);
            } else {
                if (a != 1) { out += to_string(a); out += "*"; }
                out += mono;
            }
        }
        return out;
    }

  private:
    void add_term(Monomial m, Rational coef) {
        if (coef == 0) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(std::move(m), std::move(coef));
        } else {
            it->second += coef;
            if (it->second == 0) terms_.erase(it);
        }
    }

    std::string monomial_str(const Monomial& m) const {
        std::string out;
        for (std::size_t i = 0; i < m.exp.size(); ++i) {
            if (m.exp[i] == 0) continue;
            if (!out.empty()) out += "*";
            out += ring_->var(i).name;
            if (m.exp[i] != 1) out += "^" + std::to_string(m.exp[i]);
        }
        return out;
    }

    void check_compatible(const Poly& other) const {
        if (ring_ != other.ring_ && !(*ring_ == *other.ring_))
            throw std::invalid_argument("polynomials over incompatible rings");
    }

    RingPtr ring_;
    std::map<Monomial, Rational> terms_;
};

}  // namespace cherncr
