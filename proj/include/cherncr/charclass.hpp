#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cherncr/poly.hpp"
#include "cherncr/rational.hpp"

namespace cherncr {

// Chern character vector (ch_0, ..., ch_{n_max}). Entries are polynomials
// so the same code serves rational-coefficient data and family data;
// ch_0 is the rank of the underlying bundle.
class ChVector {
  public:
    ChVector(RingPtr ring, std::vector<Poly> entries) : entries_(std::move(entries)) {
        if (entries_.empty()) throw std::invalid_argument("ChVector needs at least ch_0");
        for (const auto& e : entries_)
            if (!(*e.ring() == *ring)) throw std::invalid_argument("ChVector entry ring mismatch");
        ring_ = std::move(ring);
    }

    static ChVector from_rationals(std::vector<Rational> values) {
        RingPtr trivial = make_ring({});
        std::vector<Poly> entries;
        entries.reserve(values.size());
        for (auto& v : values) entries.push_back(Poly::constant(trivial, std::move(v)));
        return ChVector(trivial, std::move(entries));
    }

    int n_max() const { return static_cast<int>(entries_.size()) - 1; }
    const Poly& ch(int k) const { return entries_.at(k); }
    const RingPtr& ring() const { return ring_; }

    friend bool operator==(const ChVector& a, const ChVector& b) { return a.entries_ == b.entries_; }

  private:
    RingPtr ring_;
    std::vector<Poly> entries_;
};

// Newton's identities with p_k = k! ch_k. Returns (c_0 = 1, c_1, ..., c_{n_max}).
inline std::vector<Poly> ch_to_chern(const ChVector& ch) {
    const RingPtr& ring = ch.ring();
    std::vector<Poly> p;  // power sums, p[0] unused
    p.push_back(Poly(ring));
    for (int k = 1; k <= ch.n_max(); ++k) p.push_back(factorial(k) * ch.ch(k));

    std::vector<Poly> e;
    e.push_back(Poly::constant(ring, 1));
    for (int m = 1; m <= ch.n_max(); ++m) {
        Poly acc(ring);
        for (int i = 1; i <= m; ++i) {
            Poly term = e[m - i] * p[i];
            acc += (i % 2 == 1) ? term : -term;
        }
        e.push_back((Rational(1) / m) * acc);
    }
    return e;
}

// Exact inverse of ch_to_chern; rank becomes ch_0.
inline ChVector chern_to_ch(const std::vector<Poly>& c, const Rational& rank) {
    if (c.empty()) throw std::invalid_argument("chern_to_ch: empty input");
    const RingPtr& ring = c[0].ring();
    if (!(c[0] == Poly::constant(ring, 1))) throw std::invalid_argument("chern_to_ch: c_0 must be 1");

    std::vector<Poly> p;  // p[0] unused
    p.push_back(Poly(ring));
    for (std::size_t m = 1; m < c.size(); ++m) {
        // m e_m = sum_{i=1}^{m} (-1)^{i-1} e_{m-i} p_i, solved for p_m
        Poly acc = Rational(static_cast<long>(m)) * c[m];
        for (std::size_t i = 1; i < m; ++i) {
            Poly term = c[m - i] * p[i];
            acc -= (i % 2 == 1) ? term : -term;
        }
        p.push_back(m % 2 == 1 ? acc : -acc);
    }

    std::vector<Poly> entries;
    entries.push_back(Poly::constant(ring, rank));
    for (std::size_t k = 1; k < c.size(); ++k)
        entries.push_back((Rational(1) / factorial(static_cast<int>(k))) * p[k]);
    RingPtr r = ring;
    return ChVector(std::move(r), std::move(entries));
}

// Twist by a formal line bundle with first Chern class t:
// ch'_k = sum_{j=0}^{k} t^{k-j}/(k-j)! ch_j.
inline ChVector twist_ch(const ChVector& ch, const Poly& t) {
    std::vector<Poly> entries;
    for (int k = 0; k <= ch.n_max(); ++k) {
        Poly acc(t.ring());
        for (int j = 0; j <= k; ++j)
            acc += (Rational(1) / factorial(k - j)) * (t.pow(k - j) * ch.ch(j));
        entries.push_back(std::move(acc));
    }
    RingPtr r = t.ring();
    return ChVector(std::move(r), std::move(entries));
}

// Cohomology ring of a base: x = c1(L) with weight 1, t_j = ch_j(T^{1,0}Y)
// with weight j. The weight is the cohomological degree (in H^{2k}).
inline RingPtr base_cohomology_ring(int n) {
    std::vector<Variable> vars;
    vars.push_back({"x", 1});
    for (int j = 1; j <= n; ++j) vars.push_back({"t" + std::to_string(j), j});
    return make_ring(std::move(vars));
}

// Monomial key grammar for characteristic-number tables: factors "x" then
// "t1".."tn" in that order, each with explicit "^k", joined by "*".
// Example: "x^1*t1^1".
inline std::string monomial_key(const Ring& ring, const Monomial& m) {
    std::string out;
    for (std::size_t i = 0; i < m.exp.size(); ++i) {
        if (m.exp[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += ring.var(i).name + "^" + std::to_string(m.exp[i]);
    }
    return out;
}

inline Monomial parse_monomial_key(const Ring& ring, const std::string& key) {
    std::vector<int> exp(ring.size(), 0);
    int degree = 0;
    std::size_t pos = 0;
    int last_index = -1;
    while (pos < key.size()) {
        std::size_t caret = key.find('^', pos);
        if (caret == std::string::npos)
            throw std::invalid_argument("malformed monomial key: '" + key + "'");
        std::string name = key.substr(pos, caret - pos);
        int index = ring.index_of(name);
        if (index < 0) throw std::invalid_argument("unknown generator '" + name + "' in key '" + key + "'");
        if (index <= last_index)
            throw std::invalid_argument("generators out of order or repeated in key '" + key + "'");
        last_index = index;
        std::size_t end = key.find('*', caret);
        std::string exp_str = key.substr(caret + 1, end == std::string::npos ? end : end - caret - 1);
        if (exp_str.empty()) throw std::invalid_argument("malformed monomial key: '" + key + "'");
        int e = 0;
        for (char ch : exp_str) {
            if (ch < '0' || ch > '9') throw std::invalid_argument("malformed exponent in key '" + key + "'");
            e = e * 10 + (ch - '0');
        }
        if (e == 0) throw std::invalid_argument("zero exponent in key '" + key + "'");
        exp[index] = e;
        degree += e * ring.var(index).weight;
        pos = (end == std::string::npos) ? key.size() : end + 1;
    }
    return Monomial{degree, std::move(exp)};
}

// Table of characteristic numbers of the base: the value of the integral
// over Y of every degree-n monomial in x and t_1..t_n.
class ChernNumberTable {
  public:
    explicit ChernNumberTable(int n) : n_(n), ring_(base_cohomology_ring(n)) {
        if (n < 1) throw std::invalid_argument("table dimension must be positive");
    }

    int n() const { return n_; }
    const RingPtr& ring() const { return ring_; }
    const std::map<Monomial, Rational>& numbers() const { return numbers_; }

    void set(const Monomial& m, Rational value) {
        if (m.degree != n_) throw std::invalid_argument("table entries must have degree n");
        numbers_[m] = std::move(value);
    }
    void set(const std::string& key, Rational value) {
        set(parse_monomial_key(*ring_, key), std::move(value));
    }

    std::optional<Rational> lookup(const Monomial& m) const {
        auto it = numbers_.find(m);
        if (it == numbers_.end()) return std::nullopt;
        return it->second;
    }
    std::optional<Rational> lookup(const std::string& key) const {
        return lookup(parse_monomial_key(*ring_, key));
    }

    // All degree-n exponent vectors over (x, t_1..t_n); the completeness set.
    std::vector<Monomial> required_monomials() const {
        std::vector<Monomial> out;
        std::vector<int> exp(ring_->size(), 0);
        auto recurse = [&](auto&& self, std::size_t i, int remaining) -> void {
            if (i == ring_->size()) {
                if (remaining == 0) out.push_back(Monomial{n_, exp});
                return;
            }
            int w = ring_->var(i).weight;
            for (int e = remaining / w; e >= 0; --e) {
                exp[i] = e;
                self(self, i + 1, remaining - e * w);
            }
            exp[i] = 0;
        };
        recurse(recurse, 0, n_);
        return out;
    }

  private:
    int n_;
    RingPtr ring_;
    std::map<Monomial, Rational> numbers_;
};

// Provenance tag for a base.
struct CompleteIntersectionTag {
    std::vector<int> degrees;
};

// Characteristic data of a Kaehler-Einstein base: dimension, the lambda
// with Einstein constant (n+1)*lambda, and the pairing table.
struct KEBase {
    int n;
    Rational lambda;
    ChernNumberTable table;
    std::optional<CompleteIntersectionTag> complete_intersection;
    // Set when the geometric existence hypothesis (s1(d) > 2n+1, i.e.
    // lambda < 0) fails; the computation is still exact but formal.
    bool formal_regime = false;
};

// The class [ch_k(Bochner curvature)] = sum_j (lambda x)^{k-j}/(k-j)! t_j
// with t_0-contribution (n+1) (lambda x)^k / k!, as a polynomial in the
// base cohomology ring. Homogeneous of degree k.
inline Poly bochner_ch(const KEBase& base, int k) {
    if (k < 0 || k > base.n) throw std::invalid_argument("bochner_ch: require 0 <= k <= n");
    const RingPtr& ring = base.table.ring();
    Poly x = Poly::variable(ring, "x");
    Poly acc = (Rational(base.n + 1) / factorial(k)) * (base.lambda * x).pow(k);
    for (int j = 1; j <= k; ++j) {
        Poly tj = Poly::variable(ring, "t" + std::to_string(j));
        acc += (Rational(1) / factorial(k - j)) * ((base.lambda * x).pow(k - j) * tj);
    }
    return acc;
}

// Linear extension of the characteristic-number table to a homogeneous
// degree-n class. Throws if the class has a component of the wrong degree
// or hits a monomial missing from the table.
inline Rational integrate(const KEBase& base, const Poly& cls) {
    if (!(*cls.ring() == *base.table.ring()))
        throw std::invalid_argument("integrate: class not over the base cohomology ring");
    Rational total = 0;
    for (const auto& [m, c] : cls.terms()) {
        if (m.degree != base.n)
            throw std::invalid_argument("integrate: class has a term of degree " +
                                        std::to_string(m.degree) + ", expected " + std::to_string(base.n));
        auto v = base.table.lookup(m);
        if (!v)
            throw std::invalid_argument("integrate: missing table entry for '" +
                                        monomial_key(*base.table.ring(), m) + "'");
        total += c * *v;
    }
    return total;
}

}  // namespace cherncr
