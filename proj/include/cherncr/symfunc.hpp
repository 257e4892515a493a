#pragma once

#include <stdexcept>
#include <vector>

#include "cherncr/matrix.hpp"
#include "cherncr/partitions.hpp"
#include "cherncr/poly.hpp"

namespace cherncr {

// Ring of power sums s1..sn with weight(s_k) = k.
inline RingPtr power_sum_ring(int n) {
    std::vector<Variable> vars;
    vars.reserve(n);
    for (int k = 1; k <= n; ++k) vars.push_back({"s" + std::to_string(k), k});
    return make_ring(std::move(vars));
}

inline Poly power_sum(const RingPtr& ring, int k) {
    return Poly::variable(ring, "s" + std::to_string(k));
}

// nu_k = -sum_{j=1}^{k} s1^{k-j} s_j / ((n+1)^{k-j} (k-j)!)
//        + s1^k / ((n+1)^{k-1} k!),   homogeneous of weighted degree k.
inline Poly nu_k(int n, int k, RingPtr ring = nullptr) {
    if (k < 2 || k > n) throw std::invalid_argument("nu_k: require 2 <= k <= n");
    if (!ring) ring = power_sum_ring(n);
    Poly s1 = power_sum(ring, 1);
    Poly result(ring);
    for (int j = 1; j <= k; ++j) {
        Rational coef = Rational(-1) / (pow(Rational(n + 1), k - j) * factorial(k - j));
        result += coef * (s1.pow(k - j) * power_sum(ring, j));
    }
    result += (Rational(1) / (pow(Rational(n + 1), k - 1) * factorial(k))) * s1.pow(k);
    return result;
}

// p_varsigma = (s1/(n+1))^{v1} * prod_{k>=2} nu_k^{v_k}, homogeneous of degree n.
inline Poly p_varsigma(int n, const Partition& varsigma, RingPtr ring = nullptr) {
    if (varsigma.weight() != n) throw std::invalid_argument("p_varsigma: partition weight mismatch");
    if (!ring) ring = power_sum_ring(n);
    Poly result = ((Rational(1) / (n + 1)) * power_sum(ring, 1)).pow(varsigma[1]);
    for (int k = 2; k <= n; ++k)
        if (varsigma[k] > 0) result = result * nu_k(n, k, ring).pow(varsigma[k]);
    return result;
}

// Square matrix expressing each p_varsigma in the monomial basis
// (s1^{a1} ... sn^{an}) over degree-n exponent vectors. Rows and columns
// are both indexed by partitions(n) order; column varsigma' stands for
// the monomial s1^{v'_1} ... sn^{v'_n}. A nonzero determinant witnesses
// the linear independence behind the algebraic-independence argument.
struct TransitionMatrix {
    std::vector<Partition> order;  // row and column index
    RatMatrix matrix;
    Rational det;
};

inline TransitionMatrix transition_matrix(int n) {
    auto parts = partitions(n);
    RingPtr ring = power_sum_ring(n);
    RatMatrix m(parts.size(), parts.size());
    for (std::size_t row = 0; row < parts.size(); ++row) {
        Poly p = p_varsigma(n, parts[row], ring);
        for (std::size_t col = 0; col < parts.size(); ++col) {
            Monomial key{n, parts[col].multiplicities()};
            m.at(row, col) = p.coefficient(key);
        }
    }
    Rational det = m.determinant();
    return {std::move(parts), std::move(m), std::move(det)};
}

}  // namespace cherncr
