#pragma once

#include <map>
#include <set>
#include <vector>

#include "cherncr/charclass.hpp"
#include "cherncr/matrix.hpp"
#include "cherncr/partitions.hpp"
#include "cherncr/symfunc.hpp"

namespace cherncr {

// An invariant of the whole complete-intersection family: E * q(s1..sn)
// where E stands for the formal product d_1 ... d_n and q is a polynomial
// in the power sums s_k(d) = (1/k!) sum d_i^k.
struct FamilyPoly {
    int n;
    Poly q;

    // Value at a concrete degree tuple: q(s_1(d),...,s_n(d)) * prod d_i.
    Rational specialize(const std::vector<int>& d) const {
        std::vector<Rational> s;
        Rational e = 1;
        for (int k = 1; k <= n; ++k) {
            Rational sk = 0;
            for (int di : d) sk += pow(Rational(di), k);
            s.push_back(sk / factorial(k));
        }
        for (int di : d) e *= di;
        return e * q.evaluate(s);
    }
};

namespace detail {

// lambda_d = (2n+1 - s1) / (n+1) as a polynomial in s.
inline Poly family_lambda(int n, const RingPtr& ring) {
    return (Rational(1) / (n + 1)) *
           (Poly::constant(ring, 2 * n + 1) - power_sum(ring, 1));
}

// Coefficient polynomial of tau^j in ch_j(T^{1,0}Y_d (+) C):
// a_0 = n+1, a_j = (2n+1)/j! - s_j.
inline Poly family_ch_coef(int n, int j, const RingPtr& ring) {
    if (j == 0) return Poly::constant(ring, n + 1);
    return Poly::constant(ring, Rational(2 * n + 1) / factorial(j)) - power_sum(ring, j);
}

// Coefficient of tau^k in [ch_k(Bochner)]; c1(L) = -tau turns each
// (lambda c1(L))^{k-j} into (-lambda)^{k-j} tau^{k-j}.
inline Poly family_bochner_coef(int n, int k, const RingPtr& ring) {
    Poly lambda = family_lambda(n, ring);
    Poly acc(ring);
    for (int j = 0; j <= k; ++j)
        acc += (Rational(1) / factorial(k - j)) *
               ((-lambda).pow(k - j) * family_ch_coef(n, j, ring));
    return acc;
}

}  // namespace detail

// I_varsigma(S_d) = E * q_varsigma(s), computed by running the circle-bundle
// formula with symbolic lambda and Chern data.
inline FamilyPoly family_I_varsigma(int n, const Partition& varsigma) {
    if (varsigma.weight() != n)
        throw std::invalid_argument("family_I_varsigma: partition weight mismatch");
    RingPtr ring = power_sum_ring(n);
    Poly lambda = detail::family_lambda(n, ring);
    Poly q = (-lambda).pow(varsigma[1]);
    for (int k = 2; k <= n; ++k)
        if (varsigma[k] > 0) q = q * detail::family_bochner_coef(n, k, ring).pow(varsigma[k]);
    return FamilyPoly{n, -lambda * q};
}

// mu(S_d) = E * q(s); c_m(T^{1,0}Y_d) is recovered from the Chern
// characters via Newton's identities with rank n.
inline FamilyPoly family_mu(int n) {
    RingPtr ring = power_sum_ring(n);
    Poly lambda = detail::family_lambda(n, ring);

    std::vector<Poly> ch_ty;  // coefficient of tau^j in ch_j(TY_d)
    ch_ty.push_back(Poly::constant(ring, n));
    for (int j = 1; j <= n; ++j) ch_ty.push_back(detail::family_ch_coef(n, j, ring));
    RingPtr r = ring;
    std::vector<Poly> c = ch_to_chern(ChVector(std::move(r), std::move(ch_ty)));

    Poly q(ring);
    for (int m = 0; m <= n; ++m) q += (-lambda).pow(n - m) * c[m];
    return FamilyPoly{n, -lambda * q};
}

// Leading-term theorem: the top (degree n+1) part of q_varsigma must equal
// (s1/(n+1)) * p_varsigma exactly, for every partition of n.
struct LeadingTermEntry {
    Partition varsigma;
    Poly actual;    // homogeneous_part(q_varsigma, n+1)
    Poly expected;  // (s1/(n+1)) * p_varsigma
    bool pass;
};

inline std::vector<LeadingTermEntry> leading_term_check(int n) {
    RingPtr ring = power_sum_ring(n);
    Poly s1_over = (Rational(1) / (n + 1)) * power_sum(ring, 1);
    std::vector<LeadingTermEntry> report;
    for (const Partition& varsigma : partitions(n)) {
        Poly actual = family_I_varsigma(n, varsigma).q.homogeneous_part(n + 1);
        Poly expected = s1_over * p_varsigma(n, varsigma, ring);
        bool pass = actual == expected;
        report.push_back({varsigma, std::move(actual), std::move(expected), pass});
    }
    return report;
}

// Rank of the coefficient matrix of {q_varsigma}; full rank |Part(n)|
// means the family polynomials are linearly independent over Q.
struct IndependenceReport {
    std::size_t partition_count;
    std::size_t rank;
    bool full_rank() const { return rank == partition_count; }
};

inline IndependenceReport independence_check(int n) {
    auto parts = partitions(n);
    std::vector<Poly> qs;
    std::set<Monomial> support;
    for (const Partition& varsigma : parts) {
        qs.push_back(family_I_varsigma(n, varsigma).q);
        for (const auto& [m, c] : qs.back().terms()) support.insert(m);
    }
    std::vector<Monomial> cols(support.begin(), support.end());
    RatMatrix matrix(parts.size(), cols.size());
    for (std::size_t r = 0; r < qs.size(); ++r)
        for (std::size_t c = 0; c < cols.size(); ++c) matrix.at(r, c) = qs[r].coefficient(cols[c]);
    return {parts.size(), matrix.rank()};
}

// Solves family_mu = sum_varsigma C_varsigma family_I_varsigma as an exact
// polynomial identity in s (one linear equation per monomial).
struct ConjectureResult {
    LinearSolveResult::Kind kind;
    std::vector<Partition> order;
    std::map<Partition, Rational> coefficients;  // populated when unique
};

inline ConjectureResult conjecture_coefficients(int n) {
    auto parts = partitions(n);
    std::vector<Poly> qs;
    std::set<Monomial> support;
    Poly mu = family_mu(n).q;
    for (const auto& [m, c] : mu.terms()) support.insert(m);
    for (const Partition& varsigma : parts) {
        qs.push_back(family_I_varsigma(n, varsigma).q);
        for (const auto& [m, c] : qs.back().terms()) support.insert(m);
    }

    std::vector<Monomial> rows(support.begin(), support.end());
    RatMatrix a(rows.size(), parts.size());
    std::vector<Rational> b;
    b.reserve(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < parts.size(); ++c) a.at(r, c) = qs[c].coefficient(rows[r]);
        b.push_back(mu.coefficient(rows[r]));
    }

    LinearSolveResult solved = solve_linear(a, b);
    ConjectureResult result{solved.kind, parts, {}};
    if (solved.kind == LinearSolveResult::Kind::Unique)
        for (std::size_t i = 0; i < parts.size(); ++i)
            result.coefficients.emplace(parts[i], solved.solution[i]);
    return result;
}

}  // namespace cherncr
