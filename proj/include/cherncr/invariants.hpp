#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "cherncr/charclass.hpp"
#include "cherncr/partitions.hpp"
#include "cherncr/poly.hpp"

namespace cherncr {

// Ring of Chern-character variables ch1..ch_{n+1} with weight(ch_k) = k.
inline RingPtr chern_character_ring(int n) {
    std::vector<Variable> vars;
    for (int k = 1; k <= n + 1; ++k) vars.push_back({"ch" + std::to_string(k), k});
    return make_ring(std::move(vars));
}

// GL-invariant polynomial of weighted degree at most n in the
// Chern-character basis.
struct InvPoly {
    Poly poly;
    int n;

    InvPoly(Poly p, int dim) : poly(std::move(p)), n(dim) {
        if (poly.degree() > n)
            throw std::invalid_argument("invariant polynomial has weighted degree " +
                                        std::to_string(poly.degree()) + " > n = " + std::to_string(n));
    }
};

// Base for the smooth complete intersection of multi-degree d in CP^{2n},
// with L = O(-1) restricted. Writing tau = c1(L^{-1}):
//   x   = -tau
//   t_j = (-s_j(d) + (2n+1)/j!) tau^j
//   integral of tau^n = d_1 ... d_n
//   (n+1) lambda = 2n+1 - s_1(d)
inline KEBase complete_intersection_base(int n, const std::vector<int>& d) {
    if (n < 1) throw std::invalid_argument("complete_intersection_base: n must be positive");
    if (static_cast<int>(d.size()) != n)
        throw std::invalid_argument("complete_intersection_base: expected " + std::to_string(n) +
                                    " degrees, got " + std::to_string(d.size()));
    Rational e = 1;  // d_1 ... d_n
    long s1 = 0;
    for (int di : d) {
        if (di < 1) throw std::invalid_argument("complete_intersection_base: degrees must be positive");
        e *= di;
        s1 += di;
    }
    Rational lambda = Rational(2 * n + 1 - s1) / (n + 1);

    // Coefficient of tau^j in t_j.
    std::vector<Rational> t_coef(n + 1, Rational(0));
    for (int j = 1; j <= n; ++j) {
        Rational sj = 0;
        for (int di : d) sj += pow(Rational(di), j);
        sj /= factorial(j);
        t_coef[j] = -sj + Rational(2 * n + 1) / factorial(j);
    }

    ChernNumberTable table(n);
    for (const Monomial& m : table.required_monomials()) {
        // exp[0] is the x power; x = -tau.
        Rational value = (m.exp[0] % 2 == 0) ? e : -e;
        for (int j = 1; j <= n; ++j) value *= pow(t_coef[j], m.exp[j]);
        table.set(m, value);
    }

    KEBase base{n, lambda, std::move(table), CompleteIntersectionTag{d}, s1 <= 2 * n + 1};
    return base;
}

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

// Checks table completeness and the Einstein consistency
// entry(t1 * m) = -(n+1) lambda entry(x * m) for all degree-(n-1)
// monomials m (the cohomological form of c1(TY) = -(n+1) lambda c1(L)).
inline ValidationReport validate_base(const KEBase& base) {
    ValidationReport report;
    const Ring& ring = *base.table.ring();

    for (const Monomial& m : base.table.required_monomials())
        if (!base.table.lookup(m))
            report.violations.push_back("missing table entry '" + monomial_key(ring, m) + "'");
    if (!report.ok()) return report;

    // Enumerate degree-(n-1) monomials by stripping one x from each
    // degree-n monomial that contains it.
    for (const Monomial& top : base.table.required_monomials()) {
        if (top.exp[0] == 0) continue;
        Monomial with_x = top;
        Monomial with_t1 = top;
        with_t1.exp[0] -= 1;
        with_t1.exp[1] += 1;
        Rational lhs = *base.table.lookup(with_t1);
        Rational rhs = -Rational(base.n + 1) * base.lambda * *base.table.lookup(with_x);
        if (lhs != rhs) {
            Monomial m = top;
            m.exp[0] -= 1;
            m.degree -= 1;
            report.violations.push_back(
                "Einstein consistency fails at m = '" + monomial_key(ring, m) + "': entry(t1*m) = " +
                to_string(lhs) + " but -(n+1)*lambda*entry(x*m) = " + to_string(rhs));
        }
    }
    return report;
}

// I_varsigma(S) = -lambda * integral of (lambda x)^{v1} prod_k bochner_ch(k)^{v_k}.
inline Rational I_varsigma(const KEBase& base, const Partition& varsigma) {
    if (varsigma.weight() != base.n)
        throw std::invalid_argument("I_varsigma: partition weight != base dimension");
    const RingPtr& ring = base.table.ring();
    Poly x = Poly::variable(ring, "x");
    Poly cls = (base.lambda * x).pow(varsigma[1]);
    for (int k = 2; k <= base.n; ++k)
        if (varsigma[k] > 0) cls = cls * bochner_ch(base, k).pow(varsigma[k]);
    return -base.lambda * integrate(base, cls);
}

// mu(S) = -lambda sum_m integral of (lambda x)^{n-m} c_m(T^{1,0}Y),
// with c_m computed from (t_1,...,t_n) via Newton's identities (rank n).
inline Rational burns_epstein(const KEBase& base) {
    const RingPtr& ring = base.table.ring();
    std::vector<Poly> ch_ty;
    ch_ty.push_back(Poly::constant(ring, base.n));
    for (int j = 1; j <= base.n; ++j)
        ch_ty.push_back(Poly::variable(ring, "t" + std::to_string(j)));
    RingPtr r = ring;
    std::vector<Poly> c = ch_to_chern(ChVector(std::move(r), std::move(ch_ty)));

    Poly x = Poly::variable(ring, "x");
    Rational total = 0;
    for (int m = 0; m <= base.n; ++m)
        total += integrate(base, (base.lambda * x).pow(base.n - m) * c[m]);
    return -base.lambda * total;
}

// Unique splitting Phi = ch1 * remainder + sum_varsigma coefficients[varsigma] * Phi_varsigma,
// where Phi_varsigma = prod_{k>=2} ch_k^{v_k}.
struct Decomposition {
    std::map<Partition, Rational> coefficients;
    InvPoly remainder;
};

inline Decomposition decompose_invariant(const InvPoly& phi) {
    const int n = phi.n;
    const RingPtr& ring = phi.poly.ring();
    Poly remainder(ring);
    std::map<Partition, Rational> coefficients;
    for (const auto& [m, c] : phi.poly.terms()) {
        if (m.exp[0] > 0) {
            // divide one ch1 out
            std::vector<int> e = m.exp;
            e[0] -= 1;
            Poly term(ring);
            term.add_term(std::move(e), c);
            remainder += term;
        } else {
            // ch1-free monomial of weighted degree m.degree <= n maps to
            // the partition (n - deg, e_2, ..., e_n).
            std::vector<int> parts(n, 0);
            parts[0] = n - m.degree;
            for (int k = 2; k <= n; ++k) parts[k - 1] = m.exp[k - 1];
            Partition varsigma(std::move(parts), n);
            auto [it, inserted] = coefficients.emplace(std::move(varsigma), c);
            if (!inserted) it->second += c;
        }
    }
    return Decomposition{std::move(coefficients), InvPoly(std::move(remainder), n)};
}

// Rebuilds ch1 * remainder + sum C_varsigma Phi_varsigma; used by the
// reconstruction-identity checks.
inline Poly recompose(const Decomposition& d) {
    const int n = d.remainder.n;
    const RingPtr& ring = d.remainder.poly.ring();
    Poly result = Poly::variable(ring, "ch1") * d.remainder.poly;
    for (const auto& [varsigma, c] : d.coefficients) {
        Poly phi_v = Poly::constant(ring, 1);
        for (int k = 2; k <= n; ++k)
            if (varsigma[k] > 0) phi_v = phi_v * Poly::variable(ring, "ch" + std::to_string(k)).pow(varsigma[k]);
        result += c * phi_v;
    }
    return result;
}

// Direct evaluation of I_Phi: each weighted-degree-m homogeneous part of
// Phi is evaluated on the Bochner classes, paired against (lambda x)^{n-m},
// integrated and summed, then scaled by -lambda. Lemma-level identity:
// the result equals sum_varsigma C^Phi_varsigma I_varsigma.
inline Rational I_phi(const KEBase& base, const InvPoly& phi) {
    if (phi.n != base.n) throw std::invalid_argument("I_phi: dimension mismatch");
    const int n = base.n;
    const RingPtr& coh = base.table.ring();
    Poly x = Poly::variable(coh, "x");

    std::vector<Poly> images;
    for (int k = 1; k <= n; ++k) images.push_back(bochner_ch(base, k));
    images.push_back(Poly(coh));  // ch_{n+1} cannot occur under the degree bound

    Rational total = 0;
    for (int m = 0; m <= n; ++m) {
        Poly part = phi.poly.homogeneous_part(m);
        if (part.is_zero()) continue;
        Poly cls = part.substitute(images) * (base.lambda * x).pow(n - m);
        total += integrate(base, cls);
    }
    return -base.lambda * total;
}

}  // namespace cherncr
