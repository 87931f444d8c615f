#pragma once

#include "kleinian/polynomial.hpp"

#include <array>
#include <vector>

namespace kleinian {

/// Weighted-degree order with lexicographic x > y > z tie-break. The weights
/// are the scaled integer weights (a, b, c) of the singularity at hand, so
/// standard monomials come out weight-homogeneous.
struct MonomialOrder {
    std::array<long long, 3> weights{1, 1, 1};

    long long weighted_degree(const Monomial& m) const {
        return weights[0] * m[0] + weights[1] * m[1] + weights[2] * m[2];
    }
    /// Strict order: a comes before b.
    bool less(const Monomial& a, const Monomial& b) const {
        long long da = weighted_degree(a), db = weighted_degree(b);
        if (da != db) return da < db;
        // lex with x > y > z: larger x-exponent means larger monomial
        return a.e < b.e;
    }
};

/// Reduced Groebner basis: monic generators, sorted by ascending leading
/// monomial; canonical for a fixed monomial order.
struct GroebnerBasis {
    std::vector<Polynomial> polys;
    MonomialOrder order;
};

/// Basis of a finite-dimensional quotient ring: all monomials outside the
/// leading-term ideal, in increasing weighted degree.
struct QuotientBasis {
    std::vector<Monomial> standard_monomials;
    GroebnerBasis groebner;
};

/// The three formal partials (d/dx f, d/dy f, d/dz f).
std::array<Polynomial, 3> jacobian_ideal(const Polynomial& f);

Monomial leading_monomial(const Polynomial& p, const MonomialOrder& order);
Rational leading_coefficient(const Polynomial& p, const MonomialOrder& order);

/// Fully reduced normal form of p against the given polynomials.
Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& basis,
                       const MonomialOrder& order);

/// Buchberger's algorithm with the coprime-lcm and chain criteria, followed
/// by inter-reduction to the canonical reduced basis.
GroebnerBasis buchberger(const std::vector<Polynomial>& generators, const MonomialOrder& order);

/// Independent check: every S-polynomial of basis pairs reduces to zero.
bool is_groebner_basis(const GroebnerBasis& gb);

/// Throws UsageError("non-isolated singularity") when the quotient is not
/// finite-dimensional.
QuotientBasis standard_monomials(const GroebnerBasis& gb);

} // namespace kleinian
