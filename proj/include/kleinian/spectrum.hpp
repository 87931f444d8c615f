#pragma once

#include "kleinian/groebner.hpp"
#include "kleinian/polynomial.hpp"

#include <map>
#include <vector>

namespace kleinian {

/// A weighted homogeneous polynomial: every support monomial n satisfies
/// w_x n_x + w_y n_y + w_z n_z = 1 exactly. d is the smallest common
/// denominator of the weights and (a, b, c) = d * (w_x, w_y, w_z), so
/// f(t^a x, t^b y, t^c z) = t^d f(x, y, z).
struct WeightedHomogeneousPoly {
    Polynomial poly;
    std::array<Rational, 3> weights;
    Int d;
    std::array<Int, 3> abc;

    MonomialOrder monomial_order() const;
};

/// Solve the support hyperplane system for the weights.
/// Throws UsageError("not weighted homogeneous") when the system has no
/// solution or a weight falls outside (0,1), and UsageError("weights not
/// unique...") when the support leaves the weights underdetermined.
WeightedHomogeneousPoly infer_weights(const Polynomial& f);

/// mu = (d-a)/a * (d-b)/b * (d-c)/c, exactly. Throws InternalError when the
/// product is not a positive integer.
Int milnor_number_formula(const WeightedHomogeneousPoly& w);

/// One basis monomial of the Milnor algebra together with its grading
/// n(alpha) = w_x(a_x+1) + w_y(a_y+1) + w_z(a_z+1) and the shifted value
/// n(alpha) - 1 used for the spectrum.
struct SpectralDatum {
    Monomial monomial;
    Rational n_alpha;
    Rational shifted;
};

/// Sorted multiset of spectral numbers with multiplicities.
struct SpectralPolynomial {
    std::vector<std::pair<Rational, int>> entries;

    Int total_multiplicity() const;
    std::vector<Rational> flatten() const;
};

std::vector<SpectralDatum> spectral_data(const WeightedHomogeneousPoly& w,
                                         const QuotientBasis& basis);

/// The spectrum as the graded dimensions of the monomial basis. Reports the
/// shifted grading n(alpha) - 1 by default (the convention of the reference
/// tables); pass raw_grading = true for the unshifted n(alpha).
/// Throws InternalError when |basis| differs from the closed-formula mu.
SpectralPolynomial spectrum(const WeightedHomogeneousPoly& w, const QuotientBasis& basis,
                            bool raw_grading = false);

/// Monodromy eigenvalue exponents: each spectral number lambda contributes
/// e^{2 pi i lambda}, recorded exactly as k/d with 0 <= k < d. Throws
/// InternalError when some lambda's denominator does not divide d.
struct MonodromyEigenvalues {
    Int d;
    std::vector<std::pair<Int, int>> exponents; // (k, multiplicity), sorted by k
};
MonodromyEigenvalues monodromy_eigenvalues(const SpectralPolynomial& sp, const Int& d);

/// Hodge filtration for the surface case n = 2: F^p is spanned by the data
/// with n(alpha) <= 3 - p, a decreasing filtration with F^0 everything.
struct HodgeFiltration {
    std::map<int, std::vector<SpectralDatum>> pieces; // p = 0..3
    std::map<int, int> graded_dims() const;
};
HodgeFiltration hodge_filtration(const std::vector<SpectralDatum>& data);

/// Full pipeline for one polynomial: weights, Groebner basis of the Jacobian
/// ideal under the weighted order, standard monomials, both Milnor-number
/// routes, spectral data.
struct SingularityAnalysis {
    WeightedHomogeneousPoly weighted;
    QuotientBasis basis;
    Int mu;
    std::vector<SpectralDatum> data;
    SpectralPolynomial sp;
};
SingularityAnalysis analyze_singularity(const Polynomial& f, bool raw_grading = false);

} // namespace kleinian
