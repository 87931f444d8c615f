#include "kleinian/spectrum.hpp"

#include "kleinian/error.hpp"

#include <algorithm>

namespace kleinian {

MonomialOrder WeightedHomogeneousPoly::monomial_order() const {
    return MonomialOrder{{to_int64(abc[0]), to_int64(abc[1]), to_int64(abc[2])}};
}

WeightedHomogeneousPoly infer_weights(const Polynomial& f) {
    if (f.is_zero()) throw UsageError("not weighted homogeneous: zero polynomial");

    // Gauss-Jordan on the augmented system (support rows | 1).
    std::vector<std::array<Rational, 4>> rows;
    for (const auto& [m, c] : f.terms())
        rows.push_back({Rational(m[0]), Rational(m[1]), Rational(m[2]), Rational(1)});

    std::size_t pivot_row = 0;
    std::array<int, 3> pivot_col_of{-1, -1, -1};
    for (int col = 0; col < 3 && pivot_row < rows.size(); ++col) {
        std::size_t sel = pivot_row;
        while (sel < rows.size() && rows[sel][static_cast<std::size_t>(col)] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[pivot_row], rows[sel]);
        Rational inv = Rational(1) / rows[pivot_row][static_cast<std::size_t>(col)];
        for (auto& v : rows[pivot_row]) v *= inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == pivot_row) continue;
            Rational factor = rows[r][static_cast<std::size_t>(col)];
            if (factor == 0) continue;
            for (std::size_t k = 0; k < 4; ++k) rows[r][k] -= factor * rows[pivot_row][k];
        }
        pivot_col_of[static_cast<std::size_t>(col)] = static_cast<int>(pivot_row);
        ++pivot_row;
    }
    for (std::size_t r = pivot_row; r < rows.size(); ++r)
        if (rows[r][3] != 0)
            throw UsageError("not weighted homogeneous: support equations are inconsistent");
    if (pivot_row < 3) {
        int free_vars = 0;
        for (int c = 0; c < 3; ++c)
            if (pivot_col_of[static_cast<std::size_t>(c)] < 0) ++free_vars;
        throw UsageError("weights not unique: support determines a " + std::to_string(free_vars) +
                         "-parameter family of weight vectors");
    }

    std::array<Rational, 3> w;
    for (int c = 0; c < 3; ++c)
        w[static_cast<std::size_t>(c)] =
            rows[static_cast<std::size_t>(pivot_col_of[static_cast<std::size_t>(c)])][3];
    for (const Rational& wi : w)
        if (wi <= 0 || wi >= 1)
            throw UsageError("not weighted homogeneous: weight " + rational_str(wi) +
                             " outside (0,1)");

    Int d = common_denominator({w.begin(), w.end()});
    std::array<Int, 3> abc;
    for (int i = 0; i < 3; ++i) {
        Rational scaled = w[static_cast<std::size_t>(i)] * Rational(d);
        abc[static_cast<std::size_t>(i)] = numerator(scaled);
    }
    // Recheck the defining identity f(t^a x, t^b y, t^c z) = t^d f on every
    // support monomial.
    for (const auto& [m, c] : f.terms()) {
        Int deg = abc[0] * m[0] + abc[1] * m[1] + abc[2] * m[2];
        if (deg != d) throw InternalError("weight inference produced a non-homogeneous grading");
    }
    return WeightedHomogeneousPoly{f, w, d, abc};
}

Int milnor_number_formula(const WeightedHomogeneousPoly& w) {
    Rational mu(1);
    for (int i = 0; i < 3; ++i) {
        const Int& a = w.abc[static_cast<std::size_t>(i)];
        mu *= Rational(w.d - a, a);
    }
    if (!is_integer(mu) || mu <= 0)
        throw InternalError("Milnor number formula gave " + rational_str(mu) +
                            ", not a positive integer");
    return numerator(mu);
}

std::vector<SpectralDatum> spectral_data(const WeightedHomogeneousPoly& w,
                                         const QuotientBasis& basis) {
    std::vector<SpectralDatum> out;
    for (const Monomial& m : basis.standard_monomials) {
        Rational n(0);
        for (int i = 0; i < 3; ++i)
            n += w.weights[static_cast<std::size_t>(i)] * Rational(m[i] + 1);
        out.push_back(SpectralDatum{m, n, n - 1});
    }
    return out;
}

Int SpectralPolynomial::total_multiplicity() const {
    Int t = 0;
    for (const auto& [lambda, m] : entries) t += m;
    return t;
}

std::vector<Rational> SpectralPolynomial::flatten() const {
    std::vector<Rational> out;
    for (const auto& [lambda, m] : entries)
        for (int i = 0; i < m; ++i) out.push_back(lambda);
    return out;
}

SpectralPolynomial spectrum(const WeightedHomogeneousPoly& w, const QuotientBasis& basis,
                            bool raw_grading) {
    Int mu = milnor_number_formula(w);
    if (Int(basis.standard_monomials.size()) != mu)
        throw InternalError("standard monomial count " +
                            std::to_string(basis.standard_monomials.size()) +
                            " does not match the Milnor number " + int_str(mu));
    std::map<Rational, int> mult;
    for (const SpectralDatum& s : spectral_data(w, basis))
        mult[raw_grading ? s.n_alpha : s.shifted] += 1;
    SpectralPolynomial sp;
    sp.entries.assign(mult.begin(), mult.end());
    return sp;
}

MonodromyEigenvalues monodromy_eigenvalues(const SpectralPolynomial& sp, const Int& d) {
    MonodromyEigenvalues out;
    out.d = d;
    std::map<Int, int> counts;
    for (const auto& [lambda, m] : sp.entries) {
        // exponent of e^{2 pi i lambda}, reduced mod 1
        Rational frac = lambda - Rational(boost::multiprecision::numerator(lambda) /
                                          boost::multiprecision::denominator(lambda));
        if (frac < 0) frac += 1;
        Int den = denominator(frac);
        if (d % den != 0)
            throw InternalError("spectral number " + rational_str(lambda) +
                                " has denominator not dividing d = " + int_str(d));
        Int k = numerator(frac) * (d / den);
        counts[k] += m;
    }
    out.exponents.assign(counts.begin(), counts.end());
    return out;
}

HodgeFiltration hodge_filtration(const std::vector<SpectralDatum>& data) {
    HodgeFiltration out;
    for (int p = 0; p <= 3; ++p) {
        std::vector<SpectralDatum> piece;
        for (const SpectralDatum& s : data)
            if (s.n_alpha <= Rational(3 - p)) piece.push_back(s);
        out.pieces[p] = std::move(piece);
    }
    return out;
}

std::map<int, int> HodgeFiltration::graded_dims() const {
    std::map<int, int> dims;
    for (auto it = pieces.begin(); it != pieces.end(); ++it) {
        auto next = std::next(it);
        std::size_t higher = next == pieces.end() ? 0 : next->second.size();
        dims[it->first] = static_cast<int>(it->second.size() - higher);
    }
    return dims;
}

SingularityAnalysis analyze_singularity(const Polynomial& f, bool raw_grading) {
    SingularityAnalysis out;
    out.weighted = infer_weights(f);
    MonomialOrder order = out.weighted.monomial_order();
    std::vector<Polynomial> gens;
    for (const Polynomial& g : jacobian_ideal(f))
        if (!g.is_zero()) gens.push_back(g);
    if (gens.empty()) throw UsageError("zero Jacobian ideal");
    out.basis = standard_monomials(buchberger(gens, order));
    out.mu = milnor_number_formula(out.weighted);
    out.data = spectral_data(out.weighted, out.basis);
    out.sp = spectrum(out.weighted, out.basis, raw_grading);
    return out;
}

} // namespace kleinian
