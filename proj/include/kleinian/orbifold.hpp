#pragma once

#include "kleinian/group.hpp"
#include "kleinian/polynomial.hpp"
#include "kleinian/spectrum.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace kleinian {

/// Polynomial in x, y with coefficients in a single cyclotomic field; the
/// coefficient order is promoted automatically when values from different
/// fields are combined. This is the coefficient ring the group action needs,
/// since changing variables introduces roots of unity.
class CycPoly2 {
public:
    using TermMap = std::map<std::pair<int, int>, Cyclotomic>;

    CycPoly2() : order_(1) {}
    explicit CycPoly2(const Cyclotomic& constant);
    static CycPoly2 monomial(int ex, int ey, const Cyclotomic& coeff);
    /// From a rational polynomial in x and y; throws UsageError when a term
    /// involves z.
    static CycPoly2 from_rational(const Polynomial& p, int order = 1);

    int order() const { return order_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    CycPoly2 embedded(int new_order) const;
    CycPoly2 operator+(const CycPoly2& rhs) const;
    CycPoly2 operator*(const CycPoly2& rhs) const;
    CycPoly2 operator*(const Cyclotomic& s) const;

    /// The change-of-variables action: for g = [[a,b],[c,d]], substitute
    /// x -> a x + b y and y -> c x + d y.
    CycPoly2 acted_by(const GroupElement& g) const;

    bool operator==(const CycPoly2& rhs) const;
    bool operator!=(const CycPoly2& rhs) const { return !(*this == rhs); }

    std::string str() const;

private:
    void add_term(const std::pair<int, int>& m, const Cyclotomic& c);

    int order_;
    TermMap terms_;
};

/// Element of the skew group algebra: a formal sum of (polynomial, group
/// element) pairs with the product (f1,g1)(f2,g2) = (f1 * f2^{g1}, g1 g2).
struct SkewElement {
    const FiniteSubgroup* group = nullptr;
    std::vector<std::pair<CycPoly2, int>> terms; // (poly, element index), sorted by index
};

SkewElement skew_term(const FiniteSubgroup& group, const CycPoly2& poly, const GroupElement& g);
SkewElement skew_add(const SkewElement& u, const SkewElement& v);
/// Throws UsageError when the operands come from different groups.
SkewElement skew_product(const SkewElement& u, const SkewElement& v);
bool skew_equal(const SkewElement& u, const SkewElement& v);

/// One twisted sector per conjugacy class: the eigenvalues of a class
/// representative are zeta_m^k and zeta_m^{m-k}, recovered exactly by trace
/// matching; the age is the sum of the exponent pair (0 for the identity,
/// 1 for every other class of a subgroup of SL(2,C)).
struct TwistedSector {
    int class_index = 0;
    int element_order = 1;
    std::pair<Rational, Rational> exponents; // smaller first
    Rational age;
};

std::vector<TwistedSector> sector_data(const FiniteSubgroup& group,
                                       const std::vector<ConjugacyClass>& classes);

/// Age-graded dimensions of the orbifold cohomology of A^2 // G: one
/// generator per class in degree 2 * age.
struct OrbifoldCohomology {
    std::map<int, int> graded_dims;
    int total = 0;
};
OrbifoldCohomology orbifold_cohomology(const std::vector<TwistedSector>& sectors);

/// f^g = f for every generator g.
bool invariance_check(const Polynomial& f, const FiniteSubgroup& group);

/// The invariant triples shipped for the A and D families (for other
/// families the classical invariants have degrees beyond what the fixtures
/// carry). Each returned polynomial is validated with invariance_check.
std::vector<Polynomial> invariant_triple(const FiniteSubgroup& group);

/// Structured comparison between the spectrum of the singularity and the
/// twisted-sector exponent data of the matching group, including the
/// one-exponent-per-class matching that is exact for the A family.
struct OrbifoldComparison {
    Int mu;
    int classes = 0;
    std::vector<std::pair<Rational, int>> spectrum;
    std::vector<std::pair<Rational, Rational>> sector_exponents; // nontrivial classes
    bool flattened_match = false;
    bool smaller_match = false;
    bool one_per_class_match = false;
    std::optional<bool> a_family_exact_match; // set only for family A
    std::vector<std::string> notes;
};

OrbifoldComparison compare_spectrum_orbifold(const SpectralPolynomial& sp,
                                             const std::vector<TwistedSector>& sectors,
                                             Family family);

} // namespace kleinian
