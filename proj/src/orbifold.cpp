#include "kleinian/orbifold.hpp"

#include "kleinian/error.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace kleinian {

CycPoly2::CycPoly2(const Cyclotomic& constant) : order_(constant.order()) {
    if (!constant.is_zero()) terms_[{0, 0}] = constant;
}

CycPoly2 CycPoly2::monomial(int ex, int ey, const Cyclotomic& coeff) {
    CycPoly2 p;
    p.order_ = coeff.order();
    if (!coeff.is_zero()) p.terms_[{ex, ey}] = coeff;
    return p;
}

CycPoly2 CycPoly2::from_rational(const Polynomial& p, int order) {
    CycPoly2 out;
    out.order_ = order;
    for (const auto& [m, c] : p.terms()) {
        if (m[2] != 0) throw UsageError("polynomial involves z; the group acts on x and y only");
        out.terms_[{m[0], m[1]}] = Cyclotomic(c, order);
    }
    return out;
}

CycPoly2 CycPoly2::embedded(int new_order) const {
    CycPoly2 out;
    out.order_ = new_order;
    for (const auto& [m, c] : terms_) out.terms_[m] = c.embedded(new_order);
    return out;
}

void CycPoly2::add_term(const std::pair<int, int>& m, const Cyclotomic& c) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_[m] = c;
        return;
    }
    Cyclotomic sum = it->second + c;
    if (sum.is_zero())
        terms_.erase(it);
    else
        it->second = sum;
}

CycPoly2 CycPoly2::operator+(const CycPoly2& rhs) const {
    int target = static_cast<int>(std::lcm(static_cast<long long>(order_),
                                           static_cast<long long>(rhs.order_)));
    CycPoly2 out = embedded(target);
    for (const auto& [m, c] : rhs.terms_) out.add_term(m, c.embedded(target));
    return out;
}

CycPoly2 CycPoly2::operator*(const CycPoly2& rhs) const {
    int target = static_cast<int>(std::lcm(static_cast<long long>(order_),
                                           static_cast<long long>(rhs.order_)));
    CycPoly2 a = embedded(target), b = rhs.embedded(target);
    CycPoly2 out;
    out.order_ = target;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            out.add_term({ma.first + mb.first, ma.second + mb.second}, ca * cb);
    return out;
}

CycPoly2 CycPoly2::operator*(const Cyclotomic& s) const {
    int target = static_cast<int>(std::lcm(static_cast<long long>(order_),
                                           static_cast<long long>(s.order())));
    CycPoly2 a = embedded(target);
    Cyclotomic scale = s.embedded(target);
    CycPoly2 out;
    out.order_ = target;
    for (const auto& [m, c] : a.terms_) out.add_term(m, c * scale);
    return out;
}

CycPoly2 CycPoly2::acted_by(const GroupElement& g) const {
    int target = static_cast<int>(std::lcm(static_cast<long long>(order_),
                                           static_cast<long long>(g.cyclotomic_order())));
    CycPoly2 self = embedded(target);
    // Points are row vectors, so the change of variables reads the matrix
    // columns: x -> a x + c y, y -> b x + d y. This is the left action that
    // makes the skew product associative.
    Cyclotomic a = g.entry(0, 0).embedded(target), b = g.entry(0, 1).embedded(target);
    Cyclotomic c = g.entry(1, 0).embedded(target), d = g.entry(1, 1).embedded(target);
    CycPoly2 gx = CycPoly2::monomial(1, 0, a) + CycPoly2::monomial(0, 1, c);
    CycPoly2 gy = CycPoly2::monomial(1, 0, b) + CycPoly2::monomial(0, 1, d);

    CycPoly2 out;
    out.order_ = target;
    for (const auto& [m, coeff] : self.terms()) {
        CycPoly2 term(Cyclotomic(Rational(1), target));
        for (int i = 0; i < m.first; ++i) term = term * gx;
        for (int i = 0; i < m.second; ++i) term = term * gy;
        out = out + term * coeff;
    }
    return out;
}

bool CycPoly2::operator==(const CycPoly2& rhs) const {
    if (order_ == rhs.order_) return terms_ == rhs.terms_;
    int target = static_cast<int>(std::lcm(static_cast<long long>(order_),
                                           static_cast<long long>(rhs.order_)));
    return embedded(target).terms_ == rhs.embedded(target).terms_;
}

std::string CycPoly2::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        out << "(" << c.str() << ")";
        if (m.first) out << "*x" << (m.first > 1 ? "^" + std::to_string(m.first) : "");
        if (m.second) out << "*y" << (m.second > 1 ? "^" + std::to_string(m.second) : "");
    }
    return out.str();
}

SkewElement skew_term(const FiniteSubgroup& group, const CycPoly2& poly, const GroupElement& g) {
    SkewElement out;
    out.group = &group;
    if (!poly.is_zero()) out.terms.emplace_back(poly, group.index_of(g));
    return out;
}

namespace {

void insert_term(SkewElement& e, const CycPoly2& poly, int index) {
    auto it = std::lower_bound(e.terms.begin(), e.terms.end(), index,
                               [](const auto& term, int idx) { return term.second < idx; });
    if (it != e.terms.end() && it->second == index) {
        CycPoly2 sum = it->first + poly;
        if (sum.is_zero())
            e.terms.erase(it);
        else
            it->first = sum;
    } else {
        e.terms.insert(it, {poly, index});
    }
}

void require_same_group(const SkewElement& u, const SkewElement& v) {
    if (u.group != v.group)
        throw UsageError("skew algebra elements belong to different groups");
}

} // namespace

SkewElement skew_add(const SkewElement& u, const SkewElement& v) {
    require_same_group(u, v);
    SkewElement out = u;
    for (const auto& [poly, idx] : v.terms) insert_term(out, poly, idx);
    return out;
}

SkewElement skew_product(const SkewElement& u, const SkewElement& v) {
    require_same_group(u, v);
    SkewElement out;
    out.group = u.group;
    const FiniteSubgroup& g = *u.group;
    for (const auto& [f1, i1] : u.terms)
        for (const auto& [f2, i2] : v.terms) {
            const GroupElement& g1 = g.elements[static_cast<std::size_t>(i1)];
            const GroupElement& g2 = g.elements[static_cast<std::size_t>(i2)];
            CycPoly2 twisted = f2.acted_by(g1);
            insert_term(out, f1 * twisted, g.index_of(g1 * g2));
        }
    return out;
}

bool skew_equal(const SkewElement& u, const SkewElement& v) {
    require_same_group(u, v);
    if (u.terms.size() != v.terms.size()) return false;
    for (std::size_t i = 0; i < u.terms.size(); ++i) {
        if (u.terms[i].second != v.terms[i].second) return false;
        if (u.terms[i].first != v.terms[i].first) return false;
    }
    return true;
}

std::vector<TwistedSector> sector_data(const FiniteSubgroup& group,
                                       const std::vector<ConjugacyClass>& classes) {
    int total = 0;
    for (const ConjugacyClass& c : classes) total += c.size;
    if (total != group.order())
        throw UsageError("classes do not partition the given group");
    std::vector<TwistedSector> out;
    for (std::size_t ci = 0; ci < classes.size(); ++ci) {
        const ConjugacyClass& cls = classes[ci];
        int m = cls.element_order;
        bool found = false;
        TwistedSector sector;
        for (int k = 0; 2 * k <= m && !found; ++k) {
            Cyclotomic candidate = Cyclotomic::zeta(m, k) + Cyclotomic::zeta(m, m - k);
            if (!equal_values(candidate, cls.trace)) continue;
            found = true;
            Rational lo(k, m);
            Rational hi = k == 0 ? Rational(0) : Rational(m - k, m);
            sector = TwistedSector{static_cast<int>(ci), m, {lo, hi}, lo + hi};
        }
        if (!found)
            throw InternalError("no eigenvalue exponent matches the trace of class " +
                                std::to_string(ci));
        bool is_identity = cls.element_order == 1;
        if (is_identity != (sector.age == 0) || (!is_identity && sector.age != 1))
            throw InternalError("sector age breaks the determinant-1 complementarity");
        out.push_back(std::move(sector));
    }
    return out;
}

OrbifoldCohomology orbifold_cohomology(const std::vector<TwistedSector>& sectors) {
    OrbifoldCohomology out;
    for (const TwistedSector& s : sectors) {
        Rational degree = s.age * 2;
        if (!is_integer(degree))
            throw InternalError("sector age " + rational_str(s.age) + " is not a half-integer");
        out.graded_dims[static_cast<int>(rational_to_int64(degree))] += 1;
        out.total += 1;
    }
    return out;
}

bool invariance_check(const Polynomial& f, const FiniteSubgroup& group) {
    CycPoly2 poly = CycPoly2::from_rational(f, group.cyclotomic_order);
    for (const GroupElement& g : group.generators)
        if (poly.acted_by(g) != poly) return false;
    return true;
}

std::vector<Polynomial> invariant_triple(const FiniteSubgroup& group) {
    std::vector<Polynomial> triple;
    switch (group.family) {
        case Family::A: {
            int n = group.rank;
            triple = {parse_polynomial("xy"), Polynomial::variable(0, n + 1),
                      Polynomial::variable(1, n + 1)};
            break;
        }
        case Family::D: {
            int m = group.rank - 2;
            Polynomial x2m = Polynomial::variable(0, 2 * m);
            Polynomial y2m = Polynomial::variable(1, 2 * m);
            Polynomial xy = parse_polynomial("xy");
            triple = {parse_polynomial("x^2y^2"), xy * (x2m - y2m), x2m + y2m};
            break;
        }
        default:
            throw UsageError("invariant triples are shipped for the A and D families only");
    }
    for (const Polynomial& f : triple)
        if (!invariance_check(f, group))
            throw InternalError("fixture polynomial " + f.str() + " is not invariant under " +
                                group.label());
    return triple;
}

namespace {

/// Augmenting-path matching: can each sector choose one of its two
/// exponents so that the chosen values tile the spectrum multiset exactly?
bool one_exponent_per_class_matches(const std::vector<std::pair<Rational, Rational>>& pairs,
                                    const std::vector<Rational>& spectrum) {
    if (pairs.size() != spectrum.size()) return false;
    std::size_t n = pairs.size();
    std::vector<std::vector<int>> compatible(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (pairs[i].first == spectrum[j] || pairs[i].second == spectrum[j])
                compatible[i].push_back(static_cast<int>(j));

    std::vector<int> matched_to(n, -1);
    std::vector<bool> visited;
    std::function<bool(std::size_t)> augment = [&](std::size_t i) {
        for (int j : compatible[i]) {
            if (visited[static_cast<std::size_t>(j)]) continue;
            visited[static_cast<std::size_t>(j)] = true;
            if (matched_to[static_cast<std::size_t>(j)] < 0 ||
                augment(static_cast<std::size_t>(matched_to[static_cast<std::size_t>(j)]))) {
                matched_to[static_cast<std::size_t>(j)] = static_cast<int>(i);
                return true;
            }
        }
        return false;
    };
    for (std::size_t i = 0; i < n; ++i) {
        visited.assign(n, false);
        if (!augment(i)) return false;
    }
    return true;
}

} // namespace

OrbifoldComparison compare_spectrum_orbifold(const SpectralPolynomial& sp,
                                             const std::vector<TwistedSector>& sectors,
                                             Family family) {
    OrbifoldComparison out;
    out.mu = sp.total_multiplicity();
    out.classes = static_cast<int>(sectors.size());
    out.spectrum = sp.entries;
    for (const TwistedSector& s : sectors)
        if (s.age != 0) out.sector_exponents.push_back(s.exponents);

    std::vector<Rational> spectrum_values = sp.flatten();

    std::vector<Rational> flattened;
    std::vector<Rational> smaller;
    for (const auto& [lo, hi] : out.sector_exponents) {
        flattened.push_back(lo);
        flattened.push_back(hi);
        smaller.push_back(lo);
    }
    std::sort(flattened.begin(), flattened.end());
    std::sort(smaller.begin(), smaller.end());
    out.flattened_match = flattened == spectrum_values;
    out.smaller_match = smaller == spectrum_values;
    out.one_per_class_match = one_exponent_per_class_matches(out.sector_exponents, spectrum_values);
    if (family == Family::A) out.a_family_exact_match = out.one_per_class_match;

    std::ostringstream dims;
    dims << "dim Omega_f = mu = " << int_str(out.mu) << " while dim H_orb = #classes = "
         << out.classes << "; the extra class is the untwisted sector";
    out.notes.push_back(dims.str());
    out.notes.push_back(std::string("flattened exponent pairs ") +
                        (out.flattened_match ? "equal" : "differ from") +
                        " the spectrum multiset");
    out.notes.push_back(std::string("smaller exponents per class ") +
                        (out.smaller_match ? "equal" : "differ from") +
                        " the spectrum multiset");
    out.notes.push_back(std::string("one exponent per nontrivial class ") +
                        (out.one_per_class_match ? "matches" : "does not match") +
                        " the spectrum multiset");
    if (family == Family::A)
        out.notes.push_back("A-family exact relation {k/(n+1)} = spectrum: " +
                            std::string(*out.a_family_exact_match ? "holds" : "fails"));
    return out;
}

} // namespace kleinian
