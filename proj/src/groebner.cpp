#include "kleinian/groebner.hpp"

#include "kleinian/error.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace kleinian {

std::array<Polynomial, 3> jacobian_ideal(const Polynomial& f) {
    return {f.derivative(0), f.derivative(1), f.derivative(2)};
}

Monomial leading_monomial(const Polynomial& p, const MonomialOrder& order) {
    if (p.is_zero()) throw InternalError("leading monomial of the zero polynomial");
    auto it = p.terms().begin();
    Monomial best = it->first;
    for (++it; it != p.terms().end(); ++it)
        if (order.less(best, it->first)) best = it->first;
    return best;
}

Rational leading_coefficient(const Polynomial& p, const MonomialOrder& order) {
    return p.coeff(leading_monomial(p, order));
}

Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& basis,
                       const MonomialOrder& order) {
    struct Reducer {
        Monomial lm;
        Rational lc;
        const Polynomial* poly;
    };
    std::vector<Reducer> reducers;
    for (const Polynomial& g : basis) {
        if (g.is_zero()) continue;
        Monomial lm = leading_monomial(g, order);
        reducers.push_back({lm, g.coeff(lm), &g});
    }

    Polynomial rest = p;
    Polynomial remainder;
    while (!rest.is_zero()) {
        Monomial lm = leading_monomial(rest, order);
        Rational lc = rest.coeff(lm);
        bool reduced = false;
        for (const Reducer& r : reducers) {
            if (!r.lm.divides(lm)) continue;
            Polynomial shift = Polynomial::monomial(lm / r.lm, lc / r.lc);
            rest = rest - shift * (*r.poly);
            reduced = true;
            break;
        }
        if (!reduced) {
            remainder.add_term(lm, lc);
            rest.add_term(lm, -lc);
        }
    }
    return remainder;
}

namespace {

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
    Monomial lf = leading_monomial(f, order);
    Monomial lg = leading_monomial(g, order);
    Monomial l = lcm(lf, lg);
    Polynomial a = Polynomial::monomial(l / lf, Rational(1) / f.coeff(lf));
    Polynomial b = Polynomial::monomial(l / lg, Rational(1) / g.coeff(lg));
    return a * f - b * g;
}

bool coprime(const Monomial& a, const Monomial& b) {
    for (int i = 0; i < 3; ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

} // namespace

GroebnerBasis buchberger(const std::vector<Polynomial>& generators, const MonomialOrder& order) {
    std::vector<Polynomial> basis;
    for (const Polynomial& g : generators)
        if (!g.is_zero()) basis.push_back(g);
    if (generators.empty()) throw UsageError("buchberger needs at least one generator");

    auto lm = [&](std::size_t i) { return leading_monomial(basis[i], order); };

    std::set<std::pair<std::size_t, std::size_t>> pending;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) pending.insert({i, j});

    while (!pending.empty()) {
        auto [i, j] = *pending.begin();
        pending.erase(pending.begin());

        Monomial li = lm(i), lj = lm(j);
        if (coprime(li, lj)) continue; // product criterion

        // Chain criterion: some k with LM_k | lcm(LM_i, LM_j) whose pairs
        // with both i and j were already handled.
        Monomial l = lcm(li, lj);
        bool chained = false;
        for (std::size_t k = 0; k < basis.size() && !chained; ++k) {
            if (k == i || k == j) continue;
            if (!lm(k).divides(l)) continue;
            auto pik = std::minmax(i, k);
            auto pjk = std::minmax(j, k);
            if (!pending.count({pik.first, pik.second}) && !pending.count({pjk.first, pjk.second}))
                chained = true;
        }
        if (chained) continue;

        Polynomial s = normal_form(s_polynomial(basis[i], basis[j], order), basis, order);
        if (s.is_zero()) continue;
        basis.push_back(s);
        std::size_t n = basis.size() - 1;
        for (std::size_t k = 0; k < n; ++k) pending.insert({k, n});
    }

    // Minimalize: drop any generator whose leading monomial is divisible by
    // another one's.
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        Monomial li = lm(i);
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            Monomial ljm = lm(j);
            if (ljm.divides(li) && (ljm != li || j < i)) redundant = true;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }

    // Inter-reduce tails and normalize to monic generators.
    std::vector<Polynomial> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        Polynomial r = normal_form(minimal[i], others, order);
        if (r.is_zero()) continue;
        reduced.push_back(r * (Rational(1) / r.coeff(leading_monomial(r, order))));
    }

    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
        return order.less(leading_monomial(a, order), leading_monomial(b, order));
    });
    return GroebnerBasis{std::move(reduced), order};
}

bool is_groebner_basis(const GroebnerBasis& gb) {
    for (std::size_t i = 0; i < gb.polys.size(); ++i)
        for (std::size_t j = i + 1; j < gb.polys.size(); ++j) {
            Polynomial s = s_polynomial(gb.polys[i], gb.polys[j], gb.order);
            if (!normal_form(s, gb.polys, gb.order).is_zero()) return false;
        }
    return true;
}

QuotientBasis standard_monomials(const GroebnerBasis& gb) {
    std::vector<Monomial> leads;
    for (const Polynomial& g : gb.polys) leads.push_back(leading_monomial(g, gb.order));

    // The quotient is finite-dimensional iff the leading-term ideal contains
    // a pure power of each variable.
    std::array<std::optional<int>, 3> bound;
    for (const Monomial& m : leads) {
        for (int axis = 0; axis < 3; ++axis) {
            int other1 = m[(axis + 1) % 3], other2 = m[(axis + 2) % 3];
            if (other1 == 0 && other2 == 0) {
                if (!bound[static_cast<std::size_t>(axis)] ||
                    m[axis] < *bound[static_cast<std::size_t>(axis)])
                    bound[static_cast<std::size_t>(axis)] = m[axis];
            }
        }
    }
    for (int axis = 0; axis < 3; ++axis)
        if (!bound[static_cast<std::size_t>(axis)])
            throw UsageError("non-isolated singularity: quotient ring is infinite-dimensional");

    std::vector<Monomial> standard;
    for (int a = 0; a < *bound[0]; ++a)
        for (int b = 0; b < *bound[1]; ++b)
            for (int c = 0; c < *bound[2]; ++c) {
                Monomial m{{a, b, c}};
                bool free = true;
                for (const Monomial& l : leads)
                    if (l.divides(m)) {
                        free = false;
                        break;
                    }
                if (free) standard.push_back(m);
            }
    std::sort(standard.begin(), standard.end(),
              [&](const Monomial& a, const Monomial& b) { return gb.order.less(a, b); });
    return QuotientBasis{std::move(standard), gb};
}

} // namespace kleinian
