#include "kleinian/group.hpp"

#include "kleinian/error.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace kleinian {

std::string family_name(Family f) {
    switch (f) {
        case Family::A: return "A";
        case Family::D: return "D";
        case Family::E6: return "E6";
        case Family::E7: return "E7";
        case Family::E8: return "E8";
    }
    throw InternalError("unknown family");
}

Family parse_family(const std::string& name) {
    if (name == "A" || name == "a") return Family::A;
    if (name == "D" || name == "d") return Family::D;
    if (name == "E6" || name == "e6") return Family::E6;
    if (name == "E7" || name == "e7") return Family::E7;
    if (name == "E8" || name == "e8") return Family::E8;
    throw UsageError("unknown family '" + name + "' (expected A, D, E6, E7 or E8)");
}

int family_rank(Family f, int rank) {
    constexpr int kMaxRank = 40;
    switch (f) {
        case Family::A:
            if (rank < 1) throw UsageError("family A needs rank >= 1");
            if (rank > kMaxRank) throw UsageError("family A is supported up to rank 40");
            return rank;
        case Family::D:
            if (rank < 4) throw UsageError("family D needs rank >= 4");
            if (rank > kMaxRank) throw UsageError("family D is supported up to rank 40");
            return rank;
        case Family::E6:
            if (rank != 0 && rank != 6) throw UsageError("family E6 has fixed rank 6");
            return 6;
        case Family::E7:
            if (rank != 0 && rank != 7) throw UsageError("family E7 has fixed rank 7");
            return 7;
        case Family::E8:
            if (rank != 0 && rank != 8) throw UsageError("family E8 has fixed rank 8");
            return 8;
    }
    throw InternalError("unknown family");
}

GroupElement::GroupElement(Cyclotomic a, Cyclotomic b, Cyclotomic c, Cyclotomic d)
    : entries_{std::move(a), std::move(b), std::move(c), std::move(d)} {
    for (int i = 1; i < 4; ++i)
        if (entries_[static_cast<std::size_t>(i)].order() != entries_[0].order())
            throw InternalError("matrix entries live in different cyclotomic orders");
}

GroupElement GroupElement::identity(int cyclotomic_order) {
    Cyclotomic one(Rational(1), cyclotomic_order);
    Cyclotomic zero(Rational(0), cyclotomic_order);
    return GroupElement(one, zero, zero, one);
}

GroupElement GroupElement::operator*(const GroupElement& rhs) const {
    const auto& a = entries_;
    const auto& b = rhs.entries_;
    return GroupElement(a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
                        a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]);
}

GroupElement GroupElement::inverse() const {
    return GroupElement(entries_[3], -entries_[1], -entries_[2], entries_[0]);
}

Cyclotomic GroupElement::det() const {
    return entries_[0] * entries_[3] - entries_[1] * entries_[2];
}

Cyclotomic GroupElement::trace() const { return entries_[0] + entries_[3]; }

bool GroupElement::is_identity() const { return *this == identity(cyclotomic_order()); }

GroupElement GroupElement::embedded(int new_order) const {
    return GroupElement(entries_[0].embedded(new_order), entries_[1].embedded(new_order),
                        entries_[2].embedded(new_order), entries_[3].embedded(new_order));
}

std::string GroupElement::key() const {
    return entries_[0].key() + "|" + entries_[1].key() + "|" + entries_[2].key() + "|" +
           entries_[3].key();
}

std::string GroupElement::str() const {
    return "[[" + entries_[0].str() + ", " + entries_[1].str() + "], [" + entries_[2].str() +
           ", " + entries_[3].str() + "]]";
}

int FiniteSubgroup::index_of(const GroupElement& g) const {
    auto it = index.find(g.key());
    if (it == index.end()) throw InternalError("element is not a member of " + label());
    return it->second;
}

std::string FiniteSubgroup::label() const {
    switch (family) {
        case Family::A:
        case Family::D: return family_name(family) + "(" + std::to_string(rank) + ")";
        default: return family_name(family);
    }
}

namespace {

constexpr int kClosureBound = 1000;

std::vector<GroupElement> generators_for(Family family, int rank, int& cyclotomic_order,
                                         int& expected_order) {
    switch (family) {
        case Family::A: {
            int n = rank;
            cyclotomic_order = n + 1;
            expected_order = n + 1;
            Cyclotomic zero(Rational(0), cyclotomic_order);
            return {GroupElement(Cyclotomic::zeta(cyclotomic_order), zero, zero,
                                 Cyclotomic::zeta(cyclotomic_order, -1))};
        }
        case Family::D: {
            int m = rank - 2;
            cyclotomic_order = 2 * m;
            expected_order = 4 * m;
            Cyclotomic zero(Rational(0), cyclotomic_order);
            Cyclotomic one(Rational(1), cyclotomic_order);
            GroupElement a(Cyclotomic::zeta(cyclotomic_order), zero, zero,
                           Cyclotomic::zeta(cyclotomic_order, -1));
            GroupElement b(zero, one, -one, zero);
            return {a, b};
        }
        case Family::E6:
        case Family::E7: {
            // Binary tetrahedral group as the 24 unit Hurwitz quaternions,
            // generated by the quaternions i, j and (1 + i + j + k)/2.
            cyclotomic_order = family == Family::E6 ? 4 : 8;
            expected_order = family == Family::E6 ? 24 : 48;
            int N = cyclotomic_order;
            Cyclotomic zero(Rational(0), N);
            Cyclotomic one(Rational(1), N);
            Cyclotomic i = family == Family::E6 ? Cyclotomic::zeta(4) : Cyclotomic::zeta(8, 2);
            Rational half(1, 2);
            GroupElement qi(i, zero, zero, -i);
            GroupElement qj(zero, one, -one, zero);
            GroupElement omega((one + i) * half, (one + i) * half, (-one + i) * half,
                               (one - i) * half);
            if (family == Family::E6) return {qi, qj, omega};
            // Binary octahedral: adjoin an eighth root of unity pair.
            GroupElement s8(Cyclotomic::zeta(8), zero, zero, Cyclotomic::zeta(8, -1));
            return {qi, qj, omega, s8};
        }
        case Family::E8: {
            // Binary icosahedral group over Q(zeta_5), with 1/sqrt(5)
            // expressed exactly as (2(zeta + zeta^4) + 1)/5.
            cyclotomic_order = 5;
            expected_order = 120;
            Cyclotomic zero(Rational(0), 5);
            Cyclotomic z1 = Cyclotomic::zeta(5), z2 = Cyclotomic::zeta(5, 2),
                       z3 = Cyclotomic::zeta(5, 3), z4 = Cyclotomic::zeta(5, 4);
            GroupElement s(-z3, zero, zero, -z2);
            Cyclotomic inv_sqrt5 = (z1 + z4) * Rational(2, 5) + Cyclotomic(Rational(1, 5), 5);
            GroupElement t(inv_sqrt5 * (-(z1 - z4)), inv_sqrt5 * (z2 - z3),
                           inv_sqrt5 * (z2 - z3), inv_sqrt5 * (z1 - z4));
            return {s, t};
        }
    }
    throw InternalError("unknown family");
}

} // namespace

FiniteSubgroup build_group(Family family, int rank) {
    FiniteSubgroup g;
    g.family = family;
    g.rank = family_rank(family, rank);

    int expected_order = 0;
    g.generators = generators_for(family, g.rank, g.cyclotomic_order, expected_order);

    Cyclotomic one(Rational(1), g.cyclotomic_order);
    for (const GroupElement& gen : g.generators)
        if (gen.det() != one)
            throw InternalError(g.label() + ": generator with determinant != 1: " + gen.str());

    // Breadth-first closure under right multiplication by the generators.
    GroupElement id = GroupElement::identity(g.cyclotomic_order);
    g.elements.push_back(id);
    g.index.emplace(id.key(), 0);
    std::deque<int> frontier{0};
    while (!frontier.empty()) {
        int current = frontier.front();
        frontier.pop_front();
        for (const GroupElement& gen : g.generators) {
            GroupElement next = g.elements[static_cast<std::size_t>(current)] * gen;
            std::string key = next.key();
            if (g.index.count(key)) continue;
            if (static_cast<int>(g.elements.size()) >= kClosureBound)
                throw InternalError(g.label() + ": closure exceeded " +
                                    std::to_string(kClosureBound) +
                                    " elements; generators are inconsistent");
            int idx = static_cast<int>(g.elements.size());
            g.elements.push_back(std::move(next));
            g.index.emplace(std::move(key), idx);
            frontier.push_back(idx);
        }
    }

    if (g.order() != expected_order)
        throw InternalError(g.label() + ": closure produced " + std::to_string(g.order()) +
                            " elements, expected " + std::to_string(expected_order));
    return g;
}

int element_order(const FiniteSubgroup& group, const GroupElement& g) {
    GroupElement id = GroupElement::identity(g.cyclotomic_order());
    GroupElement power = g;
    for (int m = 1; m <= group.order(); ++m) {
        if (power == id) return m;
        power = power * g;
    }
    throw InternalError("element order exceeds the group order");
}

std::vector<ConjugacyClass> conjugacy_classes(const FiniteSubgroup& group) {
    int n = group.order();
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::vector<ConjugacyClass> classes;

    for (int i = 0; i < n; ++i) {
        if (seen[static_cast<std::size_t>(i)]) continue;
        const GroupElement& g = group.elements[static_cast<std::size_t>(i)];
        std::vector<int> members;
        for (const GroupElement& h : group.elements) {
            int j = group.index_of(h * g * h.inverse());
            if (!seen[static_cast<std::size_t>(j)]) {
                seen[static_cast<std::size_t>(j)] = true;
                members.push_back(j);
            }
        }
        std::sort(members.begin(), members.end());
        ConjugacyClass cls{group.elements[static_cast<std::size_t>(members.front())],
                           members,
                           static_cast<int>(members.size()),
                           element_order(group, g),
                           g.trace()};
        classes.push_back(std::move(cls));
    }

    std::sort(classes.begin(), classes.end(), [&](const ConjugacyClass& a, const ConjugacyClass& b) {
        if (a.element_order != b.element_order) return a.element_order < b.element_order;
        if (a.size != b.size) return a.size < b.size;
        if (auto c = a.trace.key().compare(b.trace.key()); c != 0) return c < 0;
        return a.representative.key() < b.representative.key();
    });

    int total = 0;
    for (const ConjugacyClass& c : classes) {
        total += c.size;
        if (group.order() % c.size != 0)
            throw InternalError("class size " + std::to_string(c.size) + " does not divide |G|");
    }
    if (total != group.order()) throw InternalError("conjugacy classes do not partition the group");
    return classes;
}

int group_exponent(const std::vector<ConjugacyClass>& classes) {
    int e = 1;
    for (const ConjugacyClass& c : classes) e = std::lcm(e, c.element_order);
    return e;
}

std::vector<int> element_class_map(const FiniteSubgroup& group,
                                   const std::vector<ConjugacyClass>& classes) {
    std::vector<int> map(static_cast<std::size_t>(group.order()), -1);
    for (std::size_t c = 0; c < classes.size(); ++c)
        for (int idx : classes[c].member_indices)
            map[static_cast<std::size_t>(idx)] = static_cast<int>(c);
    for (int m : map)
        if (m < 0) throw InternalError("element without a conjugacy class");
    return map;
}

} // namespace kleinian
