#pragma once

#include "kleinian/group.hpp"
#include "kleinian/polynomial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace kleinian {

/// One instantiated classification row: group data and defining polynomial
/// for a concrete family and rank.
struct Table1Entry {
    Family family;
    std::string name;           // Cyclic, Dihedral, ...
    std::string rotation_group; // the SO(3) image, display only
    long long order = 0;        // |G| in SL(2,C)
    Polynomial polynomial;
};

/// One instantiated spectrum row: the multiset exactly as printed, plus the
/// erratum annotation (printed value and derived replacement) when present.
struct Table2Entry {
    Family family;
    std::vector<Rational> printed; // sorted multiset
    std::vector<Rational> derived; // printed with the erratum replacement applied
    std::optional<std::pair<Rational, Rational>> erratum; // (printed value, derived value)
};

/// The two reference tables, parsed from the plain-text fixture files
/// (formats documented in data/ and the README).
class FixtureTables {
public:
    static FixtureTables from_text(const std::string& table1, const std::string& table2);
    /// The copies embedded at build time from data/*.tsv.
    static const FixtureTables& embedded();

    Table1Entry table1(Family family, int rank) const;
    Table2Entry table2(Family family, int rank) const;

private:
    struct Row1 {
        Family family;
        std::string name, rotation_group, order_expr, poly_template;
    };
    struct Row2 {
        Family family;
        std::string entries;
        std::string erratum; // empty when absent
    };
    std::vector<Row1> rows1_;
    std::vector<Row2> rows2_;
};

/// Evaluate a linear expression in n ("24", "n+1", "4n-8").
long long eval_linear(const std::string& expr, int n);

} // namespace kleinian
