#pragma once

#include "kleinian/numeric.hpp"

#include <array>
#include <map>
#include <string>

namespace kleinian {

/// Exponent triple (n_x, n_y, n_z).
struct Monomial {
    std::array<int, 3> e{0, 0, 0};

    int operator[](int i) const { return e[static_cast<std::size_t>(i)]; }
    int& operator[](int i) { return e[static_cast<std::size_t>(i)]; }
    int total_degree() const { return e[0] + e[1] + e[2]; }
    bool divides(const Monomial& m) const {
        return e[0] <= m.e[0] && e[1] <= m.e[1] && e[2] <= m.e[2];
    }
    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        return Monomial{{a.e[0] + b.e[0], a.e[1] + b.e[1], a.e[2] + b.e[2]}};
    }
    /// Componentwise quotient; caller guarantees divisibility.
    friend Monomial operator/(const Monomial& a, const Monomial& b) {
        return Monomial{{a.e[0] - b.e[0], a.e[1] - b.e[1], a.e[2] - b.e[2]}};
    }
    friend Monomial lcm(const Monomial& a, const Monomial& b) {
        return Monomial{{std::max(a.e[0], b.e[0]), std::max(a.e[1], b.e[1]),
                         std::max(a.e[2], b.e[2])}};
    }
    auto operator<=>(const Monomial&) const = default;

    std::string str() const;
};

/// Polynomial over Q in x, y, z. Terms are stored sparsely with no zero
/// coefficients; iteration order is the fixed lexicographic order on
/// exponent triples, independent of any Groebner monomial order in play.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational>;

    Polynomial() = default;
    explicit Polynomial(const Rational& c);
    static Polynomial monomial(const Monomial& m, const Rational& c = Rational(1));
    static Polynomial variable(int axis, int power = 1);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    void add_term(const Monomial& m, const Rational& c);
    Rational coeff(const Monomial& m) const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& rhs) const;
    Polynomial operator-(const Polynomial& rhs) const;
    Polynomial operator*(const Polynomial& rhs) const;
    Polynomial operator*(const Rational& s) const;
    bool operator==(const Polynomial&) const = default;

    /// Formal partial derivative along axis 0, 1 or 2 (x, y, z).
    Polynomial derivative(int axis) const;

    std::string str() const;

private:
    TermMap terms_;
};

/// Parse the documented syntax, e.g. "x^5 + y^3 + z^2", "3x^2y - 1/2*z".
/// Throws UsageError with a position diagnostic on malformed input.
Polynomial parse_polynomial(const std::string& text);

} // namespace kleinian
