#pragma once

#include "kleinian/numeric.hpp"

#include <complex>
#include <string>
#include <vector>

namespace kleinian {

/// Coefficients of the N-th cyclotomic polynomial Phi_N, ascending degree,
/// monic, exact integers. Computed once and cached.
const std::vector<Int>& cyclotomic_polynomial(int order);

/// An element of Q(zeta_N), stored as a polynomial in zeta_N of degree
/// < phi(N), canonically reduced modulo Phi_N. Two equal field elements of
/// the same order always have identical coefficient vectors, so equality,
/// hashing and ordering are plain vector comparisons.
///
/// Arithmetic requires both operands to live in the same order; callers
/// promote with embedded() first (see to_common_order / equal_values).
/// Values are immutable after construction and safe to share across threads.
class Cyclotomic {
public:
    Cyclotomic() : order_(1), coeffs_(1, Rational(0)) {}
    explicit Cyclotomic(const Rational& value, int order = 1);

    /// zeta_order^power (power may be negative).
    static Cyclotomic zeta(int order, long long power = 1);

    int order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const;
    /// Throws InternalError when the value is not in Q.
    Rational rational_value() const;

    Cyclotomic operator-() const;
    Cyclotomic operator+(const Cyclotomic& rhs) const;
    Cyclotomic operator-(const Cyclotomic& rhs) const;
    Cyclotomic operator*(const Cyclotomic& rhs) const;
    Cyclotomic operator*(const Rational& s) const;

    /// Exact multiplicative inverse; throws UsageError on zero.
    Cyclotomic inverse() const;

    Cyclotomic pow(long long n) const;

    /// Complex conjugation, zeta -> zeta^(N-1).
    Cyclotomic conjugate() const;

    /// Galois automorphism zeta -> zeta^k; requires gcd(k, N) = 1.
    Cyclotomic galois(long long k) const;

    /// Image in Q(zeta_M) via zeta_N = zeta_M^(M/N); requires N | M.
    Cyclotomic embedded(int new_order) const;

    /// Numerical value under zeta_N -> exp(2*pi*i/N). Diagnostics only.
    std::complex<double> to_complex() const;

    /// Human-readable form, e.g. "1 - 1/2*z^3" where z denotes zeta_N.
    std::string str() const;

    /// Canonical byte encoding ("N:c0,c1,..."); equal iff values are equal.
    std::string key() const;

    bool operator==(const Cyclotomic& rhs) const {
        return order_ == rhs.order_ && coeffs_ == rhs.coeffs_;
    }
    bool operator!=(const Cyclotomic& rhs) const { return !(*this == rhs); }

private:
    Cyclotomic(int order, std::vector<Rational> raw);
    void require_same_order(const Cyclotomic& rhs) const;

    int order_;
    std::vector<Rational> coeffs_; // length phi(order_)
};

int common_order(const Cyclotomic& a, const Cyclotomic& b);

/// Promote both operands to Q(zeta_lcm(Na,Nb)).
std::pair<Cyclotomic, Cyclotomic> to_common_order(const Cyclotomic& a, const Cyclotomic& b);

/// Equality as field elements, regardless of the orders they are stored in.
bool equal_values(const Cyclotomic& a, const Cyclotomic& b);

} // namespace kleinian
