#include "kleinian/cyclotomic.hpp"

#include "kleinian/error.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>

namespace kleinian {

namespace {

// ---- integer polynomial helpers (ascending coefficients) ----

int degree(const std::vector<Int>& p) {
    int d = static_cast<int>(p.size()) - 1;
    while (d >= 0 && p[static_cast<std::size_t>(d)] == 0) --d;
    return d;
}

// Exact division of integer polynomials; divisor must be monic.
std::vector<Int> divide_exact(std::vector<Int> num, const std::vector<Int>& den) {
    int dn = degree(num);
    int dd = degree(den);
    if (dd < 0) throw InternalError("division by zero polynomial");
    std::vector<Int> quot(static_cast<std::size_t>(dn - dd + 1), Int(0));
    for (int k = dn; k >= dd; --k) {
        Int c = num[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        quot[static_cast<std::size_t>(k - dd)] = c;
        for (int j = 0; j <= dd; ++j)
            num[static_cast<std::size_t>(k - dd + j)] -= c * den[static_cast<std::size_t>(j)];
    }
    if (degree(num) >= 0) throw InternalError("non-exact cyclotomic polynomial division");
    return quot;
}

// ---- rational polynomial helpers for the euclidean inverse ----

int degree_q(const std::vector<Rational>& p) {
    int d = static_cast<int>(p.size()) - 1;
    while (d >= 0 && p[static_cast<std::size_t>(d)] == 0) --d;
    return d;
}

std::vector<Rational> poly_rem(std::vector<Rational> num, const std::vector<Rational>& den,
                               std::vector<Rational>* quot_out) {
    int dd = degree_q(den);
    if (dd < 0) throw InternalError("polynomial division by zero");
    Rational lead = den[static_cast<std::size_t>(dd)];
    std::vector<Rational> quot;
    int dn = degree_q(num);
    if (dn >= dd) quot.assign(static_cast<std::size_t>(dn - dd + 1), Rational(0));
    for (int k = dn; k >= dd; --k) {
        Rational c = num[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        Rational q = c / lead;
        quot[static_cast<std::size_t>(k - dd)] = q;
        for (int j = 0; j <= dd; ++j)
            num[static_cast<std::size_t>(k - dd + j)] -= q * den[static_cast<std::size_t>(j)];
    }
    num.resize(static_cast<std::size_t>(std::max(0, degree_q(num)) + 1));
    if (quot_out) *quot_out = std::move(quot);
    return num;
}

std::vector<Rational> poly_sub_mul(const std::vector<Rational>& a, const std::vector<Rational>& q,
                                   const std::vector<Rational>& b) {
    // a - q*b
    std::vector<Rational> out = a;
    std::size_t need = q.size() + b.size();
    if (out.size() < need) out.resize(need, Rational(0));
    for (std::size_t i = 0; i < q.size(); ++i) {
        if (q[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] -= q[i] * b[j];
    }
    out.resize(static_cast<std::size_t>(std::max(0, degree_q(out)) + 1));
    return out;
}

} // namespace

const std::vector<Int>& cyclotomic_polynomial(int order) {
    if (order < 1) throw UsageError("cyclotomic polynomial order must be >= 1");
    static std::map<int, std::vector<Int>> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(order);
    if (it != cache.end()) return it->second;

    // Phi_N = (x^N - 1) / prod_{d | N, d < N} Phi_d, computed bottom-up so
    // every divisor is already in the cache.
    std::function<const std::vector<Int>&(int)> get = [&](int n) -> const std::vector<Int>& {
        auto hit = cache.find(n);
        if (hit != cache.end()) return hit->second;
        std::vector<Int> num(static_cast<std::size_t>(n) + 1, Int(0));
        num[0] = -1;
        num[static_cast<std::size_t>(n)] = 1;
        for (int d = 1; d < n; ++d)
            if (n % d == 0) num = divide_exact(std::move(num), get(d));
        return cache.emplace(n, std::move(num)).first->second;
    };
    return get(order);
}

Cyclotomic::Cyclotomic(const Rational& value, int order) : order_(order) {
    if (order < 1) throw UsageError("cyclotomic order must be >= 1");
    coeffs_.assign(static_cast<std::size_t>(euler_phi(order)), Rational(0));
    coeffs_[0] = value;
    if (order == 1) coeffs_[0] = value; // phi(1) = 1, basis {1}
}

Cyclotomic::Cyclotomic(int order, std::vector<Rational> raw) : order_(order) {
    // Reduce an arbitrary polynomial in zeta_N: fold exponents mod N, then
    // take the remainder modulo Phi_N (monic, so the division is exact in Q).
    std::size_t n = static_cast<std::size_t>(order);
    std::vector<Rational> folded(n, Rational(0));
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (raw[i] == 0) continue;
        folded[i % n] += raw[i];
    }
    const std::vector<Int>& phi_poly = cyclotomic_polynomial(order);
    std::size_t deg_phi = phi_poly.size() - 1;
    for (std::size_t k = n; k-- > deg_phi;) {
        Rational c = folded[k];
        if (c == 0) continue;
        folded[k] = 0;
        for (std::size_t j = 0; j < deg_phi; ++j)
            folded[k - deg_phi + j] -= c * Rational(phi_poly[j]);
    }
    folded.resize(static_cast<std::size_t>(euler_phi(order)), Rational(0));
    coeffs_ = std::move(folded);
}

Cyclotomic Cyclotomic::zeta(int order, long long power) {
    if (order < 1) throw UsageError("cyclotomic order must be >= 1");
    long long p = power % order;
    if (p < 0) p += order;
    std::vector<Rational> raw(static_cast<std::size_t>(p) + 1, Rational(0));
    raw[static_cast<std::size_t>(p)] = 1;
    return Cyclotomic(order, std::move(raw));
}

bool Cyclotomic::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

bool Cyclotomic::is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

Rational Cyclotomic::rational_value() const {
    if (!is_rational()) throw InternalError("cyclotomic value is not rational: " + str());
    return coeffs_[0];
}

void Cyclotomic::require_same_order(const Cyclotomic& rhs) const {
    if (order_ != rhs.order_)
        throw UsageError("cyclotomic order mismatch (" + std::to_string(order_) + " vs " +
                         std::to_string(rhs.order_) + "); embed to a common order first");
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& rhs) const {
    require_same_order(rhs);
    Cyclotomic out = *this;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] += rhs.coeffs_[i];
    return out;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& rhs) const {
    require_same_order(rhs);
    Cyclotomic out = *this;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] -= rhs.coeffs_[i];
    return out;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& rhs) const {
    require_same_order(rhs);
    std::size_t n = static_cast<std::size_t>(order_);
    std::vector<Rational> raw(n, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            if (rhs.coeffs_[j] == 0) continue;
            raw[(i + j) % n] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    return Cyclotomic(order_, std::move(raw));
}

Cyclotomic Cyclotomic::operator*(const Rational& s) const {
    Cyclotomic out = *this;
    for (auto& c : out.coeffs_) c *= s;
    return out;
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw UsageError("division by zero in Q(zeta_" + std::to_string(order_) + ")");
    if (is_rational()) return Cyclotomic(Rational(1) / coeffs_[0], order_);

    // Extended euclidean algorithm against Phi_N: u*f + v*Phi = g with g a
    // nonzero constant (Phi_N is irreducible over Q), so f^-1 = u/g.
    std::vector<Rational> r0;
    for (const Int& c : cyclotomic_polynomial(order_)) r0.emplace_back(c);
    std::vector<Rational> r1 = coeffs_;
    r1.resize(static_cast<std::size_t>(std::max(0, degree_q(r1)) + 1));
    std::vector<Rational> u0{Rational(0)}, u1{Rational(1)};
    while (degree_q(r1) > 0) {
        std::vector<Rational> quot;
        std::vector<Rational> rem = poly_rem(r0, r1, &quot);
        std::vector<Rational> u2 = poly_sub_mul(u0, quot, u1);
        r0 = std::move(r1);
        r1 = std::move(rem);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    if (degree_q(r1) < 0) throw InternalError("cyclotomic inverse: gcd with Phi_N not constant");
    Rational g = r1[0];
    std::vector<Rational> inv = u1;
    for (auto& c : inv) c /= g;
    return Cyclotomic(order_, std::move(inv));
}

Cyclotomic Cyclotomic::pow(long long n) const {
    if (n < 0) return inverse().pow(-n);
    Cyclotomic result(Rational(1), order_);
    Cyclotomic base = *this;
    unsigned long long e = static_cast<unsigned long long>(n);
    while (e > 0) {
        if (e & 1ULL) result = result * base;
        base = base * base;
        e >>= 1ULL;
    }
    return result;
}

Cyclotomic Cyclotomic::galois(long long k) const {
    long long kk = k % order_;
    if (kk < 0) kk += order_;
    if (order_ == 1) return *this;
    if (std::gcd(static_cast<long long>(order_), kk) != 1)
        throw UsageError("galois exponent not coprime to the order");
    std::vector<Rational> raw(static_cast<std::size_t>(order_), Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        raw[static_cast<std::size_t>((i * static_cast<std::size_t>(kk)) %
                                     static_cast<std::size_t>(order_))] += coeffs_[i];
    }
    return Cyclotomic(order_, std::move(raw));
}

Cyclotomic Cyclotomic::conjugate() const {
    if (order_ <= 2) return *this;
    return galois(order_ - 1);
}

Cyclotomic Cyclotomic::embedded(int new_order) const {
    if (new_order == order_) return *this;
    if (new_order < 1 || new_order % order_ != 0)
        throw UsageError("embed target order must be a multiple of the current order");
    std::size_t step = static_cast<std::size_t>(new_order / order_);
    std::vector<Rational> raw(static_cast<std::size_t>(new_order), Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) raw[i * step] = coeffs_[i];
    return Cyclotomic(new_order, std::move(raw));
}

std::complex<double> Cyclotomic::to_complex() const {
    std::complex<double> acc(0.0, 0.0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        double angle = 2.0 * std::numbers::pi * static_cast<double>(i) / order_;
        acc += to_double(coeffs_[i]) * std::complex<double>(std::cos(angle), std::sin(angle));
    }
    return acc;
}

std::string Cyclotomic::str() const {
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational& c = coeffs_[i];
        if (c == 0) continue;
        Rational abs_c = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (i == 0) {
            out << rational_str(abs_c);
        } else {
            if (abs_c != 1) out << rational_str(abs_c) << "*";
            out << "z";
            if (i > 1) out << "^" << i;
        }
    }
    if (first) return "0";
    return out.str();
}

std::string Cyclotomic::key() const {
    std::string out = std::to_string(order_) + ":";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) out += ",";
        out += rational_str(coeffs_[i]);
    }
    return out;
}

int common_order(const Cyclotomic& a, const Cyclotomic& b) {
    return static_cast<int>(std::lcm(static_cast<long long>(a.order()),
                                     static_cast<long long>(b.order())));
}

std::pair<Cyclotomic, Cyclotomic> to_common_order(const Cyclotomic& a, const Cyclotomic& b) {
    int m = common_order(a, b);
    return {a.embedded(m), b.embedded(m)};
}

bool equal_values(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.order() == b.order()) return a == b;
    auto [x, y] = to_common_order(a, b);
    return x == y;
}

} // namespace kleinian
