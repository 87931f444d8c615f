#include "kleinian/numeric.hpp"

#include "kleinian/error.hpp"

#include <boost/multiprecision/integer.hpp>

#include <limits>

namespace kleinian {

Rational parse_rational(const std::string& text) {
    auto parse_int = [](const std::string& s) -> Int {
        if (s.empty()) throw UsageError("empty integer in rational literal");
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) throw UsageError("bad integer '" + s + "'");
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i])))
                throw UsageError("bad integer '" + s + "'");
        return Int(s);
    };
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(parse_int(text));
    Int num = parse_int(text.substr(0, slash));
    Int den = parse_int(text.substr(slash + 1));
    if (den == 0) throw UsageError("zero denominator in '" + text + "'");
    return Rational(num, den);
}

std::string rational_str(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

std::string int_str(const Int& n) { return n.str(); }

long long to_int64(const Int& n) {
    if (n > std::numeric_limits<long long>::max() || n < std::numeric_limits<long long>::min())
        throw InternalError("integer overflows 64 bits: " + n.str());
    return n.convert_to<long long>();
}

long long rational_to_int64(const Rational& r) {
    if (denominator(r) != 1)
        throw InternalError("expected integer, got " + rational_str(r));
    return to_int64(numerator(r));
}

bool is_integer(const Rational& r) { return denominator(r) == 1; }

double to_double(const Rational& r) { return r.convert_to<double>(); }

Int gcd_int(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

Int lcm_int(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

Int common_denominator(const std::vector<Rational>& v) {
    Int d = 1;
    for (const auto& r : v) d = lcm_int(d, denominator(r));
    if (d < 0) d = -d;
    return d;
}

int euler_phi(int n) {
    if (n <= 0) throw UsageError("euler_phi of nonpositive argument");
    int result = n;
    int m = n;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

} // namespace kleinian
