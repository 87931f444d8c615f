#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace kleinian {

// Arbitrary-precision integers and rationals. cpp_rational keeps values
// normalized (lowest terms, positive denominator), which every equality
// check in this library relies on.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parse "p", "-p" or "p/q". Throws UsageError on malformed input or q = 0.
Rational parse_rational(const std::string& text);

/// Canonical text form: "3", "-3", "2/5". Inverse of parse_rational.
std::string rational_str(const Rational& r);

std::string int_str(const Int& n);

/// Exact conversion to a machine integer; throws InternalError if the value
/// does not fit or is not an integer.
long long to_int64(const Int& n);
long long rational_to_int64(const Rational& r);

bool is_integer(const Rational& r);

double to_double(const Rational& r);

Int gcd_int(const Int& a, const Int& b);
Int lcm_int(const Int& a, const Int& b);

/// lcm of the denominators of a rational vector (the smallest common
/// denominator), always positive.
Int common_denominator(const std::vector<Rational>& v);

int euler_phi(int n);

} // namespace kleinian
