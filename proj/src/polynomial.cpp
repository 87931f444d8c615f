#include "kleinian/polynomial.hpp"

#include "kleinian/error.hpp"

#include <cctype>
#include <sstream>

namespace kleinian {

std::string Monomial::str() const {
    static const char* names[3] = {"x", "y", "z"};
    std::string out;
    for (int i = 0; i < 3; ++i) {
        int p = e[static_cast<std::size_t>(i)];
        if (p == 0) continue;
        if (!out.empty()) out += "*";
        out += names[i];
        if (p > 1) out += "^" + std::to_string(p);
    }
    return out.empty() ? "1" : out;
}

Polynomial::Polynomial(const Rational& c) {
    if (c != 0) terms_[Monomial{}] = c;
}

Polynomial Polynomial::monomial(const Monomial& m, const Rational& c) {
    Polynomial p;
    if (c != 0) p.terms_[m] = c;
    return p;
}

Polynomial Polynomial::variable(int axis, int power) {
    Monomial m;
    m[axis] = power;
    return monomial(m);
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational Polynomial::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

Polynomial Polynomial::operator-() const {
    Polynomial out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
    Polynomial out = *this;
    for (const auto& [m, c] : rhs.terms_) out.add_term(m, c);
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
    Polynomial out = *this;
    for (const auto& [m, c] : rhs.terms_) out.add_term(m, -c);
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
    Polynomial out;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : rhs.terms_) out.add_term(ma * mb, ca * cb);
    return out;
}

Polynomial Polynomial::operator*(const Rational& s) const {
    Polynomial out;
    if (s == 0) return out;
    for (const auto& [m, c] : terms_) out.terms_[m] = c * s;
    return out;
}

Polynomial Polynomial::derivative(int axis) const {
    Polynomial out;
    for (const auto& [m, c] : terms_) {
        int p = m[axis];
        if (p == 0) continue;
        Monomial d = m;
        d[axis] = p - 1;
        out.add_term(d, c * p);
    }
    return out;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    // Display highest exponent triples first; storage order is ascending lex.
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rational abs_c = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        bool constant = m == Monomial{};
        if (abs_c != 1 || constant) {
            out << rational_str(abs_c);
            if (!constant) out << "*";
        }
        if (!constant) out << m.str();
    }
    return out.str();
}

namespace {

// Recursive-descent parser for the grammar in the README:
//   poly   := ['-'] term (('+'|'-') term)*
//   term   := coefficient? ('*'? factor)*
//   factor := ('x'|'y'|'z') ('^' natural)?
//   coefficient := natural ('/' natural)?
class PolyParser {
public:
    explicit PolyParser(const std::string& text) : text_(text) {}

    Polynomial parse() {
        Polynomial acc;
        skip_ws();
        bool negative = consume_sign();
        acc = acc + term(negative);
        skip_ws();
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c != '+' && c != '-') fail("expected '+' or '-'");
            ++pos_;
            skip_ws();
            acc = acc + term(c == '-');
            skip_ws();
        }
        return acc;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw UsageError("polynomial parse error at position " + std::to_string(pos_) + ": " +
                         msg + " in '" + text_ + "'");
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool consume_sign() {
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
            bool neg = text_[pos_] == '-';
            ++pos_;
            skip_ws();
            return neg;
        }
        return false;
    }

    Int natural() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected a number");
        return Int(text_.substr(start, pos_ - start));
    }

    Polynomial term(bool negative) {
        Rational coeff(1);
        Monomial mono;
        bool saw_anything = false;
        skip_ws();
        if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            Int num = natural();
            Int den = 1;
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '/') {
                ++pos_;
                skip_ws();
                den = natural();
                if (den == 0) fail("zero denominator");
            }
            coeff = Rational(num, den);
            saw_anything = true;
        }
        while (true) {
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '*') {
                ++pos_;
                skip_ws();
            }
            if (pos_ >= text_.size()) break;
            char c = text_[pos_];
            int axis = c == 'x' ? 0 : c == 'y' ? 1 : c == 'z' ? 2 : -1;
            if (axis < 0) break;
            ++pos_;
            int power = 1;
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '^') {
                ++pos_;
                skip_ws();
                Int p = natural();
                if (p > 4096) fail("exponent too large");
                power = static_cast<int>(p.convert_to<long>());
            }
            mono[axis] += power;
            saw_anything = true;
        }
        if (!saw_anything) fail("expected a term");
        return Polynomial::monomial(mono, negative ? -coeff : coeff);
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

} // namespace

Polynomial parse_polynomial(const std::string& text) { return PolyParser(text).parse(); }

} // namespace kleinian
