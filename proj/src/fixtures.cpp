#include "kleinian/fixtures.hpp"

#include "kleinian/error.hpp"
#include "kleinian/fixture_data.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace kleinian {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string current;
    for (char c : s) {
        if (c == sep) {
            out.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    out.push_back(current);
    return out;
}

} // namespace

long long eval_linear(const std::string& expr, int n) {
    // coefficient*n + constant, written like "24", "n", "n+1", "2n-2", "4n-8"
    std::string s = trim(expr);
    if (s.empty()) throw UsageError("empty fixture expression");
    std::size_t i = 0;
    long long coeff = 0, constant = 0;
    auto read_int = [&]() {
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) throw UsageError("bad fixture expression '" + s + "'");
        return std::stoll(s.substr(start, i - start));
    };
    long long sign = 1;
    if (s[i] == '-') {
        sign = -1;
        ++i;
    }
    if (i < s.size() && s[i] == 'n') {
        coeff = sign;
        ++i;
    } else {
        long long value = read_int();
        if (i < s.size() && s[i] == 'n') {
            coeff = sign * value;
            ++i;
        } else {
            constant = sign * value;
        }
    }
    if (i < s.size()) {
        if (s[i] != '+' && s[i] != '-') throw UsageError("bad fixture expression '" + s + "'");
        long long csign = s[i] == '-' ? -1 : 1;
        ++i;
        constant = csign * read_int();
        if (i != s.size()) throw UsageError("bad fixture expression '" + s + "'");
    }
    return coeff * n + constant;
}

namespace {

/// Substitute {expr} placeholders with their decimal values.
std::string instantiate_template(const std::string& text, int n) {
    std::string out;
    std::size_t i = 0;
    while (i < text.size()) {
        if (text[i] == '{') {
            std::size_t close = text.find('}', i);
            if (close == std::string::npos) throw UsageError("unbalanced '{' in fixture");
            out += std::to_string(eval_linear(text.substr(i + 1, close - i - 1), n));
            i = close + 1;
        } else {
            out += text[i++];
        }
    }
    return out;
}

/// Evaluate "24", "n+1" or "{n+1}".
long long eval_braced(const std::string& expr, int n) {
    std::string s = trim(expr);
    if (s.size() >= 2 && s.front() == '{' && s.back() == '}') s = s.substr(1, s.size() - 2);
    return eval_linear(s, n);
}

/// One spectrum item: a rational with linear-in-n parts, or a range.
void expand_item(const std::string& item, int n, std::vector<Rational>& out) {
    std::string s = trim(item);
    if (s.rfind("range(", 0) == 0) {
        std::size_t close = s.find(')');
        if (close == std::string::npos) throw UsageError("unbalanced range in fixture");
        std::string inside = s.substr(6, close - 6);
        std::string rest = trim(s.substr(close + 1)); // "/{den}"
        if (rest.size() < 2 || rest[0] != '/') throw UsageError("range item needs a denominator");
        long long den = eval_braced(std::string(rest.begin() + 1, rest.end()), n);

        long long step = 1;
        std::size_t step_pos = inside.find("step");
        if (step_pos != std::string::npos) {
            step = eval_linear(trim(inside.substr(step_pos + 4)), n);
            inside = inside.substr(0, step_pos);
        }
        std::size_t dots = inside.find("..");
        if (dots == std::string::npos) throw UsageError("range item needs 'a..b'");
        long long lo = eval_linear(trim(inside.substr(0, dots)), n);
        long long hi = eval_linear(trim(inside.substr(dots + 2)), n);
        if (step <= 0) throw UsageError("range step must be positive");
        for (long long k = lo; k <= hi; k += step) out.emplace_back(k, den);
        return;
    }
    auto parts = split(s, '/');
    if (parts.size() != 2) throw UsageError("bad spectrum item '" + s + "'");
    out.emplace_back(eval_braced(parts[0], n), eval_braced(parts[1], n));
}

Rational eval_single(const std::string& item, int n) {
    std::vector<Rational> v;
    expand_item(item, n, v);
    if (v.size() != 1) throw UsageError("expected a single value, got a range");
    return v.front();
}

std::vector<std::string> data_lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        out.push_back(line);
    }
    return out;
}

} // namespace

FixtureTables FixtureTables::from_text(const std::string& table1, const std::string& table2) {
    FixtureTables f;
    for (const std::string& line : data_lines(table1)) {
        auto cols = split(line, '\t');
        if (cols.size() != 5) throw UsageError("table1 row needs 5 columns: " + line);
        f.rows1_.push_back(Row1{parse_family(trim(cols[0])), trim(cols[1]), trim(cols[2]),
                                trim(cols[3]), trim(cols[4])});
    }
    for (const std::string& line : data_lines(table2)) {
        auto cols = split(line, '\t');
        if (cols.size() != 2 && cols.size() != 3)
            throw UsageError("table2 row needs 2 or 3 columns: " + line);
        f.rows2_.push_back(Row2{parse_family(trim(cols[0])), trim(cols[1]),
                                cols.size() == 3 ? trim(cols[2]) : ""});
    }
    if (f.rows1_.size() != 5 || f.rows2_.size() != 5)
        throw UsageError("fixture tables must have one row per family");
    return f;
}

const FixtureTables& FixtureTables::embedded() {
    static FixtureTables tables =
        FixtureTables::from_text(detail::kTable1Text, detail::kTable2Text);
    return tables;
}

Table1Entry FixtureTables::table1(Family family, int rank) const {
    int n = family_rank(family, rank);
    for (const Row1& row : rows1_) {
        if (row.family != family) continue;
        Table1Entry entry;
        entry.family = family;
        entry.name = row.name;
        entry.rotation_group = row.rotation_group;
        entry.order = eval_linear(row.order_expr, n);
        entry.polynomial = parse_polynomial(instantiate_template(row.poly_template, n));
        return entry;
    }
    throw InternalError("no table1 row for family " + family_name(family));
}

Table2Entry FixtureTables::table2(Family family, int rank) const {
    int n = family_rank(family, rank);
    for (const Row2& row : rows2_) {
        if (row.family != family) continue;
        Table2Entry entry;
        entry.family = family;
        for (const std::string& item : split(row.entries, ';'))
            expand_item(item, n, entry.printed);
        std::sort(entry.printed.begin(), entry.printed.end());
        entry.derived = entry.printed;
        if (!row.erratum.empty()) {
            std::size_t arrow = row.erratum.find("->");
            if (arrow == std::string::npos)
                throw UsageError("erratum needs the form 'printed -> derived'");
            Rational printed_value = eval_single(trim(row.erratum.substr(0, arrow)), n);
            Rational derived_value = eval_single(trim(row.erratum.substr(arrow + 2)), n);
            auto it = std::find(entry.derived.begin(), entry.derived.end(), printed_value);
            if (it == entry.derived.end())
                throw UsageError("erratum value " + rational_str(printed_value) +
                                 " is not in the printed spectrum");
            *it = derived_value;
            std::sort(entry.derived.begin(), entry.derived.end());
            entry.erratum = {printed_value, derived_value};
        }
        return entry;
    }
    throw InternalError("no table2 row for family " + family_name(family));
}

} // namespace kleinian
