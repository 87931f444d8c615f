#include "kleinian/roots.hpp"

#include "kleinian/cyclotomic.hpp"
#include "kleinian/error.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>

namespace kleinian {

namespace {

IntMatrix identity_matrix(int n) {
    IntMatrix m(static_cast<std::size_t>(n), std::vector<Int>(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    return m;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
    std::size_t n = a.size();
    IntMatrix out(n, std::vector<Int>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

Int leading_principal_minor(const IntMatrix& m, int k) {
    IntMatrix sub(static_cast<std::size_t>(k), std::vector<Int>(static_cast<std::size_t>(k)));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            sub[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    return determinant(sub);
}

} // namespace

CartanMatrix cartan_matrix(const Graph& diagram) {
    int n = diagram.vertex_count();
    CartanMatrix c;
    c.entries = identity_matrix(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j)
                c.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 2;
            else
                c.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    -Int(diagram.adjacency[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
        }
    return c;
}

Int determinant(const IntMatrix& input) {
    IntMatrix m = input;
    std::size_t n = m.size();
    if (n == 0) return 1;
    Int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = num / prev; // Bareiss: division is exact
            }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

bool positive_definite(const CartanMatrix& c) {
    for (int k = 1; k <= c.rank(); ++k)
        if (leading_principal_minor(c.entries, k) <= 0) return false;
    return true;
}

bool extended_cartan_kernel_is_marks(const Graph& extended) {
    if (!extended.has_marks()) throw UsageError("kernel check needs vertex marks");
    CartanMatrix c = cartan_matrix(extended);
    int n = c.rank();
    // C * marks = 0
    for (int i = 0; i < n; ++i) {
        Int acc = 0;
        for (int j = 0; j < n; ++j)
            acc += c.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                   extended.marks[static_cast<std::size_t>(j)];
        if (acc != 0) return false;
    }
    if (determinant(c.entries) != 0) return false;
    // rank defect exactly one: some principal (n-1)-minor is nonzero
    IntMatrix sub(static_cast<std::size_t>(n - 1), std::vector<Int>(static_cast<std::size_t>(n - 1)));
    for (int i = 0; i + 1 < n; ++i)
        for (int j = 0; j + 1 < n; ++j)
            sub[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                c.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    return determinant(sub) != 0;
}

std::vector<IntMatrix> simple_reflections(const CartanMatrix& c) {
    int n = c.rank();
    std::vector<IntMatrix> out;
    for (int i = 0; i < n; ++i) {
        IntMatrix m = identity_matrix(n);
        for (int j = 0; j < n; ++j)
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -=
                c.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        out.push_back(std::move(m));
    }
    return out;
}

CoxeterElement coxeter_element(const DynkinDiagram& diagram, const std::vector<int>& vertex_order) {
    if (diagram.extended)
        throw UsageError("Coxeter elements are formed on the non-extended diagram");
    CartanMatrix c = cartan_matrix(diagram.graph);
    int n = c.rank();
    std::vector<int> order = vertex_order;
    if (order.empty()) {
        order.resize(static_cast<std::size_t>(n));
        std::iota(order.begin(), order.end(), 0);
    }
    if (static_cast<int>(order.size()) != n) throw UsageError("vertex order has the wrong length");
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : order) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
            throw UsageError("vertex order is not a permutation");
        seen[static_cast<std::size_t>(v)] = true;
    }

    std::vector<IntMatrix> refl = simple_reflections(c);
    IntMatrix t = identity_matrix(n);
    for (int v : order) t = multiply(t, refl[static_cast<std::size_t>(v)]);

    constexpr int kOrderBound = 60;
    IntMatrix power = t;
    IntMatrix id = identity_matrix(n);
    int h = 0;
    for (int k = 1; k <= kOrderBound; ++k) {
        if (power == id) {
            h = k;
            break;
        }
        power = multiply(power, t);
    }
    if (h == 0)
        throw InternalError("Coxeter element order exceeds the bound of " +
                            std::to_string(kOrderBound));
    return CoxeterElement{std::move(t), h};
}

std::vector<Int> characteristic_polynomial(const IntMatrix& m) {
    int n = static_cast<int>(m.size());
    // Evaluate det(tI - M) at t = 0..n and interpolate; the result is monic
    // of degree n with integer coefficients.
    std::vector<Rational> xs, ys;
    for (int t = 0; t <= n; ++t) {
        IntMatrix shifted = m;
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j)
                shifted[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    -m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            shifted[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] += t;
        }
        xs.emplace_back(t);
        ys.emplace_back(determinant(shifted));
    }

    // Lagrange interpolation over Q
    std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1, Rational(0));
    for (std::size_t i = 0; i < xs.size(); ++i) {
        std::vector<Rational> term{Rational(1)};
        Rational denom(1);
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (i == j) continue;
            // term *= (x - xs[j])
            std::vector<Rational> next(term.size() + 1, Rational(0));
            for (std::size_t k = 0; k < term.size(); ++k) {
                next[k + 1] += term[k];
                next[k] -= term[k] * xs[j];
            }
            term = std::move(next);
            denom *= xs[i] - xs[j];
        }
        Rational scale = ys[i] / denom;
        for (std::size_t k = 0; k < term.size(); ++k) coeffs[k] += term[k] * scale;
    }

    std::vector<Int> out;
    for (const Rational& c : coeffs) {
        if (!is_integer(c)) throw InternalError("characteristic polynomial is not integral");
        out.push_back(numerator(c));
    }
    if (out.back() != 1) throw InternalError("characteristic polynomial is not monic");
    return out;
}

namespace {

/// Divide num by den exactly (both ascending, den monic); returns empty when
/// the division leaves a remainder.
std::optional<std::vector<Int>> try_divide(const std::vector<Int>& num,
                                           const std::vector<Int>& den) {
    if (num.size() < den.size()) return std::nullopt;
    std::vector<Int> rem = num;
    std::vector<Int> quot(num.size() - den.size() + 1, Int(0));
    for (std::size_t k = quot.size(); k-- > 0;) {
        Int c = rem[k + den.size() - 1];
        quot[k] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j < den.size(); ++j) rem[k + j] -= c * den[j];
    }
    for (const Int& c : rem)
        if (c != 0) return std::nullopt;
    return quot;
}

} // namespace

std::vector<Rational> coxeter_exponents(const CoxeterElement& t) {
    int n = static_cast<int>(t.matrix.size());
    std::vector<Int> charpoly = characteristic_polynomial(t.matrix);

    std::vector<Rational> exponents;
    for (int k = 1; k <= t.order; ++k) {
        if (t.order % k != 0) continue;
        const std::vector<Int>& phi = cyclotomic_polynomial(k);
        while (true) {
            auto quot = try_divide(charpoly, phi);
            if (!quot) break;
            charpoly = std::move(*quot);
            if (k == 1)
                throw InternalError("Coxeter element has eigenvalue 1");
            for (int m = 1; m <= k; ++m)
                if (std::gcd(m, k) == 1) exponents.emplace_back(m, k);
        }
    }
    if (charpoly.size() != 1 || (charpoly[0] != 1 && charpoly[0] != -1))
        throw InternalError("non-cyclotomic factor in the characteristic polynomial");
    if (static_cast<int>(exponents.size()) != n)
        throw InternalError("exponent count does not match the rank");
    std::sort(exponents.begin(), exponents.end());
    return exponents;
}

std::vector<std::vector<int>> positive_roots(const CartanMatrix& c) {
    if (!positive_definite(c)) throw UsageError("positive roots need a definite Cartan matrix");
    int n = c.rank();

    auto reflect = [&](const std::vector<int>& v, int i) {
        // s_i(v) = v - <v, alpha_i^vee> alpha_i with pairing from row i of C
        long long pairing = 0;
        for (int j = 0; j < n; ++j)
            pairing += to_int64(c.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) *
                       v[static_cast<std::size_t>(j)];
        std::vector<int> out = v;
        out[static_cast<std::size_t>(i)] -= static_cast<int>(pairing);
        return out;
    };

    std::set<std::vector<int>> roots;
    std::vector<std::vector<int>> queue;
    for (int i = 0; i < n; ++i) {
        std::vector<int> e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(i)] = 1;
        roots.insert(e);
        queue.push_back(std::move(e));
    }
    while (!queue.empty()) {
        std::vector<int> v = std::move(queue.back());
        queue.pop_back();
        for (int i = 0; i < n; ++i) {
            std::vector<int> w = reflect(v, i);
            bool positive = std::all_of(w.begin(), w.end(), [](int x) { return x >= 0; });
            if (!positive) continue;
            if (roots.insert(w).second) queue.push_back(w);
        }
    }

    // every root has squared length 2
    for (const auto& v : roots) {
        Int norm = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                norm += Int(v[static_cast<std::size_t>(i)]) *
                        c.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                        v[static_cast<std::size_t>(j)];
        if (norm != 2) throw InternalError("closure produced a vector of wrong length");
    }
    return {roots.begin(), roots.end()};
}

} // namespace kleinian
