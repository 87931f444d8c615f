#include "kleinian/chartable.hpp"

#include "kleinian/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace kleinian {

namespace {

using ll = long long;
using Vec = std::vector<ll>;
using Mat = std::vector<Vec>;

ll mod_mul(ll a, ll b, ll p) { return (a % p) * (b % p) % p; }

ll mod_pow(ll base, ll exp, ll p) {
    ll result = 1;
    base %= p;
    while (exp > 0) {
        if (exp & 1) result = mod_mul(result, base, p);
        base = mod_mul(base, base, p);
        exp >>= 1;
    }
    return result;
}

ll mod_inv(ll a, ll p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) throw InternalError("modular inverse of zero");
    return mod_pow(a, p - 2, p);
}

bool is_prime(ll n) {
    if (n < 2) return false;
    for (ll d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Smallest prime p >= minimum with p = 1 (mod modulus), skipping the first
/// `skip` admissible primes.
ll admissible_prime(ll minimum, ll modulus, int skip) {
    ll p = ((minimum - 1) / modulus + 1) * modulus + 1;
    if (p < minimum) p += modulus;
    for (;; p += modulus) {
        if (!is_prime(p)) continue;
        if (skip-- == 0) return p;
    }
}

ll primitive_root(ll p) {
    std::vector<ll> prime_factors;
    ll n = p - 1;
    for (ll d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            prime_factors.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) prime_factors.push_back(n);
    for (ll g = 2; g < p; ++g) {
        bool ok = true;
        for (ll q : prime_factors)
            if (mod_pow(g, (p - 1) / q, p) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
    throw InternalError("no primitive root found");
}

Vec mat_vec(const Mat& m, const Vec& v, ll p) {
    Vec out(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
        ll acc = 0;
        for (std::size_t j = 0; j < v.size(); ++j) acc = (acc + mod_mul(m[i][j], v[j], p)) % p;
        out[i] = acc;
    }
    return out;
}

/// Solve A x = b where the columns of A are the given basis vectors
/// (linearly independent by construction); returns the coordinate vector.
Mat solve_in_basis(const std::vector<Vec>& basis, const std::vector<Vec>& rhs, ll p) {
    std::size_t rows = basis.front().size(), d = basis.size(), extra = rhs.size();
    Mat aug(rows, Vec(d + extra, 0));
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t i = 0; i < rows; ++i) aug[i][j] = basis[j][i];
    for (std::size_t j = 0; j < extra; ++j)
        for (std::size_t i = 0; i < rows; ++i) aug[i][d + j] = rhs[j][i];

    std::size_t row = 0;
    std::vector<std::size_t> pivot_rows;
    for (std::size_t col = 0; col < d && row < rows; ++col) {
        std::size_t sel = row;
        while (sel < rows && aug[sel][col] == 0) ++sel;
        if (sel == rows) throw InternalError("basis vectors are dependent");
        std::swap(aug[row], aug[sel]);
        ll inv = mod_inv(aug[row][col], p);
        for (auto& v : aug[row]) v = mod_mul(v, inv, p);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row || aug[r][col] == 0) continue;
            ll f = aug[r][col];
            for (std::size_t k = col; k < d + extra; ++k)
                aug[r][k] = ((aug[r][k] - mod_mul(f, aug[row][k], p)) % p + p) % p;
        }
        pivot_rows.push_back(row);
        ++row;
    }
    Mat coords(extra, Vec(d, 0));
    for (std::size_t j = 0; j < extra; ++j)
        for (std::size_t c = 0; c < d; ++c) coords[j][c] = aug[pivot_rows[c]][d + j];
    return coords;
}

/// Null-space basis of a square matrix over F_p.
std::vector<Vec> kernel_basis(Mat m, ll p) {
    std::size_t n = m.size();
    std::vector<int> pivot_col_of_row;
    std::size_t row = 0;
    std::vector<bool> is_pivot(n, false);
    for (std::size_t col = 0; col < n && row < n; ++col) {
        std::size_t sel = row;
        while (sel < n && m[sel][col] == 0) ++sel;
        if (sel == n) continue;
        std::swap(m[row], m[sel]);
        ll inv = mod_inv(m[row][col], p);
        for (auto& v : m[row]) v = mod_mul(v, inv, p);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == row || m[r][col] == 0) continue;
            ll f = m[r][col];
            for (std::size_t k = col; k < n; ++k)
                m[r][k] = ((m[r][k] - mod_mul(f, m[row][k], p)) % p + p) % p;
        }
        pivot_col_of_row.push_back(static_cast<int>(col));
        is_pivot[col] = true;
        ++row;
    }
    std::vector<Vec> basis;
    for (std::size_t free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col]) continue;
        Vec v(n, 0);
        v[free_col] = 1;
        for (std::size_t r = 0; r < pivot_col_of_row.size(); ++r) {
            ll value = m[r][free_col];
            if (value)
                v[static_cast<std::size_t>(pivot_col_of_row[r])] = (p - value) % p;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

struct SplitFailure {}; // restart with the next admissible prime

/// Common eigenvectors of the commuting class-sum matrices over F_p, one per
/// irreducible character.
std::vector<Vec> common_eigenvectors(const std::vector<Mat>& class_matrices, std::size_t r, ll p) {
    std::vector<std::vector<Vec>> spaces;
    {
        std::vector<Vec> full;
        for (std::size_t i = 0; i < r; ++i) {
            Vec e(r, 0);
            e[i] = 1;
            full.push_back(std::move(e));
        }
        spaces.push_back(std::move(full));
    }

    for (const Mat& m : class_matrices) {
        bool all_split = std::all_of(spaces.begin(), spaces.end(),
                                     [](const auto& s) { return s.size() == 1; });
        if (all_split) break;
        std::vector<std::vector<Vec>> next;
        for (auto& space : spaces) {
            if (space.size() == 1) {
                next.push_back(std::move(space));
                continue;
            }
            std::vector<Vec> images;
            for (const Vec& b : space) images.push_back(mat_vec(m, b, p));
            Mat coords = solve_in_basis(space, images, p); // coords[k] = column k of R
            std::size_t d = space.size();
            Mat restricted(d, Vec(d, 0));
            for (std::size_t k = 0; k < d; ++k)
                for (std::size_t l = 0; l < d; ++l) restricted[l][k] = coords[k][l];

            std::size_t found = 0;
            for (ll lambda = 0; lambda < p && found < d; ++lambda) {
                Mat shifted = restricted;
                for (std::size_t i = 0; i < d; ++i)
                    shifted[i][i] = ((shifted[i][i] - lambda) % p + p) % p;
                std::vector<Vec> null = kernel_basis(std::move(shifted), p);
                if (null.empty()) continue;
                std::vector<Vec> eigen;
                for (const Vec& c : null) {
                    Vec v(space.front().size(), 0);
                    for (std::size_t l = 0; l < d; ++l)
                        for (std::size_t i = 0; i < v.size(); ++i)
                            v[i] = (v[i] + mod_mul(c[l], space[l][i], p)) % p;
                    eigen.push_back(std::move(v));
                }
                found += eigen.size();
                next.push_back(std::move(eigen));
            }
            if (found != d) throw SplitFailure{}; // restriction not diagonalizable mod p
        }
        spaces = std::move(next);
    }

    std::vector<Vec> out;
    for (auto& s : spaces) {
        if (s.size() != 1) throw SplitFailure{};
        out.push_back(std::move(s.front()));
    }
    return out;
}

} // namespace

ClassMultTable class_multiplication_coefficients(const FiniteSubgroup& group,
                                                 const std::vector<ConjugacyClass>& classes) {
    std::size_t r = classes.size();
    std::vector<int> class_of = element_class_map(group, classes);
    ClassMultTable c(r, std::vector<std::vector<ll>>(r, std::vector<ll>(r, 0)));
    for (std::size_t k = 0; k < r; ++k) {
        // count pairs (x, y) with x*y = rep_k, i.e. y = x^-1 * rep_k
        for (std::size_t i = 0; i < r; ++i) {
            for (int xi : classes[i].member_indices) {
                const GroupElement& x = group.elements[static_cast<std::size_t>(xi)];
                GroupElement y = x.inverse() * classes[k].representative;
                int j = class_of[static_cast<std::size_t>(group.index_of(y))];
                c[i][static_cast<std::size_t>(j)][k] += 1;
            }
        }
    }
    return c;
}

CharacterTable character_table(const FiniteSubgroup& group) {
    CharacterTable table;
    table.family = group.family;
    table.rank = group.rank;
    table.group_order = group.order();
    table.classes = conjugacy_classes(group);
    table.exponent = group_exponent(table.classes);

    std::size_t r = table.classes.size();
    ll order = group.order();
    ll exponent = table.exponent;
    ClassMultTable cmc = class_multiplication_coefficients(group, table.classes);
    std::vector<int> class_of = element_class_map(group, table.classes);

    // class of rep_i^l for l = 0..m_i-1, and the inverse class
    std::vector<std::vector<int>> power_class(r);
    std::vector<std::size_t> inverse_class(r);
    for (std::size_t i = 0; i < r; ++i) {
        const GroupElement& rep = table.classes[i].representative;
        GroupElement power = GroupElement::identity(group.cyclotomic_order);
        for (int l = 0; l < table.classes[i].element_order; ++l) {
            power_class[i].push_back(class_of[static_cast<std::size_t>(group.index_of(power))]);
            power = power * rep;
        }
        inverse_class[i] = static_cast<std::size_t>(
            class_of[static_cast<std::size_t>(group.index_of(rep.inverse()))]);
    }

    for (int attempt = 0; attempt < 10; ++attempt) {
        ll p = admissible_prime(2 * order + 1, exponent, attempt);
        try {
            std::vector<Mat> class_matrices;
            for (std::size_t i = 1; i < r; ++i) { // class 0 is the identity, M_0 = I
                Mat m(r, Vec(r, 0));
                for (std::size_t j = 0; j < r; ++j)
                    for (std::size_t k = 0; k < r; ++k) m[j][k] = cmc[i][j][k] % p;
                class_matrices.push_back(std::move(m));
            }
            std::vector<Vec> eigen = common_eigenvectors(class_matrices, r, p);
            if (eigen.size() != r) throw SplitFailure{};

            ll z = mod_pow(primitive_root(p), (p - 1) / exponent, p);
            std::vector<std::vector<Cyclotomic>> rows;
            std::vector<int> dims;
            for (Vec& v : eigen) {
                if (v[0] == 0) throw SplitFailure{};
                ll scale = mod_inv(v[0], p);
                for (auto& x : v) x = mod_mul(x, scale, p); // omega(identity class) = 1

                // |G| / chi(1)^2 = sum_i omega_i omega_{i*} / |C_i|
                ll s = 0;
                for (std::size_t i = 0; i < r; ++i) {
                    ll term = mod_mul(v[i], v[inverse_class[i]], p);
                    s = (s + mod_mul(term, mod_inv(table.classes[i].size, p), p)) % p;
                }
                ll d_squared = mod_mul(order % p, mod_inv(s, p), p);
                ll dim = 0;
                for (ll d = 1; d * d <= order; ++d)
                    if (mod_mul(d, d, p) == d_squared) {
                        dim = d;
                        break;
                    }
                if (dim == 0) throw SplitFailure{};

                // character values mod p: chi_i = omega_i * dim / |C_i|
                Vec chi_mod(r, 0);
                for (std::size_t i = 0; i < r; ++i)
                    chi_mod[i] =
                        mod_mul(mod_mul(v[i], dim, p), mod_inv(table.classes[i].size, p), p);

                // lift each value to an exact element of Q(zeta_m), m = |g|:
                // chi(g) = sum_j n_j zeta_m^j with n_j the multiplicity of the
                // eigenvalue zeta_m^j, recovered by a discrete Fourier sum.
                std::vector<Cyclotomic> row;
                for (std::size_t i = 0; i < r; ++i) {
                    int m = table.classes[i].element_order;
                    ll zm = mod_pow(z, exponent / m, p);
                    ll inv_m = mod_inv(m, p);
                    Cyclotomic value(Rational(0), m);
                    ll total = 0;
                    for (int j = 0; j < m; ++j) {
                        ll nj = 0;
                        for (int l = 0; l < m; ++l) {
                            ll character = chi_mod[static_cast<std::size_t>(power_class[i][static_cast<std::size_t>(l)])];
                            ll root = mod_pow(zm, static_cast<ll>((static_cast<long long>(m) - j) * l % m), p);
                            nj = (nj + mod_mul(character, root, p)) % p;
                        }
                        nj = mod_mul(nj, inv_m, p);
                        if (nj > dim) throw SplitFailure{};
                        total += nj;
                        if (nj > 0)
                            value = value + Cyclotomic::zeta(m, j) * Rational(nj);
                    }
                    if (total != dim) throw SplitFailure{};
                    row.push_back(value.embedded(table.exponent));
                }
                rows.push_back(std::move(row));
                dims.push_back(static_cast<int>(dim));
            }

            // canonical irrep order: dimension, then value vector
            std::vector<std::size_t> perm(r);
            std::iota(perm.begin(), perm.end(), 0);
            // ascending dimension; within a dimension, descending value
            // vectors, which puts the trivial character first among the
            // linear ones
            std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
                if (dims[a] != dims[b]) return dims[a] < dims[b];
                for (std::size_t c = 0; c < r; ++c) {
                    const auto& ca = rows[a][c].coeffs();
                    const auto& cb = rows[b][c].coeffs();
                    if (ca != cb) return ca > cb;
                }
                return false;
            });
            for (std::size_t k : perm) {
                table.dimensions.push_back(dims[k]);
                table.values.push_back(rows[k]);
            }
            break;
        } catch (const SplitFailure&) {
            table.dimensions.clear();
            table.values.clear();
            if (attempt == 9)
                throw InternalError(group.label() +
                                    ": class algebra failed to split over ten primes");
        }
    }

    // ---- exact validation of every table invariant ----
    Int dim_square_sum = 0;
    for (std::size_t a = 0; a < r; ++a) {
        dim_square_sum += Int(table.dimensions[a]) * table.dimensions[a];
        if (table.values[a][0].rational_value() != Rational(table.dimensions[a]))
            throw InternalError("character value at the identity differs from the degree");
        for (const Cyclotomic& value : table.values[a])
            for (const Rational& c : value.coeffs())
                if (denominator(c) != 1)
                    throw InternalError("character value is not an algebraic integer");
    }
    if (dim_square_sum != group.order())
        throw InternalError("sum of squared degrees is not the group order");

    Cyclotomic zero(Rational(0), table.exponent);
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = a; b < r; ++b) {
            Cyclotomic acc = zero;
            for (std::size_t c = 0; c < r; ++c)
                acc = acc + table.values[a][c].conjugate() * table.values[b][c] *
                                Rational(table.classes[c].size);
            Rational expected = a == b ? Rational(group.order()) : Rational(0);
            if (acc.rational_value() != expected)
                throw InternalError("row orthogonality fails exactly");
        }
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i; j < r; ++j) {
            Cyclotomic acc = zero;
            for (std::size_t a = 0; a < r; ++a)
                acc = acc + table.values[a][i].conjugate() * table.values[a][j];
            Rational expected =
                i == j ? Rational(group.order(), table.classes[i].size) : Rational(0);
            if (acc.rational_value() != expected)
                throw InternalError("column orthogonality fails exactly");
        }

    for (std::size_t i = 0; i < r; ++i)
        table.standard_character.push_back(
            table.classes[i].trace.embedded(table.exponent));

    Cyclotomic one(Rational(1), table.exponent);
    for (std::size_t a = 0; a < r; ++a) {
        bool all_ones = true;
        for (std::size_t c = 0; c < r; ++c)
            if (table.values[a][c] != one) {
                all_ones = false;
                break;
            }
        if (all_ones) {
            table.trivial_irrep = static_cast<int>(a);
            break;
        }
    }
    if (table.trivial_irrep < 0) throw InternalError("trivial character missing from the table");
    return table;
}

long long tensor_multiplicity(const CharacterTable& table, int alpha, int beta) {
    std::size_t r = table.classes.size();
    if (alpha < 0 || beta < 0 || alpha >= table.irrep_count() || beta >= table.irrep_count())
        throw UsageError("irrep index out of range");
    Cyclotomic acc(Rational(0), table.exponent);
    for (std::size_t c = 0; c < r; ++c)
        acc = acc + table.standard_character[c] *
                        table.values[static_cast<std::size_t>(beta)][c] *
                        table.values[static_cast<std::size_t>(alpha)][c].conjugate() *
                        Rational(table.classes[c].size);
    Rational result = acc.rational_value() / table.group_order;
    if (!is_integer(result) || result < 0)
        throw InternalError("tensor multiplicity " + rational_str(result) +
                            " is not a nonnegative integer; the table is broken");
    return rational_to_int64(result);
}

} // namespace kleinian
