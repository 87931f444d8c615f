#pragma once

#include "kleinian/group.hpp"

#include <vector>

namespace kleinian {

/// Class-algebra structure constants c[i][j][k] = #{(x,y) in C_i x C_j with
/// x*y = rep(C_k)}, the coefficients in K_i K_j = sum_k c_ijk K_k.
using ClassMultTable = std::vector<std::vector<std::vector<long long>>>;

ClassMultTable class_multiplication_coefficients(const FiniteSubgroup& group,
                                                 const std::vector<ConjugacyClass>& classes);

/// Exact character table over Q(zeta_e), e = exponent(G). Rows are sorted by
/// dimension, then lexicographically on the value vector, so the table is a
/// canonical artifact of the group.
struct CharacterTable {
    Family family;
    int rank = 0;
    int group_order = 0;
    int exponent = 0;
    std::vector<ConjugacyClass> classes;
    std::vector<int> dimensions;                  // one per irrep
    std::vector<std::vector<Cyclotomic>> values;  // [irrep][class], order e
    std::vector<Cyclotomic> standard_character;   // trace of the class reps
    int trivial_irrep = -1;

    int irrep_count() const { return static_cast<int>(dimensions.size()); }
};

/// Burnside-Dixon: simultaneously diagonalize the class-sum matrices over
/// F_p for the smallest prime p >= 2|G|+1 with p = 1 (mod exponent), then
/// lift the eigenvalue data to exact cyclotomic character values. Retries
/// with the next admissible prime if an eigenspace fails to split; gives up
/// after ten primes. All table invariants (degrees, orthogonality,
/// integrality) are verified exactly before returning.
CharacterTable character_table(const FiniteSubgroup& group);

/// Multiplicity of V_alpha inside V (x) V_beta for the standard 2-dimensional
/// character V: (1/|G|) sum_c |c| chi_V(c) chi_beta(c) conj(chi_alpha(c)).
/// Throws InternalError when the inner product is not a nonnegative integer.
long long tensor_multiplicity(const CharacterTable& table, int alpha, int beta);

} // namespace kleinian
