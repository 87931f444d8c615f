#pragma once

#include "kleinian/cyclotomic.hpp"

#include <array>
#include <string>
#include <unordered_map>
#include <vector>

namespace kleinian {

/// The five families of finite subgroups of SL(2,C): cyclic, binary
/// dihedral, and the binary tetrahedral / octahedral / icosahedral groups.
enum class Family { A, D, E6, E7, E8 };

std::string family_name(Family f);
Family parse_family(const std::string& name);
/// ADE rank of the corresponding diagram: the rank argument for A/D,
/// 6/7/8 for the E types.
int family_rank(Family f, int rank);

/// A 2x2 matrix over Q(zeta_N) with determinant 1.
class GroupElement {
public:
    GroupElement(Cyclotomic a, Cyclotomic b, Cyclotomic c, Cyclotomic d);
    static GroupElement identity(int cyclotomic_order);

    const Cyclotomic& entry(int row, int col) const {
        return entries_[static_cast<std::size_t>(2 * row + col)];
    }
    int cyclotomic_order() const { return entries_[0].order(); }

    GroupElement operator*(const GroupElement& rhs) const;
    /// Inverse by the adjugate; valid because det = 1.
    GroupElement inverse() const;

    Cyclotomic det() const;
    Cyclotomic trace() const;
    bool is_identity() const;

    /// Image under the coefficient-wise embedding Q(zeta_N) -> Q(zeta_M).
    GroupElement embedded(int new_order) const;

    bool operator==(const GroupElement& rhs) const { return entries_ == rhs.entries_; }
    bool operator!=(const GroupElement& rhs) const { return !(*this == rhs); }

    /// Canonical byte encoding of the four entries; used for hashing and
    /// deterministic tie-breaks.
    std::string key() const;
    std::string str() const;

private:
    std::array<Cyclotomic, 4> entries_; // row major
};

struct ConjugacyClass {
    GroupElement representative;
    std::vector<int> member_indices; // ascending indices into elements
    int size = 0;
    int element_order = 0;
    Cyclotomic trace;
};

/// A fully enumerated finite subgroup of SL(2,C). Immutable once built.
struct FiniteSubgroup {
    Family family;
    int rank; // A(n): n >= 1, D(n): n >= 4, E types: 6/7/8
    int cyclotomic_order;
    std::vector<GroupElement> generators;
    std::vector<GroupElement> elements; // breadth-first order, identity first
    std::unordered_map<std::string, int> index;

    int order() const { return static_cast<int>(elements.size()); }
    /// Index of an element; throws InternalError when g is not a member.
    int index_of(const GroupElement& g) const;
    std::string label() const;
};

/// Enumerate the group by breadth-first closure of the generator set,
/// validating determinants and the expected group order
/// (A(n): n+1, D(n): 4(n-2), E6: 24, E7: 48, E8: 120).
FiniteSubgroup build_group(Family family, int rank = 0);

/// Partition into conjugacy orbits, deterministically ordered by element
/// order, then class size, then the canonical trace key, then the smallest
/// member key.
std::vector<ConjugacyClass> conjugacy_classes(const FiniteSubgroup& group);

/// Smallest m >= 1 with g^m = 1; bounded by |G|.
int element_order(const FiniteSubgroup& group, const GroupElement& g);

/// exponent(G) = lcm of the element orders of all classes.
int group_exponent(const std::vector<ConjugacyClass>& classes);

/// Map element index -> class index.
std::vector<int> element_class_map(const FiniteSubgroup& group,
                                   const std::vector<ConjugacyClass>& classes);

} // namespace kleinian
