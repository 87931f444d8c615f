#pragma once

#include "kleinian/graph.hpp"
#include "kleinian/numeric.hpp"

#include <vector>

namespace kleinian {

using IntMatrix = std::vector<std::vector<Int>>;

/// Symmetric Cartan matrix C = 2I - A of a simply laced diagram.
struct CartanMatrix {
    IntMatrix entries;
    int rank() const { return static_cast<int>(entries.size()); }
};

CartanMatrix cartan_matrix(const Graph& diagram);

/// Determinant by fraction-free (Bareiss) elimination, exact.
Int determinant(const IntMatrix& m);

/// All leading principal minors positive.
bool positive_definite(const CartanMatrix& c);

/// The extended Cartan matrix is singular with kernel exactly the line
/// spanned by the marks: rank defect 1 and C * marks = 0.
bool extended_cartan_kernel_is_marks(const Graph& extended);

/// Simple reflections in the simple-root basis: delta_i = I - e_i * (row i
/// of C); each is an involution.
std::vector<IntMatrix> simple_reflections(const CartanMatrix& c);

struct CoxeterElement {
    IntMatrix matrix;
    int order = 0; // h, with matrix^h = I
};

/// Product of all simple reflections in the given vertex order (default:
/// the diagram's own order). The order is found by repeated powering,
/// bounded by 60. Requires a non-extended diagram.
CoxeterElement coxeter_element(const DynkinDiagram& diagram,
                               const std::vector<int>& vertex_order = {});

/// Characteristic polynomial det(xI - M), ascending coefficients, exact.
std::vector<Int> characteristic_polynomial(const IntMatrix& m);

/// Eigenvalue exponents m/h in (0,1), with multiplicity, sorted: factor the
/// characteristic polynomial into cyclotomics Phi_k with k | h. Throws
/// InternalError if a non-cyclotomic factor remains.
std::vector<Rational> coxeter_exponents(const CoxeterElement& t);

/// All positive roots (vectors v > 0 with v^T C v = 2), enumerated by
/// reflection closure from the simple roots.
std::vector<std::vector<int>> positive_roots(const CartanMatrix& c);

} // namespace kleinian
