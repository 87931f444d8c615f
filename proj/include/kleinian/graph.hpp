#pragma once

#include "kleinian/chartable.hpp"

#include <optional>
#include <string>
#include <vector>

namespace kleinian {

/// Undirected multigraph with labeled vertices and optional integer marks
/// (irrep dimensions on McKay graphs, root coefficients on Dynkin diagrams).
/// The adjacency matrix is symmetric with zero diagonal.
struct Graph {
    std::vector<std::string> labels;
    std::vector<int> marks; // empty, or one per vertex
    std::vector<std::vector<int>> adjacency;

    int vertex_count() const { return static_cast<int>(labels.size()); }
    int degree(int v) const;
    bool has_marks() const { return !marks.empty(); }
};

bool is_connected(const Graph& g);

/// Extended McKay graph: one vertex per irreducible character, marks are the
/// dimensions, adjacency the tensor multiplicities against the standard
/// 2-dimensional character.
struct McKayGraph {
    Graph graph;
    int trivial_vertex = -1;
};

/// Build the extended McKay graph from a character table. Throws
/// InternalError if the multiplicities come out asymmetric or with nonzero
/// diagonal (a broken table).
McKayGraph mckay_graph(const CharacterTable& table);

/// Induced subgraph after removing one vertex.
Graph delete_vertex(const Graph& g, int v);

/// The McKay quiver: the extended graph minus the trivial representation.
Graph delete_trivial_vertex(const McKayGraph& extended);

/// Multiplicity-preserving vertex bijection from a to b, or nullopt. The
/// search is plain backtracking (first match in lexicographic order); when
/// both graphs carry marks the bijection must preserve them too. Fine for
/// the diagram sizes in play, which stay in the low dozens.
std::optional<std::vector<int>> graph_isomorphic(const Graph& a, const Graph& b);

/// A * marks = 2 * marks, exactly (the affine null-vector identity).
bool affine_null_check(const Graph& extended);

/// Reference ADE diagrams, vertex order matching the usual left-to-right
/// layout with branch vertices last; marks are the highest-root coefficients
/// (plain) or the affine marks (extended).
struct DynkinDiagram {
    Family family;
    int rank = 0;
    bool extended = false;
    Graph graph;
};
DynkinDiagram reference_diagram(Family family, int rank, bool extended);

/// DOT serialization: vertices in order as `v<i> [label="<label>(<mark>)"];`,
/// then each edge `v<i> -- v<j>;` with i < j repeated per multiplicity.
std::string graph_to_dot(const Graph& g, const std::string& name);

} // namespace kleinian
