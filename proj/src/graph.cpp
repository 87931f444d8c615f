#include "kleinian/graph.hpp"

#include "kleinian/error.hpp"

#include <algorithm>
#include <sstream>

namespace kleinian {

int Graph::degree(int v) const {
    int d = 0;
    for (int w : adjacency[static_cast<std::size_t>(v)]) d += w;
    return d;
}

bool is_connected(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) return true;
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::vector<int> stack{0};
    seen[0] = true;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w = 0; w < n; ++w)
            if (g.adjacency[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)] > 0 &&
                !seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = true;
                stack.push_back(w);
                ++count;
            }
    }
    return count == n;
}

McKayGraph mckay_graph(const CharacterTable& table) {
    int n = table.irrep_count();
    McKayGraph out;
    out.graph.adjacency.assign(static_cast<std::size_t>(n),
                               std::vector<int>(static_cast<std::size_t>(n), 0));
    for (int a = 0; a < n; ++a) {
        out.graph.labels.push_back("chi" + std::to_string(a));
        out.graph.marks.push_back(table.dimensions[static_cast<std::size_t>(a)]);
        for (int b = 0; b < n; ++b)
            out.graph.adjacency[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                static_cast<int>(tensor_multiplicity(table, a, b));
    }
    for (int a = 0; a < n; ++a) {
        if (out.graph.adjacency[static_cast<std::size_t>(a)][static_cast<std::size_t>(a)] != 0)
            throw InternalError("McKay graph has a loop at " + out.graph.labels[static_cast<std::size_t>(a)]);
        for (int b = 0; b < n; ++b)
            if (out.graph.adjacency[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] !=
                out.graph.adjacency[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)])
                throw InternalError("tensor multiplicities are asymmetric");
    }
    out.trivial_vertex = table.trivial_irrep;
    return out;
}

Graph delete_vertex(const Graph& g, int v) {
    if (v < 0 || v >= g.vertex_count()) throw UsageError("vertex index out of range");
    Graph out;
    for (int i = 0; i < g.vertex_count(); ++i) {
        if (i == v) continue;
        out.labels.push_back(g.labels[static_cast<std::size_t>(i)]);
        if (g.has_marks()) out.marks.push_back(g.marks[static_cast<std::size_t>(i)]);
        std::vector<int> row;
        for (int j = 0; j < g.vertex_count(); ++j)
            if (j != v)
                row.push_back(g.adjacency[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
        out.adjacency.push_back(std::move(row));
    }
    return out;
}

Graph delete_trivial_vertex(const McKayGraph& extended) {
    if (extended.trivial_vertex < 0)
        throw UsageError("no trivial vertex marked on the extended graph");
    return delete_vertex(extended.graph, extended.trivial_vertex);
}

namespace {

bool extend_matching(const Graph& a, const Graph& b, bool use_marks, std::vector<int>& map,
                     std::vector<bool>& used, int next) {
    int n = a.vertex_count();
    if (next == n) return true;
    for (int candidate = 0; candidate < n; ++candidate) {
        if (used[static_cast<std::size_t>(candidate)]) continue;
        if (a.degree(next) != b.degree(candidate)) continue;
        if (use_marks && a.marks[static_cast<std::size_t>(next)] !=
                             b.marks[static_cast<std::size_t>(candidate)])
            continue;
        bool compatible = true;
        for (int prev = 0; prev < next && compatible; ++prev)
            if (a.adjacency[static_cast<std::size_t>(next)][static_cast<std::size_t>(prev)] !=
                b.adjacency[static_cast<std::size_t>(candidate)]
                           [static_cast<std::size_t>(map[static_cast<std::size_t>(prev)])])
                compatible = false;
        if (!compatible) continue;
        map[static_cast<std::size_t>(next)] = candidate;
        used[static_cast<std::size_t>(candidate)] = true;
        if (extend_matching(a, b, use_marks, map, used, next + 1)) return true;
        used[static_cast<std::size_t>(candidate)] = false;
    }
    return false;
}

} // namespace

std::optional<std::vector<int>> graph_isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count()) return std::nullopt;
    bool use_marks = a.has_marks() && b.has_marks();
    std::vector<int> map(static_cast<std::size_t>(a.vertex_count()), -1);
    std::vector<bool> used(static_cast<std::size_t>(a.vertex_count()), false);
    if (extend_matching(a, b, use_marks, map, used, 0)) return map;
    return std::nullopt;
}

bool affine_null_check(const Graph& extended) {
    if (!extended.has_marks()) throw UsageError("affine null check needs vertex marks");
    int n = extended.vertex_count();
    for (int i = 0; i < n; ++i) {
        long long acc = 0;
        for (int j = 0; j < n; ++j)
            acc += static_cast<long long>(
                       extended.adjacency[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) *
                   extended.marks[static_cast<std::size_t>(j)];
        if (acc != 2LL * extended.marks[static_cast<std::size_t>(i)]) return false;
    }
    return true;
}

namespace {

Graph empty_graph(int n) {
    Graph g;
    g.adjacency.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i) g.labels.push_back("v" + std::to_string(i + 1));
    g.marks.assign(static_cast<std::size_t>(n), 1);
    return g;
}

void add_edge(Graph& g, int i, int j, int mult = 1) {
    g.adjacency[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] += mult;
    g.adjacency[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] += mult;
}

} // namespace

DynkinDiagram reference_diagram(Family family, int rank, bool extended) {
    rank = family_rank(family, rank);
    DynkinDiagram d;
    d.family = family;
    d.rank = rank;
    d.extended = extended;

    auto set_marks = [&](std::initializer_list<int> marks) {
        d.graph.marks.assign(marks.begin(), marks.end());
    };

    switch (family) {
        case Family::A: {
            int n = rank;
            if (!extended) {
                d.graph = empty_graph(n);
                for (int i = 0; i + 1 < n; ++i) add_edge(d.graph, i, i + 1);
            } else if (n == 1) {
                d.graph = empty_graph(2);
                add_edge(d.graph, 0, 1, 2); // the double bond of the affine A1 diagram
            } else {
                d.graph = empty_graph(n + 1);
                for (int i = 0; i < n; ++i) add_edge(d.graph, i, i + 1);
                add_edge(d.graph, n, 0); // close the cycle through the affine vertex
            }
            break;
        }
        case Family::D: {
            int n = rank;
            d.graph = empty_graph(extended ? n + 1 : n);
            // chain v1..v_{n-2}, fork v_{n-1}, v_n on v_{n-2}
            for (int i = 0; i + 1 < n - 2; ++i) add_edge(d.graph, i, i + 1);
            add_edge(d.graph, n - 3, n - 2);
            add_edge(d.graph, n - 3, n - 1);
            for (int i = 1; i <= n - 3; ++i) d.graph.marks[static_cast<std::size_t>(i)] = 2;
            if (extended) add_edge(d.graph, 1, n); // second fork at the far end
            break;
        }
        case Family::E6: {
            d.graph = empty_graph(extended ? 7 : 6);
            for (int i = 0; i < 4; ++i) add_edge(d.graph, i, i + 1);
            add_edge(d.graph, 2, 5); // branch below the middle of the chain
            if (extended) {
                add_edge(d.graph, 5, 6);
                set_marks({1, 2, 3, 2, 1, 2, 1});
            } else {
                set_marks({1, 2, 3, 2, 1, 2});
            }
            break;
        }
        case Family::E7: {
            d.graph = empty_graph(extended ? 8 : 7);
            for (int i = 0; i < 5; ++i) add_edge(d.graph, i, i + 1);
            add_edge(d.graph, 3, 6);
            if (extended) {
                add_edge(d.graph, 5, 7); // lengthen the short chain arm
                set_marks({1, 2, 3, 4, 3, 2, 2, 1});
            } else {
                set_marks({1, 2, 3, 4, 3, 2, 2});
            }
            break;
        }
        case Family::E8: {
            d.graph = empty_graph(extended ? 9 : 8);
            for (int i = 0; i < 6; ++i) add_edge(d.graph, i, i + 1);
            add_edge(d.graph, 4, 7);
            if (extended) {
                add_edge(d.graph, 0, 8); // lengthen the long arm
                set_marks({2, 3, 4, 5, 6, 4, 2, 3, 1});
            } else {
                set_marks({2, 3, 4, 5, 6, 4, 2, 3});
            }
            break;
        }
    }
    return d;
}

std::string graph_to_dot(const Graph& g, const std::string& name) {
    std::ostringstream out;
    out << "graph \"" << name << "\" {\n";
    for (int i = 0; i < g.vertex_count(); ++i) {
        out << "  v" << i << " [label=\"" << g.labels[static_cast<std::size_t>(i)];
        if (g.has_marks()) out << "(" << g.marks[static_cast<std::size_t>(i)] << ")";
        out << "\"];\n";
    }
    for (int i = 0; i < g.vertex_count(); ++i)
        for (int j = i + 1; j < g.vertex_count(); ++j)
            for (int m = 0; m < g.adjacency[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                 ++m)
                out << "  v" << i << " -- v" << j << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace kleinian
