#ifndef MLT_GRAPH_HPP
#define MLT_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mlt {

/// Thrown when an operation's enumeration cap (documented per operation) is
/// exceeded; the CLI maps it to exit code 2.
struct cap_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Edge = std::pair<int, int>; // always (u, v) with u < v

/// Strictly increasing list of vertex ids.
using VertexSet = std::vector<int>;

/// Simple undirected graph on vertices 0..n-1 with a sorted, duplicate-free
/// edge list. Immutable by convention: every surgery returns a new graph.
struct Graph {
    int n = 0;
    std::vector<Edge> edges;

    // Validates endpoints, rejects loops and duplicates, sorts.
    static Graph from_edges(int n, std::vector<Edge> edges);

    int m() const { return static_cast<int>(edges.size()); }
    bool has_edge(int u, int v) const;
    std::vector<int> neighbors(int v) const;
    int degree(int v) const;
    std::vector<int> degrees() const;
    // adjacency bitmasks, requires n <= 64
    std::vector<std::uint64_t> adjacency_masks() const;

    bool operator==(const Graph& other) const = default;
};

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph complete_bipartite(int a, int b);
Graph path_graph(int n);
Graph remove_edge(const Graph& g, Edge e);
Graph add_edge(const Graph& g, Edge e);

Graph complement(const Graph& g);

/// Induced subgraph on X, relabeled to 0..|X|-1 in the order of X.
Graph induced_subgraph(const Graph& g, const VertexSet& x);

/// Minimum vertex-cut size via Menger/max-flow over non-adjacent pairs;
/// n-1 for complete graphs, 0 when disconnected.
int vertex_connectivity(const Graph& g);

struct DegreeStats {
    int min_degree = 0;
    int max_degree = 0;
    std::vector<int> sequence; // indexed by vertex
};
DegreeStats degree_stats(const Graph& g);

/// New vertex n adjacent to every existing vertex.
Graph cone(const Graph& g);

/// New vertex n adjacent to exactly the d vertices in nbrs.
Graph zero_extension(const Graph& g, int d, const VertexSet& nbrs);

/// Remove edge xy, add new vertex n adjacent to x, y and the d-1 vertices
/// in extra (disjoint from {x, y}).
Graph one_extension(const Graph& g, int d, Edge xy, const VertexSet& extra);

struct EdgeCounts {
    long i_x = 0;     // edges inside X
    long i_y = 0;     // edges inside Y
    long i_union = 0; // edges inside X ∪ Y
    long i_inter = 0; // edges inside X ∩ Y
    long d_xy = 0;    // edges between X \ Y and Y \ X
};
EdgeCounts edge_counts(const Graph& g, const VertexSet& x, const VertexSet& y);
long induced_edge_count(const Graph& g, const VertexSet& x);

struct SparsityResult {
    bool sparse = true;
    VertexSet violator; // empty iff sparse; otherwise first violating set
                        // (smallest size, then lexicographic)
};

/// (d, C(d+1,2))-sparsity: i(X) <= d|X| - C(d+1,2) for all X with |X| >= d.
/// Caps at n <= 16 (subset enumeration).
SparsityResult is_sparse(const Graph& g, int d);

/// i(X) <= (5|X| - 7)/2 for all X with |X| >= 2; implies 3-independence.
/// Caps at n <= 16.
bool jj_condition(const Graph& g);

/// Two K_{d+2} glued along a common K_d, one glued-clique edge removed
/// (for d = 1 the shared K_1 has no edge; one pair edge is removed instead
/// so the d+4 vertex / 2C(d+2,2)-C(d,2)-1 edge profile still holds).
/// Center vertices are 0..d-1 (edge (0,1) dropped when d >= 2), pairs
/// {d, d+1} and {d+2, d+3}.
Graph build_Hd(int d);

/// Glue g1 and g2 along a k-clique given by the explicit correspondence
/// (v in g1, v in g2), then delete `drop` (named with g1 labels, inside the
/// shared clique). g1 keeps its labels; g2's private vertices follow.
Graph deleted_ksum(const Graph& g1, const Graph& g2,
                   const std::vector<std::pair<int, int>>& shared, Edge drop);

/// A maximum clique, by branch and bound with a greedy coloring bound.
/// Caps at n <= 32.
VertexSet max_clique(const Graph& g);

std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);

Edge normalize_edge(int u, int v);

} // namespace mlt

#endif
