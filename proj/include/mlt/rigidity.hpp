#ifndef MLT_RIGIDITY_HPP
#define MLT_RIGIDITY_HPP

#include <array>
#include <cstdint>
#include <optional>

#include "mlt/graph.hpp"
#include "mlt/ratmat.hpp"

namespace mlt {

/// A graph together with an exact rational configuration in R^dim.
struct Framework {
    Graph graph;
    int dim = 0;
    std::vector<std::vector<Rational>> config; // n points, dim coordinates each

    int n() const { return graph.n; }
};

/// m x (dim*n) rigidity matrix: the row of edge uv carries p(v)-p(u) in v's
/// coordinate block and p(u)-p(v) in u's block.
RatMat rigidity_matrix(const Framework& f);

/// Rank of the edge-length constraint system at a generic configuration when
/// the graph is rigid: d*n - C(d+1,2) for n >= d+2, else C(n,2).
int rigid_rank_target(int n, int d);

inline constexpr int kDefaultRankTrials = 3;

/// Result of randomized generic-rank probing. `rank` is a certified lower
/// bound on the generic rank; equality holds except with the Schwartz-Zippel
/// failure probability over `trials` integer configurations and the fixed
/// prime set.
struct RankProfile {
    int dim = 0;
    int rank = 0;
    int target_rigid = 0;
    int trials = 0;
    std::array<std::uint64_t, 3> primes = kRankPrimes;
    std::uint64_t seed = 0;
};

/// Max over `trials` random integer configurations (coordinates uniform in
/// [-2^20, 2^20]) of rank_mod_p of the rigidity matrix; deterministic in seed.
RankProfile generic_rank(const Graph& g, int d, std::uint64_t seed,
                         int trials = kDefaultRankTrials);

bool is_d_independent(const Graph& g, int d, std::uint64_t seed);
bool is_d_rigid(const Graph& g, int d, std::uint64_t seed);
bool is_redundantly_rigid(const Graph& g, int d, std::uint64_t seed);

/// A d-circuit found inside a d-dependent graph, relabeled onto its support.
struct CircuitResult {
    Graph graph;       // on |support| vertices
    VertexSet support; // original labels, ascending
};

/// Greedy circuit extraction: delete edges (seeded random order) while the
/// remainder stays dependent; verifies the result is dependent with every
/// one-edge deletion independent. Returns nothing for independent graphs.
std::optional<CircuitResult> find_circuit(const Graph& g, int d, std::uint64_t seed);

/// Generic completion rank: 1 + the smallest d with g d-independent
/// (edgeless graphs are 0-independent, so their gcr is 1).
int gcr(const Graph& g, std::uint64_t seed);

} // namespace mlt

#endif
