#include "mlt/rigidity.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "mlt/rng.hpp"

namespace mlt {

RatMat rigidity_matrix(const Framework& f) {
    const int n = f.n(), d = f.dim;
    if (static_cast<int>(f.config.size()) != n)
        throw std::invalid_argument("rigidity_matrix: config size mismatch");
    for (const auto& p : f.config)
        if (static_cast<int>(p.size()) != d)
            throw std::invalid_argument("rigidity_matrix: point dimension mismatch");
    RatMat r(f.graph.m(), d * n);
    for (int e = 0; e < f.graph.m(); ++e) {
        const auto& [u, v] = f.graph.edges[e];
        for (int k = 0; k < d; ++k) {
            r.at(e, v * d + k) = f.config[v][k] - f.config[u][k];
            r.at(e, u * d + k) = f.config[u][k] - f.config[v][k];
        }
    }
    return r;
}

int rigid_rank_target(int n, int d) {
    if (n >= d + 2) return d * n - d * (d + 1) / 2;
    return n * (n - 1) / 2;
}

namespace {

constexpr std::int64_t kCoordRange = 1 << 20;

std::vector<std::vector<std::int64_t>> random_int_config(int n, int d, Rng& rng) {
    std::set<std::vector<std::int64_t>> seen;
    std::vector<std::vector<std::int64_t>> pts;
    pts.reserve(n);
    while (static_cast<int>(pts.size()) < n) {
        std::vector<std::int64_t> p(d);
        for (auto& x : p) x = rng.int_in(-kCoordRange, kCoordRange);
        if (seen.insert(p).second) pts.push_back(std::move(p));
    }
    return pts;
}

IntMat int_rigidity_matrix(const Graph& g, int d,
                           const std::vector<std::vector<std::int64_t>>& pts) {
    IntMat m(g.m(), std::vector<std::int64_t>(static_cast<std::size_t>(d) * g.n, 0));
    for (int e = 0; e < g.m(); ++e) {
        const auto& [u, v] = g.edges[e];
        for (int k = 0; k < d; ++k) {
            m[e][v * d + k] = pts[v][k] - pts[u][k];
            m[e][u * d + k] = pts[u][k] - pts[v][k];
        }
    }
    return m;
}

} // namespace

RankProfile generic_rank(const Graph& g, int d, std::uint64_t seed, int trials) {
    if (d < 0) throw std::invalid_argument("generic_rank: negative dimension");
    if (trials < 1) throw std::invalid_argument("generic_rank: trials < 1");
    RankProfile prof;
    prof.dim = d;
    prof.target_rigid = rigid_rank_target(g.n, d);
    prof.trials = trials;
    prof.seed = seed;
    if (d == 0 || g.m() == 0) return prof; // m x 0 matrix (or no rows): rank 0

    const int cap = std::min(g.m(), prof.target_rigid);
    for (int t = 0; t < trials; ++t) {
        Rng rng(mix_seed(seed, static_cast<std::uint64_t>(t)));
        auto pts = random_int_config(g.n, d, rng);
        auto m = int_rigidity_matrix(g, d, pts);
        for (std::uint64_t p : prof.primes)
            prof.rank = std::max(prof.rank, rank_mod_p(m, p));
        if (prof.rank >= cap) break; // cannot improve further
    }
    return prof;
}

bool is_d_independent(const Graph& g, int d, std::uint64_t seed) {
    return generic_rank(g, d, seed).rank == g.m();
}

bool is_d_rigid(const Graph& g, int d, std::uint64_t seed) {
    if (g.n <= d + 1) return g.m() == g.n * (g.n - 1) / 2; // rigid iff complete
    return generic_rank(g, d, seed).rank == rigid_rank_target(g.n, d);
}

bool is_redundantly_rigid(const Graph& g, int d, std::uint64_t seed) {
    if (!is_d_rigid(g, d, seed)) return false;
    for (const auto& e : g.edges)
        if (!is_d_rigid(remove_edge(g, e), d, seed)) return false;
    return true;
}

namespace {

bool is_dependent(const Graph& g, int d, std::uint64_t seed, int trials) {
    return generic_rank(g, d, seed, trials).rank < g.m();
}

} // namespace

std::optional<CircuitResult> find_circuit(const Graph& g, int d, std::uint64_t seed) {
    if (!is_dependent(g, d, seed, kDefaultRankTrials)) return std::nullopt;

    for (int attempt = 0; attempt < 3; ++attempt) {
        Rng rng(mix_seed(seed, 100 + attempt));
        std::vector<Edge> order = g.edges;
        for (std::size_t i = order.size(); i > 1; --i)
            std::swap(order[i - 1], order[rng.below(i)]);

        Graph cur = g;
        for (const auto& e : order) {
            Graph h = remove_edge(cur, e);
            if (is_dependent(h, d, rng.next(), 1)) cur = h;
        }

        // verification: dependent, and every one-edge deletion independent
        bool ok = generic_rank(cur, d, mix_seed(seed, 7)).rank == cur.m() - 1;
        for (const auto& e : cur.edges) {
            if (!ok) break;
            Graph h = remove_edge(cur, e);
            ok = generic_rank(h, d, mix_seed(seed, 8)).rank == h.m();
        }
        if (!ok) continue; // a modular fluke misled the greedy pass; retry

        CircuitResult res;
        auto deg = cur.degrees();
        for (int v = 0; v < cur.n; ++v)
            if (deg[v] > 0) res.support.push_back(v);
        res.graph = induced_subgraph(cur, res.support);
        // keep only the circuit's own edges (induced can pick up no others:
        // cur has exactly the circuit edges)
        return res;
    }
    throw std::runtime_error("find_circuit: verification failed repeatedly");
}

int gcr(const Graph& g, std::uint64_t seed) {
    int prev_rank = -1;
    for (int d = 0; d <= g.n; ++d) {
        RankProfile prof = generic_rank(g, d, mix_seed(seed, static_cast<std::uint64_t>(d)));
        if (prof.rank < prev_rank)
            throw std::runtime_error("gcr: rank not monotone in d (randomized rank too weak)");
        prev_rank = prof.rank;
        if (prof.rank == g.m()) return d + 1;
    }
    throw std::runtime_error("gcr: no independent dimension found up to n");
}

} // namespace mlt
