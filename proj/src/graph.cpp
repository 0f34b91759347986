#include "mlt/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <queue>

namespace mlt {

Edge normalize_edge(int u, int v) {
    return u < v ? Edge{u, v} : Edge{v, u};
}

Graph Graph::from_edges(int n, std::vector<Edge> edges) {
    if (n < 0) throw std::invalid_argument("graph: negative vertex count");
    for (auto& [u, v] : edges) {
        if (u > v) std::swap(u, v);
        if (u < 0 || v >= n) throw std::invalid_argument("graph: endpoint out of range");
        if (u == v) throw std::invalid_argument("graph: loop edge " + std::to_string(u));
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("graph: duplicate edge");
    return Graph{n, std::move(edges)};
}

bool Graph::has_edge(int u, int v) const {
    return std::binary_search(edges.begin(), edges.end(), normalize_edge(u, v));
}

std::vector<int> Graph::neighbors(int v) const {
    std::vector<int> nb;
    for (const auto& [a, b] : edges) {
        if (a == v) nb.push_back(b);
        else if (b == v) nb.push_back(a);
    }
    std::sort(nb.begin(), nb.end());
    return nb;
}

int Graph::degree(int v) const {
    int d = 0;
    for (const auto& [a, b] : edges)
        if (a == v || b == v) ++d;
    return d;
}

std::vector<int> Graph::degrees() const {
    std::vector<int> deg(n, 0);
    for (const auto& [a, b] : edges) {
        ++deg[a];
        ++deg[b];
    }
    return deg;
}

std::vector<std::uint64_t> Graph::adjacency_masks() const {
    if (n > 64) throw std::invalid_argument("adjacency_masks: n > 64");
    std::vector<std::uint64_t> adj(n, 0);
    for (const auto& [a, b] : edges) {
        adj[a] |= std::uint64_t(1) << b;
        adj[b] |= std::uint64_t(1) << a;
    }
    return adj;
}

Graph complete_graph(int n) {
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.push_back({u, v});
    return Graph{n, std::move(e)};
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: n < 3");
    std::vector<Edge> e;
    for (int u = 0; u + 1 < n; ++u) e.push_back({u, u + 1});
    e.push_back({0, n - 1});
    return Graph::from_edges(n, std::move(e));
}

Graph complete_bipartite(int a, int b) {
    std::vector<Edge> e;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) e.push_back({u, a + v});
    return Graph{a + b, std::move(e)};
}

Graph path_graph(int n) {
    std::vector<Edge> e;
    for (int u = 0; u + 1 < n; ++u) e.push_back({u, u + 1});
    return Graph{n, std::move(e)};
}

Graph remove_edge(const Graph& g, Edge e) {
    e = normalize_edge(e.first, e.second);
    if (!g.has_edge(e.first, e.second)) throw std::invalid_argument("remove_edge: edge absent");
    std::vector<Edge> out;
    out.reserve(g.edges.size() - 1);
    for (const auto& f : g.edges)
        if (f != e) out.push_back(f);
    return Graph{g.n, std::move(out)};
}

Graph add_edge(const Graph& g, Edge e) {
    e = normalize_edge(e.first, e.second);
    if (g.has_edge(e.first, e.second)) throw std::invalid_argument("add_edge: edge already present");
    auto out = g.edges;
    out.push_back(e);
    return Graph::from_edges(g.n, std::move(out));
}

Graph complement(const Graph& g) {
    std::vector<Edge> e;
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (!g.has_edge(u, v)) e.push_back({u, v});
    return Graph{g.n, std::move(e)};
}

static void check_vertex_set(const Graph& g, const VertexSet& x, const char* who) {
    int prev = -1;
    for (int v : x) {
        if (v < 0 || v >= g.n)
            throw std::invalid_argument(std::string(who) + ": vertex out of range");
        if (v <= prev) throw std::invalid_argument(std::string(who) + ": set not strictly increasing");
        prev = v;
    }
}

Graph induced_subgraph(const Graph& g, const VertexSet& x) {
    check_vertex_set(g, x, "induced_subgraph");
    std::vector<int> pos(g.n, -1);
    for (std::size_t i = 0; i < x.size(); ++i) pos[x[i]] = static_cast<int>(i);
    std::vector<Edge> e;
    for (const auto& [a, b] : g.edges)
        if (pos[a] >= 0 && pos[b] >= 0) e.push_back(normalize_edge(pos[a], pos[b]));
    return Graph::from_edges(static_cast<int>(x.size()), std::move(e));
}

namespace {

// unit-capacity max flow on the vertex-split network, small n only
struct FlowNet {
    int nodes;
    std::vector<std::vector<int>> cap;

    explicit FlowNet(int nodes) : nodes(nodes), cap(nodes, std::vector<int>(nodes, 0)) {}

    int max_flow(int s, int t) {
        int flow = 0;
        for (;;) {
            std::vector<int> parent(nodes, -1);
            parent[s] = s;
            std::queue<int> q;
            q.push(s);
            while (!q.empty() && parent[t] < 0) {
                int u = q.front();
                q.pop();
                for (int v = 0; v < nodes; ++v)
                    if (parent[v] < 0 && cap[u][v] > 0) {
                        parent[v] = u;
                        q.push(v);
                    }
            }
            if (parent[t] < 0) return flow;
            int aug = INT32_MAX;
            for (int v = t; v != s; v = parent[v]) aug = std::min(aug, cap[parent[v]][v]);
            for (int v = t; v != s; v = parent[v]) {
                cap[parent[v]][v] -= aug;
                cap[v][parent[v]] += aug;
            }
            flow += aug;
        }
    }
};

} // namespace

int vertex_connectivity(const Graph& g) {
    if (g.n <= 1) return 0;
    if (!is_connected(g)) return 0;
    const int big = g.n + 1;
    int best = g.n - 1; // complete-graph value; stands if no non-adjacent pair exists
    for (int s = 0; s < g.n; ++s) {
        for (int t = s + 1; t < g.n; ++t) {
            if (g.has_edge(s, t)) continue;
            FlowNet net(2 * g.n);
            for (int v = 0; v < g.n; ++v) net.cap[2 * v][2 * v + 1] = (v == s || v == t) ? big : 1;
            for (const auto& [a, b] : g.edges) {
                net.cap[2 * a + 1][2 * b] = big;
                net.cap[2 * b + 1][2 * a] = big;
            }
            best = std::min(best, net.max_flow(2 * s + 1, 2 * t));
        }
    }
    return best;
}

DegreeStats degree_stats(const Graph& g) {
    DegreeStats s;
    s.sequence = g.degrees();
    if (!s.sequence.empty()) {
        s.min_degree = *std::min_element(s.sequence.begin(), s.sequence.end());
        s.max_degree = *std::max_element(s.sequence.begin(), s.sequence.end());
    }
    return s;
}

Graph cone(const Graph& g) {
    auto e = g.edges;
    for (int v = 0; v < g.n; ++v) e.push_back({v, g.n});
    return Graph::from_edges(g.n + 1, std::move(e));
}

Graph zero_extension(const Graph& g, int d, const VertexSet& nbrs) {
    check_vertex_set(g, nbrs, "zero_extension");
    if (static_cast<int>(nbrs.size()) != d)
        throw std::invalid_argument("zero_extension: need exactly d neighbors");
    auto e = g.edges;
    for (int v : nbrs) e.push_back({v, g.n});
    return Graph::from_edges(g.n + 1, std::move(e));
}

Graph one_extension(const Graph& g, int d, Edge xy, const VertexSet& extra) {
    xy = normalize_edge(xy.first, xy.second);
    if (!g.has_edge(xy.first, xy.second)) throw std::invalid_argument("one_extension: xy not an edge");
    check_vertex_set(g, extra, "one_extension");
    if (static_cast<int>(extra.size()) != d - 1)
        throw std::invalid_argument("one_extension: need exactly d-1 extra vertices");
    for (int v : extra)
        if (v == xy.first || v == xy.second)
            throw std::invalid_argument("one_extension: extra vertex meets xy");
    std::vector<Edge> e;
    for (const auto& f : g.edges)
        if (f != xy) e.push_back(f);
    e.push_back({xy.first, g.n});
    e.push_back({xy.second, g.n});
    for (int v : extra) e.push_back({v, g.n});
    return Graph::from_edges(g.n + 1, std::move(e));
}

long induced_edge_count(const Graph& g, const VertexSet& x) {
    check_vertex_set(g, x, "induced_edge_count");
    std::vector<char> in(g.n, 0);
    for (int v : x) in[v] = 1;
    long c = 0;
    for (const auto& [a, b] : g.edges)
        if (in[a] && in[b]) ++c;
    return c;
}

EdgeCounts edge_counts(const Graph& g, const VertexSet& x, const VertexSet& y) {
    check_vertex_set(g, x, "edge_counts");
    check_vertex_set(g, y, "edge_counts");
    std::vector<char> inx(g.n, 0), iny(g.n, 0);
    for (int v : x) inx[v] = 1;
    for (int v : y) iny[v] = 1;
    EdgeCounts c;
    for (const auto& [a, b] : g.edges) {
        if (inx[a] && inx[b]) ++c.i_x;
        if (iny[a] && iny[b]) ++c.i_y;
        if ((inx[a] || iny[a]) && (inx[b] || iny[b])) ++c.i_union;
        if (inx[a] && iny[a] && inx[b] && iny[b]) ++c.i_inter;
        bool a_only_x = inx[a] && !iny[a], b_only_x = inx[b] && !iny[b];
        bool a_only_y = iny[a] && !inx[a], b_only_y = iny[b] && !inx[b];
        if ((a_only_x && b_only_y) || (a_only_y && b_only_x)) ++c.d_xy;
    }
    return c;
}

namespace {

// Calls fn(mask) for every size-s subset of {0..n-1}, ascending mask order.
template <typename F>
bool for_each_subset_of_size(int n, int s, F&& fn) {
    if (s == 0 || s > n) return true;
    std::uint32_t mask = (std::uint32_t(1) << s) - 1;
    const std::uint32_t limit = (n >= 32) ? UINT32_MAX : (std::uint32_t(1) << n);
    while (mask < limit) {
        if (!fn(mask)) return false;
        // Gosper's hack
        std::uint32_t c = mask & (0u - mask);
        std::uint32_t r = mask + c;
        std::uint32_t next = (((r ^ mask) >> 2) / c) | r;
        if (next <= mask) break;
        mask = next;
    }
    return true;
}

VertexSet mask_to_set(std::uint32_t mask) {
    VertexSet x;
    while (mask) {
        x.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return x;
}

long induced_count_mask(const Graph& g, std::uint32_t mask) {
    long c = 0;
    for (const auto& [a, b] : g.edges)
        if ((mask >> a & 1) && (mask >> b & 1)) ++c;
    return c;
}

} // namespace

SparsityResult is_sparse(const Graph& g, int d) {
    if (d < 1) throw std::invalid_argument("is_sparse: d < 1");
    if (g.n > 16) throw cap_error("is_sparse: n > 16 exceeds the subset enumeration cap");
    SparsityResult res;
    const long kd = static_cast<long>(d) * (d + 1) / 2;
    for (int s = d; s <= g.n && res.sparse; ++s) {
        for_each_subset_of_size(g.n, s, [&](std::uint32_t mask) {
            if (induced_count_mask(g, mask) > static_cast<long>(d) * s - kd) {
                res.sparse = false;
                res.violator = mask_to_set(mask);
                return false;
            }
            return true;
        });
    }
    return res;
}

bool jj_condition(const Graph& g) {
    if (g.n > 16) throw cap_error("jj_condition: n > 16 exceeds the subset enumeration cap");
    for (int s = 2; s <= g.n; ++s) {
        bool ok = for_each_subset_of_size(g.n, s, [&](std::uint32_t mask) {
            return 2 * induced_count_mask(g, mask) <= 5L * s - 7;
        });
        if (!ok) return false;
    }
    return true;
}

Graph build_Hd(int d) {
    if (d < 1) throw std::invalid_argument("build_Hd: d < 1");
    std::vector<Edge> e;
    for (int u = 0; u < d; ++u)
        for (int v = u + 1; v < d; ++v)
            if (!(u == 0 && v == 1)) e.push_back({u, v});
    const int l1 = d, l2 = d + 1, r1 = d + 2, r2 = d + 3;
    if (d >= 2) e.push_back({l1, l2});
    e.push_back({r1, r2});
    for (int c = 0; c < d; ++c) {
        e.push_back({c, l1});
        e.push_back({c, l2});
        e.push_back({c, r1});
        e.push_back({c, r2});
    }
    return Graph::from_edges(d + 4, std::move(e));
}

Graph deleted_ksum(const Graph& g1, const Graph& g2,
                   const std::vector<std::pair<int, int>>& shared, Edge drop) {
    const int k = static_cast<int>(shared.size());
    if (k < 1) throw std::invalid_argument("deleted_ksum: empty correspondence");
    std::vector<int> s1, s2;
    for (auto [a, b] : shared) {
        if (a < 0 || a >= g1.n || b < 0 || b >= g2.n)
            throw std::invalid_argument("deleted_ksum: shared vertex out of range");
        s1.push_back(a);
        s2.push_back(b);
    }
    auto distinct = [](std::vector<int> v) {
        std::sort(v.begin(), v.end());
        return std::adjacent_find(v.begin(), v.end()) == v.end();
    };
    if (!distinct(s1) || !distinct(s2))
        throw std::invalid_argument("deleted_ksum: repeated shared vertex");
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (!g1.has_edge(s1[i], s1[j]) || !g2.has_edge(s2[i], s2[j]))
                throw std::invalid_argument("deleted_ksum: shared set is not a clique in both parts");

    drop = normalize_edge(drop.first, drop.second);
    bool drop_in_shared =
        std::find(s1.begin(), s1.end(), drop.first) != s1.end() &&
        std::find(s1.begin(), s1.end(), drop.second) != s1.end();
    if (!drop_in_shared)
        throw std::invalid_argument("deleted_ksum: drop edge not inside the shared clique");

    // g1 keeps labels; g2's private vertices are appended in ascending order
    std::vector<int> map2(g2.n, -1);
    for (int i = 0; i < k; ++i) map2[s2[i]] = s1[i];
    int next = g1.n;
    for (int v = 0; v < g2.n; ++v)
        if (map2[v] < 0) map2[v] = next++;

    std::vector<Edge> e = g1.edges;
    for (const auto& [a, b] : g2.edges) {
        Edge f = normalize_edge(map2[a], map2[b]);
        if (f.second >= g1.n || !g1.has_edge(f.first, f.second)) e.push_back(f);
    }
    Graph glued = Graph::from_edges(g1.n + g2.n - k, std::move(e));
    return remove_edge(glued, drop);
}

namespace {

struct CliqueSearch {
    const std::vector<std::uint64_t>& adj;
    int best_size = 0;
    std::uint64_t best_set = 0;

    void expand(std::uint64_t p, std::uint64_t r, int rsize) {
        if (!p) {
            if (rsize > best_size) {
                best_size = rsize;
                best_set = r;
            }
            return;
        }
        // greedy coloring bound
        std::vector<int> order, color;
        std::uint64_t q = p;
        int c = 0;
        while (q) {
            ++c;
            std::uint64_t avail = q;
            while (avail) {
                int v = std::countr_zero(avail);
                std::uint64_t bit = std::uint64_t(1) << v;
                avail &= ~bit;
                avail &= ~adj[v];
                q &= ~bit;
                order.push_back(v);
                color.push_back(c);
            }
        }
        std::uint64_t pmask = p;
        for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
            if (rsize + color[i] <= best_size) return;
            int v = order[i];
            std::uint64_t bit = std::uint64_t(1) << v;
            pmask &= ~bit;
            expand(pmask & adj[v], r | bit, rsize + 1);
        }
    }
};

} // namespace

VertexSet max_clique(const Graph& g) {
    if (g.n > 32) throw cap_error("max_clique: n > 32 exceeds the branch-and-bound cap");
    if (g.n == 0) return {};
    auto adj = g.adjacency_masks();
    CliqueSearch search{adj};
    std::uint64_t all = (g.n == 64) ? ~std::uint64_t(0) : ((std::uint64_t(1) << g.n) - 1);
    search.expand(all, 0, 0);
    VertexSet out;
    for (int v = 0; v < g.n; ++v)
        if (search.best_set >> v & 1) out.push_back(v);
    return out;
}

std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<int> comp(g.n, -1);
    int count = 0;
    for (int start = 0; start < g.n; ++start) {
        if (comp[start] >= 0) continue;
        comp[start] = count;
        std::vector<int> stack{start};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (const auto& [a, b] : g.edges) {
                int other = (a == u) ? b : (b == u) ? a : -1;
                if (other >= 0 && comp[other] < 0) {
                    comp[other] = count;
                    stack.push_back(other);
                }
            }
        }
        ++count;
    }
    std::vector<VertexSet> out(count);
    for (int v = 0; v < g.n; ++v) out[comp[v]].push_back(v);
    return out;
}

bool is_connected(const Graph& g) {
    return connected_components(g).size() <= 1;
}

} // namespace mlt
