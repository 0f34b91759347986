#include "mlt/bounds.hpp"

#include <algorithm>

#include "mlt/rng.hpp"

namespace mlt {

const char* cert_kind_name(CertKind kind) {
    switch (kind) {
        case CertKind::GcrUpper: return "GcrUpper";
        case CertKind::TheoremEquality: return "TheoremEquality";
        case CertKind::TheoremSmall: return "TheoremSmall";
        case CertKind::TheoremFewEdges: return "TheoremFewEdges";
        case CertKind::TheoremNearComplete: return "TheoremNearComplete";
        case CertKind::TheoremDegreeBounded: return "TheoremDegreeBounded";
        case CertKind::ConePeel: return "ConePeel";
        case CertKind::CliqueLower: return "CliqueLower";
        case CertKind::GrnStarLower: return "GrnStarLower";
        case CertKind::CircuitPsdWitness: return "CircuitPsdWitness";
        case CertKind::ComponentSplit: return "ComponentSplit";
    }
    return "?";
}

namespace {

constexpr int kGrnRigidityTrials = 6;

// subsets of {0..n-1} of size s, ascending mask order
template <typename F>
bool for_each_mask_of_size(int n, int s, F&& fn) {
    if (s <= 0 || s > n) return true;
    std::uint32_t mask = (std::uint32_t(1) << s) - 1;
    const std::uint32_t limit = std::uint32_t(1) << n;
    while (mask < limit) {
        if (!fn(mask)) return false;
        std::uint32_t c = mask & (0u - mask);
        std::uint32_t r = mask + c;
        std::uint32_t next = (((r ^ mask) >> 2) / c) | r;
        if (next <= mask) break;
        mask = next;
    }
    return true;
}

} // namespace

int grn_star(const Graph& g, std::uint64_t seed) {
    if (g.n > kGrnStarCap)
        throw cap_error("grn_star: n > " + std::to_string(kGrnStarCap) +
                        " exceeds the induced-subset enumeration cap");
    if (g.m() == 0) return 0;

    auto adj = g.adjacency_masks();
    for (int d = g.n - 2; d >= 2; --d) {
        const long clique_edges = static_cast<long>(d + 2) * (d + 1) / 2;
        for (int size = g.n; size >= d + 2; --size) {
            // a globally d-rigid graph on >= d+2 vertices is redundantly
            // d-rigid (edge count at least the rigidity target + 1, which is
            // C(d+2,2) when size = d+2) and has minimum degree >= d+1
            const long need_edges =
                std::max(clique_edges,
                         static_cast<long>(d) * size - static_cast<long>(d) * (d + 1) / 2 + 1);
            bool found = !for_each_mask_of_size(g.n, size, [&](std::uint32_t mask) {
                long inside = 0;
                for (const auto& [a, b] : g.edges)
                    if ((mask >> a & 1) && (mask >> b & 1)) ++inside;
                if (inside < need_edges) return true;
                for (int v = 0; v < g.n; ++v) {
                    if (!(mask >> v & 1)) continue;
                    if (std::popcount(adj[v] & mask) < d + 1) return true;
                }
                VertexSet x;
                for (int v = 0; v < g.n; ++v)
                    if (mask >> v & 1) x.push_back(v);
                Graph sub = induced_subgraph(g, x);
                return global_rigidity_test(sub, d, mix_seed(seed, (std::uint64_t(d) << 32) | mask),
                                            kGrnRigidityTrials) != GlobalRigidity::certified;
            });
            if (found) return d;
        }
    }
    return 0;
}

namespace {

struct CoreBounds {
    int gcr = 0;
    int lower = 0;
    int upper = 0;
    int cone_depth = 0;
    std::vector<Certificate> trace;
};

nlohmann::ordered_json vertex_list_json(const VertexSet& x) {
    return nlohmann::ordered_json(x);
}

CoreBounds analyze(const Graph& g, std::uint64_t seed);

CoreBounds analyze_connected(const Graph& g, std::uint64_t seed) {
    // cone peeling: a vertex adjacent to all others shifts every quantity by 1
    if (g.n >= 2) {
        auto deg = g.degrees();
        for (int v = 0; v < g.n; ++v) {
            if (deg[v] != g.n - 1) continue;
            VertexSet rest;
            for (int u = 0; u < g.n; ++u)
                if (u != v) rest.push_back(u);
            CoreBounds sub = analyze(induced_subgraph(g, rest), mix_seed(seed, 11));
            CoreBounds out;
            out.gcr = sub.gcr + 1;
            out.lower = sub.lower + 1;
            out.upper = sub.upper + 1;
            out.cone_depth = sub.cone_depth + 1;
            Certificate peel{CertKind::ConePeel,
                             "cone vertex " + std::to_string(v) + " peeled; bounds shift by +1",
                             {{"vertex", v}}};
            out.trace.push_back(std::move(peel));
            out.trace.insert(out.trace.end(), sub.trace.begin(), sub.trace.end());
            return out;
        }
    }

    CoreBounds out;
    out.gcr = gcr(g, mix_seed(seed, 13));
    out.upper = out.gcr;
    out.trace.push_back({CertKind::GcrUpper,
                         "generic completion rank " + std::to_string(out.gcr) +
                             " upper-bounds the mlt",
                         {{"gcr", out.gcr}}});

    // equality rules, first match wins
    const long comp_edges = static_cast<long>(g.n) * (g.n - 1) / 2 - g.m();
    const DegreeStats deg = degree_stats(g);
    std::optional<Certificate> rule;
    if (out.gcr <= 4) {
        rule = Certificate{CertKind::TheoremEquality, "mlt = gcr whenever gcr <= 4",
                           {{"gcr", out.gcr}}};
    } else if (g.n <= 9) {
        rule = Certificate{CertKind::TheoremSmall, "mlt = gcr on at most 9 vertices",
                           {{"n", g.n}}};
    } else if (g.m() <= 24) {
        rule = Certificate{CertKind::TheoremFewEdges, "mlt = gcr with at most 24 edges",
                           {{"m", g.m()}}};
    } else if (comp_edges <= 5) {
        rule = Certificate{CertKind::TheoremNearComplete,
                           "mlt = gcr when the complement has at most 5 edges",
                           {{"complement_edges", comp_edges}, {"gcr_at_least", g.n - 2}}};
        if (out.gcr < g.n - 2)
            throw std::logic_error("mlt_bounds: near-complete rule saw gcr < n-2");
    } else if (deg.min_degree <= 4 && deg.max_degree <= 5) {
        rule = Certificate{CertKind::TheoremDegreeBounded,
                           "mlt = gcr for connected graphs with min degree <= 4, max degree <= 5",
                           {{"min_degree", deg.min_degree}, {"max_degree", deg.max_degree}}};
    }
    if (rule) {
        out.lower = out.upper;
        out.trace.push_back(std::move(*rule));
        return out;
    }

    // lower-bound machinery: cliques, grn*, certified PSD circuit witnesses
    VertexSet clique = max_clique(g);
    out.lower = static_cast<int>(clique.size());
    out.trace.push_back({CertKind::CliqueLower,
                         "K_" + std::to_string(clique.size()) + " subgraph gives mlt >= " +
                             std::to_string(clique.size()),
                         {{"vertices", vertex_list_json(clique)},
                          {"bound", static_cast<int>(clique.size())}}});

    if (g.n <= kGrnStarCap) {
        int gs = grn_star(g, mix_seed(seed, 17));
        nlohmann::ordered_json payload{{"grn_star", gs}};
        std::string detail;
        if (gs >= 2) {
            out.lower = std::max(out.lower, gs + 2);
            payload["bound"] = gs + 2;
            detail = "globally " + std::to_string(gs) + "-rigid subgraph gives mlt >= " +
                     std::to_string(gs + 2);
        } else {
            detail = "no globally d-rigid subgraph certified for d >= 2";
        }
        out.trace.push_back({CertKind::GrnStarLower, detail, std::move(payload)});
    } else {
        out.trace.push_back({CertKind::GrnStarLower,
                             "skipped: n exceeds the grn* enumeration cap",
                             {{"skipped", true}, {"cap", kGrnStarCap}}});
    }

    for (int d = out.gcr - 2; d >= 1; --d) {
        if (d + 2 <= out.lower) break; // cannot improve the bound
        auto circ = find_circuit(g, d, mix_seed(seed, 19 + static_cast<std::uint64_t>(d)));
        if (!circ) throw std::logic_error("mlt_bounds: missing circuit below gcr");
        auto wit = circuit_psd_witness(circ->graph, d,
                                       mix_seed(seed, 23 + static_cast<std::uint64_t>(d)),
                                       kWitnessTrials);
        nlohmann::ordered_json payload{{"dim", d},
                                       {"circuit_support", vertex_list_json(circ->support)}};
        if (wit && wit->certified) {
            out.lower = std::max(out.lower, d + 2);
            payload["certified"] = true;
            payload["stress_rank"] = wit->report.rank;
            payload["bound"] = d + 2;
            out.trace.push_back({CertKind::CircuitPsdWitness,
                                 "certified PSD stress at dimension " + std::to_string(d) +
                                     " gives mlt >= " + std::to_string(d + 2),
                                 std::move(payload)});
            break; // higher dimensions were already tried
        }
        payload["certified"] = false;
        if (wit) payload["heuristic_rank"] = wit->report.rank;
        out.trace.push_back({CertKind::CircuitPsdWitness,
                             "no certified PSD stress found at dimension " + std::to_string(d),
                             std::move(payload)});
    }

    if (out.lower > out.upper) throw std::logic_error("mlt_bounds: lower bound exceeded gcr");
    return out;
}

CoreBounds analyze(const Graph& g, std::uint64_t seed) {
    if (g.n == 0) return {1, 1, 1, 0, {}};
    auto comps = connected_components(g);
    if (comps.size() <= 1) return analyze_connected(g, seed);

    CoreBounds out;
    nlohmann::ordered_json parts = nlohmann::ordered_json::array();
    int binding_depth = 0;
    for (std::size_t i = 0; i < comps.size(); ++i) {
        CoreBounds sub =
            analyze(induced_subgraph(g, comps[i]), mix_seed(seed, 29 + static_cast<std::uint64_t>(i)));
        nlohmann::ordered_json part{{"vertices", vertex_list_json(comps[i])},
                                    {"gcr", sub.gcr},
                                    {"mlt_lower", sub.lower},
                                    {"mlt_upper", sub.upper}};
        nlohmann::ordered_json sub_trace = nlohmann::ordered_json::array();
        for (const auto& c : sub.trace)
            sub_trace.push_back({{"kind", cert_kind_name(c.kind)},
                                 {"detail", c.detail},
                                 {"payload", c.payload}});
        part["trace"] = std::move(sub_trace);
        parts.push_back(std::move(part));
        if (sub.upper > out.upper) binding_depth = sub.cone_depth;
        out.gcr = std::max(out.gcr, sub.gcr);
        out.lower = std::max(out.lower, sub.lower);
        out.upper = std::max(out.upper, sub.upper);
    }
    out.cone_depth = binding_depth;
    out.trace.push_back({CertKind::ComponentSplit,
                         "per-component maximum (convention: a PSD stress on a component "
                         "extends by zeros)",
                         {{"components", std::move(parts)}}});
    return out;
}

} // namespace

MltReport mlt_bounds(const Graph& g, std::uint64_t seed) {
    CoreBounds core = analyze(g, seed);
    MltReport rep;
    rep.n = g.n;
    rep.m = g.m();
    rep.gcr = core.gcr;
    rep.mlt_lower = core.lower;
    rep.mlt_upper = core.upper;
    rep.exact = (core.lower == core.upper);
    rep.cone_depth = core.cone_depth;
    rep.trace = std::move(core.trace);
    rep.seed = seed;
    if (rep.mlt_lower > rep.mlt_upper) throw std::logic_error("mlt_bounds: inverted interval");
    return rep;
}

std::optional<bool> check_edge_monotonicity(const Graph& g, Edge e, std::uint64_t seed) {
    e = normalize_edge(e.first, e.second);
    if (g.has_edge(e.first, e.second))
        throw std::invalid_argument("check_edge_monotonicity: e is already an edge");
    MltReport base = mlt_bounds(g, seed);
    MltReport plus = mlt_bounds(add_edge(g, e), seed);
    if (!base.exact || !plus.exact) return std::nullopt;
    return base.mlt_lower <= plus.mlt_lower && plus.mlt_lower <= base.mlt_lower + 1;
}

} // namespace mlt
