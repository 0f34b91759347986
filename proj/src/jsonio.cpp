#include "mlt/jsonio.hpp"

#include "mlt/formats.hpp"

namespace mlt {

ordered_json rational_json(const Rational& q) {
    return q.get_str();
}

ordered_json graph_json(const Graph& g) {
    ordered_json edges = ordered_json::array();
    for (const auto& [u, v] : g.edges) edges.push_back({u, v});
    ordered_json j{{"n", g.n}, {"m", g.m()}, {"edges", std::move(edges)}};
    if (g.n <= 62) j["graph6"] = encode_graph6(g);
    return j;
}

ordered_json rank_profile_json(const RankProfile& p) {
    return ordered_json{{"dim", p.dim},
                        {"rank", p.rank},
                        {"target_rigid", p.target_rigid},
                        {"trials", p.trials},
                        {"primes", p.primes},
                        {"seed", p.seed}};
}

ordered_json framework_json(const Framework& f) {
    ordered_json pts = ordered_json::array();
    for (const auto& p : f.config) {
        ordered_json row = ordered_json::array();
        for (const auto& x : p) row.push_back(rational_json(x));
        pts.push_back(std::move(row));
    }
    return ordered_json{{"n", f.n()}, {"dim", f.dim}, {"points", std::move(pts)}};
}

ordered_json stress_json(const StressVector& w) {
    ordered_json entries = ordered_json::array();
    for (int e = 0; e < w.graph.m(); ++e)
        entries.push_back({{"edge", {w.graph.edges[e].first, w.graph.edges[e].second}},
                           {"weight", rational_json(w.w[e])}});
    return entries;
}

ordered_json inertia_json(const SymmetricDecomposition& dec) {
    return ordered_json{{"dimension", dec.dimension}, {"rank", dec.rank},
                        {"n_plus", dec.n_plus},      {"n_minus", dec.n_minus},
                        {"n_zero", dec.n_zero},      {"psd", dec.psd}};
}

ordered_json stress_report_json(const StressMatrixReport& rep) {
    return ordered_json{{"rank", rep.rank},
                        {"psd", rep.psd},
                        {"regular", rep.regular},
                        {"inertia", inertia_json(rep.inertia)}};
}

ordered_json witness_json(const PsdWitness& w) {
    return ordered_json{{"certified", w.certified},
                        {"report", stress_report_json(w.report)},
                        {"framework", framework_json(w.framework)},
                        {"stress", stress_json(w.stress)}};
}

ordered_json mlt_report_json(const MltReport& rep) {
    ordered_json trace = ordered_json::array();
    for (const auto& c : rep.trace)
        trace.push_back(
            {{"kind", cert_kind_name(c.kind)}, {"detail", c.detail}, {"payload", c.payload}});
    return ordered_json{{"n", rep.n},
                        {"m", rep.m},
                        {"gcr", rep.gcr},
                        {"mlt_lower", rep.mlt_lower},
                        {"mlt_upper", rep.mlt_upper},
                        {"exact", rep.exact},
                        {"cone_depth", rep.cone_depth},
                        {"trace", std::move(trace)},
                        {"seed", rep.seed}};
}

ordered_json fixture_report_json(const FixtureReport& rep) {
    ordered_json checks = ordered_json::array();
    for (const auto& c : rep.checks)
        checks.push_back(
            {{"label", c.label}, {"expected", c.expected}, {"got", c.got}, {"ok", c.ok}});
    return ordered_json{{"name", rep.name},
                        {"pass", rep.pass},
                        {"millis", rep.millis},
                        {"checks", std::move(checks)}};
}

} // namespace mlt
