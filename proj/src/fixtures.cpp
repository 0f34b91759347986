#include "mlt/fixtures.hpp"

#include <chrono>
#include <stdexcept>

namespace mlt {

namespace {

Graph k9_minus_cycles(const std::vector<std::vector<int>>& cycles) {
    Graph g = complete_graph(9);
    for (const auto& cyc : cycles)
        for (std::size_t i = 0; i < cyc.size(); ++i)
            g = remove_edge(g, {cyc[i], cyc[(i + 1) % cyc.size()]});
    return g;
}

std::vector<std::vector<Rational>> int_config(const std::vector<std::vector<long>>& pts) {
    std::vector<std::vector<Rational>> cfg;
    for (const auto& p : pts) {
        std::vector<Rational> row;
        for (long x : p) row.push_back(Rational(x));
        cfg.push_back(std::move(row));
    }
    return cfg;
}

// shared 4D configuration for G1..G4
const std::vector<std::vector<long>> kConfig4d = {
    {0, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 4, -1},  {0, 2, 3, 5},  {1, -1, 0, -2},
    {1, 3, 7, 0}, {2, -4, -1, 1}, {-9, 0, 2, 11}, {-3, 3, 1, 6},
};

// 0..8 = a1 a2 b1 b2 b3 b4 c1 c2 c3
const std::vector<Edge> kAppendixEdges = {
    {0, 1}, {0, 6}, {0, 7}, {0, 8}, {1, 6}, {1, 7}, {1, 8},
    {2, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5},
    {2, 6}, {2, 7}, {3, 6}, {3, 7}, {3, 8}, {4, 6}, {4, 8}, {5, 7}, {5, 8},
};

const std::vector<std::vector<long>> kConfig3d = {
    {-42, -45, -40}, {44, 48, 44}, {9, -1, -7}, {-8, -8, 3}, {-1, -4, -5},
    {3, -7, 3},      {1, -1, 9},   {-3, -3, -4}, {-5, -10, -6},
};

} // namespace

const std::vector<std::string>& fixture_names() {
    static const std::vector<std::string> names = {"G1", "G2", "G3", "G4", "appendix_3d"};
    return names;
}

Framework reference_fixture(const std::string& name) {
    if (name == "G1")
        return {k9_minus_cycles({{0, 1, 2, 3, 4, 5, 6, 7, 8}}), 4, int_config(kConfig4d)};
    if (name == "G2")
        return {k9_minus_cycles({{0, 1, 2, 3, 4, 5}, {6, 7, 8}}), 4, int_config(kConfig4d)};
    if (name == "G3")
        return {k9_minus_cycles({{0, 1, 2, 3, 4}, {5, 6, 7, 8}}), 4, int_config(kConfig4d)};
    if (name == "G4")
        return {k9_minus_cycles({{0, 1, 2}, {3, 4, 5}, {6, 7, 8}}), 4, int_config(kConfig4d)};
    if (name == "appendix_3d")
        return {Graph::from_edges(9, kAppendixEdges), 3, int_config(kConfig3d)};
    throw std::invalid_argument("reference_fixture: unknown fixture " + name);
}

Graph double_banana() {
    return deleted_ksum(complete_graph(5), complete_graph(5), {{0, 0}, {1, 1}}, {0, 1});
}

namespace {

void add_check(FixtureReport& rep, const std::string& label, long expected, long got) {
    rep.checks.push_back(
        {label, std::to_string(expected), std::to_string(got), expected == got});
}

void add_flag_check(FixtureReport& rep, const std::string& label, bool expected, bool got) {
    auto str = [](bool b) { return b ? std::string("true") : std::string("false"); };
    rep.checks.push_back({label, str(expected), str(got), expected == got});
}

} // namespace

FixtureReport verify_fixture_framework(const std::string& name, const Framework& f) {
    const auto start = std::chrono::steady_clock::now();
    FixtureReport rep;
    rep.name = name;

    const int n = f.n();
    RatMat r = rigidity_matrix(f);
    const int rank_target = (name == "appendix_3d") ? 3 * n - 6 : 4 * n - 10;
    add_check(rep, "rigidity matrix rank", rank_target, rank(r));

    auto basis = kernel(r.transposed());
    add_check(rep, "stress space dimension", 1, static_cast<long>(basis.size()));

    if (basis.size() == 1) {
        StressVector w{f.graph, basis[0]};
        auto dec = symmetric_inertia(stress_matrix(f.graph, w));
        if (dec.n_minus > dec.n_plus) {
            w = w.negated();
            std::swap(dec.n_plus, dec.n_minus);
            dec.psd = (dec.n_minus == 0);
        }
        add_check(rep, "stress matrix rank", 4, dec.rank);
        if (name == "appendix_3d") add_flag_check(rep, "stress matrix PSD", true, dec.psd);
        add_flag_check(rep, "equilibrium", true, equilibrium_holds(f, w.w));
    }

    rep.pass = true;
    for (const auto& c : rep.checks) rep.pass = rep.pass && c.ok;
    rep.millis =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

FixtureReport verify_fixture(const std::string& name) {
    return verify_fixture_framework(name, reference_fixture(name));
}

} // namespace mlt
