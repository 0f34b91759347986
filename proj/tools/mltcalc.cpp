// mltcalc: rigidity-theoretic graph invariants and certified bounds for the
// maximum likelihood threshold of Gaussian graphical models.
//
// Exit codes: 0 success, 1 parse error, 2 enumeration cap exceeded or
// fixture mismatch, 3 unexpected internal error.

#include <atomic>
#include <condition_variable>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "mlt/bounds.hpp"
#include "mlt/fixtures.hpp"
#include "mlt/formats.hpp"
#include "mlt/jsonio.hpp"
#include "mlt/rng.hpp"

namespace {

constexpr std::uint64_t kDefaultSeed = 1729;

struct RunConfig {
    std::string input = "-";
    std::string format = "graph6";
    std::uint64_t seed = kDefaultSeed;
    int trials = 0; // 0: per-command default
    int dim = -1;
    std::string output = "json";
    int jobs = 0;
    bool deep_checks = true;
};

void add_common(CLI::App* cmd, RunConfig& cfg, bool with_dim) {
    cmd->add_option("input", cfg.input, "input path, or - for stdin")->capture_default_str();
    cmd->add_option("--format", cfg.format, "input format: graph6 | edgelist")
        ->check(CLI::IsMember({"graph6", "edgelist"}))
        ->capture_default_str();
    cmd->add_option("--seed", cfg.seed, "rng seed (fixed default keeps runs reproducible)")
        ->capture_default_str();
    cmd->add_option("--trials", cfg.trials, "search trial budget (command-specific default)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--output", cfg.output, "output: json | text")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    if (with_dim) cmd->add_option("--dim", cfg.dim, "dimension d")->required();
}

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw mlt::parse_error("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> nonempty_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        if (!line.empty()) lines.push_back(line);
    }
    return lines;
}

std::vector<mlt::Graph> read_graphs(const RunConfig& cfg) {
    const std::string text = slurp(cfg.input);
    std::vector<mlt::Graph> graphs;
    if (cfg.format == "edgelist") {
        graphs.push_back(mlt::parse_edge_list(text));
    } else {
        for (const auto& line : nonempty_lines(text)) graphs.push_back(mlt::parse_graph6(line));
    }
    if (graphs.empty()) throw mlt::parse_error("no graphs in input");
    return graphs;
}

void emit(const mlt::ordered_json& j) {
    std::cout << j.dump() << "\n";
}

int cmd_gcr(const RunConfig& cfg) {
    for (const auto& g : read_graphs(cfg)) {
        int value = mlt::gcr(g, cfg.seed);
        if (cfg.output == "text") {
            std::cout << value << "\n";
            continue;
        }
        mlt::ordered_json j{{"n", g.n}, {"m", g.m()}, {"gcr", value}, {"seed", cfg.seed}};
        if (g.m() == 0) j["note"] = "edgeless: gcr 1 by the d = 0 convention";
        emit(j);
    }
    return 0;
}

int cmd_mlt(const RunConfig& cfg) {
    for (const auto& g : read_graphs(cfg)) {
        mlt::MltReport rep = mlt::mlt_bounds(g, cfg.seed);
        if (cfg.output == "text")
            std::cout << "mlt in [" << rep.mlt_lower << ", " << rep.mlt_upper << "] gcr "
                      << rep.gcr << (rep.exact ? " exact" : "") << "\n";
        else emit(mlt::mlt_report_json(rep));
    }
    return 0;
}

int cmd_rigid(const RunConfig& cfg) {
    const int trials = cfg.trials ? cfg.trials : mlt::kDefaultRankTrials;
    for (const auto& g : read_graphs(cfg)) {
        auto prof = mlt::generic_rank(g, cfg.dim, cfg.seed, trials);
        bool rigid = (g.n <= cfg.dim + 1) ? g.m() == g.n * (g.n - 1) / 2
                                          : prof.rank == prof.target_rigid;
        bool redundant = rigid && mlt::is_redundantly_rigid(g, cfg.dim, cfg.seed);
        if (cfg.output == "text") std::cout << (rigid ? "true" : "false") << "\n";
        else
            emit({{"n", g.n},
                  {"m", g.m()},
                  {"dim", cfg.dim},
                  {"rigid", rigid},
                  {"redundantly_rigid", redundant},
                  {"profile", mlt::rank_profile_json(prof)}});
    }
    return 0;
}

int cmd_circuit(const RunConfig& cfg) {
    for (const auto& g : read_graphs(cfg)) {
        auto circ = mlt::find_circuit(g, cfg.dim, cfg.seed);
        if (cfg.output == "text") {
            std::cout << (circ ? mlt::encode_graph6(circ->graph) : "none") << "\n";
            continue;
        }
        mlt::ordered_json j{{"n", g.n}, {"m", g.m()}, {"dim", cfg.dim}, {"found", bool(circ)}};
        if (circ) {
            j["support"] = circ->support;
            j["circuit"] = mlt::graph_json(circ->graph);
        }
        emit(j);
    }
    return 0;
}

int cmd_globally_rigid(const RunConfig& cfg) {
    const int trials = cfg.trials ? cfg.trials : 8;
    for (const auto& g : read_graphs(cfg)) {
        auto verdict = mlt::global_rigidity_test(g, cfg.dim, cfg.seed, trials);
        const char* name = verdict == mlt::GlobalRigidity::certified ? "globally_rigid_certified"
                           : verdict == mlt::GlobalRigidity::not_rigid ? "not_rigid"
                                                                       : "not_certified";
        if (cfg.output == "text") std::cout << name << "\n";
        else emit({{"n", g.n}, {"m", g.m()}, {"dim", cfg.dim}, {"verdict", name}, {"seed", cfg.seed}});
    }
    return 0;
}

int cmd_stress(const RunConfig& cfg) {
    for (const auto& g : read_graphs(cfg)) {
        mlt::Framework f = mlt::random_framework(g, cfg.dim, cfg.seed);
        auto basis = mlt::stress_basis(f);
        mlt::ordered_json j{{"n", g.n},
                            {"m", g.m()},
                            {"dim", cfg.dim},
                            {"seed", cfg.seed},
                            {"stress_space_dim", basis.size()}};
        if (!basis.empty()) {
            // audit record: framework + stress + inertia, sign-normalized
            mlt::StressVector w = basis.front();
            auto rep = mlt::analyze_stress(f, w, cfg.seed);
            if (rep.inertia.n_minus > rep.inertia.n_plus) {
                w = w.negated();
                rep = mlt::analyze_stress(f, w, cfg.seed);
            }
            mlt::PsdWitness sample{f, w, rep,
                                   rep.psd && rep.regular && !w.is_zero() &&
                                       rep.rank == g.n - cfg.dim - 1};
            j["sample"] = mlt::witness_json(sample);
        }
        if (cfg.output == "text") std::cout << "stress space dimension " << basis.size() << "\n";
        else emit(j);
    }
    return 0;
}

int cmd_verify_fixtures(const RunConfig& cfg, const std::string& corrupt) {
    bool all_ok = true;
    double total_ms = 0;
    mlt::ordered_json out = mlt::ordered_json::array();
    for (const auto& name : mlt::fixture_names()) {
        mlt::FixtureReport rep;
        if (name == corrupt) {
            mlt::Framework f = mlt::reference_fixture(name);
            f.config[0] = f.config[1]; // negative control: collapsed points
            rep = mlt::verify_fixture_framework(name, f);
        } else {
            rep = mlt::verify_fixture(name);
        }
        total_ms += rep.millis;
        all_ok = all_ok && rep.pass;
        if (cfg.output == "text") {
            std::cout << (rep.pass ? "PASS " : "FAIL ") << rep.name << " ("
                      << static_cast<long>(rep.millis) << " ms)\n";
            if (!rep.pass)
                for (const auto& c : rep.checks)
                    if (!c.ok)
                        std::cout << "  " << c.label << ": expected " << c.expected << ", got "
                                  << c.got << "\n";
        } else {
            out.push_back(mlt::fixture_report_json(rep));
        }
    }
    if (cfg.output == "text") std::cout << "total " << static_cast<long>(total_ms) << " ms\n";
    else emit({{"fixtures", out}, {"pass", all_ok}, {"total_millis", total_ms}});
    return all_ok ? 0 : 2;
}

struct CensusCounters {
    std::atomic<long> malformed{0};
    std::atomic<long> processed{0};
    std::atomic<long> inexact{0};
    std::atomic<long> grn_checks{0};
    std::atomic<long> grn_violations{0};
    std::atomic<long> witness_checks{0};
    std::atomic<long> witness_violations{0};
    std::atomic<long> cone_checks{0};
    std::atomic<long> cone_violations{0};
    std::atomic<long> mono_checks{0};
    std::atomic<long> mono_violations{0};
    std::mutex maps_mutex;
    std::map<std::string, long> rule_counts;
    std::map<int, long> gcr_histogram;
};

std::string census_rule(const mlt::MltReport& rep) {
    for (const auto& c : rep.trace) {
        switch (c.kind) {
            case mlt::CertKind::TheoremEquality:
            case mlt::CertKind::TheoremSmall:
            case mlt::CertKind::TheoremFewEdges:
            case mlt::CertKind::TheoremNearComplete:
            case mlt::CertKind::TheoremDegreeBounded:
                return mlt::cert_kind_name(c.kind);
            case mlt::CertKind::ComponentSplit:
                return "ComponentSplit";
            default:
                break;
        }
    }
    return rep.exact ? "other_exact" : "inexact";
}

int cmd_census(const RunConfig& cfg) {
    const auto lines = nonempty_lines(slurp(cfg.input));
    const std::size_t total = lines.size();

    // deterministic samples for the cone-identity and edge-monotonicity spot
    // checks (200 each)
    std::vector<char> cone_sample(total, 0), mono_sample(total, 0);
    {
        std::vector<std::size_t> idx(total);
        for (std::size_t i = 0; i < total; ++i) idx[i] = i;
        mlt::Rng rng(mlt::mix_seed(cfg.seed, 0xC0DE));
        for (std::size_t i = total; i > 1; --i) std::swap(idx[i - 1], idx[rng.below(i)]);
        for (std::size_t i = 0; i < std::min<std::size_t>(200, total); ++i) cone_sample[idx[i]] = 1;
        for (std::size_t i = total; i > 1; --i) std::swap(idx[i - 1], idx[rng.below(i)]);
        for (std::size_t i = 0; i < std::min<std::size_t>(200, total); ++i) mono_sample[idx[i]] = 1;
    }

    CensusCounters counters;
    std::vector<std::string> results(total);
    std::vector<char> done(total, 0);
    std::mutex emit_mutex;
    std::condition_variable emit_cv;
    std::atomic<std::size_t> next_task{0};

    auto worker = [&]() {
        for (;;) {
            const std::size_t i = next_task.fetch_add(1);
            if (i >= total) return;
            std::string out_line;
            try {
                mlt::Graph g = mlt::parse_graph6(lines[i]);
                const std::uint64_t gseed = mlt::mix_seed(cfg.seed, i);
                mlt::MltReport rep = mlt::mlt_bounds(g, gseed);
                out_line = mlt::mlt_report_json(rep).dump();
                counters.processed.fetch_add(1);
                if (!rep.exact) counters.inexact.fetch_add(1);
                {
                    std::lock_guard lock(counters.maps_mutex);
                    ++counters.rule_counts[census_rule(rep)];
                    ++counters.gcr_histogram[rep.gcr];
                }
                if (cfg.deep_checks) {
                    if (g.n <= mlt::kGrnStarCap) {
                        int gs = mlt::grn_star(g, mlt::mix_seed(gseed, 1));
                        counters.grn_checks.fetch_add(1);
                        if (gs >= 2 && gs + 2 > rep.gcr) counters.grn_violations.fetch_add(1);
                    }
                    for (int d = 1; d <= rep.gcr - 2; ++d) {
                        auto circ = mlt::find_circuit(g, d, mlt::mix_seed(gseed, 2 + d));
                        if (!circ) continue;
                        auto wit = mlt::circuit_psd_witness(circ->graph, d,
                                                            mlt::mix_seed(gseed, 40 + d), 16);
                        if (wit && wit->certified) {
                            counters.witness_checks.fetch_add(1);
                            bool dependent = !mlt::is_d_independent(g, d, mlt::mix_seed(gseed, 60 + d));
                            if (!dependent || d + 2 > rep.gcr) counters.witness_violations.fetch_add(1);
                        }
                    }
                    if (cone_sample[i]) {
                        counters.cone_checks.fetch_add(1);
                        mlt::MltReport coned = mlt::mlt_bounds(mlt::cone(g), gseed);
                        if (coned.gcr != rep.gcr + 1 || coned.mlt_lower != rep.mlt_lower + 1 ||
                            coned.mlt_upper != rep.mlt_upper + 1)
                            counters.cone_violations.fetch_add(1);
                    }
                    if (mono_sample[i]) {
                        mlt::Graph comp = mlt::complement(g);
                        if (comp.m() > 0) {
                            mlt::Edge e = comp.edges[mlt::mix_seed(gseed, 3) % comp.m()];
                            auto ok = mlt::check_edge_monotonicity(g, e, gseed);
                            if (ok.has_value()) {
                                counters.mono_checks.fetch_add(1);
                                if (!*ok) counters.mono_violations.fetch_add(1);
                            }
                        }
                    }
                }
            } catch (const mlt::parse_error& err) {
                counters.malformed.fetch_add(1);
                out_line = mlt::ordered_json{{"malformed", true}, {"error", err.what()}}.dump();
            }
            {
                std::lock_guard lock(emit_mutex);
                results[i] = std::move(out_line);
                done[i] = 1;
            }
            emit_cv.notify_all();
        }
    };

    unsigned jobs = cfg.jobs > 0 ? static_cast<unsigned>(cfg.jobs)
                                 : std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(worker);

    // reorder buffer: print each line as soon as its prefix is complete
    {
        std::unique_lock lock(emit_mutex);
        for (std::size_t i = 0; i < total; ++i) {
            emit_cv.wait(lock, [&] { return done[i] == 1; });
            std::cout << results[i] << "\n";
            results[i].clear();
        }
    }
    for (auto& t : pool) t.join();

    mlt::ordered_json rules, hist;
    for (const auto& [k, v] : counters.rule_counts) rules[k] = v;
    for (const auto& [k, v] : counters.gcr_histogram) hist[std::to_string(k)] = v;
    mlt::ordered_json summary{
        {"graphs", counters.processed.load()},
        {"malformed", counters.malformed.load()},
        {"inexact", counters.inexact.load()},
        {"rules", rules},
        {"gcr_histogram", hist},
        {"checks",
         {{"grn_star", counters.grn_checks.load()},
          {"certified_witnesses", counters.witness_checks.load()},
          {"cone_identity", counters.cone_checks.load()},
          {"edge_monotonicity", counters.mono_checks.load()}}},
        {"violations",
         {{"grn_star_le_gcr", counters.grn_violations.load()},
          {"witness_implies_dependence", counters.witness_violations.load()},
          {"cone_identity", counters.cone_violations.load()},
          {"edge_monotonicity", counters.mono_violations.load()}}}};
    emit({{"summary", summary}});
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"rigidity-theoretic graph invariants and certified MLT bounds"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string corrupt;

    auto* gcr_cmd = app.add_subcommand("gcr", "generic completion rank");
    add_common(gcr_cmd, cfg, false);
    auto* mlt_cmd = app.add_subcommand("mlt", "certified MLT bounds with trace");
    add_common(mlt_cmd, cfg, false);
    auto* rigid_cmd = app.add_subcommand("rigid", "generic d-rigidity");
    add_common(rigid_cmd, cfg, true);
    auto* circuit_cmd = app.add_subcommand("circuit", "find a d-circuit");
    add_common(circuit_cmd, cfg, true);
    auto* gr_cmd = app.add_subcommand("globally-rigid", "randomized global rigidity certificate");
    add_common(gr_cmd, cfg, true);
    auto* stress_cmd = app.add_subcommand("stress", "stress space at a random framework");
    add_common(stress_cmd, cfg, true);
    auto* verify_cmd = app.add_subcommand("verify-fixtures", "verify the built-in reference fixtures");
    verify_cmd->add_option("--output", cfg.output, "output: json | text")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    verify_cmd->add_option("--corrupt", corrupt, "perturb the named fixture (negative control)");
    auto* census_cmd = app.add_subcommand("census", "JSONL reports plus invariant summary");
    add_common(census_cmd, cfg, false);
    census_cmd->add_option("--jobs", cfg.jobs, "worker threads (default: hardware)");
    census_cmd->add_flag("!--no-checks", cfg.deep_checks, "skip the census invariant checks");

    CLI11_PARSE(app, argc, argv);

    std::cerr << "# seed " << cfg.seed << "\n";
    try {
        if (gcr_cmd->parsed()) return cmd_gcr(cfg);
        if (mlt_cmd->parsed()) return cmd_mlt(cfg);
        if (rigid_cmd->parsed()) return cmd_rigid(cfg);
        if (circuit_cmd->parsed()) return cmd_circuit(cfg);
        if (gr_cmd->parsed()) return cmd_globally_rigid(cfg);
        if (stress_cmd->parsed()) return cmd_stress(cfg);
        if (verify_cmd->parsed()) return cmd_verify_fixtures(cfg, corrupt);
        if (census_cmd->parsed()) return cmd_census(cfg);
    } catch (const mlt::parse_error& err) {
        std::cerr << "parse error: " << err.what() << "\n";
        return 1;
    } catch (const mlt::cap_error& err) {
        std::cerr << "cap exceeded: " << err.what() << "\n";
        return 2;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 3;
    }
    return 0;
}
