#include "mlt/stress.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "mlt/rng.hpp"

namespace mlt {

bool StressVector::is_zero() const {
    for (const auto& x : w)
        if (x != 0) return false;
    return true;
}

const Rational& StressVector::weight_on(Edge e) const {
    e = normalize_edge(e.first, e.second);
    auto it = std::lower_bound(graph.edges.begin(), graph.edges.end(), e);
    if (it == graph.edges.end() || *it != e)
        throw std::invalid_argument("weight_on: edge not in graph");
    return w[static_cast<std::size_t>(it - graph.edges.begin())];
}

StressVector StressVector::scaled(const Rational& factor) const {
    StressVector out{graph, w};
    for (auto& x : out.w) x *= factor;
    return out;
}

StressVector StressVector::negated() const {
    return scaled(Rational(-1));
}

bool equilibrium_holds(const Framework& f, const std::vector<Rational>& w) {
    if (static_cast<int>(w.size()) != f.graph.m()) return false;
    const int d = f.dim;
    std::vector<std::vector<Rational>> acc(f.n(), std::vector<Rational>(d, Rational(0)));
    for (int e = 0; e < f.graph.m(); ++e) {
        if (w[e] == 0) continue;
        const auto& [u, v] = f.graph.edges[e];
        for (int k = 0; k < d; ++k) {
            Rational diff = f.config[v][k] - f.config[u][k];
            acc[u][k] += w[e] * diff;
            acc[v][k] -= w[e] * diff;
        }
    }
    for (const auto& row : acc)
        for (const auto& x : row)
            if (x != 0) return false;
    return true;
}

StressVector make_stress(const Framework& f, std::vector<Rational> w) {
    if (!equilibrium_holds(f, w))
        throw std::invalid_argument("make_stress: equilibrium violated");
    return StressVector{f.graph, std::move(w)};
}

namespace {

constexpr std::int64_t kCoordRange = 1 << 20;

std::vector<Rational> random_point(int d, Rng& rng) {
    std::vector<Rational> p(d);
    for (auto& x : p) x = Rational(static_cast<long>(rng.int_in(-kCoordRange, kCoordRange)));
    return p;
}

} // namespace

Framework random_framework(const Graph& g, int d, std::uint64_t seed) {
    if (d < 1) throw std::invalid_argument("random_framework: d < 1");
    Rng rng(seed);
    std::set<std::vector<Rational>> seen;
    Framework f{g, d, {}};
    while (static_cast<int>(f.config.size()) < g.n) {
        auto p = random_point(d, rng);
        if (seen.insert(p).second) f.config.push_back(std::move(p));
    }
    return f;
}

std::vector<StressVector> stress_basis(const Framework& f) {
    RatMat r = rigidity_matrix(f);
    std::vector<StressVector> out;
    for (auto& v : kernel(r.transposed())) out.push_back(make_stress(f, std::move(v)));
    return out;
}

RatMat stress_matrix(const Graph& g, const StressVector& w) {
    if (w.graph.n != g.n || static_cast<int>(w.w.size()) != g.m())
        throw std::invalid_argument("stress_matrix: support mismatch");
    for (int e = 0; e < g.m(); ++e)
        if (w.w[e] != 0 && !g.has_edge(w.graph.edges[e].first, w.graph.edges[e].second))
            throw std::invalid_argument("stress_matrix: support not inside the edge set");
    RatMat o(g.n, g.n);
    for (int e = 0; e < g.m(); ++e) {
        const auto& [u, v] = w.graph.edges[e];
        o.at(u, v) -= w.w[e];
        o.at(v, u) -= w.w[e];
        o.at(u, u) += w.w[e];
        o.at(v, v) += w.w[e];
    }
    return o;
}

StressMatrixReport analyze_stress(const Framework& f, const StressVector& w, std::uint64_t seed) {
    if (!(w.graph == f.graph))
        throw std::invalid_argument("analyze_stress: stress and framework graphs differ");
    if (!equilibrium_holds(f, w.w))
        throw std::invalid_argument("analyze_stress: equilibrium violated");
    StressMatrixReport rep;
    rep.omega = w;
    rep.inertia = symmetric_inertia(stress_matrix(f.graph, w));
    rep.rank = rep.inertia.rank;
    rep.psd = rep.inertia.psd;
    rep.regular = rank(rigidity_matrix(f)) == generic_rank(f.graph, f.dim, seed).rank;
    return rep;
}

namespace {

bool is_complete(const Graph& g) {
    return g.m() == g.n * (g.n - 1) / 2;
}

} // namespace

GlobalRigidity global_rigidity_test(const Graph& g, int d, std::uint64_t seed, int trials) {
    if (g.n <= d + 1) return is_complete(g) ? GlobalRigidity::certified : GlobalRigidity::not_rigid;
    const int target = rigid_rank_target(g.n, d);
    if (generic_rank(g, d, mix_seed(seed, 1)).rank < target) return GlobalRigidity::not_rigid;
    if (is_complete(g)) return GlobalRigidity::certified;
    if (g.m() == target) return GlobalRigidity::not_certified; // no nonzero stress at regular points

    const int want = g.n - d - 1;
    for (int t = 0; t < trials; ++t) {
        Rng rng(mix_seed(seed, 100 + static_cast<std::uint64_t>(t)));
        Framework f = random_framework(g, d, rng.next());
        RatMat r = rigidity_matrix(f);
        if (rank(r) != target) continue; // irregular sample
        auto basis = kernel(r.transposed());

        std::vector<std::vector<Rational>> candidates = basis;
        for (int extra = 0; extra < 2 && basis.size() > 1; ++extra) {
            std::vector<Rational> mixv(basis[0].size(), Rational(0));
            for (const auto& b : basis) {
                long c = rng.int_in(-99, 99);
                if (c == 0) c = 1;
                for (std::size_t i = 0; i < mixv.size(); ++i) mixv[i] += Rational(c) * b[i];
            }
            candidates.push_back(std::move(mixv));
        }
        for (auto& cand : candidates) {
            StressVector w{g, cand};
            if (w.is_zero()) continue;
            if (rank(stress_matrix(g, w)) == want) return GlobalRigidity::certified;
        }
    }
    return GlobalRigidity::not_certified;
}

namespace {

void require_circuit(const Graph& g, int d, std::uint64_t seed) {
    if (generic_rank(g, d, mix_seed(seed, 41)).rank != g.m() - 1)
        throw std::invalid_argument("circuit_psd_witness: graph is not a d-circuit");
    for (const auto& e : g.edges) {
        Graph h = remove_edge(g, e);
        if (generic_rank(h, d, mix_seed(seed, 43)).rank != h.m())
            throw std::invalid_argument("circuit_psd_witness: graph is not a d-circuit");
    }
}

SymmetricDecomposition flipped(SymmetricDecomposition dec) {
    std::swap(dec.n_plus, dec.n_minus);
    dec.psd = (dec.n_minus == 0);
    return dec;
}

} // namespace

std::optional<PsdWitness> circuit_psd_witness(const Graph& g, int d, std::uint64_t seed,
                                              int trials) {
    require_circuit(g, d, seed);
    const int want = g.n - d - 1;
    for (int t = 0; t < trials; ++t) {
        Framework f = random_framework(g, d, mix_seed(seed, 1000 + static_cast<std::uint64_t>(t)));
        auto basis = kernel(rigidity_matrix(f).transposed());
        if (basis.size() != 1) continue; // irregular sample
        StressVector w{g, basis[0]};
        auto dec = symmetric_inertia(stress_matrix(g, w));
        if (dec.n_minus > dec.n_plus) {
            w = w.negated();
            dec = flipped(dec);
        }
        if (!dec.psd || dec.rank == 0) continue;
        PsdWitness wit;
        wit.framework = std::move(f);
        wit.stress = w;
        wit.report.omega = w;
        wit.report.inertia = dec;
        wit.report.rank = dec.rank;
        wit.report.psd = true;
        wit.report.regular = true; // corank exactly 1 means the sample attains the generic rank
        wit.certified = (dec.rank == want);
        return wit;
    }
    return std::nullopt;
}

StressVector scale_stress_for_lift(const StressVector& w, Edge xy, bool preserve_psd) {
    const Rational& s = w.weight_on(xy);
    if (s == 0) throw std::invalid_argument("scale_stress_for_lift: stress vanishes on xy");
    Rational factor = Rational(-1) / s;
    if (preserve_psd && factor < 0)
        throw std::invalid_argument(
            "scale_stress_for_lift: negative scaling would flip the PSD sign");
    return w.scaled(factor);
}

LiftResult lift_one_extension(const Framework& f, const StressVector& w, Edge xy,
                              const VertexSet& extra, const Rational& t) {
    if (!(w.graph == f.graph))
        throw std::invalid_argument("lift_one_extension: stress and framework graphs differ");
    if (!equilibrium_holds(f, w.w))
        throw std::invalid_argument("lift_one_extension: equilibrium violated");
    xy = normalize_edge(xy.first, xy.second);
    const Rational& wxy = w.weight_on(xy);
    if (wxy == 0) throw std::invalid_argument("lift_one_extension: stress vanishes on xy");
    if (wxy != -1)
        throw std::invalid_argument("lift_one_extension: scale so that w_xy = -1 first");
    if (t == 0 || t == 1) throw std::invalid_argument("lift_one_extension: degenerate t");

    const int d = f.dim;
    const int z = f.graph.n;
    Graph gp = one_extension(f.graph, d, xy, extra);

    Framework fp{gp, d, f.config};
    std::vector<Rational> pz(d);
    for (int k = 0; k < d; ++k)
        pz[k] = t * f.config[xy.first][k] + (1 - t) * f.config[xy.second][k];
    fp.config.push_back(std::move(pz));

    std::map<Edge, Rational> old_w;
    for (int e = 0; e < f.graph.m(); ++e) old_w[f.graph.edges[e]] = w.w[e];

    std::vector<Rational> wp;
    wp.reserve(gp.m());
    const Edge xz = normalize_edge(xy.first, z);
    const Edge yz = normalize_edge(xy.second, z);
    for (const auto& e : gp.edges) {
        if (e == xz) wp.push_back(Rational(-1) / (1 - t));
        else if (e == yz) wp.push_back(Rational(-1) / t);
        else if (e.second == z) wp.push_back(Rational(0));
        else wp.push_back(old_w.at(e));
    }
    if (!equilibrium_holds(fp, wp))
        throw std::logic_error("lift_one_extension: lifted stress lost equilibrium");

    StressVector sp{gp, std::move(wp)};
    const int rank_before = rank(stress_matrix(f.graph, w));
    const int rank_after = rank(stress_matrix(gp, sp));
    if (rank_after != rank_before + 1)
        throw std::logic_error("lift_one_extension: rank step violated");
    return LiftResult{std::move(fp), std::move(sp), t};
}

std::optional<LiftResult> lift_one_extension_psd(const Framework& f, const StressVector& w,
                                                 Edge xy, const VertexSet& extra) {
    if (!symmetric_inertia(stress_matrix(f.graph, w)).psd)
        throw std::invalid_argument("lift_one_extension_psd: input stress is not PSD");
    for (long tv = 2; tv <= (1 << 16); tv *= 2) {
        LiftResult res = lift_one_extension(f, w, xy, extra, Rational(tv));
        if (symmetric_inertia(stress_matrix(res.framework.graph, res.stress)).psd) return res;
    }
    return std::nullopt;
}

namespace {

struct GlueLabels {
    int k = 0;
    int n_glued = 0;
    std::vector<std::vector<int>> map; // per part: part vertex -> glued label
};

GlueLabels glue_labels(const std::vector<const Graph*>& graphs,
                       const std::vector<std::vector<int>>& shared) {
    if (graphs.size() < 2) throw std::invalid_argument("glue: need at least two parts");
    GlueLabels out;
    out.k = static_cast<int>(shared[0].size());
    if (out.k < 2) throw std::invalid_argument("glue: shared clique needs k >= 2");
    out.n_glued = out.k;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        const Graph& g = *graphs[i];
        if (static_cast<int>(shared[i].size()) != out.k)
            throw std::invalid_argument("glue: shared lists disagree on k");
        std::vector<int> m(g.n, -1);
        for (int s = 0; s < out.k; ++s) {
            int v = shared[i][s];
            if (v < 0 || v >= g.n) throw std::invalid_argument("glue: shared vertex out of range");
            if (m[v] >= 0) throw std::invalid_argument("glue: repeated shared vertex");
            m[v] = s;
        }
        for (int a = 0; a < out.k; ++a)
            for (int b = a + 1; b < out.k; ++b)
                if (!g.has_edge(shared[i][a], shared[i][b]))
                    throw std::invalid_argument("glue: shared set is not a clique in every part");
        for (int v = 0; v < g.n; ++v)
            if (m[v] < 0) m[v] = out.n_glued++;
        out.map.push_back(std::move(m));
    }
    return out;
}

} // namespace

Graph glued_graph(const std::vector<const Graph*>& part_graphs,
                  const std::vector<std::vector<int>>& shared_lists,
                  const std::vector<Edge>& drop_slots) {
    GlueLabels labels = glue_labels(part_graphs, shared_lists);
    std::set<Edge> edges;
    for (std::size_t i = 0; i < part_graphs.size(); ++i)
        for (const auto& [u, v] : part_graphs[i]->edges)
            edges.insert(normalize_edge(labels.map[i][u], labels.map[i][v]));
    for (Edge e : drop_slots) {
        e = normalize_edge(e.first, e.second);
        if (e.first < 0 || e.second >= labels.k)
            throw std::invalid_argument("glue: drop edge outside the shared clique");
        if (!edges.erase(e)) throw std::invalid_argument("glue: drop edge repeated or absent");
    }
    return Graph::from_edges(labels.n_glued, {edges.begin(), edges.end()});
}

namespace {

bool affinely_independent(const std::vector<std::vector<Rational>>& pts) {
    if (pts.empty()) return true;
    const int d = static_cast<int>(pts[0].size());
    RatMat diff(static_cast<int>(pts.size()) - 1, d);
    for (std::size_t i = 1; i < pts.size(); ++i)
        for (int k = 0; k < d; ++k) diff.at(static_cast<int>(i) - 1, k) = pts[i][k] - pts[0][k];
    return rank(diff) == static_cast<int>(pts.size()) - 1;
}

// solve A X = B for square nonsingular A
RatMat solve_linear(RatMat a, RatMat b) {
    const int n = a.rows();
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int i = c; i < n; ++i)
            if (a.at(i, c) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) throw std::invalid_argument("solve_linear: singular system");
        if (piv != c) {
            for (int j = 0; j < n; ++j) std::swap(a.at(c, j), a.at(piv, j));
            for (int j = 0; j < b.cols(); ++j) std::swap(b.at(c, j), b.at(piv, j));
        }
        Rational inv = 1 / a.at(c, c);
        for (int j = 0; j < n; ++j) a.at(c, j) *= inv;
        for (int j = 0; j < b.cols(); ++j) b.at(c, j) *= inv;
        for (int i = 0; i < n; ++i) {
            if (i == c || a.at(i, c) == 0) continue;
            Rational f = a.at(i, c);
            for (int j = 0; j < n; ++j) a.at(i, j) -= f * a.at(c, j);
            for (int j = 0; j < b.cols(); ++j) b.at(i, j) -= f * b.at(c, j);
        }
    }
    return b;
}

// affine map determined by d+1 affinely independent source points and their
// targets; applies to arbitrary points as [p, 1] * X
struct AffineMap {
    RatMat x; // (d+1) x d

    std::vector<Rational> apply(const std::vector<Rational>& p) const {
        const int d = x.cols();
        std::vector<Rational> out(d, Rational(0));
        for (int k = 0; k < d; ++k) {
            Rational acc = x.at(x.rows() - 1, k);
            for (int j = 0; j < d; ++j) acc += p[j] * x.at(j, k);
            out[k] = acc;
        }
        return out;
    }
};

AffineMap affine_from_points(const std::vector<std::vector<Rational>>& src,
                             const std::vector<std::vector<Rational>>& dst) {
    const int d = static_cast<int>(src[0].size());
    RatMat a(d + 1, d + 1), b(d + 1, d);
    for (int i = 0; i <= d; ++i) {
        for (int j = 0; j < d; ++j) a.at(i, j) = src[i][j];
        a.at(i, d) = 1;
        for (int j = 0; j < d; ++j) b.at(i, j) = dst[i][j];
    }
    return AffineMap{solve_linear(std::move(a), std::move(b))};
}

// extend `pts` with random integer points until the set of size d+1 is
// affinely independent
bool extend_to_affine_basis(std::vector<std::vector<Rational>>& pts, int d, Rng& rng) {
    for (int guard = 0; guard < 64; ++guard) {
        while (static_cast<int>(pts.size()) < d + 1) pts.push_back(random_point(d, rng));
        if (affinely_independent(pts)) return true;
        pts.pop_back();
    }
    return false;
}

std::optional<std::vector<Rational>> positive_combination(const RatMat& constraints, Rng& rng) {
    auto basis = kernel(constraints);
    if (basis.empty()) return std::nullopt;
    auto all_positive = [](const std::vector<Rational>& v) {
        for (const auto& x : v)
            if (x <= 0) return false;
        return true;
    };
    if (basis.size() == 1) {
        if (all_positive(basis[0])) return basis[0];
        std::vector<Rational> neg = basis[0];
        for (auto& x : neg) x = -x;
        if (all_positive(neg)) return neg;
        return std::nullopt;
    }
    for (int tries = 0; tries < 64; ++tries) {
        std::vector<Rational> v(basis[0].size(), Rational(0));
        for (const auto& b : basis) {
            long c = rng.int_in(-20, 20);
            for (std::size_t i = 0; i < v.size(); ++i) v[i] += Rational(c) * b[i];
        }
        if (all_positive(v)) return v;
    }
    return std::nullopt;
}

} // namespace

std::optional<PsdWitness> glue_deleted_ksum_stress(const std::vector<GluePart>& parts,
                                                   const std::vector<Edge>& drop_slots,
                                                   std::uint64_t seed, int trials) {
    if (parts.size() < 2) throw std::invalid_argument("glue: need at least two parts");
    const int d = parts[0].framework.dim;
    if (d < 1) throw std::invalid_argument("glue: d < 1");

    std::vector<const Graph*> graphs;
    std::vector<std::vector<int>> shared;
    for (const auto& part : parts) {
        if (part.framework.dim != d) throw std::invalid_argument("glue: mixed dimensions");
        if (!(part.stress.graph == part.framework.graph))
            throw std::invalid_argument("glue: stress and framework graphs differ");
        graphs.push_back(&part.framework.graph);
        shared.push_back(part.shared);
    }
    GlueLabels labels = glue_labels(graphs, shared);
    if (labels.k > d) throw std::invalid_argument("glue: k exceeds the dimension");

    std::vector<Edge> drops;
    for (Edge e : drop_slots) {
        e = normalize_edge(e.first, e.second);
        if (e.first < 0 || e.second >= labels.k)
            throw std::invalid_argument("glue: drop edge outside the shared clique");
        drops.push_back(e);
    }
    std::sort(drops.begin(), drops.end());
    if (std::adjacent_find(drops.begin(), drops.end()) != drops.end())
        throw std::invalid_argument("glue: repeated drop edge");

    // preconditions on the provided stresses
    for (const auto& part : parts) {
        if (!equilibrium_holds(part.framework, part.stress.w))
            throw std::invalid_argument("glue: part stress is not an equilibrium stress");
        if (!symmetric_inertia(stress_matrix(part.framework.graph, part.stress)).psd)
            throw std::invalid_argument("glue: part stress is not PSD");
        for (const Edge& e : drops) {
            Edge pe = normalize_edge(part.shared[e.first], part.shared[e.second]);
            if (part.stress.weight_on(pe) == 0)
                throw std::invalid_argument("glue: part stress vanishes on a drop edge");
        }
    }

    const Graph glued = glued_graph(graphs, shared, drops);
    const int n_glued = labels.n_glued;

    for (int trial = 0; trial < trials; ++trial) {
        Rng rng(mix_seed(seed, 5000 + static_cast<std::uint64_t>(trial)));

        // trial 0 uses the provided frameworks and stresses; later trials
        // resample each part (corank-1 stress spaces only) to flip signs
        std::vector<Framework> fws;
        std::vector<StressVector> sts;
        bool trial_ok = true;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (trial == 0) {
                fws.push_back(parts[i].framework);
                sts.push_back(parts[i].stress);
                continue;
            }
            Framework fw = random_framework(parts[i].framework.graph, d,
                                            rng.fork(static_cast<std::uint64_t>(i)).next());
            auto basis = kernel(rigidity_matrix(fw).transposed());
            if (basis.size() != 1) {
                trial_ok = false;
                break;
            }
            StressVector w{fw.graph, basis[0]};
            auto dec = symmetric_inertia(stress_matrix(fw.graph, w));
            if (dec.n_minus > dec.n_plus) {
                w = w.negated();
                dec = flipped(dec);
            }
            if (!dec.psd) {
                trial_ok = false;
                break;
            }
            bool nonzero_on_drops = true;
            for (const Edge& e : drops) {
                Edge pe = normalize_edge(parts[i].shared[e.first], parts[i].shared[e.second]);
                if (w.weight_on(pe) == 0) nonzero_on_drops = false;
            }
            if (!nonzero_on_drops) {
                trial_ok = false;
                break;
            }
            fws.push_back(std::move(fw));
            sts.push_back(std::move(w));
        }
        if (!trial_ok) continue;

        // exact affine alignment of every part onto part 0's shared points
        std::vector<std::vector<Rational>> target_shared;
        for (int s = 0; s < labels.k; ++s) target_shared.push_back(fws[0].config[parts[0].shared[s]]);
        if (!affinely_independent(target_shared)) {
            if (trial == 0) throw std::invalid_argument("glue: shared points affinely dependent");
            continue;
        }
        std::vector<std::vector<std::vector<Rational>>> aligned;
        aligned.push_back(fws[0].config);
        bool aligned_ok = true;
        for (std::size_t i = 1; i < parts.size(); ++i) {
            std::vector<std::vector<Rational>> src;
            for (int s = 0; s < labels.k; ++s) src.push_back(fws[i].config[parts[i].shared[s]]);
            if (!affinely_independent(src)) {
                if (trial == 0) throw std::invalid_argument("glue: shared points affinely dependent");
                aligned_ok = false;
                break;
            }
            std::vector<std::vector<Rational>> dst = target_shared;
            if (!extend_to_affine_basis(src, d, rng) || !extend_to_affine_basis(dst, d, rng)) {
                aligned_ok = false;
                break;
            }
            AffineMap map = affine_from_points(src, dst);
            std::vector<std::vector<Rational>> cfg;
            for (const auto& p : fws[i].config) cfg.push_back(map.apply(p));
            aligned.push_back(std::move(cfg));
        }
        if (!aligned_ok) continue;

        // glued configuration: slots take part 0's shared positions
        std::vector<std::vector<Rational>> config(n_glued);
        for (std::size_t i = 0; i < parts.size(); ++i)
            for (int v = 0; v < graphs[i]->n; ++v) config[labels.map[i][v]] = aligned[i][v];
        {
            std::set<std::vector<Rational>> distinct(config.begin(), config.end());
            if (static_cast<int>(distinct.size()) != n_glued) continue;
        }

        // strictly positive scalings cancelling every drop edge
        RatMat constraints(static_cast<int>(drops.size()), static_cast<int>(parts.size()));
        for (std::size_t r = 0; r < drops.size(); ++r)
            for (std::size_t i = 0; i < parts.size(); ++i) {
                Edge pe = normalize_edge(parts[i].shared[drops[r].first],
                                         parts[i].shared[drops[r].second]);
                constraints.at(static_cast<int>(r), static_cast<int>(i)) = sts[i].weight_on(pe);
            }
        auto lambda = positive_combination(constraints, rng);
        if (!lambda) continue;

        // zero-extended weighted sum
        std::map<Edge, Rational> acc;
        for (std::size_t i = 0; i < parts.size(); ++i)
            for (int e = 0; e < graphs[i]->m(); ++e) {
                const auto& [u, v] = graphs[i]->edges[e];
                acc[normalize_edge(labels.map[i][u], labels.map[i][v])] += (*lambda)[i] * sts[i].w[e];
            }
        for (const Edge& e : drops) {
            auto it = acc.find(e);
            if (it == acc.end() || it->second != 0)
                throw std::logic_error("glue: drop-edge weights failed to cancel");
            acc.erase(it);
        }
        std::vector<Rational> wsum;
        wsum.reserve(glued.m());
        for (const auto& e : glued.edges) wsum.push_back(acc.at(e));

        Framework glued_f{glued, d, std::move(config)};
        StressVector glued_w = make_stress(glued_f, std::move(wsum));
        if (glued_w.is_zero()) continue;

        StressMatrixReport rep = analyze_stress(glued_f, glued_w, mix_seed(seed, 77));
        if (!rep.psd)
            throw std::logic_error("glue: positive combination of PSD stresses not PSD");
        PsdWitness wit;
        wit.certified = rep.psd && rep.regular && rep.rank == n_glued - d - 1;
        wit.framework = std::move(glued_f);
        wit.stress = std::move(glued_w);
        wit.report = std::move(rep);
        return wit;
    }
    return std::nullopt;
}

} // namespace mlt
