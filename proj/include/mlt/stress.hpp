#ifndef MLT_STRESS_HPP
#define MLT_STRESS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "mlt/ratmat.hpp"
#include "mlt/rigidity.hpp"

namespace mlt {

/// Edge weights indexed like graph.edges. Build through make_stress (or the
/// basis/witness routines) so equilibrium is verified on construction.
struct StressVector {
    Graph graph;
    std::vector<Rational> w;

    bool is_zero() const;
    const Rational& weight_on(Edge e) const; // throws if e not in graph
    StressVector scaled(const Rational& factor) const;
    StressVector negated() const;
};

/// Exact equilibrium test: sum_{j~i} w_ij (p(j) - p(i)) = 0 at every vertex.
bool equilibrium_holds(const Framework& f, const std::vector<Rational>& w);

/// Verifying constructor; throws std::invalid_argument when equilibrium fails.
StressVector make_stress(const Framework& f, std::vector<Rational> w);

/// Integer coordinates uniform in [-2^20, 2^20], coincident points resampled;
/// deterministic in seed.
Framework random_framework(const Graph& g, int d, std::uint64_t seed);

/// Basis of the stress space of f (left kernel of the rigidity matrix).
std::vector<StressVector> stress_basis(const Framework& f);

/// Symmetric n x n matrix with off-diagonal -w_ij on edges and row-completing
/// diagonal; annihilates the all-ones vector and, for equilibrium stresses,
/// each coordinate column of the configuration.
RatMat stress_matrix(const Graph& g, const StressVector& w);

struct StressMatrixReport {
    StressVector omega;
    SymmetricDecomposition inertia;
    int rank = 0;
    bool psd = false;
    bool regular = false; // rigidity-matrix rank at f equals the recorded generic rank
};

/// Exact inertia of the stress matrix plus the framework regularity flag.
/// Throws when w is not an equilibrium stress of f.
StressMatrixReport analyze_stress(const Framework& f, const StressVector& w, std::uint64_t seed);

enum class GlobalRigidity { certified, not_certified, not_rigid };

/// Randomized certificate search for global d-rigidity: a regular framework
/// whose stress space contains a stress of rank n-d-1 certifies (max-rank
/// stresses transport to generic frameworks). Rigidity failure at the
/// generic-rank level reports not_rigid; exhausting trials is inconclusive.
GlobalRigidity global_rigidity_test(const Graph& g, int d, std::uint64_t seed, int trials = 8);

/// A PSD equilibrium stress at an explicit rational framework. `certified`
/// means rank = n-d-1 at a regular point, so PSD-ness transports to nearby
/// generic frameworks; lower-rank PSD findings stay heuristic.
struct PsdWitness {
    Framework framework;
    StressVector stress;
    StressMatrixReport report;
    bool certified = false;
};

/// For a d-circuit (unique stress up to scale): sample frameworks, sign-
/// normalize the stress, return the first PSD hit. Throws when g is not a
/// d-circuit; returns nothing after `trials` failures (non-refuting).
std::optional<PsdWitness> circuit_psd_witness(const Graph& g, int d, std::uint64_t seed,
                                              int trials = 64);

/// One-extension lift of a stress: new vertex z at t*p(x) + (1-t)*p(y),
/// weights (1-t)^{-1} w_xy on xz, t^{-1} w_xy on yz, zero on the other new
/// edges, unchanged elsewhere. Requires w_xy = -1 (scale first, see
/// scale_stress_for_lift) and t outside {0, 1}. Equilibrium and the rank step
/// rank(O') = rank(O) + 1 are verified exactly.
struct LiftResult {
    Framework framework;
    StressVector stress;
    Rational t;
};
LiftResult lift_one_extension(const Framework& f, const StressVector& w, Edge xy,
                              const VertexSet& extra, const Rational& t);

/// Doubling search t = 2, 4, ..., 2^16 for a PSD lift; input stress must be
/// PSD (throws otherwise). Success is guaranteed for large enough t, so a
/// miss within the range is reported as nothing.
std::optional<LiftResult> lift_one_extension_psd(const Framework& f, const StressVector& w,
                                                 Edge xy, const VertexSet& extra);

/// Scale w so that w_xy = -1. Refuses (throws) when w_xy = 0, or when the
/// required factor is negative and preserve_psd is set.
StressVector scale_stress_for_lift(const StressVector& w, Edge xy, bool preserve_psd);

/// One part of a deleted-k-sum gluing: its framework, a PSD stress, and the
/// k vertices (slot order) identified across parts.
struct GluePart {
    Framework framework;
    StressVector stress;
    std::vector<int> shared;
};

/// Glue parts along the shared clique (slots 0..k-1 keep part 0's positions;
/// the others are mapped by exact affine alignment, which leaves equilibrium
/// and PSD-ness intact), then look for strictly positive part scalings that
/// cancel the summed weight on every dropped edge. Retries with freshly
/// sampled part frameworks (corank-1 parts only) when the sign pattern
/// admits no positive solution. Drop edges are named by slot pairs.
std::optional<PsdWitness> glue_deleted_ksum_stress(const std::vector<GluePart>& parts,
                                                   const std::vector<Edge>& drop_slots,
                                                   std::uint64_t seed, int trials = 16);

/// The graph such a gluing produces (slots first, then part privates).
Graph glued_graph(const std::vector<const Graph*>& part_graphs,
                  const std::vector<std::vector<int>>& shared_lists,
                  const std::vector<Edge>& drop_slots);

} // namespace mlt

#endif
