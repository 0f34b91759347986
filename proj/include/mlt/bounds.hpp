#ifndef MLT_BOUNDS_HPP
#define MLT_BOUNDS_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"
#include "mlt/stress.hpp"

namespace mlt {

enum class CertKind {
    GcrUpper,
    TheoremEquality,      // mlt = gcr whenever gcr <= 4
    TheoremSmall,         // mlt = gcr on at most 9 vertices
    TheoremFewEdges,      // mlt = gcr with at most 24 edges
    TheoremNearComplete,  // mlt = gcr when the complement has at most 5 edges
    TheoremDegreeBounded, // mlt = gcr when connected with min deg <= 4, max deg <= 5
    ConePeel,             // mlt(cone G) = mlt(G) + 1
    CliqueLower,          // mlt(K_k) = k and subgraph monotonicity
    GrnStarLower,         // globally d-rigid subgraph on >= d+2 vertices gives mlt >= d+2
    CircuitPsdWitness,    // certified PSD stress at dimension d gives mlt >= d+2
    ComponentSplit,
};

const char* cert_kind_name(CertKind kind);

struct Certificate {
    CertKind kind;
    std::string detail;
    nlohmann::ordered_json payload;
};

/// Certified MLT interval with the generic completion rank and an ordered
/// trace naming which rule or witness produced each bound.
struct MltReport {
    int n = 0;
    int m = 0;
    int gcr = 0;
    int mlt_lower = 0;
    int mlt_upper = 0;
    bool exact = false;
    int cone_depth = 0;
    std::vector<Certificate> trace;
    std::uint64_t seed = 0;
};

inline constexpr int kGrnStarCap = 12;
inline constexpr int kWitnessTrials = 64;

/// Largest d such that some induced subgraph on >= d+2 vertices is certified
/// globally d-rigid; 0 when only the trivial d <= 1 cases would apply
/// (useless next to the clique bound). Caps at n <= 12.
int grn_star(const Graph& g, std::uint64_t seed);

/// The full decision pipeline: split components, peel cone vertices, compute
/// gcr, apply the equality rules in a fixed order, otherwise assemble lower
/// bounds from cliques, grn*, and certified PSD circuit witnesses.
MltReport mlt_bounds(const Graph& g, std::uint64_t seed);

/// mlt(G) <= mlt(G+e) <= mlt(G)+1, checkable only when both reports are
/// exact; nullopt means inconclusive.
std::optional<bool> check_edge_monotonicity(const Graph& g, Edge e, std::uint64_t seed);

} // namespace mlt

#endif
