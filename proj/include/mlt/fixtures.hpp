#ifndef MLT_FIXTURES_HPP
#define MLT_FIXTURES_HPP

#include <string>
#include <vector>

#include "mlt/stress.hpp"

namespace mlt {

/// Built-in reference frameworks with known exact rank/stress profiles:
/// G1..G4 are the four 6-regular graphs on 9 vertices (complements of the
/// 2-regular graphs) with a shared 4-dimensional configuration; appendix_3d
/// is a 9-vertex 3-dimensional framework whose unique stress is PSD of
/// rank 4.
const std::vector<std::string>& fixture_names();
Framework reference_fixture(const std::string& name);

/// Deleted 2-sum of two K_5's: the classic flexible 3-circuit.
Graph double_banana();

struct FixtureCheck {
    std::string label;
    std::string expected;
    std::string got;
    bool ok = false;
};

struct FixtureReport {
    std::string name;
    bool pass = false;
    std::vector<FixtureCheck> checks;
    double millis = 0.0;
};

/// Exact verification of a named fixture (rigidity-matrix rank, stress-space
/// dimension, stress-matrix rank, and PSD-ness where applicable).
FixtureReport verify_fixture(const std::string& name);

/// Same checks against a caller-supplied framework (negative-control hook).
FixtureReport verify_fixture_framework(const std::string& name, const Framework& f);

} // namespace mlt

#endif
