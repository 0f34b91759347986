#ifndef MLT_JSONIO_HPP
#define MLT_JSONIO_HPP

#include "json.hpp"
#include "mlt/bounds.hpp"
#include "mlt/fixtures.hpp"

namespace mlt {

using ordered_json = nlohmann::ordered_json;

// Rationals serialize as exact "num/den" strings so reports stay auditable.
ordered_json rational_json(const Rational& q);
ordered_json graph_json(const Graph& g);
ordered_json rank_profile_json(const RankProfile& p);
ordered_json framework_json(const Framework& f);
ordered_json stress_json(const StressVector& w);
ordered_json inertia_json(const SymmetricDecomposition& dec);
ordered_json stress_report_json(const StressMatrixReport& rep);
ordered_json witness_json(const PsdWitness& w);
ordered_json mlt_report_json(const MltReport& rep);
ordered_json fixture_report_json(const FixtureReport& rep);

} // namespace mlt

#endif
