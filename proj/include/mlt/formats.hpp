#ifndef MLT_FORMATS_HPP
#define MLT_FORMATS_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "mlt/graph.hpp"

namespace mlt {

/// Malformed input; the message names the offending byte or line.
/// The CLI maps it to exit code 1.
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// One-line graph6 (McKay format), n <= 62 (single size byte). A leading
/// ">>graph6<<" header is tolerated and stripped.
Graph parse_graph6(std::string_view line);
std::string encode_graph6(const Graph& g);

/// "n m" header line followed by m lines "u v", whitespace separated.
Graph parse_edge_list(std::string_view text);
std::string encode_edge_list(const Graph& g);

} // namespace mlt

#endif
