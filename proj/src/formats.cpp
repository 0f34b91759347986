#include "mlt/formats.hpp"

#include <charconv>
#include <sstream>

namespace mlt {

namespace {

[[noreturn]] void bad_byte(std::size_t offset, const std::string& what) {
    throw parse_error("graph6: " + what + " at byte " + std::to_string(offset));
}

} // namespace

Graph parse_graph6(std::string_view line) {
    constexpr std::string_view header = ">>graph6<<";
    if (line.substr(0, header.size()) == header) line.remove_prefix(header.size());
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
    if (line.empty()) throw parse_error("graph6: empty input");

    const unsigned char size_byte = static_cast<unsigned char>(line[0]);
    if (size_byte < 63 || size_byte > 126) bad_byte(0, "invalid size character");
    if (size_byte == 126) bad_byte(0, "multi-byte sizes (n > 62) not supported");
    const int n = size_byte - 63;

    const std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t nbytes = (nbits + 5) / 6;
    if (line.size() < 1 + nbytes)
        throw parse_error("graph6: truncated bit field at byte " + std::to_string(line.size()));
    if (line.size() > 1 + nbytes)
        bad_byte(1 + nbytes, "trailing data");

    std::vector<Edge> edges;
    std::size_t bit = 0;
    for (std::size_t i = 0; i < nbytes; ++i) {
        const unsigned char c = static_cast<unsigned char>(line[1 + i]);
        if (c < 63 || c > 126) bad_byte(1 + i, "invalid data character");
        const unsigned val = c - 63;
        for (int k = 5; k >= 0; --k, ++bit) {
            const bool set = (val >> k) & 1;
            if (bit >= nbits) {
                if (set) bad_byte(1 + i, "nonzero padding bit");
                continue;
            }
            if (set) {
                // bit index -> column-wise pair (i < j)
                std::size_t b = bit;
                int col = 1;
                while (b >= static_cast<std::size_t>(col)) b -= col++;
                edges.push_back({static_cast<int>(b), col});
            }
        }
    }
    return Graph::from_edges(n, std::move(edges));
}

std::string encode_graph6(const Graph& g) {
    if (g.n > 62) throw std::invalid_argument("encode_graph6: n > 62 not supported");
    std::string out;
    out.push_back(static_cast<char>(g.n + 63));
    const std::size_t nbits = static_cast<std::size_t>(g.n) * (g.n - 1) / 2;
    std::vector<bool> bits(nbits, false);
    for (const auto& [u, v] : g.edges) {
        // column-wise index of the (u, v) cell, u < v
        bits[static_cast<std::size_t>(v) * (v - 1) / 2 + u] = true;
    }
    for (std::size_t i = 0; i < nbits; i += 6) {
        unsigned val = 0;
        for (int k = 0; k < 6; ++k)
            if (i + k < nbits && bits[i + k]) val |= 1u << (5 - k);
        out.push_back(static_cast<char>(val + 63));
    }
    return out;
}

namespace {

int parse_int(std::string_view tok, int line_no, const char* what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw parse_error("edge list: bad " + std::string(what) + " on line " + std::to_string(line_no));
    return value;
}

} // namespace

Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string tok_a, tok_b;
    if (!(in >> tok_a >> tok_b)) throw parse_error("edge list: missing \"n m\" header");
    const int n = parse_int(tok_a, 1, "vertex count");
    const int m = parse_int(tok_b, 1, "edge count");
    if (n < 0 || m < 0) throw parse_error("edge list: negative count in header");

    std::vector<Edge> edges;
    for (int i = 0; i < m; ++i) {
        if (!(in >> tok_a >> tok_b))
            throw parse_error("edge list: expected " + std::to_string(m) + " edges, got " +
                              std::to_string(i));
        const int line_no = i + 2;
        const int u = parse_int(tok_a, line_no, "endpoint");
        const int v = parse_int(tok_b, line_no, "endpoint");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw parse_error("edge list: endpoint out of range on line " + std::to_string(line_no));
        if (u == v) throw parse_error("edge list: loop on line " + std::to_string(line_no));
        edges.push_back(normalize_edge(u, v));
    }
    if (in >> tok_a) throw parse_error("edge list: trailing data after " + std::to_string(m) + " edges");

    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw parse_error("edge list: duplicate edge");
    return Graph{n, std::move(edges)};
}

std::string encode_edge_list(const Graph& g) {
    std::string out = std::to_string(g.n) + " " + std::to_string(g.m()) + "\n";
    for (const auto& [u, v] : g.edges)
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

} // namespace mlt
