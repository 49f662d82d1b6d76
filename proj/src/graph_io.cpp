#include "wldh/graph_io.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace wldh {

namespace {

void fail(const char* msg) { throw std::invalid_argument(msg); }

std::string_view trimmed(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

int sextet(std::string_view s, std::size_t i) {
    if (i >= s.size()) fail("graph6 string truncated");
    int v = static_cast<unsigned char>(s[i]) - 63;
    if (v < 0 || v > 63) fail("invalid graph6 byte");
    return v;
}

} // namespace

Graph parse_graph6(std::string_view text) {
    std::string_view s = trimmed(text);
    constexpr std::string_view header = ">>graph6<<";
    if (s.substr(0, header.size()) == header) s.remove_prefix(header.size());
    if (s.empty()) fail("empty graph6 string");

    std::size_t pos = 0;
    long long n;
    if (s[0] != '~') {
        n = sextet(s, pos++);
    } else if (s.size() >= 2 && s[1] != '~') {
        ++pos;
        n = 0;
        for (int i = 0; i < 3; ++i) n = (n << 6) | sextet(s, pos++);
    } else {
        fail("graph6 orders above 258047 are not supported");
        return Graph(); // unreachable
    }

    Graph g(static_cast<int>(n));
    long long bits = n * (n - 1) / 2;
    if (static_cast<long long>(s.size() - pos) < (bits + 5) / 6) fail("graph6 string truncated");
    long long bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            int group = sextet(s, pos + static_cast<std::size_t>(bit / 6));
            if (group & (1 << (5 - bit % 6))) g.add_edge(i, j);
        }
    }
    return g;
}

std::string to_graph6(const Graph& g) {
    long long n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else if (n <= 258047) {
        out.push_back('~');
        out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(63 + (n & 63)));
    } else {
        fail("graph too large for the supported graph6 encodings");
    }
    int group = 0, filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            group = (group << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + group));
                group = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>(63 + (group << (6 - filled))));
    return out;
}

Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    long long n, m;
    if (!(in >> n >> m) || n < 0 || m < 0) fail("edge list needs an \"n m\" header");
    Graph g(static_cast<int>(n));
    for (long long i = 0; i < m; ++i) {
        int u, v;
        if (!(in >> u >> v)) fail("edge list truncated");
        g.add_edge(u, v);
    }
    return g;
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    auto edges = g.edges();
    out << g.vertex_count() << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges) out << u << ' ' << v << '\n';
    return out.str();
}

} // namespace wldh
