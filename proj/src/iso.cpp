#include "wldh/iso.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "wldh/algebra_iso.hpp"
#include "wldh/common.hpp"
#include "wldh/config.hpp"
#include "wldh/wl.hpp"

namespace wldh {

std::string wl_invariant(const Graph& g) {
    return canonical_invariant(wl_of_graph(g));
}

std::string one_dim_invariant(const Graph& g) {
    int n = g.vertex_count();
    std::ostringstream out;
    out << "1WL n=" << n;

    std::vector<int> color(n, 0);
    int k = n > 0 ? 1 : 0;
    std::vector<int> nb;
    while (n > 0) {
        // key per vertex: old color plus sorted multiset of neighbor colors
        std::vector<std::vector<int>> key(n);
        for (int v = 0; v < n; ++v) {
            nb.clear();
            for (int u = 0; u < n; ++u)
                if (g.adjacent(v, u)) nb.push_back(color[u]);
            std::sort(nb.begin(), nb.end());
            key[v].push_back(color[v]);
            key[v].insert(key[v].end(), nb.begin(), nb.end());
        }
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) { return key[a] < key[b]; });

        out << " R:";
        int next = -1;
        std::vector<int> fresh(n);
        for (int i = 0; i < n; ++i) {
            int v = order[i];
            if (i == 0 || key[order[i - 1]] != key[v]) {
                ++next;
                out << "(" << key[v][0] << "|";
                for (std::size_t j = 1; j < key[v].size(); ++j)
                    out << key[v][j] << (j + 1 < key[v].size() ? "," : "");
                out << ")";
            }
            fresh[v] = next;
        }
        // class sizes of this round, in color order
        std::vector<int> count(next + 1, 0);
        for (int v = 0; v < n; ++v) ++count[fresh[v]];
        out << "#";
        for (int c = 0; c <= next; ++c) out << count[c] << (c < next ? "," : "");

        color = std::move(fresh);
        if (next + 1 == k) break; // stable; this round's table doubles as the quotient data
        k = next + 1;
    }
    return out.str();
}

std::string first_invariant_difference(const std::string& a, const std::string& b) {
    auto split = [](const std::string& s) {
        std::vector<std::string> out;
        std::size_t start = 0;
        for (std::size_t i = 0; i <= s.size(); ++i)
            if (i == s.size() || s[i] == '|') {
                out.push_back(s.substr(start, i - start));
                start = i + 1;
            }
        return out;
    };
    auto sa = split(a), sb = split(b);
    for (std::size_t i = 0; i < std::max(sa.size(), sb.size()); ++i) {
        std::string xa = i < sa.size() ? sa[i] : "";
        std::string xb = i < sb.size() ? sb[i] : "";
        if (xa != xb) {
            const std::string& named = xa.empty() ? xb : xa;
            return named.substr(0, named.find(':'));
        }
    }
    return "";
}

BruteForce brute_force_isomorphic(const Graph& g, const Graph& h, int max_n) {
    if (g.vertex_count() > max_n || h.vertex_count() > max_n)
        throw std::invalid_argument("graph exceeds the brute-force bound");
    int n = g.vertex_count();
    if (n != h.vertex_count() || g.edge_count() != h.edge_count()) return {false, std::nullopt};

    std::vector<int> dg(n), dh(n);
    for (int v = 0; v < n; ++v) {
        dg[v] = g.degree(v);
        dh[v] = h.degree(v);
    }
    {
        auto a = dg, b = dh;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return {false, std::nullopt};
    }

    // assign in descending-degree order; ties by id
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return dg[a] != dg[b] ? dg[a] > dg[b] : a < b; });

    std::vector<int> f(n, -1);
    std::vector<char> used(n, 0);
    auto rec = [&](auto&& self, int pos) -> bool {
        if (pos == n) return true;
        int v = order[pos];
        for (int w = 0; w < n; ++w) {
            if (used[w] || dh[w] != dg[v]) continue;
            bool ok = true;
            for (int i = 0; i < pos && ok; ++i)
                ok = g.adjacent(order[i], v) == h.adjacent(f[order[i]], w);
            if (!ok) continue;
            f[v] = w;
            used[w] = 1;
            if (self(self, pos + 1)) return true;
            used[w] = 0;
            f[v] = -1;
        }
        return false;
    };
    if (rec(rec, 0)) return {true, f};
    return {false, std::nullopt};
}

IsoVerdict test_isomorphism(const Graph& g, const Graph& h, long long budget) {
    IsoVerdict verdict;
    verdict.g_dh = is_distance_hereditary(g).is_dh;
    verdict.h_dh = is_distance_hereditary(h).is_dh;

    std::string inv_g = wl_invariant(g);
    std::string inv_h = wl_invariant(h);
    if (inv_g != inv_h) {
        verdict.kind = IsoVerdict::Kind::non_isomorphic;
        verdict.certificate = first_invariant_difference(inv_g, inv_h);
        return verdict;
    }

    CoherentConfiguration a = wl_of_graph(g);
    CoherentConfiguration b = wl_of_graph(h);
    AlgebraicIsomorphism identity;
    identity.color_map.resize(a.color_count());
    std::iota(identity.color_map.begin(), identity.color_map.end(), 0);

    WitnessSearch ws = find_inducing_bijection(a, b, identity, budget, a.point_count());
    if (ws.witness) {
        const auto& f = ws.witness->point_map;
        for (int u = 0; u < g.vertex_count(); ++u)
            for (int v = 0; v < g.vertex_count(); ++v)
                if (g.adjacent(u, v) != h.adjacent(f[u], f[v]))
                    throw contract_violation("inducing bijection is not a graph isomorphism");
        verdict.kind = IsoVerdict::Kind::isomorphic;
        verdict.witness = f;
        return verdict;
    }
    if (ws.truncated) {
        verdict.kind = IsoVerdict::Kind::unknown;
        verdict.budget_exhausted = true;
        verdict.certificate = "witness search budget exhausted";
        return verdict;
    }
    if (verdict.g_dh || verdict.h_dh)
        throw contract_violation(
            "equal invariants with a distance-hereditary side must admit a witness");
    verdict.kind = IsoVerdict::Kind::unknown;
    verdict.certificate = "equal invariants, no inducing bijection";
    return verdict;
}

} // namespace wldh
