#include "wldh/algebra_iso.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "wldh/twins.hpp"
#include "wldh/wl.hpp"

namespace wldh {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

// dense k*k*k tensor for O(1) lookups during the search
std::vector<int> dense_tensor(const CoherentConfiguration& x) {
    int k = x.color_count();
    std::vector<int> out(static_cast<std::size_t>(k) * k * k, 0);
    for (const auto& [key, value] : x.tensor().entries)
        out[(static_cast<std::size_t>(key[0]) * k + key[1]) * k + key[2]] = value;
    return out;
}

struct AisoSearch {
    const CoherentConfiguration& a;
    const CoherentConfiguration& b;
    const AisoOptions& opts;
    int k;
    std::vector<int> ta, tb;
    std::vector<int> order;      // colors of a in assignment order
    std::vector<int> map;        // a color -> b color or -1
    std::vector<char> used;      // b colors already taken
    std::vector<int> fiber_map;  // a fiber -> b fiber or -1
    std::vector<char> in_union_a, in_union_b;
    AisoResult result;

    int t_a(int r, int s, int t) const { return ta[(static_cast<std::size_t>(r) * k + s) * k + t]; }
    int t_b(int r, int s, int t) const { return tb[(static_cast<std::size_t>(r) * k + s) * k + t]; }

    bool feasible(int c, int d) const {
        if (used[d]) return false;
        if (a.reflexive(c) != b.reflexive(d)) return false;
        if (a.valency(c) != b.valency(d)) return false;
        if (a.valency(a.transpose(c)) != b.valency(b.transpose(d))) return false;
        if ((a.transpose(c) == c) != (b.transpose(d) == d)) return false;
        if (!opts.required_union.has_value()) {
            // fine
        } else if (in_union_a[c] != in_union_b[d]) {
            return false;
        }
        if (a.reflexive(c)) {
            if (a.fibers()[a.src_fiber(c)].size() != b.fibers()[b.src_fiber(d)].size())
                return false;
            if (fiber_map[a.src_fiber(c)] != -1 && fiber_map[a.src_fiber(c)] != b.src_fiber(d))
                return false;
        } else {
            // reflexive colors are assigned first, so the fiber map is total here
            if (fiber_map[a.src_fiber(c)] != b.src_fiber(d)) return false;
            if (fiber_map[a.dst_fiber(c)] != b.dst_fiber(d)) return false;
        }
        // transpose consistency with an earlier assignment
        int ct = a.transpose(c);
        if (map[ct] != -1 && map[ct] != b.transpose(d)) return false;
        return true;
    }

    bool tensor_consistent(int c) const {
        // check all completed triples involving c
        for (int r = 0; r < k; ++r) {
            if (map[r] == -1) continue;
            for (int s = 0; s < k; ++s) {
                if (map[s] == -1) continue;
                if (t_a(c, r, s) != t_b(map[c], map[r], map[s])) return false;
                if (t_a(r, c, s) != t_b(map[r], map[c], map[s])) return false;
                if (t_a(r, s, c) != t_b(map[r], map[s], map[c])) return false;
            }
        }
        return true;
    }

    bool full_tensor_match() const {
        for (int r = 0; r < k; ++r)
            for (int s = 0; s < k; ++s)
                for (int t = 0; t < k; ++t)
                    if (t_a(r, s, t) != t_b(map[r], map[s], map[t])) return false;
        return true;
    }

    void assign(int c, int d) {
        map[c] = d;
        used[d] = 1;
        if (a.reflexive(c)) fiber_map[a.src_fiber(c)] = b.src_fiber(d);
    }
    void unassign(int c, int d, int fiber_was) {
        map[c] = -1;
        used[d] = 0;
        if (a.reflexive(c)) fiber_map[a.src_fiber(c)] = fiber_was;
    }

    bool search(std::size_t pos) { // returns false when the budget is gone
        if (result.isos.size() >= opts.max_results) {
            result.truncated = true;
            return false;
        }
        while (pos < order.size() && map[order[pos]] != -1) ++pos; // transpose pre-assigned
        if (pos == order.size()) {
            if (full_tensor_match())
                result.isos.push_back({map});
            return true;
        }
        int c = order[pos];
        for (int d = 0; d < k; ++d) {
            if (++result.nodes > opts.node_budget) {
                result.truncated = true;
                return false;
            }
            if (!feasible(c, d)) continue;
            int fiber_was = a.reflexive(c) ? fiber_map[a.src_fiber(c)] : -1;
            assign(c, d);
            int ct = a.transpose(c), dt = b.transpose(d);
            bool also_transpose = ct != c && map[ct] == -1;
            if (also_transpose) assign(ct, dt);
            bool ok = tensor_consistent(c) && (!also_transpose || tensor_consistent(ct));
            if (ok && !search(pos + 1)) return false;
            if (also_transpose) unassign(ct, dt, -1);
            unassign(c, d, fiber_was);
        }
        return true;
    }
};

} // namespace

AisoResult enumerate_algebraic_isomorphisms(const CoherentConfiguration& a,
                                            const CoherentConfiguration& b,
                                            const AisoOptions& opts) {
    require(a.color_count() <= opts.max_colors && b.color_count() <= opts.max_colors,
            "color count exceeds the configured bound");
    if (a.point_count() != b.point_count() || a.color_count() != b.color_count() ||
        a.fiber_count() != b.fiber_count())
        return {};

    AisoSearch search{.a = a, .b = b, .opts = opts, .k = a.color_count(),
                      .ta = dense_tensor(a), .tb = dense_tensor(b)};
    search.map.assign(search.k, -1);
    search.used.assign(search.k, 0);
    search.fiber_map.assign(a.fiber_count(), -1);
    search.in_union_a.assign(search.k, 0);
    search.in_union_b.assign(search.k, 0);
    if (opts.required_union) {
        if (opts.required_union->first.size() != opts.required_union->second.size()) return {};
        for (int c : opts.required_union->first) search.in_union_a.at(c) = 1;
        for (int c : opts.required_union->second) search.in_union_b.at(c) = 1;
    }

    // reflexive colors first (they pin the fiber map), then the rest
    for (int c = 0; c < search.k; ++c)
        if (a.reflexive(c)) search.order.push_back(c);
    for (int c = 0; c < search.k; ++c)
        if (!a.reflexive(c)) search.order.push_back(c);

    search.search(0);
    return std::move(search.result);
}

WitnessSearch find_inducing_bijection(const CoherentConfiguration& a,
                                      const CoherentConfiguration& b,
                                      const AlgebraicIsomorphism& phi, long long node_budget,
                                      int max_points) {
    require(a.point_count() <= max_points, "point count exceeds the configured bound");
    require(static_cast<int>(phi.color_map.size()) == a.color_count() &&
                a.color_count() == b.color_count(),
            "color map size mismatch");
    {
        std::vector<char> seen(b.color_count(), 0);
        for (int c = 0; c < a.color_count(); ++c) {
            int d = phi.color_map[c];
            require(d >= 0 && d < b.color_count() && !seen[d], "color map is not a bijection");
            seen[d] = 1;
            require(a.reflexive(c) == b.reflexive(d), "color map breaks reflexivity");
            require(phi.color_map[a.transpose(c)] == b.transpose(d),
                    "color map breaks the transpose pairing");
        }
    }
    if (a.point_count() != b.point_count()) return {};

    int n = a.point_count();
    WitnessSearch out;
    std::vector<int> f(n, -1);
    std::vector<char> used(n, 0);
    std::vector<int> assigned; // assignment order, point ids of a

    // recursive lambda over point index
    auto rec = [&](auto&& self, int v) -> bool { // false = budget exhausted
        if (v == n) {
            out.witness = InducedWitness{f};
            return true;
        }
        for (int w = 0; w < n; ++w) {
            if (used[w]) continue;
            if (++out.nodes > node_budget) {
                out.truncated = true;
                return false;
            }
            bool ok = b.color(w, w) == phi.color_map[a.color(v, v)];
            for (int u : assigned) {
                if (!ok) break;
                ok = b.color(f[u], w) == phi.color_map[a.color(u, v)] &&
                     b.color(w, f[u]) == phi.color_map[a.color(v, u)];
            }
            if (!ok) continue;
            f[v] = w;
            used[w] = 1;
            assigned.push_back(v);
            if (!self(self, v + 1)) return false;
            if (out.witness) return true;
            assigned.pop_back();
            used[w] = 0;
            f[v] = -1;
        }
        return true;
    };
    rec(rec, 0);
    return out;
}

SeparabilityReport check_separability_against(const CoherentConfiguration& a,
                                              std::span<const CoherentConfiguration> corpus,
                                              const AisoOptions& opts) {
    SeparabilityReport report;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        AisoResult res = enumerate_algebraic_isomorphisms(a, corpus[i], opts);
        report.truncated = report.truncated || res.truncated;
        ++report.configs_checked;
        for (const auto& phi : res.isos) {
            ++report.isomorphisms_checked;
            WitnessSearch ws = find_inducing_bijection(a, corpus[i], phi, opts.node_budget,
                                                       a.point_count());
            report.truncated = report.truncated || ws.truncated;
            if (!ws.witness && !ws.truncated) report.failures.push_back({i, phi});
        }
    }
    return report;
}

bool twin_parabolic_transport(const CoherentConfiguration& a, const CoherentConfiguration& b,
                              const AlgebraicIsomorphism& phi) {
    auto cols_a = parabolic_colors(a, config_twin_parabolic(a));
    auto cols_b = parabolic_colors(b, config_twin_parabolic(b));
    require(cols_a && cols_b, "twin parabolic is not a relation of its configuration");
    std::vector<int> image;
    for (int c : *cols_a) image.push_back(phi.color_map.at(c));
    std::sort(image.begin(), image.end());
    return image == *cols_b;
}

AutomorphismCheck automorphisms_desk(const Graph& g, const Partition& pi, int max_n) {
    require(g.vertex_count() <= max_n, "graph exceeds the brute-force bound");
    CoherentConfiguration x = wl_of_graph(g, pi);
    int n = g.vertex_count();

    AutomorphismCheck out{0, 0, true};
    // odometer over per-class arrangements: only permutations fixing every
    // class of pi setwise can be automorphisms on either side
    std::vector<std::vector<int>> arrangement = pi.classes;
    std::vector<int> perm(n);

    auto apply = [&] {
        for (std::size_t c = 0; c < pi.classes.size(); ++c)
            for (std::size_t i = 0; i < pi.classes[c].size(); ++i)
                perm[pi.classes[c][i]] = arrangement[c][i];
    };
    auto advance = [&]() -> bool {
        for (auto& arr : arrangement) {
            if (std::next_permutation(arr.begin(), arr.end())) return true;
        }
        return false;
    };

    for (bool more = true; more; more = advance()) {
        apply();
        bool gauto = true;
        for (int u = 0; u < n && gauto; ++u)
            for (int v = 0; v < n; ++v)
                if (g.adjacent(u, v) != g.adjacent(perm[u], perm[v])) {
                    gauto = false;
                    break;
                }
        bool xauto = true;
        for (int u = 0; u < n && xauto; ++u)
            for (int v = 0; v < n; ++v)
                if (x.color(u, v) != x.color(perm[u], perm[v])) {
                    xauto = false;
                    break;
                }
        out.graph_order += gauto;
        out.config_order += xauto;
        out.equal = out.equal && gauto == xauto;
    }
    return out;
}

} // namespace wldh
