#include "wldh/wl.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace wldh {

namespace {

// Ranks rows of a flattened key arena lexicographically and rewrites `color`
// with dense ids in sorted key order. Returns the number of distinct keys and
// fills `picked` with one arena row index per new color (in id order).
int rank_keys(const std::vector<int>& arena, const std::vector<std::size_t>& offset,
              std::vector<int>& color, std::vector<int>* picked = nullptr) {
    std::size_t rows = offset.size() - 1;
    std::vector<int> order(rows);
    std::iota(order.begin(), order.end(), 0);

    auto less = [&](int a, int b) {
        auto ab = offset[a], ae = offset[a + 1];
        auto bb = offset[b], be = offset[b + 1];
        return std::lexicographical_compare(arena.begin() + ab, arena.begin() + ae,
                                            arena.begin() + bb, arena.begin() + be);
    };
    auto equal = [&](int a, int b) {
        auto ab = offset[a], ae = offset[a + 1];
        auto bb = offset[b], be = offset[b + 1];
        return (ae - ab) == (be - bb) &&
               std::equal(arena.begin() + ab, arena.begin() + ae, arena.begin() + bb);
    };
    std::sort(order.begin(), order.end(), less);

    if (picked) picked->clear();
    int next = -1;
    for (std::size_t i = 0; i < rows; ++i) {
        if (i == 0 || !equal(order[i - 1], order[i])) {
            ++next;
            if (picked) picked->push_back(order[i]);
        }
        color[order[i]] = next;
    }
    return next + 1;
}

} // namespace

CoherentConfiguration wl_closure(int n, std::span<const Relation> seeds) {
    if (n < 0) throw std::invalid_argument("negative point count");
    if (n == 0) return CoherentConfiguration(Rainbow(0, {}), {});

    std::size_t pairs = static_cast<std::size_t>(n) * n;

    // membership bitmaps
    std::vector<std::vector<char>> member(seeds.size(), std::vector<char>(pairs, 0));
    for (std::size_t r = 0; r < seeds.size(); ++r)
        for (auto [a, b] : seeds[r]) {
            if (a < 0 || a >= n || b < 0 || b >= n)
                throw std::invalid_argument("seed relation pair out of range");
            member[r][static_cast<std::size_t>(a) * n + b] = 1;
        }

    // initial coloring: (a==b, membership of (a,b), membership of (b,a))
    std::vector<int> color(pairs);
    {
        std::vector<int> arena;
        arena.reserve(pairs * (1 + 2 * seeds.size()));
        std::vector<std::size_t> offset(pairs + 1, 0);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                arena.push_back(a == b ? 1 : 0);
                for (const auto& m : member) {
                    arena.push_back(m[static_cast<std::size_t>(a) * n + b]);
                    arena.push_back(m[static_cast<std::size_t>(b) * n + a]);
                }
                offset[static_cast<std::size_t>(a) * n + b + 1] = arena.size();
            }
        rank_keys(arena, offset, color);
    }
    member.clear();
    member.shrink_to_fit();

    std::vector<int> ancestor(1 + *std::max_element(color.begin(), color.end()));
    std::iota(ancestor.begin(), ancestor.end(), 0);
    int k = static_cast<int>(ancestor.size());

    // refinement rounds
    std::vector<std::pair<int, int>> sig(n);
    std::vector<int> arena;
    std::vector<std::size_t> offset(pairs + 1);
    std::vector<int> picked;
    for (;;) {
        arena.clear();
        offset[0] = 0;
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b) {
                std::size_t p = static_cast<std::size_t>(a) * n + b;
                for (int g = 0; g < n; ++g)
                    sig[g] = {color[static_cast<std::size_t>(a) * n + g],
                              color[static_cast<std::size_t>(g) * n + b]};
                std::sort(sig.begin(), sig.end());
                arena.push_back(color[p]);
                for (int i = 0; i < n;) {
                    int j = i;
                    while (j < n && sig[j] == sig[i]) ++j;
                    arena.push_back(sig[i].first);
                    arena.push_back(sig[i].second);
                    arena.push_back(j - i);
                    i = j;
                }
                offset[p + 1] = arena.size();
            }
        }
        std::vector<int> next_color(pairs);
        int next_k = rank_keys(arena, offset, next_color, &picked);
        std::vector<int> next_ancestor(next_k);
        for (int c = 0; c < next_k; ++c) next_ancestor[c] = ancestor[arena[offset[picked[c]]]];
        bool stable = next_k == k;
        color = std::move(next_color);
        ancestor = std::move(next_ancestor);
        k = next_k;
        if (stable) break;
    }

    return CoherentConfiguration(Rainbow(n, std::move(color)), std::move(ancestor));
}

CoherentConfiguration wl_of_graph(const Graph& g, const Partition& pi) {
    if (pi.point_count() != g.vertex_count())
        throw std::invalid_argument("partition does not match the graph");
    std::vector<Relation> seeds;
    seeds.push_back(g.arcs());
    for (const auto& cls : pi.classes) {
        Relation diag;
        for (int v : cls) diag.emplace_back(v, v);
        seeds.push_back(std::move(diag));
    }
    return wl_closure(g.vertex_count(), seeds);
}

CoherentConfiguration wl_of_graph(const Graph& g) {
    return wl_of_graph(g, Partition::trivial(g.vertex_count()));
}

std::vector<Relation> basis_relations(const Rainbow& x) {
    std::vector<Relation> out(x.color_count());
    for (int a = 0; a < x.point_count(); ++a)
        for (int b = 0; b < x.point_count(); ++b) out[x.color(a, b)].emplace_back(a, b);
    return out;
}

std::vector<int> relabeled_color_matrix(const Rainbow& x, std::span<const int> perm) {
    int n = x.point_count();
    if (static_cast<int>(perm.size()) != n) throw std::invalid_argument("permutation size mismatch");
    std::vector<int> out(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            out[static_cast<std::size_t>(perm[a]) * n + perm[b]] = x.color(a, b);
    return out;
}

} // namespace wldh
