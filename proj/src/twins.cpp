#include "wldh/twins.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "wldh/wl.hpp"

namespace wldh {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

bool config_twins(const CoherentConfiguration& x, int a, int b) {
    for (int g = 0; g < x.point_count(); ++g) {
        if (g == a || g == b) continue;
        if (x.color(g, a) != x.color(g, b)) return false;
    }
    return true;
}

// classes of e must each lie inside one fiber
bool fiber_respecting(const CoherentConfiguration& x, const EquivalenceRelation& e) {
    for (int v = 0; v < x.point_count(); ++v)
        if (x.fiber_of(v) != x.fiber_of(e.representative(v))) return false;
    return true;
}

// condition (1) of the characterization: e.s = s whenever s is disjoint from
// e. Equivalently, points of one class have identical out-sets for every
// color outside e.
bool twin_condition_one(const CoherentConfiguration& x, const EquivalenceRelation& e,
                        const std::vector<char>& in_e) {
    int n = x.point_count();
    for (int a = 0; a < n; ++a) {
        int r = e.representative(a);
        if (r == a) continue;
        for (int g = 0; g < n; ++g) {
            int ca = x.color(a, g), cr = x.color(r, g);
            if (ca == cr) continue;
            if (!in_e[ca] || !in_e[cr]) return false;
        }
    }
    return true;
}

// condition (2): per fiber, e restricted to the fiber is the diagonal or its
// irreflexive part is exactly one basis relation
bool twin_condition_two(const CoherentConfiguration& x, const EquivalenceRelation& e) {
    for (const auto& fiber : x.fibers()) {
        int seen = -1;
        for (int a : fiber)
            for (int b : fiber) {
                if (a == b || !e.related(a, b)) continue;
                int c = x.color(a, b);
                if (seen == -1) seen = c;
                if (seen != c) return false;
            }
    }
    return true;
}

} // namespace

EquivalenceRelation config_twin_parabolic(const CoherentConfiguration& x) {
    EquivalenceRelation e(x.point_count());
    for (const auto& fiber : x.fibers())
        for (std::size_t i = 0; i < fiber.size(); ++i)
            for (std::size_t j = i + 1; j < fiber.size(); ++j) {
                int a = fiber[i], b = fiber[j];
                if (!e.related(a, b) && config_twins(x, a, b)) e.merge(a, b);
            }
    return e;
}

std::vector<int> parabolic_closure(const CoherentConfiguration& x, std::vector<int> colors) {
    std::vector<char> mask(x.color_count(), 0);
    for (int c : colors) {
        require(c >= 0 && c < x.color_count(), "unknown color id");
        mask[c] = 1;
        mask[x.transpose(c)] = 1;
    }
    for (int a = 0; a < x.point_count(); ++a) mask[x.color(a, a)] = 1;

    int n = x.point_count();
    for (bool changed = true; changed;) {
        changed = false;
        EquivalenceRelation uf(n);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (mask[x.color(a, b)]) uf.merge(a, b);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                int c = x.color(a, b);
                if (uf.related(a, b) && !mask[c]) {
                    mask[c] = 1;
                    mask[x.transpose(c)] = 1;
                    changed = true;
                }
            }
    }
    std::vector<int> out;
    for (int c = 0; c < x.color_count(); ++c)
        if (mask[c]) out.push_back(c);
    return out;
}

bool verify_twin_characterization(const CoherentConfiguration& x, const EquivalenceRelation& e) {
    require(e.point_count() == x.point_count(), "relation size mismatch");
    auto cols = parabolic_colors(x, e);
    if (!cols || !is_parabolic(x, *cols)) return false;
    if (!fiber_respecting(x, e)) return false;

    std::vector<char> in_e(x.color_count(), 0);
    for (int c : *cols) in_e[c] = 1;
    if (!twin_condition_one(x, e, in_e)) return false;
    if (!twin_condition_two(x, e)) return false;

    // maximality: no fiber-respecting parabolic obtained by adjoining one
    // extra basis color may satisfy both conditions
    std::set<std::vector<int>> tried;
    for (int c = 0; c < x.color_count(); ++c) {
        if (in_e[c]) continue;
        if (x.src_fiber(c) != x.dst_fiber(c)) continue; // cannot stay inside fibers
        std::vector<int> gen = *cols;
        gen.push_back(c);
        std::vector<int> closed = parabolic_closure(x, std::move(gen));
        if (!tried.insert(closed).second) continue;
        EquivalenceRelation bigger = relation_of_colors(x, closed);
        if (!fiber_respecting(x, bigger)) continue;
        if (!is_parabolic(x, closed)) continue;
        std::vector<char> in_bigger(x.color_count(), 0);
        for (int cc : closed) in_bigger[cc] = 1;
        if (twin_condition_one(x, bigger, in_bigger) && twin_condition_two(x, bigger))
            return false;
    }
    return true;
}

bool rho_injective_on_irreflexive(const CoherentConfiguration& x, const EquivalenceRelation& e) {
    require(e.point_count() == x.point_count(), "relation size mismatch");
    int n = x.point_count();
    std::map<std::set<std::pair<int, int>>, std::vector<int>> by_image;
    std::vector<std::set<std::pair<int, int>>> image(x.color_count());
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            image[x.color(a, b)].insert({e.representative(a), e.representative(b)});
    for (int c = 0; c < x.color_count(); ++c)
        if (!x.reflexive(c)) by_image[image[c]].push_back(c);
    for (const auto& [img, colors] : by_image)
        if (colors.size() > 1) return false;
    return true;
}

std::vector<Matching> find_matchings(const CoherentConfiguration& x) {
    std::vector<Matching> out;
    for (int c = 0; c < x.color_count(); ++c) {
        if (x.reflexive(c)) continue;
        if (x.valency(c) != 1 || x.valency(x.transpose(c)) != 1) continue;
        Matching m;
        m.color = c;
        m.domain = x.fibers()[x.src_fiber(c)];
        m.range = x.fibers()[x.dst_fiber(c)];
        for (int a : m.domain) m.image.push_back(x.out_neighbors(a, c).at(0));
        out.push_back(std::move(m));
    }
    return out;
}

MatchingKind classify_matching(const CoherentConfiguration& x, const Graph& g, const Matching& m) {
    require(m.color >= 0 && m.color < x.color_count(), "unknown color id");
    require(!x.reflexive(m.color) && x.valency(m.color) == 1 &&
                x.valency(x.transpose(m.color)) == 1,
            "color is not a matching");
    require(g.vertex_count() == x.point_count(), "graph size mismatch");

    if (m.domain == m.range) return MatchingKind::plain;

    bool pendant = true;
    for (std::size_t i = 0; i < m.domain.size(); ++i)
        pendant = pendant && g.degree(m.domain[i]) == 1 && g.adjacent(m.domain[i], m.image[i]);
    if (pendant) return MatchingKind::pendant;

    bool twin = true;
    for (std::size_t i = 0; i < m.domain.size(); ++i)
        twin = twin && are_twins(g, m.domain[i], m.image[i]);
    if (twin) return MatchingKind::twin;

    return MatchingKind::plain;
}

bool graph_vs_config_twins(const Graph& g, const Partition& pi) {
    CoherentConfiguration x = wl_of_graph(g, pi);
    EquivalenceRelation config_e = config_twin_parabolic(x);
    int n = g.vertex_count();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            bool cfg = config_e.related(a, b);
            bool graph = are_twins(g, a, b);
            bool same_fiber = x.fiber_of(a) == x.fiber_of(b);
            if (cfg && !graph) return false;
            if (graph && same_fiber && !cfg) return false;
        }
    return true;
}

} // namespace wldh
