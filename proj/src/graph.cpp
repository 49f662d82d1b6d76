#include "wldh/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <stdexcept>

namespace wldh {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

} // namespace

// --- Graph -------------------------------------------------------------------

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n) * n, 0) {
    require(n >= 0, "vertex count must be nonnegative");
}

std::size_t Graph::index(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        throw std::out_of_range("vertex index out of range");
    return static_cast<std::size_t>(u) * n_ + v;
}

void Graph::add_edge(int u, int v) {
    require(u != v, "self-loops are not allowed");
    adj_[index(u, v)] = 1;
    adj_[index(v, u)] = 1;
}

void Graph::remove_edge(int u, int v) {
    adj_[index(u, v)] = 0;
    adj_[index(v, u)] = 0;
}

int Graph::edge_count() const {
    int arcs = 0;
    for (char a : adj_) arcs += a;
    return arcs / 2;
}

int Graph::degree(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex index out of range");
    int d = 0;
    for (int u = 0; u < n_; ++u) d += adj_[static_cast<std::size_t>(v) * n_ + u];
    return d;
}

std::vector<int> Graph::neighbors(int v) const {
    std::vector<int> out;
    for (int u = 0; u < n_; ++u)
        if (adjacent(v, u)) out.push_back(u);
    return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (adjacent(u, v)) out.emplace_back(u, v);
    return out;
}

std::vector<std::pair<int, int>> Graph::arcs() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v = 0; v < n_; ++v)
            if (adjacent(u, v)) out.emplace_back(u, v);
    return out;
}

Graph Graph::relabeled(std::span<const int> perm) const {
    require(static_cast<int>(perm.size()) == n_, "permutation size mismatch");
    std::vector<char> seen(n_, 0);
    for (int p : perm) {
        require(p >= 0 && p < n_ && !seen[p], "not a permutation");
        seen[p] = 1;
    }
    Graph h(n_);
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (adjacent(u, v)) h.add_edge(perm[u], perm[v]);
    return h;
}

// --- Partition -----------------------------------------------------------------

Partition Partition::trivial(int n) {
    require(n >= 0, "negative size");
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    Partition p;
    if (n > 0) p.classes.push_back(std::move(all));
    p.class_of.assign(n, 0);
    return p;
}

Partition Partition::discrete(int n) {
    require(n >= 0, "negative size");
    Partition p;
    p.class_of.resize(n);
    for (int v = 0; v < n; ++v) {
        p.classes.push_back({v});
        p.class_of[v] = v;
    }
    return p;
}

Partition Partition::from_classes(int n, std::vector<std::vector<int>> classes) {
    std::vector<int> owner(n, -1);
    for (auto& c : classes) {
        require(!c.empty(), "empty partition class");
        std::sort(c.begin(), c.end());
        for (int v : c) {
            require(v >= 0 && v < n, "partition member out of range");
            require(owner[v] == -1, "partition classes overlap");
            owner[v] = 0;
        }
    }
    for (int v = 0; v < n; ++v) require(owner[v] == 0, "partition does not cover all points");
    std::sort(classes.begin(), classes.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    Partition p;
    p.classes = std::move(classes);
    p.class_of.assign(n, -1);
    for (int i = 0; i < static_cast<int>(p.classes.size()); ++i)
        for (int v : p.classes[i]) p.class_of[v] = i;
    return p;
}

// --- EquivalenceRelation ---------------------------------------------------------

EquivalenceRelation::EquivalenceRelation(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
}

EquivalenceRelation EquivalenceRelation::from_partition(const Partition& p) {
    EquivalenceRelation e(p.point_count());
    for (const auto& cls : p.classes)
        for (std::size_t i = 1; i < cls.size(); ++i) e.merge(cls[0], cls[i]);
    return e;
}

int EquivalenceRelation::representative(int v) const {
    int root = v;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[v] != root) {
        int next = parent_[v];
        parent_[v] = root;
        v = next;
    }
    return root;
}

void EquivalenceRelation::merge(int a, int b) {
    int ra = representative(a);
    int rb = representative(b);
    if (ra == rb) return;
    // keep the smaller id as the class representative
    if (ra > rb) std::swap(ra, rb);
    parent_[rb] = ra;
}

int EquivalenceRelation::class_count() const {
    int k = 0;
    for (int v = 0; v < point_count(); ++v) k += representative(v) == v;
    return k;
}

Partition EquivalenceRelation::classes() const {
    int n = point_count();
    std::vector<std::vector<int>> by_rep(n);
    for (int v = 0; v < n; ++v) by_rep[representative(v)].push_back(v);
    std::vector<std::vector<int>> cls;
    for (auto& c : by_rep)
        if (!c.empty()) cls.push_back(std::move(c));
    return Partition::from_classes(n, std::move(cls));
}

bool EquivalenceRelation::operator==(const EquivalenceRelation& other) const {
    if (point_count() != other.point_count()) return false;
    for (int v = 0; v < point_count(); ++v)
        if (representative(v) != other.representative(v)) return false;
    return true;
}

// --- distances -------------------------------------------------------------------

std::vector<std::vector<int>> distance_matrix(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::vector<int>> dist(n, std::vector<int>(n, kUnreachable));
    std::vector<int> queue;
    for (int src = 0; src < n; ++src) {
        auto& d = dist[src];
        d[src] = 0;
        queue.assign(1, src);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int v = queue[head];
            for (int u = 0; u < n; ++u) {
                if (g.adjacent(v, u) && d[u] == kUnreachable) {
                    d[u] = d[v] + 1;
                    queue.push_back(u);
                }
            }
        }
    }
    return dist;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (comp[s] != -1) continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        comp[s] = id;
        stack.assign(1, s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            out[id].push_back(v);
            for (int u = 0; u < n; ++u) {
                if (g.adjacent(v, u) && comp[u] == -1) {
                    comp[u] = id;
                    stack.push_back(u);
                }
            }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

bool is_connected(const Graph& g) {
    return g.vertex_count() <= 1 || connected_components(g).size() == 1;
}

// --- twins and pendants --------------------------------------------------------------

bool are_twins(const Graph& g, int a, int b) {
    int n = g.vertex_count();
    for (int c = 0; c < n; ++c) {
        if (c == a || c == b) continue;
        if (g.adjacent(c, a) != g.adjacent(c, b)) return false;
    }
    return true;
}

EquivalenceRelation twin_equivalence(const Graph& g) {
    int n = g.vertex_count();
    EquivalenceRelation e(n);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (!e.related(a, b) && are_twins(g, a, b)) e.merge(a, b);
    return e;
}

std::vector<int> pendant_vertices(const Graph& g) {
    std::vector<int> out;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 1) out.push_back(v);
    return out;
}

// --- one-vertex extensions -------------------------------------------------------------

namespace {

Graph grown_copy(const Graph& g) {
    int n = g.vertex_count();
    Graph h(n + 1);
    for (auto [u, v] : g.edges()) h.add_edge(u, v);
    return h;
}

} // namespace

Graph attach_pendant(const Graph& g, int anchor) {
    require(anchor >= 0 && anchor < g.vertex_count(), "anchor out of range");
    Graph h = grown_copy(g);
    h.add_edge(g.vertex_count(), anchor);
    return h;
}

Graph split_vertex(const Graph& g, int anchor, SplitKind kind) {
    require(anchor >= 0 && anchor < g.vertex_count(), "anchor out of range");
    Graph h = grown_copy(g);
    int fresh = g.vertex_count();
    for (int u : g.neighbors(anchor)) h.add_edge(fresh, u);
    if (kind == SplitKind::with_edge) h.add_edge(fresh, anchor);
    return h;
}

GeneratedGraph generate_dh(int n, std::uint64_t seed, std::array<double, 3> weights) {
    require(n >= 1, "need at least one vertex");
    double sum = 0;
    for (double w : weights) {
        require(w >= 0, "weights must be nonnegative");
        sum += w;
    }
    require(sum > 0, "weights must have positive sum");

    std::mt19937_64 rng(seed);
    std::discrete_distribution<int> pick_op(weights.begin(), weights.end());

    GeneratedGraph out;
    out.graph = Graph(1);
    while (out.graph.vertex_count() < n) {
        std::uniform_int_distribution<int> pick_anchor(0, out.graph.vertex_count() - 1);
        int op = pick_op(rng);
        int anchor = pick_anchor(rng);
        if (op == 2 && out.graph.degree(anchor) == 0) {
            // splitting an isolated vertex without the edge would disconnect
            // the graph; only possible while the graph is K_1
            if (weights[0] + weights[1] > 0) continue; // resample
            op = 1;
        }
        switch (op) {
            case 0: out.graph = attach_pendant(out.graph, anchor); break;
            case 1: out.graph = split_vertex(out.graph, anchor, SplitKind::with_edge); break;
            default: out.graph = split_vertex(out.graph, anchor, SplitKind::without_edge); break;
        }
        out.log.push_back({static_cast<ExtensionKind>(op), anchor});
    }
    return out;
}

// --- recognition --------------------------------------------------------------------------

PruningResult is_distance_hereditary(const Graph& g) {
    int n = g.vertex_count();
    std::vector<char> alive(n, 1);
    std::vector<int> deg(n, 0);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);

    auto alive_twins = [&](int a, int b) {
        for (int c = 0; c < n; ++c) {
            if (!alive[c] || c == a || c == b) continue;
            if (g.adjacent(c, a) != g.adjacent(c, b)) return false;
        }
        return true;
    };
    auto drop = [&](int v) {
        alive[v] = 0;
        for (int u = 0; u < n; ++u)
            if (alive[u] && g.adjacent(v, u)) --deg[u];
    };

    PruningResult res;
    for (;;) {
        // lowest-index pendant first
        int pendant = -1;
        for (int v = 0; v < n && pendant < 0; ++v)
            if (alive[v] && deg[v] == 1) pendant = v;
        if (pendant >= 0) {
            int nb = -1;
            for (int u = 0; u < n; ++u)
                if (alive[u] && g.adjacent(pendant, u)) nb = u;
            drop(pendant);
            res.order.push_back({true, pendant, nb});
            continue;
        }
        // else the lexicographically first twin pair; the larger vertex goes
        int ta = -1, tb = -1;
        for (int a = 0; a < n && ta < 0; ++a) {
            if (!alive[a]) continue;
            for (int b = a + 1; b < n; ++b) {
                if (!alive[b]) continue;
                if (alive_twins(a, b)) {
                    ta = a;
                    tb = b;
                    break;
                }
            }
        }
        if (ta >= 0) {
            drop(tb);
            res.order.push_back({false, tb, ta});
            continue;
        }
        break;
    }

    // accepted iff what is left is a set of isolated vertices
    res.is_dh = true;
    for (int v = 0; v < n; ++v)
        if (alive[v] && deg[v] > 0) res.is_dh = false;
    return res;
}

bool is_distance_hereditary_oracle(const Graph& g, int max_n) {
    int n = g.vertex_count();
    if (n > max_n) throw std::invalid_argument("graph too large for the exhaustive oracle");
    if (n <= 2) return true;
    auto global = distance_matrix(g);
    std::vector<int> keep;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        if (std::popcount(mask) < 3) continue;
        keep.clear();
        for (int v = 0; v < n; ++v)
            if (mask & (1u << v)) keep.push_back(v);
        auto sub = induced_subgraph(g, keep);
        auto local = distance_matrix(sub.graph);
        int m = static_cast<int>(keep.size());
        bool connected = true;
        for (int i = 0; i < m && connected; ++i)
            for (int j = 0; j < m; ++j)
                if (local[i][j] == kUnreachable) {
                    connected = false;
                    break;
                }
        if (!connected) continue;
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                if (local[i][j] != global[keep[i]][keep[j]]) return false;
    }
    return true;
}

// --- subgraphs and quotients -------------------------------------------------------------------

InducedSubgraph induced_subgraph(const Graph& g, std::span<const int> keep) {
    require(!keep.empty(), "keep set must be nonempty");
    InducedSubgraph out;
    out.new_to_old.assign(keep.begin(), keep.end());
    std::sort(out.new_to_old.begin(), out.new_to_old.end());
    require(std::adjacent_find(out.new_to_old.begin(), out.new_to_old.end()) ==
                out.new_to_old.end(),
            "keep set has duplicates");
    int m = static_cast<int>(out.new_to_old.size());
    out.old_to_new.assign(g.vertex_count(), -1);
    out.graph = Graph(m);
    for (int i = 0; i < m; ++i) out.old_to_new.at(out.new_to_old[i]) = i;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (g.adjacent(out.new_to_old[i], out.new_to_old[j])) out.graph.add_edge(i, j);
    return out;
}

Graph quotient_graph(const Graph& g, const EquivalenceRelation& e) {
    require(e.point_count() == g.vertex_count(), "relation size mismatch");
    Partition cls = e.classes();
    for (const auto& c : cls.classes)
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = i + 1; j < c.size(); ++j)
                require(are_twins(g, c[i], c[j]), "not a twin equivalence of the graph");

    int m = cls.class_count();
    Graph q(m);
    for (int a = 0; a < m; ++a) {
        for (int b = a + 1; b < m; ++b) {
            bool all = true;
            for (int u : cls.classes[a])
                for (int v : cls.classes[b])
                    all = all && g.adjacent(u, v);
            if (all) q.add_edge(a, b);
        }
    }
    return q;
}

// --- families -----------------------------------------------------------------------------------

Graph complete(int n) {
    require(n >= 1, "size must be positive");
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph complete_bipartite(int a, int b) {
    require(a >= 1 && b >= 1, "sizes must be positive");
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
    return g;
}

Graph cycle(int n) {
    require(n >= 3, "cycle needs at least three vertices");
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Graph path(int n) {
    require(n >= 1, "size must be positive");
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph cocktail_party(int k) {
    require(k >= 1, "size must be positive");
    Graph g(2 * k);
    for (int u = 0; u < 2 * k; ++u)
        for (int v = u + 1; v < 2 * k; ++v)
            if (!(u / 2 == v / 2)) g.add_edge(u, v);
    return g;
}

Graph complement(const Graph& g) {
    int n = g.vertex_count();
    Graph h(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) h.add_edge(u, v);
    return h;
}

} // namespace wldh
