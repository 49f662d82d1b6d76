#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace wldh {

// Sentinel for "no path"; strictly larger than any achievable hop distance,
// small enough that sums of two sentinels do not overflow int.
inline constexpr int kUnreachable = std::numeric_limits<int>::max() / 4;

// Finite simple undirected graph on vertices 0..n-1, adjacency-matrix backed.
// Every undirected edge is present as both arcs. Immutable by convention once
// built: all free functions below return new graphs.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int vertex_count() const { return n_; }
    int edge_count() const;

    bool adjacent(int u, int v) const { return adj_[index(u, v)] != 0; }
    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    int degree(int v) const;
    std::vector<int> neighbors(int v) const;
    std::vector<std::pair<int, int>> edges() const; // u < v
    std::vector<std::pair<int, int>> arcs() const;  // both directions

    // Graph with vertex v renamed to perm[v]; perm must be a permutation.
    Graph relabeled(std::span<const int> perm) const;

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    std::vector<char> adj_; // row-major n*n

    std::size_t index(int u, int v) const;
};

// Partition of 0..n-1 into disjoint nonempty classes. Kept in canonical form:
// class members sorted, classes ordered by smallest member.
struct Partition {
    std::vector<std::vector<int>> classes;
    std::vector<int> class_of;

    static Partition trivial(int n);
    static Partition discrete(int n);
    static Partition from_classes(int n, std::vector<std::vector<int>> classes);

    int point_count() const { return static_cast<int>(class_of.size()); }
    int class_count() const { return static_cast<int>(classes.size()); }

    bool operator==(const Partition&) const = default;
};

// Equivalence relation on 0..n-1 as a union-find closure; the representative
// of a class is its smallest member.
class EquivalenceRelation {
public:
    EquivalenceRelation() = default;
    explicit EquivalenceRelation(int n); // identity relation
    static EquivalenceRelation from_partition(const Partition& p);

    void merge(int a, int b);
    int representative(int v) const;
    bool related(int a, int b) const { return representative(a) == representative(b); }

    int point_count() const { return static_cast<int>(parent_.size()); }
    int class_count() const;
    bool is_identity() const { return class_count() == point_count(); }
    Partition classes() const;

    bool operator==(const EquivalenceRelation& other) const;

private:
    mutable std::vector<int> parent_;
};

// --- distances ------------------------------------------------------------

// Hop distances via BFS from every vertex; kUnreachable for disconnected pairs.
std::vector<std::vector<int>> distance_matrix(const Graph& g);

bool is_connected(const Graph& g);
std::vector<std::vector<int>> connected_components(const Graph& g);

// --- twins and pendants ----------------------------------------------------

// Twins: every third vertex sees both or neither (covers adjacent and
// non-adjacent twins alike).
bool are_twins(const Graph& g, int a, int b);
EquivalenceRelation twin_equivalence(const Graph& g);

std::vector<int> pendant_vertices(const Graph& g);

// --- one-vertex extensions ---------------------------------------------------

enum class SplitKind { with_edge, without_edge };

Graph attach_pendant(const Graph& g, int anchor);
Graph split_vertex(const Graph& g, int anchor, SplitKind kind);

enum class ExtensionKind { attach_pendant, split_with_edge, split_without_edge };

struct ExtensionStep {
    ExtensionKind kind;
    int anchor;
};

struct GeneratedGraph {
    Graph graph;
    std::vector<ExtensionStep> log;
};

// Random connected distance-hereditary graph built by n-1 one-vertex
// extensions; deterministic for a fixed seed. weights = probabilities of
// {attach_pendant, split_with_edge, split_without_edge}.
GeneratedGraph generate_dh(int n, std::uint64_t seed,
                           std::array<double, 3> weights = {1.0, 1.0, 1.0});

// --- distance-hereditary recognition ----------------------------------------

struct PruneStep {
    bool pendant;  // otherwise a twin deletion
    int removed;   // original vertex id deleted
    int partner;   // unique neighbor / the twin that stays
};

struct PruningResult {
    bool is_dh;
    std::vector<PruneStep> order;
};

// Quadratic pruning recognizer: repeatedly delete the lowest-index pendant,
// else one vertex of the lexicographically first twin pair. A graph is
// accepted iff every component prunes down to a single vertex.
PruningResult is_distance_hereditary(const Graph& g);

// Exponential reference check straight from the definition: every connected
// induced subgraph preserves pairwise distances.
bool is_distance_hereditary_oracle(const Graph& g, int max_n = 10);

// --- subgraphs and quotients -------------------------------------------------

struct InducedSubgraph {
    Graph graph;
    std::vector<int> new_to_old;
    std::vector<int> old_to_new; // -1 for dropped vertices
};

InducedSubgraph induced_subgraph(const Graph& g, std::span<const int> keep);

// Quotient by a twin equivalence: vertices are classes (ordered by smallest
// member), two classes adjacent iff every cross pair is adjacent.
Graph quotient_graph(const Graph& g, const EquivalenceRelation& e);

// --- families ----------------------------------------------------------------

Graph complete(int n);
Graph complete_bipartite(int a, int b);
Graph cycle(int n);
Graph path(int n);
Graph cocktail_party(int k); // 2k vertices, each missing only its partner
Graph complement(const Graph& g);

} // namespace wldh
