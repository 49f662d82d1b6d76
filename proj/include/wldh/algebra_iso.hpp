#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "wldh/config.hpp"
#include "wldh/graph.hpp"

namespace wldh {

// Color bijection phi : colors(A) -> colors(B) preserving reflexivity,
// transpose pairing, the fiber map, valencies and all intersection numbers.
struct AlgebraicIsomorphism {
    std::vector<int> color_map;
    bool operator==(const AlgebraicIsomorphism&) const = default;
};

struct AisoOptions {
    long long node_budget = 1'000'000;
    std::size_t max_results = 1'000'000;
    int max_colors = 64;
    // Optional graph-level constraint: the first color set must map onto the
    // second (used to pin the edge colors when both configurations come from
    // graphs).
    std::optional<std::pair<std::vector<int>, std::vector<int>>> required_union;
};

struct AisoResult {
    std::vector<AlgebraicIsomorphism> isos;
    bool truncated = false; // node budget or result cap hit
    long long nodes = 0;
};

// Complete backtracking enumeration of Aiso(A,B) with pruning on fiber
// structure, valencies, transposes and the partially assigned tensor. Every
// returned map is re-verified against the full tensors.
AisoResult enumerate_algebraic_isomorphisms(const CoherentConfiguration& a,
                                            const CoherentConfiguration& b,
                                            const AisoOptions& opts = {});

struct InducedWitness {
    std::vector<int> point_map; // points(A) -> points(B)
};

struct WitnessSearch {
    std::optional<InducedWitness> witness;
    bool truncated = false; // budget hit before the search space was exhausted
    long long nodes = 0;
    bool complete() const { return witness.has_value() || !truncated; }
};

// Complete point-level backtracking for a bijection f with
// color_B(f(a), f(b)) = phi(color_A(a, b)); nullopt with a finished search
// means no inducing bijection exists.
WitnessSearch find_inducing_bijection(const CoherentConfiguration& a,
                                      const CoherentConfiguration& b,
                                      const AlgebraicIsomorphism& phi,
                                      long long node_budget = 1'000'000, int max_points = 64);

struct SeparabilityFailure {
    std::size_t corpus_index;
    AlgebraicIsomorphism phi;
};

struct SeparabilityReport {
    std::vector<SeparabilityFailure> failures;
    bool truncated = false;
    std::size_t configs_checked = 0;
    long long isomorphisms_checked = 0;
    bool pass() const { return failures.empty() && !truncated; }
};

// For every configuration in the corpus, enumerates Aiso(a, b) and tries to
// induce each map by a point bijection. A clean report is evidence (not
// proof) of separability of a.
SeparabilityReport check_separability_against(const CoherentConfiguration& a,
                                              std::span<const CoherentConfiguration> corpus,
                                              const AisoOptions& opts = {});

// phi maps the color set of the twin parabolic of A onto that of B.
bool twin_parabolic_transport(const CoherentConfiguration& a, const CoherentConfiguration& b,
                              const AlgebraicIsomorphism& phi);

struct AutomorphismCheck {
    long long graph_order;  // automorphisms of g fixing every class of pi setwise
    long long config_order; // automorphisms of the closure
    bool equal;             // the two permutation sets coincide
};

// Brute-force cross-validation of both automorphism sets; n <= max_n.
AutomorphismCheck automorphisms_desk(const Graph& g, const Partition& pi, int max_n = 10);

} // namespace wldh
