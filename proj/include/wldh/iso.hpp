#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wldh/graph.hpp"

namespace wldh {

// Canonical invariant of the plain coherent closure; equal strings for
// relabeled inputs.
std::string wl_invariant(const Graph& g);

// Stable vertex coloring by iterated neighbor-color multisets (color
// refinement), serialized round by round with canonical color naming.
std::string one_dim_invariant(const Graph& g);

// Label of the first differing section of two wl_invariant strings.
std::string first_invariant_difference(const std::string& a, const std::string& b);

struct BruteForce {
    bool isomorphic;
    std::optional<std::vector<int>> witness;
};

// Complete backtracking over degree-compatible vertex maps; n <= max_n.
BruteForce brute_force_isomorphic(const Graph& g, const Graph& h, int max_n = 10);

struct IsoVerdict {
    enum class Kind { isomorphic, non_isomorphic, unknown };
    Kind kind;
    std::optional<std::vector<int>> witness; // verified g -> h isomorphism
    std::string certificate;                 // first differing invariant section
    bool g_dh = false;
    bool h_dh = false;
    bool budget_exhausted = false;
};

// Sound for all graphs and exact whenever one input is distance-hereditary:
// distinct invariants give NonIsomorphic; equal invariants give Isomorphic
// with a verified witness when a side is DH (the witness search is seeded by
// the canonical color correspondence and must succeed; a completed search
// without a witness raises contract_violation). Otherwise the witness search
// runs within the node budget and failure yields Unknown.
IsoVerdict test_isomorphism(const Graph& g, const Graph& h, long long budget = 1'000'000);

} // namespace wldh
