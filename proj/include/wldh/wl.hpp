#pragma once

#include <span>
#include <utility>
#include <vector>

#include "wldh/config.hpp"
#include "wldh/graph.hpp"

namespace wldh {

// A binary relation over the point set, given as ordered pairs.
using Relation = std::vector<std::pair<int, int>>;

// Coherent closure of a set of relations, computed by iterated pair
// refinement. The initial color of (a,b) is the triple
// (a==b, membership vector of (a,b) across the seeds, membership vector of
// (b,a)); each round recolors (a,b) by its old color plus the multiset over g
// of (color(a,g), color(g,b)), until a fixed point. Color ids are renamed
// canonically every round by sorting the (old color, signature) keys, so the
// final coloring commutes with point relabeling.
CoherentConfiguration wl_closure(int n, std::span<const Relation> seeds);

// Closure of {E(g)} plus the diagonal of every class of pi.
CoherentConfiguration wl_of_graph(const Graph& g, const Partition& pi);
CoherentConfiguration wl_of_graph(const Graph& g);

// The basis relations of a configuration, usable to re-seed wl_closure.
std::vector<Relation> basis_relations(const Rainbow& x);

// Pointwise image of a configuration under a permutation of the points
// (color ids kept). Used by equivariance checks.
std::vector<int> relabeled_color_matrix(const Rainbow& x, std::span<const int> perm);

} // namespace wldh
