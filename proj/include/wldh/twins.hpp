#pragma once

#include <vector>

#include "wldh/config.hpp"
#include "wldh/graph.hpp"

namespace wldh {

// Twin parabolic of a coherent configuration: alpha ~ beta iff they share a
// fiber and r(gamma,alpha) = r(gamma,beta) for every third point gamma. The
// result is always a parabolic whose classes lie inside fibers.
EquivalenceRelation config_twin_parabolic(const CoherentConfiguration& x);

// Checks that e is the twin parabolic via its order-theoretic
// characterization: e is a fiber-respecting parabolic satisfying
//   (1) e.s = s for every basis relation s disjoint from e, and
//   (2) per fiber, e is trivial or its irreflexive part is a single basis
//       relation,
// and e is maximal with these properties. Maximality is decided by closing
// e with one extra basis color at a time and testing the closures.
bool verify_twin_characterization(const CoherentConfiguration& x, const EquivalenceRelation& e);

// Distinct irreflexive basis relations keep distinct images under the
// quotient map rho_e.
bool rho_injective_on_irreflexive(const CoherentConfiguration& x, const EquivalenceRelation& e);

// An irreflexive basis relation with both valencies 1; defines a bijection
// from its source fiber onto its target fiber.
struct Matching {
    int color;
    std::vector<int> domain; // source fiber, sorted
    std::vector<int> image;  // image[i] is the partner of domain[i]
    std::vector<int> range;  // target fiber, sorted
};

std::vector<Matching> find_matchings(const CoherentConfiguration& x);

enum class MatchingKind { pendant, twin, plain };

// Pendant: domain and range differ as sets and every domain vertex is a
// pendant vertex of g whose unique neighbor is its partner. Twin: domain and
// range differ and every partner is a twin of its source. Otherwise plain.
MatchingKind classify_matching(const CoherentConfiguration& x, const Graph& g, const Matching& m);

// Config twins are graph twins, and same-fiber graph twins are config twins
// (requires a correct partition to be meaningful).
bool graph_vs_config_twins(const Graph& g, const Partition& pi);

// Smallest parabolic of x containing the given colors: close under
// equivalence generation and under membership of intersecting colors.
std::vector<int> parabolic_closure(const CoherentConfiguration& x, std::vector<int> colors);

} // namespace wldh
