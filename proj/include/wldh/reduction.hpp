#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wldh/config.hpp"
#include "wldh/graph.hpp"
#include "wldh/twins.hpp"

namespace wldh {

enum class StepKind { reduce_twins, remove_twin_matching, remove_pendant_matching };

const char* to_string(StepKind kind);

struct ReductionStep {
    StepKind kind;
    std::optional<Matching> matching;           // matching steps
    std::optional<EquivalenceRelation> parabolic; // twin reduction
    int before_vertices = 0;
    int after_vertices = 0;
};

struct VerificationRecord {
    bool closure_commutes = false;
    bool partition_correct = false;
    std::string details; // empty when clean
    bool clean() const { return closure_commutes && partition_correct; }
};

struct TraceEntry {
    Graph graph;
    Partition pi;
    ReductionStep step;
    VerificationRecord verification;
};

struct ReductionTrace {
    std::vector<TraceEntry> steps;
    Graph terminal;
    Partition terminal_pi;
    bool all_clean() const;
};

struct AppliedStep {
    Graph graph;
    Partition pi;
    std::vector<int> old_to_new; // vertex -> new vertex / class index
};

// Next reduction step under the fixed preference order: nontrivial twin
// parabolic, else the twin matching of lowest color id, else the pendant
// matching of lowest color id. nullopt when nothing applies (never for a
// distance-hereditary graph with >= 2 vertices).
std::optional<ReductionStep> find_step(const Graph& g, const Partition& pi);

// Deletes the source fiber of a pendant or twin matching; the partition loses
// that class and is reindexed.
AppliedStep apply_remove_matching(const Graph& g, const Partition& pi, const Matching& m);

// Collapses the twin parabolic: quotient graph and quotient partition.
AppliedStep apply_reduce_twins(const Graph& g, const Partition& pi, const EquivalenceRelation& e);

// Recomputes both closures and checks the two step guarantees: the closure of
// the reduced graph equals the restriction/quotient of the original closure
// (as pair partitions, after the index remap), and the reduced partition is
// again the fiber partition of the reduced closure.
VerificationRecord verify_step(const Graph& g, const Partition& pi, const ReductionStep& step);

// Runs the full reduction of a connected distance-hereditary graph down to a
// single vertex, verifying every step. Starts from the fiber partition of the
// plain closure. Throws std::invalid_argument for non-DH or disconnected
// input and contract_violation if no step exists before termination.
ReductionTrace reduce(const Graph& g);

} // namespace wldh
