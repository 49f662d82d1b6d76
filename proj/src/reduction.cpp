#include "wldh/reduction.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "wldh/common.hpp"
#include "wldh/wl.hpp"

namespace wldh {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

std::optional<ReductionStep> find_step_for(const CoherentConfiguration& x, const Graph& g) {
    ReductionStep step;
    step.before_vertices = g.vertex_count();

    EquivalenceRelation e = config_twin_parabolic(x);
    if (!e.is_identity()) {
        step.kind = StepKind::reduce_twins;
        step.parabolic = std::move(e);
        step.after_vertices = step.parabolic->class_count();
        return step;
    }

    auto matchings = find_matchings(x); // ascending color id
    const Matching* pendant = nullptr;
    for (const auto& m : matchings) {
        switch (classify_matching(x, g, m)) {
            case MatchingKind::twin:
                step.kind = StepKind::remove_twin_matching;
                step.matching = m;
                step.after_vertices = g.vertex_count() - static_cast<int>(m.domain.size());
                return step;
            case MatchingKind::pendant:
                if (!pendant) pendant = &m;
                break;
            case MatchingKind::plain:
                break;
        }
    }
    if (pendant) {
        step.kind = StepKind::remove_pendant_matching;
        step.matching = *pendant;
        step.after_vertices = g.vertex_count() - static_cast<int>(pendant->domain.size());
        return step;
    }
    return std::nullopt;
}

AppliedStep apply_matching_unchecked(const Graph& g, const Partition& pi, const Matching& m) {
    std::vector<char> drop(g.vertex_count(), 0);
    for (int v : m.domain) drop[v] = 1;
    std::vector<int> keep;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!drop[v]) keep.push_back(v);

    auto sub = induced_subgraph(g, keep);
    std::vector<std::vector<int>> classes;
    bool found = false;
    for (const auto& cls : pi.classes) {
        if (cls == m.domain) {
            found = true;
            continue;
        }
        std::vector<int> mapped;
        for (int v : cls) mapped.push_back(sub.old_to_new.at(v));
        classes.push_back(std::move(mapped));
    }
    require(found, "matching source fiber is not a class of the partition");
    return {std::move(sub.graph),
            Partition::from_classes(static_cast<int>(keep.size()), std::move(classes)),
            std::move(sub.old_to_new)};
}

AppliedStep apply_twins_unchecked(const Graph& g, const Partition& pi,
                                  const EquivalenceRelation& e) {
    Graph q = quotient_graph(g, e); // validates the twin-equivalence precondition
    Partition cls = e.classes();
    std::vector<std::vector<int>> mapped;
    for (const auto& pc : pi.classes) {
        std::vector<int> img;
        for (int v : pc) img.push_back(cls.class_of[v]);
        std::sort(img.begin(), img.end());
        img.erase(std::unique(img.begin(), img.end()), img.end());
        mapped.push_back(std::move(img));
    }
    // distinct partition classes keep distinct images: every e-class lies
    // inside one pi class, so images cannot overlap
    return {std::move(q), Partition::from_classes(cls.class_count(), std::move(mapped)),
            cls.class_of};
}

VerificationRecord verify_with(const CoherentConfiguration& x_before, const Partition& pi_after,
                               const ReductionStep& step,
                               const CoherentConfiguration& x_after) {
    VerificationRecord rec;
    std::ostringstream details;

    ConfigOrder order;
    if (step.kind == StepKind::reduce_twins) {
        Quotient q = quotient_config(x_before, *step.parabolic);
        order = compare(q.config, x_after);
    } else {
        std::vector<char> drop(x_before.point_count(), 0);
        for (int v : step.matching->domain) drop[v] = 1;
        std::vector<int> keep;
        for (int v = 0; v < x_before.point_count(); ++v)
            if (!drop[v]) keep.push_back(v);
        Restriction r = restriction(x_before, keep);
        order = compare(r.rainbow, x_after);
    }
    rec.closure_commutes = order == ConfigOrder::equal;
    if (!rec.closure_commutes) details << "closure comparison is not an equality; ";

    rec.partition_correct = pi_after == x_after.fiber_partition();
    if (!rec.partition_correct) details << "reduced partition differs from the reduced fibers; ";

    rec.details = details.str();
    return rec;
}

} // namespace

const char* to_string(StepKind kind) {
    switch (kind) {
        case StepKind::reduce_twins: return "reduce_twins";
        case StepKind::remove_twin_matching: return "remove_twin_matching";
        case StepKind::remove_pendant_matching: return "remove_pendant_matching";
    }
    return "?";
}

bool ReductionTrace::all_clean() const {
    for (const auto& entry : steps)
        if (!entry.verification.clean()) return false;
    return true;
}

std::optional<ReductionStep> find_step(const Graph& g, const Partition& pi) {
    require(g.vertex_count() >= 2, "need at least two vertices");
    return find_step_for(wl_of_graph(g, pi), g);
}

AppliedStep apply_remove_matching(const Graph& g, const Partition& pi, const Matching& m) {
    require(m.domain != m.range, "matching source and target coincide");
    bool pendant = true, twin = true;
    for (std::size_t i = 0; i < m.domain.size(); ++i) {
        pendant = pendant && g.degree(m.domain[i]) == 1 && g.adjacent(m.domain[i], m.image[i]);
        twin = twin && are_twins(g, m.domain[i], m.image[i]);
    }
    require(pendant || twin, "matching is neither pendant nor twin");
    return apply_matching_unchecked(g, pi, m);
}

AppliedStep apply_reduce_twins(const Graph& g, const Partition& pi,
                               const EquivalenceRelation& e) {
    require(!e.is_identity(), "twin parabolic is trivial");
    CoherentConfiguration x = wl_of_graph(g, pi);
    require(e == config_twin_parabolic(x), "relation is not the twin parabolic of the closure");
    return apply_twins_unchecked(g, pi, e);
}

VerificationRecord verify_step(const Graph& g, const Partition& pi, const ReductionStep& step) {
    CoherentConfiguration x = wl_of_graph(g, pi);
    AppliedStep applied = step.kind == StepKind::reduce_twins
                              ? apply_twins_unchecked(g, pi, *step.parabolic)
                              : apply_matching_unchecked(g, pi, *step.matching);
    CoherentConfiguration x_after = wl_of_graph(applied.graph, applied.pi);
    return verify_with(x, applied.pi, step, x_after);
}

ReductionTrace reduce(const Graph& g) {
    require(is_connected(g), "graph is not connected");
    require(is_distance_hereditary(g).is_dh, "graph is not distance-hereditary");

    ReductionTrace trace;
    Graph current = g;
    Partition pi = wl_of_graph(current).fiber_partition();
    CoherentConfiguration x = wl_of_graph(current, pi);

    while (current.vertex_count() > 1) {
        auto step = find_step_for(x, current);
        if (!step)
            throw contract_violation(
                "no reduction step exists for a distance-hereditary graph with >= 2 vertices");

        AppliedStep applied = step->kind == StepKind::reduce_twins
                                  ? apply_twins_unchecked(current, pi, *step->parabolic)
                                  : apply_matching_unchecked(current, pi, *step->matching);
        CoherentConfiguration x_after = wl_of_graph(applied.graph, applied.pi);
        VerificationRecord rec = verify_with(x, applied.pi, *step, x_after);

        trace.steps.push_back({std::move(current), std::move(pi), std::move(*step), rec});
        current = std::move(applied.graph);
        pi = std::move(applied.pi);
        x = std::move(x_after);
    }
    trace.terminal = std::move(current);
    trace.terminal_pi = std::move(pi);
    return trace;
}

} // namespace wldh
