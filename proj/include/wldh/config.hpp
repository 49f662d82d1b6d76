#pragma once

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wldh/graph.hpp"

namespace wldh {

// Sparse intersection numbers c_rs^t keyed by (r,s,t); zero entries absent.
// std::map keeps iteration in sorted key order, which the serializers rely on.
struct IntersectionTensor {
    std::map<std::array<int, 3>, int> entries;

    int at(int r, int s, int t) const {
        auto it = entries.find({r, s, t});
        return it == entries.end() ? 0 : it->second;
    }
    void add(int r, int s, int t, int delta) {
        if (delta != 0) entries[{r, s, t}] += delta;
    }
    bool operator==(const IntersectionTensor&) const = default;
};

// Partition of Omega x Omega into colored basis relations whose classes
// include the diagonal as a union and are closed under transposition.
// The constructor validates exactly these axioms; color ids must be dense.
class Rainbow {
public:
    Rainbow() = default;
    Rainbow(int n, std::vector<int> color_matrix);

    int point_count() const { return n_; }
    int color_count() const { return k_; }
    int color(int a, int b) const { return color_[static_cast<std::size_t>(a) * n_ + b]; }
    const std::vector<int>& color_matrix() const { return color_; }

    bool reflexive(int c) const { return reflexive_[c] != 0; }
    int transpose(int c) const { return transpose_[c]; }
    int class_size(int c) const { return class_size_[c]; }

    // Fibers: point sets carrying one reflexive color each, ordered by that
    // color's id. They partition the point set.
    int fiber_count() const { return static_cast<int>(fibers_.size()); }
    const std::vector<std::vector<int>>& fibers() const { return fibers_; }
    int fiber_of(int point) const { return fiber_of_[point]; }
    Partition fiber_partition() const;

    std::vector<std::pair<int, int>> class_pairs(int c) const;
    std::vector<int> out_neighbors(int a, int c) const; // the set alpha·c

    // Equality of the underlying pair partitions, color ids ignored.
    bool same_pair_partition(const Rainbow& other) const;

protected:
    int n_ = 0;
    int k_ = 0;
    std::vector<int> color_;
    std::vector<char> reflexive_;
    std::vector<int> transpose_;
    std::vector<int> class_size_;
    std::vector<std::vector<int>> fibers_;
    std::vector<int> fiber_of_;
};

// A rainbow with constant valencies, fiber-aligned relation supports and the
// intersection tensor. The constructor checks the cheap structural axioms
// (valency constancy, supports being fibers) and fills the tensor from one
// representative pair per color; full coherence is the job of
// validate_coherence below.
class CoherentConfiguration : public Rainbow {
public:
    CoherentConfiguration() = default;
    explicit CoherentConfiguration(Rainbow base, std::vector<int> seed_ancestor = {});

    int valency(int c) const { return valency_[c]; }
    int src_fiber(int c) const { return src_fiber_[c]; }
    int dst_fiber(int c) const { return dst_fiber_[c]; }
    const IntersectionTensor& tensor() const { return tensor_; }

    // For configurations produced by wl_closure: the round-0 color each final
    // color descends from. Empty otherwise.
    const std::vector<int>& seed_ancestors() const { return seed_ancestor_; }

private:
    std::vector<int> valency_;
    std::vector<int> src_fiber_;
    std::vector<int> dst_fiber_;
    IntersectionTensor tensor_;
    std::vector<int> seed_ancestor_;
};

// --- coherence -----------------------------------------------------------

struct CoherenceViolation {
    int r, s, t;
    std::pair<int, int> witness_a; // pair of color t with count_a
    std::pair<int, int> witness_b; // pair of color t with count_b
    int count_a, count_b;
    std::string to_string() const;
};

struct CoherenceReport {
    std::optional<IntersectionTensor> tensor;
    std::optional<CoherenceViolation> violation;
    bool ok() const { return tensor.has_value(); }
};

// Checks that |alpha·r ∩ beta·s*| is independent of the representative pair
// (alpha,beta) of every color t; returns the tensor or the first witness pair
// that breaks the axiom.
CoherenceReport validate_coherence(const Rainbow& x);

// --- comparison ------------------------------------------------------------

enum class ConfigOrder { equal, a_le_b, b_le_a, incomparable };

// a <= b iff every color class of a is a union of color classes of b.
ConfigOrder compare(const Rainbow& a, const Rainbow& b);

// --- restriction -------------------------------------------------------------

struct Restriction {
    Rainbow rainbow;
    std::vector<int> new_to_old;
    std::vector<int> old_to_new; // -1 outside delta
    std::vector<int> color_new_to_old;
};

// Coloring restricted to delta x delta; delta must be a union of fibers.
// Surviving colors are renumbered densely in old-id order.
Restriction restriction(const CoherentConfiguration& x, std::span<const int> delta);

// --- parabolics ----------------------------------------------------------------

// True iff the union of the given color classes is an equivalence relation on
// the whole point set.
bool is_parabolic(const Rainbow& x, std::span<const int> rel_colors);

// The colors whose union equals e, or nullopt when e is not a relation of x.
std::optional<std::vector<int>> parabolic_colors(const Rainbow& x, const EquivalenceRelation& e);

EquivalenceRelation relation_of_colors(const Rainbow& x, std::span<const int> rel_colors);

struct Quotient {
    CoherentConfiguration config;
    std::vector<int> point_class;          // Omega -> Omega/e
    std::vector<std::vector<int>> classes; // ordered by smallest member
};

// Quotient configuration modulo a parabolic: points are the classes of e,
// colors the rho_e-images of the basis colors (distinct colors may merge).
Quotient quotient_config(const CoherentConfiguration& x, std::span<const int> parabolic_cols);
Quotient quotient_config(const CoherentConfiguration& x, const EquivalenceRelation& e);

// --- canonical invariant ----------------------------------------------------------

// Deterministic serialization of the color-id-level data of a configuration
// produced by wl_closure (whose color naming is canonical): order, fiber
// sizes, transpose pairing, per-color fibers and valencies, seed ancestry and
// the sorted intersection tensor. Equal for point-relabeled inputs.
std::string canonical_invariant(const CoherentConfiguration& x);

} // namespace wldh
