#include "wldh/config.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace wldh {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

} // namespace

// --- Rainbow -------------------------------------------------------------

Rainbow::Rainbow(int n, std::vector<int> color_matrix)
    : n_(n), color_(std::move(color_matrix)) {
    require(n >= 0, "negative point count");
    require(color_.size() == static_cast<std::size_t>(n) * n, "color matrix size mismatch");

    k_ = 0;
    for (int c : color_) {
        require(c >= 0, "negative color id");
        k_ = std::max(k_, c + 1);
    }
    class_size_.assign(k_, 0);
    for (int c : color_) ++class_size_[c];
    for (int c = 0; c < k_; ++c) require(class_size_[c] > 0, "color ids must be dense");

    // diagonal is a union of classes
    reflexive_.assign(k_, 0);
    for (int a = 0; a < n_; ++a) reflexive_[color(a, a)] = 1;
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            require(a == b || !reflexive_[color(a, b)],
                    "reflexive color class leaks off the diagonal");

    // transposition permutes the classes
    transpose_.assign(k_, -1);
    for (int a = 0; a < n_; ++a) {
        for (int b = 0; b < n_; ++b) {
            int c = color(a, b), ct = color(b, a);
            if (transpose_[c] == -1) transpose_[c] = ct;
            require(transpose_[c] == ct, "transpose map is not well-defined");
        }
    }
    for (int c = 0; c < k_; ++c)
        require(transpose_[transpose_[c]] == c, "transpose map is not an involution");

    // fibers from the reflexive colors, ordered by color id
    fiber_of_.assign(n_, -1);
    std::vector<int> fiber_of_color(k_, -1);
    for (int c = 0; c < k_; ++c) {
        if (!reflexive_[c]) continue;
        fiber_of_color[c] = static_cast<int>(fibers_.size());
        fibers_.emplace_back();
    }
    for (int a = 0; a < n_; ++a) {
        int f = fiber_of_color[color(a, a)];
        fiber_of_[a] = f;
        fibers_[f].push_back(a);
    }
}

Partition Rainbow::fiber_partition() const {
    return Partition::from_classes(n_, fibers_);
}

std::vector<std::pair<int, int>> Rainbow::class_pairs(int c) const {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            if (color(a, b) == c) out.emplace_back(a, b);
    return out;
}

std::vector<int> Rainbow::out_neighbors(int a, int c) const {
    std::vector<int> out;
    for (int b = 0; b < n_; ++b)
        if (color(a, b) == c) out.push_back(b);
    return out;
}

bool Rainbow::same_pair_partition(const Rainbow& other) const {
    return n_ == other.n_ && k_ == other.k_ && compare(*this, other) == ConfigOrder::equal;
}

// --- CoherentConfiguration ---------------------------------------------------

CoherentConfiguration::CoherentConfiguration(Rainbow base, std::vector<int> seed_ancestor)
    : Rainbow(std::move(base)), seed_ancestor_(std::move(seed_ancestor)) {
    require(seed_ancestor_.empty() || seed_ancestor_.size() == static_cast<std::size_t>(k_),
            "seed ancestry size mismatch");

    src_fiber_.assign(k_, -1);
    dst_fiber_.assign(k_, -1);
    valency_.assign(k_, -1);

    // valency constancy on the source fiber, and supports being full fibers
    std::vector<int> row_count(k_, 0);
    for (int a = 0; a < n_; ++a) {
        std::fill(row_count.begin(), row_count.end(), 0);
        for (int b = 0; b < n_; ++b) ++row_count[color(a, b)];
        for (int c = 0; c < k_; ++c) {
            if (row_count[c] == 0) continue;
            if (src_fiber_[c] == -1) {
                src_fiber_[c] = fiber_of(a);
                valency_[c] = row_count[c];
            }
            if (src_fiber_[c] != fiber_of(a) || valency_[c] != row_count[c])
                throw std::invalid_argument("valency is not constant on a fiber");
        }
    }
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b) {
            int c = color(a, b);
            if (dst_fiber_[c] == -1) dst_fiber_[c] = fiber_of(b);
            if (dst_fiber_[c] != fiber_of(b))
                throw std::invalid_argument("relation target is not inside one fiber");
        }
    for (int c = 0; c < k_; ++c) {
        // every point of the source fiber must actually carry the relation
        int f = src_fiber_[c];
        if (class_size_[c] != valency_[c] * static_cast<int>(fibers()[f].size()))
            throw std::invalid_argument("relation support is not a full fiber");
    }

    // tensor from one representative pair per color
    std::vector<char> done(k_, 0);
    for (int a = 0; a < n_; ++a) {
        for (int b = 0; b < n_; ++b) {
            int t = color(a, b);
            if (done[t]) continue;
            done[t] = 1;
            for (int g = 0; g < n_; ++g) tensor_.add(color(a, g), color(g, b), t, 1);
        }
    }
}

// --- validate_coherence ----------------------------------------------------------

std::string CoherenceViolation::to_string() const {
    std::ostringstream out;
    out << "c(r=" << r << ",s=" << s << ",t=" << t << ") is " << count_a << " at ("
        << witness_a.first << "," << witness_a.second << ") but " << count_b << " at ("
        << witness_b.first << "," << witness_b.second << ")";
    return out.str();
}

CoherenceReport validate_coherence(const Rainbow& x) {
    int n = x.point_count();
    int k = x.color_count();
    // signature of the first-seen pair per color, as sorted (r,s,count) runs
    std::vector<std::vector<std::array<int, 3>>> ref(k);
    std::vector<std::pair<int, int>> ref_pair(k, {-1, -1});
    std::vector<std::pair<int, int>> scratch(n);

    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            int t = x.color(a, b);
            for (int g = 0; g < n; ++g) scratch[g] = {x.color(a, g), x.color(g, b)};
            std::sort(scratch.begin(), scratch.end());
            std::vector<std::array<int, 3>> runs;
            for (int i = 0; i < n;) {
                int j = i;
                while (j < n && scratch[j] == scratch[i]) ++j;
                runs.push_back({scratch[i].first, scratch[i].second, j - i});
                i = j;
            }
            if (ref_pair[t].first == -1) {
                ref_pair[t] = {a, b};
                ref[t] = std::move(runs);
                continue;
            }
            if (runs == ref[t]) continue;
            // locate a differing (r,s)
            CoherenceViolation v;
            v.t = t;
            v.witness_a = ref_pair[t];
            v.witness_b = {a, b};
            for (const auto& run : runs) {
                int expect = 0;
                for (const auto& e : ref[t])
                    if (e[0] == run[0] && e[1] == run[1]) expect = e[2];
                if (expect != run[2]) {
                    v.r = run[0];
                    v.s = run[1];
                    v.count_a = expect;
                    v.count_b = run[2];
                    return {.tensor = std::nullopt, .violation = v};
                }
            }
            for (const auto& e : ref[t]) {
                bool found = false;
                for (const auto& run : runs) found = found || (run[0] == e[0] && run[1] == e[1]);
                if (!found) {
                    v.r = e[0];
                    v.s = e[1];
                    v.count_a = e[2];
                    v.count_b = 0;
                    return {.tensor = std::nullopt, .violation = v};
                }
            }
        }
    }

    IntersectionTensor tensor;
    for (int t = 0; t < k; ++t)
        for (const auto& run : ref[t]) tensor.add(run[0], run[1], t, run[2]);
    return {.tensor = std::move(tensor), .violation = std::nullopt};
}

// --- compare ------------------------------------------------------------------------

ConfigOrder compare(const Rainbow& a, const Rainbow& b) {
    require(a.point_count() == b.point_count(), "point counts differ");
    int n = a.point_count();

    auto covered_by = [n](const Rainbow& fine, const Rainbow& coarse) {
        // every class of `coarse` must be a union of classes of `fine`
        std::vector<int> image(fine.color_count(), -1);
        for (int p = 0; p < n * n; ++p) {
            int cf = fine.color_matrix()[p];
            int cc = coarse.color_matrix()[p];
            if (image[cf] == -1) image[cf] = cc;
            if (image[cf] != cc) return false;
        }
        return true;
    };

    bool a_le_b = covered_by(b, a);
    bool b_le_a = covered_by(a, b);
    if (a_le_b && b_le_a) return ConfigOrder::equal;
    if (a_le_b) return ConfigOrder::a_le_b;
    if (b_le_a) return ConfigOrder::b_le_a;
    return ConfigOrder::incomparable;
}

// --- restriction ----------------------------------------------------------------------

Restriction restriction(const CoherentConfiguration& x, std::span<const int> delta) {
    int n = x.point_count();
    std::vector<char> in(n, 0);
    for (int v : delta) {
        require(v >= 0 && v < n, "restriction point out of range");
        in[v] = 1;
    }
    for (const auto& fiber : x.fibers()) {
        int covered = 0;
        for (int v : fiber) covered += in[v];
        require(covered == 0 || covered == static_cast<int>(fiber.size()),
                "restriction set must be a union of fibers");
    }

    Restriction out;
    out.old_to_new.assign(n, -1);
    for (int v = 0; v < n; ++v)
        if (in[v]) {
            out.old_to_new[v] = static_cast<int>(out.new_to_old.size());
            out.new_to_old.push_back(v);
        }
    require(!out.new_to_old.empty(), "restriction set must be nonempty");

    int m = static_cast<int>(out.new_to_old.size());
    std::vector<int> color_old_to_new(x.color_count(), -1);
    std::vector<int> matrix(static_cast<std::size_t>(m) * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            color_old_to_new[x.color(out.new_to_old[i], out.new_to_old[j])] = 0;
    int next = 0;
    for (int c = 0; c < x.color_count(); ++c)
        if (color_old_to_new[c] == 0) {
            color_old_to_new[c] = next++;
            out.color_new_to_old.push_back(c);
        }
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            matrix[static_cast<std::size_t>(i) * m + j] =
                color_old_to_new[x.color(out.new_to_old[i], out.new_to_old[j])];
    out.rainbow = Rainbow(m, std::move(matrix));
    return out;
}

// --- parabolics ---------------------------------------------------------------------------

bool is_parabolic(const Rainbow& x, std::span<const int> rel_colors) {
    int n = x.point_count();
    std::vector<char> mask(x.color_count(), 0);
    for (int c : rel_colors) {
        require(c >= 0 && c < x.color_count(), "unknown color id");
        mask[c] = 1;
    }
    // reflexive on all of Omega
    for (int a = 0; a < n; ++a)
        if (!mask[x.color(a, a)]) return false;
    // symmetric
    for (int c = 0; c < x.color_count(); ++c)
        if (mask[c] != mask[x.transpose(c)]) return false;
    // transitive: within every connected block, all pairs must be related
    EquivalenceRelation uf(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (mask[x.color(a, b)]) uf.merge(a, b);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (uf.related(a, b) && !mask[x.color(a, b)]) return false;
    return true;
}

std::optional<std::vector<int>> parabolic_colors(const Rainbow& x, const EquivalenceRelation& e) {
    require(e.point_count() == x.point_count(), "relation size mismatch");
    int n = x.point_count();
    std::vector<char> hit(x.color_count(), 0), miss(x.color_count(), 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            (e.related(a, b) ? hit : miss)[x.color(a, b)] = 1;
    std::vector<int> cols;
    for (int c = 0; c < x.color_count(); ++c) {
        if (hit[c] && miss[c]) return std::nullopt;
        if (hit[c]) cols.push_back(c);
    }
    return cols;
}

EquivalenceRelation relation_of_colors(const Rainbow& x, std::span<const int> rel_colors) {
    std::vector<char> mask(x.color_count(), 0);
    for (int c : rel_colors) mask[c] = 1;
    EquivalenceRelation e(x.point_count());
    for (int a = 0; a < x.point_count(); ++a)
        for (int b = 0; b < x.point_count(); ++b)
            if (mask[x.color(a, b)]) e.merge(a, b);
    return e;
}

// --- quotient -----------------------------------------------------------------------------------

Quotient quotient_config(const CoherentConfiguration& x, std::span<const int> parabolic_cols) {
    require(is_parabolic(x, parabolic_cols), "color set is not a parabolic");
    EquivalenceRelation e = relation_of_colors(x, parabolic_cols);

    Quotient out;
    Partition cls = e.classes();
    out.classes = cls.classes;
    out.point_class = cls.class_of;
    int m = cls.class_count();

    // group image pairs by the set of colors mapping onto them
    std::vector<std::vector<int>> pair_colors(static_cast<std::size_t>(m) * m);
    for (int a = 0; a < x.point_count(); ++a)
        for (int b = 0; b < x.point_count(); ++b)
            pair_colors[static_cast<std::size_t>(out.point_class[a]) * m + out.point_class[b]]
                .push_back(x.color(a, b));

    std::vector<std::vector<int>> keys(static_cast<std::size_t>(m) * m);
    for (std::size_t p = 0; p < keys.size(); ++p) {
        auto& cs = pair_colors[p];
        std::sort(cs.begin(), cs.end());
        cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
        keys[p] = cs;
    }
    // rho maps distinct colors to equal-or-disjoint images; verify and name
    // image colors by their smallest preimage color id
    std::map<std::vector<int>, int> ids;
    std::vector<std::vector<int>> distinct;
    for (auto& key : keys)
        if (ids.emplace(key, 0).second) distinct.push_back(key);
    std::vector<char> seen_color(x.color_count(), 0);
    for (const auto& key : distinct)
        for (int c : key) {
            if (seen_color[c])
                throw std::invalid_argument("relation images overlap; not a parabolic quotient");
            seen_color[c] = 1;
        }
    std::sort(distinct.begin(), distinct.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    for (int i = 0; i < static_cast<int>(distinct.size()); ++i) ids[distinct[i]] = i;

    std::vector<int> matrix(static_cast<std::size_t>(m) * m);
    for (std::size_t p = 0; p < keys.size(); ++p) matrix[p] = ids[keys[p]];
    out.config = CoherentConfiguration(Rainbow(m, std::move(matrix)));
    return out;
}

Quotient quotient_config(const CoherentConfiguration& x, const EquivalenceRelation& e) {
    auto cols = parabolic_colors(x, e);
    require(cols.has_value(), "equivalence relation is not a relation of the configuration");
    return quotient_config(x, *cols);
}

// --- canonical invariant -----------------------------------------------------------------------

std::string canonical_invariant(const CoherentConfiguration& x) {
    std::ostringstream out;
    out << "n:" << x.point_count();
    out << "|fibers:";
    for (const auto& f : x.fibers()) out << f.size() << ",";
    out << "|colors:" << x.color_count();
    out << "|transpose:";
    for (int c = 0; c < x.color_count(); ++c) out << x.transpose(c) << ",";
    out << "|info:";
    for (int c = 0; c < x.color_count(); ++c)
        out << "(" << (x.reflexive(c) ? 1 : 0) << "," << x.src_fiber(c) << "," << x.dst_fiber(c)
            << "," << x.valency(c) << ")";
    out << "|seeds:";
    for (int a : x.seed_ancestors()) out << a << ",";
    out << "|tensor:";
    for (const auto& [key, value] : x.tensor().entries)
        out << key[0] << "," << key[1] << "," << key[2] << "=" << value << ";";
    return out.str();
}

} // namespace wldh
