#include "rcm/percolation.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "rcm/errors.hpp"
#include "rcm/io.hpp"

namespace rcm {

namespace {

// Union-find with path halving + union by size.
class UnionFind {
  public:
    explicit UnionFind(std::int64_t n) : parent_(n), size_(n, 1) {
        std::iota(parent_.begin(), parent_.end(), VertexIndex{0});
    }
    VertexIndex find(VertexIndex v) {
        while (parent_[v] != v) {
            parent_[v] = parent_[parent_[v]];
            v = parent_[v];
        }
        return v;
    }
    void unite(VertexIndex a, VertexIndex b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
    }

  private:
    std::vector<VertexIndex> parent_;
    std::vector<std::int64_t> size_;
};

bool edge_open(double w, double xi) { return xi > 0.0 ? w >= xi : w > 0.0; }

} // namespace

ClusterLabeling clusters(const ConductanceField& field, double xi) {
    if (xi < 0.0) throw std::invalid_argument("clusters: xi must be >= 0");
    const BoxGeometry& g = field.geometry();
    const std::int64_t n = g.vertex_count();

    UnionFind uf(n);
    std::vector<bool> open_vertex(static_cast<std::size_t>(n), false);
    g.for_each_edge([&](EdgeIndex e, VertexIndex v, VertexIndex w, int) {
        if (edge_open(field.value(e), xi)) {
            uf.unite(v, w);
            open_vertex[static_cast<std::size_t>(v)] = true;
            open_vertex[static_cast<std::size_t>(w)] = true;
        }
    });

    ClusterLabeling lab;
    lab.xi = xi;
    lab.label.assign(static_cast<std::size_t>(n), kIsolated);
    std::vector<std::int32_t> root_id(static_cast<std::size_t>(n), kIsolated);
    for (VertexIndex v = 0; v < n; ++v) {
        if (!open_vertex[static_cast<std::size_t>(v)]) continue;
        VertexIndex r = uf.find(v);
        std::int32_t& id = root_id[static_cast<std::size_t>(r)];
        if (id == kIsolated) {
            id = lab.component_count();
            lab.component_size.push_back(0);
            lab.component_min_vertex.push_back(v);
            lab.touches_boundary.push_back(false);
        }
        lab.label[static_cast<std::size_t>(v)] = id;
        ++lab.component_size[static_cast<std::size_t>(id)];
        if (g.linf(v) == g.radius())
            lab.touches_boundary[static_cast<std::size_t>(id)] = true;
    }

    lab.strong_id = kIsolated;
    std::int64_t best = -1;
    for (std::int32_t id = 0; id < lab.component_count(); ++id) {
        if (lab.component_size[static_cast<std::size_t>(id)] > best) {
            best = lab.component_size[static_cast<std::size_t>(id)];
            lab.strong_id = id; // ids ascend with min vertex, so first max wins ties
        }
    }
    return lab;
}

std::int32_t strong_cluster(const ClusterLabeling& labeling) {
    if (labeling.strong_id == kIsolated)
        throw std::invalid_argument("strong_cluster: threshold subgraph is empty");
    return labeling.strong_id;
}

std::int32_t strong_cluster(const ConductanceField& field, double xi) {
    return strong_cluster(clusters(field, xi));
}

HoleStructure::HoleStructure(const ConductanceField& field, double xi)
    : field_(&field), xi_(xi), support_(clusters(field, 0.0)),
      strong_(clusters(field, xi)) {
    strong_cluster(support_);
    strong_cluster(strong_);
    const BoxGeometry& g = field.geometry();
    const std::int64_t n = g.vertex_count();

    // The strong proxy must sit inside the support proxy for holes to make
    // sense; this can only fail on contrived multi-component fields.
    VertexIndex strong_seed =
        strong_.component_min_vertex[static_cast<std::size_t>(strong_.strong_id)];
    if (!in_support_cluster(strong_seed))
        throw InvariantError(
            "hole decomposition: strong cluster proxy not inside support cluster proxy");

    std::vector<bool> member(static_cast<std::size_t>(n), false);
    for (VertexIndex v = 0; v < n; ++v)
        member[static_cast<std::size_t>(v)] =
            in_support_cluster(v) && !in_strong_cluster(v);

    UnionFind uf(n);
    g.for_each_edge([&](EdgeIndex e, VertexIndex v, VertexIndex w, int) {
        if (field.value(e) > 0.0 && member[static_cast<std::size_t>(v)] &&
            member[static_cast<std::size_t>(w)])
            uf.unite(v, w);
    });

    hole_id_.assign(static_cast<std::size_t>(n), kIsolated);
    std::vector<std::int32_t> root_id(static_cast<std::size_t>(n), kIsolated);
    for (VertexIndex v = 0; v < n; ++v) {
        if (!member[static_cast<std::size_t>(v)]) continue;
        VertexIndex r = uf.find(v);
        std::int32_t& id = root_id[static_cast<std::size_t>(r)];
        if (id == kIsolated) {
            id = static_cast<std::int32_t>(holes_.size());
            holes_.push_back(Hole{{}, false});
        }
        hole_id_[static_cast<std::size_t>(v)] = id;
        holes_[static_cast<std::size_t>(id)].vertices.push_back(v);
        if (g.linf(v) == g.radius()) holes_[static_cast<std::size_t>(id)].censored = true;
    }
}

std::vector<VertexIndex> hole(const HoleStructure& hs, VertexIndex x) {
    if (!hs.in_support_cluster(x))
        throw std::invalid_argument("hole: x is not in the support cluster");
    if (hs.in_strong_cluster(x)) return {};
    return hs.holes()[static_cast<std::size_t>(hs.hole_id(x))].vertices;
}

std::vector<VertexIndex> hole(const ConductanceField& field, double xi, VertexIndex x) {
    return hole(HoleStructure(field, xi), x);
}

namespace {

// Emit every vertex of G_x (duplicates allowed); reports hole censoring.
template <class AddFn>
void visit_hidden(const HoleStructure& hs, VertexIndex x, AddFn&& add, bool& censored) {
    const ConductanceField& field = hs.field();
    const BoxGeometry& g = field.geometry();
    if (!hs.in_strong_cluster(x))
        throw std::invalid_argument("hidden_set: x is not in the strong cluster");

    auto add_hole_of = [&](VertexIndex w) {
        if (hs.in_strong_cluster(w)) return;
        // w has positive conductance to a support vertex, so it is in the
        // support cluster and carries a hole id.
        const auto& h = hs.holes()[static_cast<std::size_t>(hs.hole_id(w))];
        censored = censored || h.censored;
        for (VertexIndex u : h.vertices) add(u);
    };
    auto add_piece = [&](VertexIndex a) { // F'_a = {a} plus holes of omega-neighbors
        add(a);
        for (int dir = 0; dir < 2 * g.dim(); ++dir) {
            if (field.conductance(a, dir) <= 0.0) continue;
            add_hole_of(g.neighbor(a, dir));
        }
    };

    add_piece(x);
    for (int dir = 0; dir < 2 * g.dim(); ++dir) {
        VertexIndex y = g.neighbor(x, dir);
        if (y >= 0 && hs.in_strong_cluster(y)) add_piece(y);
    }
}

} // namespace

HiddenSet hidden_set(const HoleStructure& hs, VertexIndex x) {
    std::set<VertexIndex> acc;
    bool censored = false;
    visit_hidden(hs, x, [&](VertexIndex u) { acc.insert(u); }, censored);
    return HiddenSet{x, std::vector<VertexIndex>(acc.begin(), acc.end()), censored};
}

HiddenSet hidden_set(const ConductanceField& field, double xi, VertexIndex x) {
    return hidden_set(HoleStructure(field, xi), x);
}

std::int64_t max_hidden_size(const HoleStructure& hs, int r) {
    const BoxGeometry& g = hs.field().geometry();
    if (r < 0 || r > g.radius())
        throw std::invalid_argument("max_hidden_size: radius outside hosting box");

    std::vector<std::uint32_t> stamp(static_cast<std::size_t>(g.vertex_count()), 0);
    std::uint32_t epoch = 0;
    std::int64_t best = -1;
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
        if (g.linf(v) > r || !hs.in_strong_cluster(v)) continue;
        ++epoch;
        std::int64_t count = 0;
        bool censored = false;
        visit_hidden(hs, v,
                     [&](VertexIndex u) {
                         if (stamp[static_cast<std::size_t>(u)] != epoch) {
                             stamp[static_cast<std::size_t>(u)] = epoch;
                             ++count;
                         }
                     },
                     censored);
        best = std::max(best, count);
    }
    if (best < 0)
        throw std::invalid_argument("max_hidden_size: strong cluster misses B_r");
    return best;
}

std::int64_t max_hidden_size(const ConductanceField& field, double xi, int r) {
    return max_hidden_size(HoleStructure(field, xi), r);
}

void write_cluster_csv(const ClusterLabeling& labeling, const std::filesystem::path& path) {
    CsvWriter csv(path, {"xi", "component_id", "size", "touches_boundary"});
    for (std::int32_t id = 0; id < labeling.component_count(); ++id) {
        csv.field(labeling.xi)
            .field(static_cast<std::int64_t>(id))
            .field(labeling.component_size[static_cast<std::size_t>(id)])
            .field(labeling.touches_boundary[static_cast<std::size_t>(id)] ? std::int64_t{1}
                                                                           : std::int64_t{0});
        csv.end_row();
    }
}

} // namespace rcm
