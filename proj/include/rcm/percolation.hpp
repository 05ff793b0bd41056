#ifndef RCM_PERCOLATION_HPP
#define RCM_PERCOLATION_HPP

#include <cstdint>
#include <filesystem>
#include <vector>

#include "rcm/environment.hpp"
#include "rcm/lattice.hpp"

namespace rcm {

inline constexpr std::int32_t kIsolated = -1;

/// Connected components of the threshold subgraph. At xi > 0 an edge is open
/// when omega_e >= xi; at xi == 0 the rule is strict omega_e > 0 (the support
/// cluster). Vertices with no open incident edge carry the isolated sentinel.
struct ClusterLabeling {
    double xi = 0.0;
    std::vector<std::int32_t> label;          // per vertex, kIsolated or id
    std::vector<std::int64_t> component_size; // by id
    std::vector<VertexIndex> component_min_vertex;
    std::vector<bool> touches_boundary; // any vertex at sup-norm L
    std::int32_t strong_id = kIsolated; // largest; ties -> smallest min vertex

    bool in_component(VertexIndex v, std::int32_t id) const {
        return label[static_cast<std::size_t>(v)] == id;
    }
    std::int32_t component_count() const {
        return static_cast<std::int32_t>(component_size.size());
    }
};

/// Union-find labeling; ids in order of first appearance in canonical
/// vertex order (so id 0 contains the lexicographically smallest
/// non-isolated vertex).
ClusterLabeling clusters(const ConductanceField& field, double xi);

/// Largest component (the finite-box stand-in for the infinite cluster).
/// Throws when the subgraph has no edges at all.
std::int32_t strong_cluster(const ClusterLabeling& labeling);
std::int32_t strong_cluster(const ConductanceField& field, double xi);

/// Cluster geometry at one threshold plus the decomposition of C \ C_xi into
/// holes. Build once, query many times.
class HoleStructure {
  public:
    HoleStructure(const ConductanceField& field, double xi);

    double xi() const { return xi_; }
    const ConductanceField& field() const { return *field_; }
    const ClusterLabeling& support() const { return support_; } // xi = 0
    const ClusterLabeling& strong() const { return strong_; }   // at xi

    bool in_support_cluster(VertexIndex v) const {
        return support_.label[static_cast<std::size_t>(v)] == support_.strong_id;
    }
    bool in_strong_cluster(VertexIndex v) const {
        return strong_.label[static_cast<std::size_t>(v)] == strong_.strong_id;
    }

    struct Hole {
        std::vector<VertexIndex> vertices; // sorted
        bool censored;                     // touches the box frontier
    };
    std::int32_t hole_id(VertexIndex v) const {
        return hole_id_[static_cast<std::size_t>(v)];
    }
    const std::vector<Hole>& holes() const { return holes_; }

  private:
    const ConductanceField* field_;
    double xi_;
    ClusterLabeling support_;
    ClusterLabeling strong_;
    std::vector<std::int32_t> hole_id_;
    std::vector<Hole> holes_;
};

/// H_x: empty when x is in the strong cluster, otherwise the component of
/// C \ C_xi containing x. Throws when x is not in the support cluster.
std::vector<VertexIndex> hole(const HoleStructure& hs, VertexIndex x);
std::vector<VertexIndex> hole(const ConductanceField& field, double xi, VertexIndex x);

/// G_x for x in the strong cluster: x with the holes of its positive-edge
/// neighbors, together with the same sets for its strong lattice neighbors.
struct HiddenSet {
    VertexIndex anchor;
    std::vector<VertexIndex> vertices; // sorted
    bool censored;                     // some constituent hole is censored
};

HiddenSet hidden_set(const HoleStructure& hs, VertexIndex x);
HiddenSet hidden_set(const ConductanceField& field, double xi, VertexIndex x);

/// Exact sup of |G_x| over strong-cluster vertices in B_r.
std::int64_t max_hidden_size(const ConductanceField& field, double xi, int r);
std::int64_t max_hidden_size(const HoleStructure& hs, int r);

/// CSV rows (xi, component_id, size, touches_boundary).
void write_cluster_csv(const ClusterLabeling& labeling, const std::filesystem::path& path);

} // namespace rcm

#endif
