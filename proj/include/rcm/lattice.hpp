#ifndef RCM_LATTICE_HPP
#define RCM_LATTICE_HPP

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace rcm {

using VertexIndex = std::int64_t;
using EdgeIndex = std::int64_t;

inline constexpr int kMaxDim = 8;

/// Finite box [-L, L]^d of Z^d with canonical vertex and edge numbering.
///
/// Vertices are ordered lexicographically on their coordinate tuples
/// (coordinate 0 most significant). Edges are ordered vertex-major: for each
/// vertex in order, its +e_a edges for a = 0..d-1, skipping edges that leave
/// the box. Both orders are the serialization orders of environment files,
/// so they must never change.
class BoxGeometry {
  public:
    BoxGeometry(int dim, int radius);

    int dim() const { return d_; }
    int radius() const { return L_; }
    std::int64_t side() const { return side_; }
    std::int64_t vertex_count() const { return vertex_count_; }
    std::int64_t edge_count() const { return edge_count_; }

    /// Stride of +1 along `axis` in the linear vertex index.
    std::int64_t stride(int axis) const { return pow_[d_ - 1 - axis]; }

    VertexIndex index_of(std::span<const int> coords) const;
    void coords_of(VertexIndex v, std::span<int> out) const;
    std::vector<int> coords_of(VertexIndex v) const;

    /// Coordinate of v along `axis`, in [-L, L].
    int coordinate(VertexIndex v, int axis) const {
        return static_cast<int>((v / stride(axis)) % side_) - L_;
    }

    int linf(VertexIndex v) const;

    /// Neighbor index one step along +-axis, or -1 when outside the box.
    VertexIndex neighbor(VertexIndex v, int axis, int sign) const;

    /// Neighbor by packed direction: dir = 2*axis + (0 for +, 1 for -).
    VertexIndex neighbor(VertexIndex v, int dir) const {
        return neighbor(v, dir >> 1, (dir & 1) ? -1 : +1);
    }

    /// Canonical index of the +axis edge leaving v, or -1 if that edge
    /// leaves the box. Closed form, no lookup tables.
    EdgeIndex edge_index(VertexIndex v, int axis) const;

    /// Edge between two vertices (any order), or -1 if not nearest
    /// neighbors inside the box.
    EdgeIndex edge_between(VertexIndex a, VertexIndex b) const;

    /// Visit edges in canonical order: f(edge, v, w, axis) with w = v + e_axis.
    template <class F> void for_each_edge(F&& f) const {
        EdgeIndex e = 0;
        for (VertexIndex v = 0; v < vertex_count_; ++v) {
            for (int a = 0; a < d_; ++a) {
                if (coordinate(v, a) < L_) {
                    f(e, v, v + stride(a), a);
                    ++e;
                }
            }
        }
    }

    bool operator==(const BoxGeometry& other) const {
        return d_ == other.d_ && L_ == other.L_;
    }

  private:
    int d_;
    int L_;
    std::int64_t side_;
    std::int64_t vertex_count_;
    std::int64_t edge_count_;
    std::array<std::int64_t, kMaxDim + 1> pow_{};

    // #{w <lex v : w_a = L}, used by the closed-form edge index.
    std::int64_t count_max_coord_before(VertexIndex v, int a) const;
};

/// All vertices of the sub-box B_r in canonical order. Requires r <= L.
std::vector<VertexIndex> box_vertices(const BoxGeometry& g, int r);

/// The frontier of B_r: sites of B_r with a neighbor outside B_r,
/// i.e. exactly the sites at sup-norm r. Requires 1 <= r <= L.
std::vector<VertexIndex> boundary_vertices(const BoxGeometry& g, int r);

/// Annulus B_{3(k+1)} \ B_{3k}. Requires 3(k+1) <= L.
std::vector<VertexIndex> annulus_vertices(const BoxGeometry& g, int k);

/// Number of Z^d sites in the annulus B_{3(k+1)} \ B_{3k} (box-independent).
std::int64_t annulus_site_count(int d, int k);

int l1_distance(const BoxGeometry& g, VertexIndex a, VertexIndex b);

struct IncidentEdge {
    int axis;
    int sign;          // +1 or -1
    VertexIndex other; // -1 when the edge leaves the box
    EdgeIndex edge;    // -1 when external
    bool external;
};

/// The 2d incident edges of x in fixed direction order
/// (+e_0, -e_0, +e_1, -e_1, ...). External edges are flagged.
std::vector<IncidentEdge> incident_edges(const BoxGeometry& g, VertexIndex x);

} // namespace rcm

#endif
