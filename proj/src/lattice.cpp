#include "rcm/lattice.hpp"

#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>

namespace rcm {

BoxGeometry::BoxGeometry(int dim, int radius) : d_(dim), L_(radius) {
    if (dim < 1 || dim > kMaxDim)
        throw std::invalid_argument("BoxGeometry: dimension must be in [1, " +
                                    std::to_string(kMaxDim) + "]");
    if (radius < 0)
        throw std::invalid_argument("BoxGeometry: radius must be >= 0");
    side_ = 2 * static_cast<std::int64_t>(L_) + 1;
    pow_[0] = 1;
    for (int k = 1; k <= d_; ++k) {
        if (pow_[k - 1] > std::numeric_limits<std::int64_t>::max() / side_)
            throw std::invalid_argument("BoxGeometry: box too large to index");
        pow_[k] = pow_[k - 1] * side_;
    }
    vertex_count_ = pow_[d_];
    edge_count_ = static_cast<std::int64_t>(d_) * 2 * L_ * pow_[d_ - 1];
}

VertexIndex BoxGeometry::index_of(std::span<const int> coords) const {
    if (static_cast<int>(coords.size()) != d_)
        throw std::invalid_argument("index_of: coordinate count != dimension");
    VertexIndex idx = 0;
    for (int i = 0; i < d_; ++i) {
        if (coords[i] < -L_ || coords[i] > L_)
            throw std::out_of_range("index_of: coordinate outside box");
        idx += static_cast<std::int64_t>(coords[i] + L_) * pow_[d_ - 1 - i];
    }
    return idx;
}

void BoxGeometry::coords_of(VertexIndex v, std::span<int> out) const {
    for (int i = 0; i < d_; ++i)
        out[i] = static_cast<int>((v / pow_[d_ - 1 - i]) % side_) - L_;
}

std::vector<int> BoxGeometry::coords_of(VertexIndex v) const {
    std::vector<int> c(d_);
    coords_of(v, c);
    return c;
}

int BoxGeometry::linf(VertexIndex v) const {
    int m = 0;
    for (int i = 0; i < d_; ++i) {
        int a = std::abs(coordinate(v, i));
        if (a > m) m = a;
    }
    return m;
}

VertexIndex BoxGeometry::neighbor(VertexIndex v, int axis, int sign) const {
    int g = static_cast<int>((v / stride(axis)) % side_);
    if (sign > 0) return g == 2 * L_ ? -1 : v + stride(axis);
    return g == 0 ? -1 : v - stride(axis);
}

std::int64_t BoxGeometry::count_max_coord_before(VertexIndex v, int a) const {
    // Tuples lexicographically below v whose a-th digit equals 2L: either the
    // prefix already differs (digit i < a drops below v_i, positions after i
    // free except digit a pinned), or the prefix matches through a, which
    // requires v_a == 2L.
    std::int64_t cnt = 0;
    for (int i = 0; i < a; ++i) {
        std::int64_t gi = (v / pow_[d_ - 1 - i]) % side_;
        cnt += gi * pow_[d_ - 2 - i];
    }
    std::int64_t ga = (v / pow_[d_ - 1 - a]) % side_;
    if (ga == 2 * L_) {
        for (int i = a + 1; i < d_; ++i) {
            std::int64_t gi = (v / pow_[d_ - 1 - i]) % side_;
            cnt += gi * pow_[d_ - 1 - i];
        }
    }
    return cnt;
}

EdgeIndex BoxGeometry::edge_index(VertexIndex v, int axis) const {
    if (coordinate(v, axis) >= L_) return -1;
    std::int64_t base = static_cast<std::int64_t>(d_) * v;
    for (int a = 0; a < d_; ++a) base -= count_max_coord_before(v, a);
    int rank = 0;
    for (int a = 0; a < axis; ++a)
        if (coordinate(v, a) < L_) ++rank;
    return base + rank;
}

EdgeIndex BoxGeometry::edge_between(VertexIndex a, VertexIndex b) const {
    if (a > b) std::swap(a, b);
    if (a < 0 || b >= vertex_count_) return -1;
    int diff_axis = -1;
    for (int i = 0; i < d_; ++i) {
        int ca = coordinate(a, i), cb = coordinate(b, i);
        if (ca == cb) continue;
        if (cb - ca != 1 || diff_axis >= 0) return -1;
        diff_axis = i;
    }
    if (diff_axis < 0) return -1;
    return edge_index(a, diff_axis);
}

std::vector<VertexIndex> box_vertices(const BoxGeometry& g, int r) {
    if (r < 0 || r > g.radius())
        throw std::invalid_argument("box_vertices: radius outside hosting box");
    std::vector<VertexIndex> out;
    out.reserve(static_cast<std::size_t>(1));
    for (VertexIndex v = 0; v < g.vertex_count(); ++v)
        if (g.linf(v) <= r) out.push_back(v);
    return out;
}

std::vector<VertexIndex> boundary_vertices(const BoxGeometry& g, int r) {
    if (r < 1 || r > g.radius())
        throw std::invalid_argument("boundary_vertices: need 1 <= r <= L");
    std::vector<VertexIndex> out;
    for (VertexIndex v = 0; v < g.vertex_count(); ++v)
        if (g.linf(v) == r) out.push_back(v);
    return out;
}

std::vector<VertexIndex> annulus_vertices(const BoxGeometry& g, int k) {
    if (k < 0) throw std::invalid_argument("annulus_vertices: k must be >= 0");
    if (3 * (k + 1) > g.radius())
        throw std::invalid_argument("annulus_vertices: annulus leaves the box");
    std::vector<VertexIndex> out;
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
        int n = g.linf(v);
        if (n > 3 * k && n <= 3 * (k + 1)) out.push_back(v);
    }
    return out;
}

std::int64_t annulus_site_count(int d, int k) {
    auto box_count = [d](std::int64_t r) {
        std::int64_t c = 1;
        for (int i = 0; i < d; ++i) c *= 2 * r + 1;
        return c;
    };
    return box_count(3 * (k + 1)) - box_count(3 * k);
}

int l1_distance(const BoxGeometry& g, VertexIndex a, VertexIndex b) {
    int dist = 0;
    for (int i = 0; i < g.dim(); ++i)
        dist += std::abs(g.coordinate(a, i) - g.coordinate(b, i));
    return dist;
}

std::vector<IncidentEdge> incident_edges(const BoxGeometry& g, VertexIndex x) {
    std::vector<IncidentEdge> out;
    out.reserve(2 * g.dim());
    for (int a = 0; a < g.dim(); ++a) {
        for (int sign : {+1, -1}) {
            IncidentEdge ie;
            ie.axis = a;
            ie.sign = sign;
            ie.other = g.neighbor(x, a, sign);
            ie.external = ie.other < 0;
            if (ie.external) {
                ie.edge = -1;
            } else {
                ie.edge = sign > 0 ? g.edge_index(x, a) : g.edge_index(ie.other, a);
            }
            out.push_back(ie);
        }
    }
    return out;
}

} // namespace rcm
