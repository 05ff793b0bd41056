#include "rcm/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace rcm {

TransitionKernel::TransitionKernel(const ConductanceField& field)
    : geom_(field.geometry()), directions_(2 * field.geometry().dim()) {
    const std::int64_t n = geom_.vertex_count();
    pi_.resize(static_cast<std::size_t>(n));
    prob_.assign(static_cast<std::size_t>(n) * directions_, 0.0);
    for (VertexIndex v = 0; v < n; ++v) {
        double pi = 0.0;
        for (int dir = 0; dir < directions_; ++dir)
            pi += field.conductance(v, dir);
        pi_[static_cast<std::size_t>(v)] = pi;
        if (pi > 0.0) {
            for (int dir = 0; dir < directions_; ++dir)
                prob_[static_cast<std::size_t>(v) * directions_ + dir] =
                    field.conductance(v, dir) / pi;
        }
    }
}

TransitionKernel::TransitionKernel(BoxGeometry geometry, std::vector<double> pi,
                                   std::vector<double> transition)
    : geom_(geometry), directions_(2 * geometry.dim()), pi_(std::move(pi)),
      prob_(std::move(transition)) {
    if (static_cast<std::int64_t>(pi_.size()) != geom_.vertex_count() ||
        static_cast<std::int64_t>(prob_.size()) !=
            geom_.vertex_count() * directions_)
        throw std::invalid_argument("TransitionKernel: weight array size mismatch");
}

double DistributionVector::total() const {
    double t = 0.0;
    for (double m : mass) t += m;
    return t;
}

DistributionVector point_mass(const TransitionKernel& kernel, VertexIndex o) {
    if (o < 0 || o >= kernel.geometry().vertex_count())
        throw std::invalid_argument("point_mass: vertex outside box");
    if (kernel.pi(o) <= 0.0)
        throw std::invalid_argument("point_mass: start vertex has pi = 0");
    DistributionVector d{kernel.geometry(),
                         std::vector<double>(
                             static_cast<std::size_t>(kernel.geometry().vertex_count()), 0.0),
                         o, 0};
    d.mass[static_cast<std::size_t>(o)] = 1.0;
    return d;
}

DistributionVector step(const TransitionKernel& kernel, const DistributionVector& dist) {
    const BoxGeometry& g = kernel.geometry();
    if (!(dist.geometry == g))
        throw std::invalid_argument("step: distribution hosted on a different box");
    const std::int64_t n = g.vertex_count();
    const int dirs = kernel.directions();

    DistributionVector out{g, std::vector<double>(static_cast<std::size_t>(n), 0.0),
                           dist.origin, dist.steps + 1};
    for (VertexIndex v = 0; v < n; ++v) {
        double m = dist.mass[static_cast<std::size_t>(v)];
        if (m == 0.0) continue;
        if (kernel.pi(v) <= 0.0)
            throw std::invalid_argument("step: mass on a vertex with pi = 0");
        for (int dir = 0; dir < dirs; ++dir) {
            double p = kernel.probability(v, dir);
            if (p == 0.0) continue;
            VertexIndex u = g.neighbor(v, dir);
            out.mass[static_cast<std::size_t>(u)] += m * p;
        }
    }
    return out;
}

KernelEvolution::KernelEvolution(const TransitionKernel& kernel, VertexIndex origin)
    : kernel_(&kernel), origin_(origin) {
    const BoxGeometry& g = kernel.geometry();
    if (origin < 0 || origin >= g.vertex_count())
        throw std::invalid_argument("KernelEvolution: origin outside box");
    if (kernel.pi(origin) <= 0.0)
        throw std::invalid_argument("KernelEvolution: origin has pi = 0");
    cur_.assign(static_cast<std::size_t>(g.vertex_count()), 0.0);
    nxt_.assign(static_cast<std::size_t>(g.vertex_count()), 0.0);
    stamp_.assign(static_cast<std::size_t>(g.vertex_count()), 0);
    cur_[static_cast<std::size_t>(origin)] = 1.0;
    active_.push_back(origin);
    offset_.resize(2 * g.dim());
    for (int a = 0; a < g.dim(); ++a) {
        offset_[static_cast<std::size_t>(2 * a)] = g.stride(a);
        offset_[static_cast<std::size_t>(2 * a + 1)] = -g.stride(a);
    }
}

void KernelEvolution::advance(std::int64_t steps) {
    const int dirs = kernel_->directions();
    const double* prob = kernel_->transition_values().data();
    for (std::int64_t s = 0; s < steps; ++s) {
        ++epoch_;
        next_active_.clear();
        for (VertexIndex v : active_) {
            const double m = cur_[static_cast<std::size_t>(v)];
            if (m == 0.0) continue;
            const double* row = prob + static_cast<std::size_t>(v) * dirs;
            for (int dir = 0; dir < dirs; ++dir) {
                const double p = row[dir];
                if (p == 0.0) continue;
                // p > 0 means the edge exists, so the shifted index is in-box.
                const VertexIndex u = v + offset_[static_cast<std::size_t>(dir)];
                if (stamp_[static_cast<std::size_t>(u)] != epoch_) {
                    stamp_[static_cast<std::size_t>(u)] = epoch_;
                    next_active_.push_back(u);
                }
                nxt_[static_cast<std::size_t>(u)] += m * p;
            }
        }
        for (VertexIndex v : active_) cur_[static_cast<std::size_t>(v)] = 0.0;
        std::swap(cur_, nxt_);
        std::swap(active_, next_active_);
        ++steps_;
    }
}

double KernelEvolution::total_mass() const {
    double t = 0.0;
    for (VertexIndex v : active_) t += cur_[static_cast<std::size_t>(v)];
    return t;
}

DistributionVector KernelEvolution::snapshot() const {
    return DistributionVector{kernel_->geometry(), cur_, origin_, steps_};
}

namespace {

void require_exactness(const BoxGeometry& g, VertexIndex o, int n) {
    if (n < 0) throw std::invalid_argument("heat kernel: negative step count");
    if (g.radius() < n + g.linf(o))
        throw std::invalid_argument(
            "box too small for an exact " + std::to_string(n) +
            "-step kernel: need L >= " + std::to_string(n + g.linf(o)) +
            ", have L = " + std::to_string(g.radius()));
}

} // namespace

DistributionVector heat_kernel(const ConductanceField& field, VertexIndex o, int n) {
    require_exactness(field.geometry(), o, n);
    TransitionKernel kernel(field);
    KernelEvolution ev(kernel, o);
    ev.advance(n);
    return ev.snapshot();
}

std::vector<double> return_series(const ConductanceField& field, VertexIndex o, int n_max) {
    if (n_max < 1) throw std::invalid_argument("return_series: n_max must be >= 1");
    require_exactness(field.geometry(), o, 2 * n_max);
    TransitionKernel kernel(field);
    KernelEvolution ev(kernel, o);
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(n_max));
    for (int n = 1; n <= n_max; ++n) {
        ev.advance(2);
        out.push_back(ev.mass_at(o));
    }
    return out;
}

double annulus_mass(const KernelEvolution& ev, int k) {
    const BoxGeometry& g = ev.kernel().geometry();
    if (k < 0) throw std::invalid_argument("annulus_mass: k must be >= 0");
    if (3 * (k + 1) > g.radius())
        throw std::invalid_argument("annulus_mass: annulus leaves the box");
    double sum = 0.0;
    for (VertexIndex v : annulus_vertices(g, k)) sum += ev.mass_at(v);
    return sum;
}

double annulus_mass(const ConductanceField& field, VertexIndex o, int n, int k) {
    require_exactness(field.geometry(), o, n);
    TransitionKernel kernel(field);
    KernelEvolution ev(kernel, o);
    ev.advance(n);
    return annulus_mass(ev, k);
}

double cs_lower_bound(const KernelEvolution& ev, int r) {
    const BoxGeometry& g = ev.kernel().geometry();
    if (r < 0) throw std::invalid_argument("cs_lower_bound: r must be >= 0");
    const int k_count = r / 3;
    if (3 * k_count > g.radius())
        throw std::invalid_argument("cs_lower_bound: annuli leave the box");
    const double front = ev.kernel().pi(ev.origin()) / (2.0 * g.dim());
    double sum = 0.0;
    for (int k = 0; k < k_count; ++k) {
        double m = annulus_mass(ev, k);
        sum += m * m / static_cast<double>(annulus_site_count(g.dim(), k));
    }
    return front * sum;
}

double cs_lower_bound(const ConductanceField& field, VertexIndex o, int n, int r) {
    require_exactness(field.geometry(), o, n);
    TransitionKernel kernel(field);
    KernelEvolution ev(kernel, o);
    ev.advance(n);
    return cs_lower_bound(ev, r);
}

double reversibility_residual(const TransitionKernel& kernel) {
    const BoxGeometry& g = kernel.geometry();
    double worst = 0.0;
    g.for_each_edge([&](EdgeIndex, VertexIndex v, VertexIndex w, int axis) {
        double forward = kernel.pi(v) * kernel.probability(v, 2 * axis);
        double backward = kernel.pi(w) * kernel.probability(w, 2 * axis + 1);
        worst = std::max(worst, std::abs(forward - backward));
    });
    return worst;
}

double check_reversibility(const ConductanceField& field) {
    return reversibility_residual(TransitionKernel(field));
}

double max_row_sum_error(const TransitionKernel& kernel) {
    const BoxGeometry& g = kernel.geometry();
    double worst = 0.0;
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
        if (kernel.pi(v) <= 0.0) continue;
        double sum = 0.0;
        for (int dir = 0; dir < kernel.directions(); ++dir)
            sum += kernel.probability(v, dir);
        worst = std::max(worst, std::abs(sum - 1.0));
    }
    return worst;
}

} // namespace rcm
