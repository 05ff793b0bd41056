#ifndef RCM_KERNEL_HPP
#define RCM_KERNEL_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "rcm/environment.hpp"
#include "rcm/lattice.hpp"

namespace rcm {

/// Row-stochastic jump kernel p(x,y) = omega_xy / pi(x) with stationary
/// weights pi(x) = sum of incident conductances. Immutable and shareable.
class TransitionKernel {
  public:
    explicit TransitionKernel(const ConductanceField& field);

    /// Explicit-weight construction (restricted chains, fault injection).
    TransitionKernel(BoxGeometry geometry, std::vector<double> pi,
                     std::vector<double> transition);

    const BoxGeometry& geometry() const { return geom_; }
    double pi(VertexIndex v) const { return pi_[static_cast<std::size_t>(v)]; }
    std::span<const double> pi_values() const { return pi_; }

    /// p(v, v + dir) with packed direction dir = 2*axis + (0:+, 1:-).
    double probability(VertexIndex v, int dir) const {
        return prob_[static_cast<std::size_t>(v) * directions_ + dir];
    }
    int directions() const { return directions_; }
    std::span<const double> transition_values() const { return prob_; }

  private:
    BoxGeometry geom_;
    int directions_;
    std::vector<double> pi_;
    std::vector<double> prob_;
};

/// Probability mass over the box with a step-parity tag.
struct DistributionVector {
    BoxGeometry geometry;
    std::vector<double> mass;
    VertexIndex origin = 0;
    std::int64_t steps = 0;

    int parity() const { return static_cast<int>(steps & 1); }
    double total() const;
    double at(VertexIndex v) const { return mass[static_cast<std::size_t>(v)]; }
};

DistributionVector point_mass(const TransitionKernel& kernel, VertexIndex o);

/// One exact kernel application; errors if mass sits on a vertex with pi = 0.
DistributionVector step(const TransitionKernel& kernel, const DistributionVector& dist);

/// Sparse repeated kernel application from a point mass. The support after n
/// steps is the l1 ball of radius n, tracked with an active set.
class KernelEvolution {
  public:
    KernelEvolution(const TransitionKernel& kernel, VertexIndex origin);

    void advance(std::int64_t steps = 1);
    std::int64_t steps_done() const { return steps_; }
    VertexIndex origin() const { return origin_; }
    const TransitionKernel& kernel() const { return *kernel_; }
    double mass_at(VertexIndex v) const { return cur_[static_cast<std::size_t>(v)]; }
    double total_mass() const;
    DistributionVector snapshot() const;

  private:
    const TransitionKernel* kernel_;
    VertexIndex origin_;
    std::int64_t steps_ = 0;
    std::vector<double> cur_, nxt_;
    std::vector<VertexIndex> active_, next_active_;
    std::vector<std::uint32_t> stamp_;
    std::uint32_t epoch_ = 0;
    std::vector<std::int64_t> offset_; // index shift per direction
};

/// Exact P^n(o, .). Hard error when the box cannot contain the n-step
/// support (L < n + |o|_inf): exactness is never silently truncated.
DistributionVector heat_kernel(const ConductanceField& field, VertexIndex o, int n);

/// Even-time return probabilities P^{2n}(o,o) for n = 1..n_max
/// (index n-1). Requires L >= 2*n_max + |o|_inf.
std::vector<double> return_series(const ConductanceField& field, VertexIndex o, int n_max);

/// P^o(X_n in B_{3(k+1)} \ B_{3k}).
double annulus_mass(const ConductanceField& field, VertexIndex o, int n, int k);
double annulus_mass(const KernelEvolution& ev, int k);

/// pi(o)/(2d) * sum_{k < r/3} |annulus_k|^{-1} P^o(X_n in annulus_k)^2,
/// a lower bound for P^{2n}(o,o).
double cs_lower_bound(const ConductanceField& field, VertexIndex o, int n, int r);
double cs_lower_bound(const KernelEvolution& ev, int r);

/// Max detailed-balance residual |pi(x)p(x,y) - pi(y)p(y,x)| over edges.
double reversibility_residual(const TransitionKernel& kernel);
double check_reversibility(const ConductanceField& field);

/// Max |row sum - 1| over vertices with pi > 0.
double max_row_sum_error(const TransitionKernel& kernel);

} // namespace rcm

#endif
