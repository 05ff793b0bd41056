#ifndef RCM_ENVIRONMENT_HPP
#define RCM_ENVIRONMENT_HPP

#include <cstdint>
#include <filesystem>
#include <span>
#include <unordered_set>
#include <utility>
#include <vector>

#include "rcm/lattice.hpp"
#include "rcm/law.hpp"
#include "rcm/rng.hpp"

namespace rcm {

/// Strong-edge threshold used when none is given: the trap definition only
/// requires some fixed positive level, and 1/2 keeps P(omega >= c) law-friendly.
inline constexpr double kDefaultStrongThreshold = 0.5;

struct Provenance {
    LawSpec law = LawSpec::constant(1.0);
    std::uint64_t seed = 0;
};

/// Sampled environment on a finite box: one conductance in [0,1] per
/// canonical edge. Immutable after construction.
class ConductanceField {
  public:
    ConductanceField(BoxGeometry geometry, std::vector<double> values,
                     Provenance provenance);

    const BoxGeometry& geometry() const { return geom_; }
    std::span<const double> values() const { return values_; }
    double value(EdgeIndex e) const { return values_[static_cast<std::size_t>(e)]; }
    const Provenance& provenance() const { return prov_; }

    /// Conductance along packed direction dir = 2*axis + (0:+, 1:-);
    /// 0 for edges leaving the box.
    double conductance(VertexIndex v, int dir) const;

    /// Sum of incident conductances (the stationary weight of v).
    double vertex_weight(VertexIndex v) const;

    /// Copy with one edge replaced; fixture construction helper.
    ConductanceField with_edge(EdgeIndex e, double value) const;

  private:
    BoxGeometry geom_;
    std::vector<double> values_;
    Provenance prov_;
};

/// Draw i.i.d. conductances in canonical edge order. Each edge has its own
/// counter stream keyed by (seed, edge index), so the result is bit-identical
/// across runs, platforms, and evaluation orders.
ConductanceField sample_field(const LawSpec& law, int d, int L, std::uint64_t seed);

// Bit-exact binary environment file ("RCM1").
void write_environment(const ConductanceField& field, const std::filesystem::path& path);
ConductanceField read_environment(const std::filesystem::path& path);

struct WeakEdge {
    EdgeIndex edge;
    VertexIndex a, b;
    double value;
};

/// One trap: a strong edge {y,z} plus the 4d-2 other edges incident to y or z,
/// all with conductance in [1/n, 2/n].
struct TrapRecord {
    EdgeIndex strong_edge = -1;
    VertexIndex y = -1, z = -1;
    double strong_value = 0.0;
    std::vector<WeakEdge> weak_edges;
    int n_scale = 0;
};

/// Plant a trap on the edge {y,z}: raise the strong edge to at least c_strong
/// and resample its 4d-2 incident edges uniformly in [1/n, 2/n]. Both
/// endpoints must be interior (all incident edges inside the box).
std::pair<ConductanceField, TrapRecord>
plant_trap(const ConductanceField& field, VertexIndex y, VertexIndex z, int n,
           double c_strong, CounterStream& rng);

/// Exhaustive scan for traps at scale n, canonical edge order.
std::vector<TrapRecord> detect_traps(const ConductanceField& field, int n,
                                     double c_strong);

/// The environment event that x neighbors a trap whose edge lies strictly
/// outside the box B_{|x|_inf} (both endpoints at larger sup-norm).
bool is_trap_adjacent(const ConductanceField& field, VertexIndex x, int n,
                      double c_strong);

/// Precomputed set of vertices where is_trap_adjacent holds, for hot loops.
class TrapAdjacency {
  public:
    TrapAdjacency(const BoxGeometry& g, const std::vector<TrapRecord>& traps);
    bool at(VertexIndex x) const { return qualifying_.count(x) > 0; }
    std::size_t size() const { return qualifying_.size(); }

  private:
    std::unordered_set<VertexIndex> qualifying_;
};

} // namespace rcm

#endif
